"""Split-merge chains on the unit simplex, PD(1) sampling and exact symmetric-group characters."""

__version__ = "0.1.0"
