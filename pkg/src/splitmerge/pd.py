"""Poisson-Dirichlet PD(1) sampling by uniform stick-breaking."""
from __future__ import annotations

import math
from dataclasses import dataclass

from .simplex import MassPartition, reorder

MAX_STICKS = 10_000
DEFAULT_TOL = 1e-8


class StickBreakingError(RuntimeError):
    pass


@dataclass(frozen=True)
class StickSequence:
    """Stick lengths in generation order and the unbroken remainder."""

    v: tuple[float, ...]
    residual: float


def gem1_sticks(rng, residual_tol: float = DEFAULT_TOL) -> StickSequence:
    """Break off ``U_n`` times the remaining stick until less than ``residual_tol`` is left.

    ``rng`` only needs a ``random()`` method returning uniforms on [0, 1).
    """
    if not 0 < residual_tol < 1:
        raise ValueError("residual_tol must lie in (0, 1)")
    v = []
    residual = 1.0
    while residual >= residual_tol:
        if len(v) >= MAX_STICKS:
            raise StickBreakingError(f"no convergence after {MAX_STICKS} sticks")
        u = rng.random()
        if u <= 0.0:
            continue
        v.append(residual * u)
        residual *= 1.0 - u
    return StickSequence(tuple(v), residual)


def pd1_sample(rng, residual_tol: float = DEFAULT_TOL) -> MassPartition:
    """One draw from PD(1); the residual below tolerance is discarded."""
    sticks = gem1_sticks(rng, residual_tol)
    total = math.fsum(sticks.v)
    return reorder([p / total for p in sticks.v])
