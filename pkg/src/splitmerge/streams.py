"""Seedable random streams with deterministic splitting.

Replica ``r`` of an experiment seeded with ``seed`` always draws from the
stream ``stream(seed, r)``, so results do not depend on how replicas are
scheduled across workers.
"""
from __future__ import annotations

import numpy as np


def stream(seed: int, *key: int) -> np.random.Generator:
    """Independent generator for the sub-stream ``key`` of ``seed``."""
    return np.random.default_rng(np.random.SeedSequence(seed, spawn_key=tuple(key)))


def split(rng: np.random.Generator, count: int) -> list[np.random.Generator]:
    return list(rng.spawn(count))
