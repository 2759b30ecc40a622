"""The split-merge operator on finite-support points of the unit simplex.

A state is a :class:`MassPartition`: finitely many positive masses, sorted
non-increasing, summing to one. One application of :func:`apply_T` picks
two indices independently with probabilities equal to the masses; distinct
picks are merged, a repeated pick is split uniformly in two.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

SUM_TOL = 1e-9
NORM_TOL = 1e-12
# Split fragments below this are dropped (measure zero under the continuous split).
MIN_PART = 1e-15


class InvalidMassError(ValueError):
    pass


@dataclass(frozen=True)
class MassPartition:
    """Finite point of the unit simplex, renormalized on construction."""

    parts: tuple[float, ...]

    def __post_init__(self):
        parts = tuple(float(p) for p in self.parts)
        if not parts:
            raise InvalidMassError("a mass partition needs at least one part")
        if any(not p > 0 for p in parts):
            raise InvalidMassError(f"parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise InvalidMassError("parts must be sorted non-increasing (use reorder)")
        total = math.fsum(parts)
        if abs(total - 1.0) > SUM_TOL:
            raise InvalidMassError(f"parts sum to {total!r}, not 1")
        if total != 1.0:
            parts = tuple(p / total for p in parts)
        object.__setattr__(self, "parts", parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[float]:
        return iter(self.parts)

    def __getitem__(self, i: int) -> float:
        return self.parts[i]

    @property
    def largest(self) -> float:
        return self.parts[0]

    def sum_squares(self) -> float:
        return math.fsum(p * p for p in self.parts)


def _sorted_desc(v: Sequence[float]) -> list[float]:
    # sorted() is stable, so ties keep their input order
    return sorted(v, key=lambda p: -p)


def reorder(v: Sequence[float]) -> MassPartition:
    """Sort a mass vector non-increasing, dropping zero entries."""
    v = [float(p) for p in v]
    if any(not p >= 0 for p in v):
        raise InvalidMassError(f"entries must be non-negative: {v}")
    total = math.fsum(v)
    if abs(total - 1.0) > SUM_TOL:
        raise InvalidMassError(f"entries sum to {total!r}, not 1")
    return MassPartition(tuple(_sorted_desc([p for p in v if p > 0])))


def _renormalize(v: list[float]) -> MassPartition:
    v = [p for p in v if p >= MIN_PART]
    total = math.fsum(v)
    return MassPartition(tuple(_sorted_desc([p / total for p in v])))


def size_biased_index(x: MassPartition, rng: np.random.Generator) -> int:
    """Index ``i`` drawn with probability ``x[i]``."""
    u = rng.random()
    acc = 0.0
    for i, p in enumerate(x.parts):
        acc += p
        if u < acc:
            return i
    return len(x.parts) - 1


def apply_T(x: MassPartition, rng: np.random.Generator) -> MassPartition:
    """One split-merge move."""
    i = size_biased_index(x, rng)
    j = size_biased_index(x, rng)
    parts = list(x.parts)
    if i != j:
        merged = parts[i] + parts[j]
        rest = [p for k, p in enumerate(parts) if k != i and k != j]
        return _renormalize(rest + [merged])
    t = rng.random() * parts[i]
    rest = parts[:i] + parts[i + 1:]
    return _renormalize(rest + [t, parts[i] - t])


def apply_half_step(x: MassPartition, rng: np.random.Generator) -> MassPartition:
    """Identity with probability 1/2, otherwise :func:`apply_T`."""
    if rng.random() < 0.5:
        return x
    return apply_T(x, rng)


def iterate(x0: MassPartition, q: int, rng: np.random.Generator) -> Iterator[MassPartition]:
    """Yield the states after 0, 1, ..., q half-steps."""
    if q < 0:
        raise ValueError("step count must be non-negative")
    x = x0
    yield x
    for _ in range(q):
        x = apply_half_step(x, rng)
        yield x


def trajectory(x0: MassPartition, q: int, rng: np.random.Generator) -> MassPartition:
    """State after ``q`` half-steps from ``x0``."""
    for x in iterate(x0, q, rng):
        pass
    return x


@dataclass(frozen=True)
class ChainStatistics:
    sum_squares: float
    top_k: tuple[float, ...]
    num_parts_above: int
    threshold: float


def statistics(x: MassPartition, k: int = 3, threshold: float = 1e-3) -> ChainStatistics:
    return ChainStatistics(
        sum_squares=x.sum_squares(),
        top_k=x.parts[:k],
        num_parts_above=sum(1 for p in x.parts if p > threshold),
        threshold=threshold,
    )
