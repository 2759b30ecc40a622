"""Finite symmetric groups, induced permutations and the labelled-cycle measures.

A :class:`Permutation` lives on an explicit finite set of integers (not
necessarily ``{1..n}``, since induced permutations live on subsets) and is
stored as cycles in cyclic order. The cycle ``(a b c)`` maps ``a -> b -> c -> a``,
and products compose as functions: ``(w * g)(i) == w(g(i))``.

Large-degree sampling goes through 0-based successor arrays
(``succ[i] == w(i + 1) - 1``) so cycle statistics at degree ``10**4`` stay
vectorized.
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np
from scipy import stats as sps

from .simplex import MassPartition, reorder, size_biased_index
from .young import Partition


def _canonical(cycles: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    out = []
    for c in cycles:
        c = tuple(int(e) for e in c)
        if not c:
            continue
        k = c.index(min(c))
        out.append(c[k:] + c[:k])
    out.sort(key=lambda c: c[0])
    return tuple(out)


@dataclass(frozen=True)
class Permutation:
    cycles: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        cycles = _canonical(self.cycles)
        elements = [e for c in cycles for e in c]
        if len(elements) != len(set(elements)):
            raise ValueError(f"cycles are not disjoint: {cycles}")
        object.__setattr__(self, "cycles", cycles)

    @classmethod
    def identity(cls, n_or_domain: int | Iterable[int]) -> Permutation:
        domain = range(1, n_or_domain + 1) if isinstance(n_or_domain, int) else n_or_domain
        return cls(tuple((e,) for e in domain))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], n: int | None = None) -> Permutation:
        """Cycle notation; with ``n`` the missing points of ``{1..n}`` become fixed points."""
        cycles = [tuple(c) for c in cycles]
        if n is not None:
            seen = {e for c in cycles for e in c}
            if any(not 1 <= e <= n for e in seen):
                raise ValueError(f"cycle entries outside 1..{n}")
            cycles += [(e,) for e in range(1, n + 1) if e not in seen]
        return cls(tuple(cycles))

    @classmethod
    def from_images(cls, images: Sequence[int]) -> Permutation:
        """One-line notation on ``{1..n}``: ``images[i - 1] == w(i)``."""
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError("images must be a rearrangement of 1..n")
        seen = [False] * (n + 1)
        cycles = []
        for start in range(1, n + 1):
            if seen[start]:
                continue
            cyc = []
            e = start
            while not seen[e]:
                seen[e] = True
                cyc.append(e)
                e = images[e - 1]
            cycles.append(tuple(cyc))
        return cls(tuple(cycles))

    @classmethod
    def from_successors(cls, succ: np.ndarray) -> Permutation:
        return cls.from_images([int(s) + 1 for s in succ])

    @property
    def domain(self) -> tuple[int, ...]:
        return tuple(sorted(e for c in self.cycles for e in c))

    @property
    def n(self) -> int:
        return sum(len(c) for c in self.cycles)

    def mapping(self) -> dict[int, int]:
        out = {}
        for c in self.cycles:
            for a, b in zip(c, c[1:] + c[:1]):
                out[a] = b
        return out

    def __call__(self, e: int) -> int:
        return self.mapping().get(e, e)

    def __mul__(self, other: Permutation) -> Permutation:
        """Composition ``self after other`` on the union of the two domains."""
        a, b = self.mapping(), other.mapping()
        domain = sorted(set(a) | set(b))
        images = {e: a.get(b.get(e, e), b.get(e, e)) for e in domain}
        return _from_mapping(images)

    def inverse(self) -> Permutation:
        return Permutation(tuple(c[::-1] for c in self.cycles))

    def one_line(self) -> tuple[int, ...]:
        m = self.mapping()
        return tuple(m[e] for e in self.domain)

    def cycle_type(self) -> Partition:
        return Partition(tuple(sorted((len(c) for c in self.cycles), reverse=True)))

    def is_identity(self) -> bool:
        return all(len(c) == 1 for c in self.cycles)

    def __str__(self) -> str:
        if not self.cycles:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in self.cycles)


def _from_mapping(images: Mapping[int, int]) -> Permutation:
    seen = set()
    cycles = []
    for start in sorted(images):
        if start in seen:
            continue
        cyc = []
        e = start
        while e not in seen:
            seen.add(e)
            cyc.append(e)
            e = images[e]
        cycles.append(tuple(cyc))
    return Permutation(tuple(cycles))


def transposition(a: int, b: int, n: int | None = None) -> Permutation:
    return Permutation.from_cycles([(a, b)], n)


def induced_permutation(w: Permutation, J: Iterable[int]) -> Permutation:
    """Delete the elements outside ``J`` from the cycles of ``w``, keeping cyclic order."""
    J = set(J)
    missing = J - set(w.domain)
    if missing:
        raise ValueError(f"elements {sorted(missing)} are not in the domain of w")
    return Permutation(tuple(tuple(e for e in c if e in J) for c in w.cycles))


def project(w: Permutation, n: int) -> Permutation:
    """Canonical projection onto ``{1..n}``."""
    return induced_permutation(w, range(1, n + 1))


@dataclass(frozen=True)
class CycleProfile:
    lengths: tuple[int, ...]

    @property
    def n(self) -> int:
        return sum(self.lengths)

    @property
    def fractions(self) -> tuple[float, ...]:
        n = self.n
        return tuple(l / n for l in self.lengths)

    def as_mass_partition(self) -> MassPartition:
        return reorder(self.fractions)


def cycle_profile(w: Permutation) -> CycleProfile:
    return CycleProfile(tuple(sorted((len(c) for c in w.cycles), reverse=True)))


def cycle_lengths(succ: np.ndarray) -> np.ndarray:
    """Cycle lengths of a successor array, largest first.

    Labels every point by the minimum over its cycle using pointer doubling,
    which needs ``ceil(log2 n)`` vectorized passes.
    """
    n = len(succ)
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    label = np.arange(n)
    jump = np.asarray(succ, dtype=np.int64)
    for _ in range(max(1, math.ceil(math.log2(n)))):
        label = np.minimum(label, label[jump])
        jump = jump[jump]
    counts = np.bincount(label, minlength=n)
    return np.sort(counts[counts > 0])[::-1]


@dataclass(frozen=True)
class LabelledPermutation:
    """A draw from the labelled-cycle construction: ``labels[i - 1]`` is the label of the cycle holding ``i``."""

    permutation: Permutation
    labels: tuple[int, ...]


def sample_px_sequential(x: MassPartition, n: int, rng: np.random.Generator) -> LabelledPermutation:
    """Insert ``1..n`` one at a time into labelled cycles.

    Element ``m + 1`` takes label ``i`` with probability ``x[i]``: if a cycle
    with that label exists it is inserted after a uniformly chosen member,
    otherwise it opens a new cycle.
    """
    if n < 0:
        raise ValueError("degree must be non-negative")
    cycles: dict[int, list[int]] = {}
    labels = []
    for m in range(1, n + 1):
        i = size_biased_index(x, rng)
        labels.append(i)
        cyc = cycles.get(i)
        if cyc is None:
            cycles[i] = [m]
        else:
            cyc.insert(int(rng.integers(len(cyc))) + 1, m)
    return LabelledPermutation(Permutation(tuple(tuple(c) for c in cycles.values())), tuple(labels))


def sample_px_successors(x: MassPartition, n: int, rng: np.random.Generator) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized draw of the same law as :func:`sample_px_sequential`.

    Labels are i.i.d. with law ``x`` and each label class is joined into one
    cycle in uniformly random cyclic order. Returns ``(succ, labels)``.
    """
    labels = rng.choice(len(x), size=n, p=np.asarray(x.parts))
    # label + uniform key in [0, 1): sorting groups by label, random order within
    order = np.argsort(labels + rng.random(n))
    ordered = labels[order]
    starts = np.r_[True, ordered[1:] != ordered[:-1]]
    ends = np.r_[ordered[1:] != ordered[:-1], True]
    group_start = np.flatnonzero(starts)[np.cumsum(starts) - 1]
    nxt = np.empty(n, dtype=np.int64)
    nxt[:-1] = order[1:]
    nxt[ends] = order[group_start[ends]]
    succ = np.empty(n, dtype=np.int64)
    succ[order] = nxt
    return succ, labels


def sample_Px(x: MassPartition, n: int, rng: np.random.Generator, method: str = "sequential") -> LabelledPermutation:
    if method == "sequential":
        return sample_px_sequential(x, n, rng)
    if method == "vectorized":
        succ, labels = sample_px_successors(x, n, rng)
        return LabelledPermutation(Permutation.from_successors(succ), tuple(int(l) for l in labels))
    raise ValueError(f"unknown method {method!r}")


def haar_successors(n: int, rng: np.random.Generator) -> np.ndarray:
    # Generator.permutation is a Fisher-Yates shuffle
    return rng.permutation(n)


def haar_sample(n: int, rng: np.random.Generator) -> Permutation:
    """Uniform element of ``S_n``."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    return Permutation.from_successors(haar_successors(n, rng))


def haar_cycle_fractions(n: int, rng: np.random.Generator) -> MassPartition:
    """Relative cycle lengths of a uniform permutation of degree ``n``."""
    lengths = cycle_lengths(haar_successors(n, rng))
    return MassPartition(tuple(lengths / n))


def right_multiply_transposition(succ: np.ndarray, a: int = 0, b: int = 1) -> np.ndarray:
    """Successor array of ``w * (a b)`` (0-based points)."""
    out = np.array(succ, copy=True)
    out[a], out[b] = succ[b], succ[a]
    return out


def shifted_step_via_group(x: MassPartition, n: int, rng: np.random.Generator) -> MassPartition:
    """Cycle fractions of ``w * (1 2)`` for ``w`` drawn from the labelled-cycle measure of ``x``."""
    if n < 2:
        raise ValueError("degree must be at least 2")
    succ, _ = sample_px_successors(x, n, rng)
    lengths = cycle_lengths(right_multiply_transposition(succ))
    return MassPartition(tuple(lengths / n))


@dataclass(frozen=True)
class CoherenceResult:
    statistic: float
    pvalue: float
    dof: int
    projected: dict
    direct: dict

    def agrees(self, alpha: float = 0.01) -> bool:
        return self.pvalue >= alpha


def _class_key(w: Permutation, n: int):
    # full group for tiny n, conjugacy classes otherwise
    return w.cycles if n <= 4 else w.cycle_type().rows


def coherence_check(
    x: MassPartition, n: int, samples: int, rng: np.random.Generator, method: str = "sequential"
) -> CoherenceResult:
    """Chi-square homogeneity of ``project(w_{n+1}, n)`` against direct draws ``w_n``."""
    if n < 1:
        raise ValueError("degree must be at least 1")
    projected = Counter(
        _class_key(project(sample_Px(x, n + 1, rng, method).permutation, n), n) for _ in range(samples)
    )
    direct = Counter(_class_key(sample_Px(x, n, rng, method).permutation, n) for _ in range(samples))
    keys = sorted(set(projected) | set(direct))
    if len(keys) < 2:
        return CoherenceResult(0.0, 1.0, 0, dict(projected), dict(direct))
    table = np.array([[projected[k] for k in keys], [direct[k] for k in keys]])
    stat, p, dof, _ = sps.chi2_contingency(table, correction=False)
    return CoherenceResult(float(stat), float(p), int(dof), dict(projected), dict(direct))
