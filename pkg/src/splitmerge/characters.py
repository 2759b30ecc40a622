"""Irreducible characters of symmetric groups and their shifted projections.

Class functions are kept in the character basis (a map from partitions to
exact rationals) and evaluated pointwise through the Murnaghan-Nakayama rule.
"""
from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cache
from math import factorial
from typing import Callable, Mapping

from .perms import Permutation
from .young import Partition, SkewShape, content_product, partitions, remove_skew_hooks

BRUTE_FORCE_MAX = 8


class SizeLimitError(ValueError):
    pass


@cache
def mn_character(lam: Partition, cycle_type: Partition) -> int:
    """Value of the irreducible character ``chi_lam`` on the class ``cycle_type``."""
    if lam.n != cycle_type.n:
        raise ValueError(f"size mismatch: |{lam}| != |{cycle_type}|")
    if lam.n == 0:
        return 1
    k, rest = cycle_type.rows[0], Partition(cycle_type.rows[1:])
    return sum((-1) ** h * mn_character(mu, rest) for mu, h in remove_skew_hooks(lam, k))


def class_size(cycle_type: Partition) -> int:
    """Number of permutations with the given cycle type."""
    z = 1
    for part, mult in Counter(cycle_type.rows).items():
        z *= part**mult * factorial(mult)
    return factorial(cycle_type.n) // z


@dataclass(frozen=True, eq=False)
class ClassFunction:
    """``sum(a_lam * chi_lam)`` over partitions of ``degree``."""

    degree: int
    coefficients: Mapping[Partition, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for lam, a in self.coefficients.items():
            if lam.n != self.degree:
                raise ValueError(f"{lam} is not a partition of {self.degree}")
            a = Fraction(a)
            if a:
                clean[lam] = a
        object.__setattr__(self, "coefficients", clean)

    @classmethod
    def character(cls, lam: Partition) -> ClassFunction:
        return cls(lam.n, {lam: Fraction(1)})

    @classmethod
    def from_values(cls, degree: int, values: Mapping[Partition, Fraction]) -> ClassFunction:
        """Inverse of :meth:`values`, by orthogonality of characters."""
        order = factorial(degree)
        return cls(degree, {
            lam: sum(
                (Fraction(class_size(rho) * mn_character(lam, rho)) * Fraction(values.get(rho, 0))
                 for rho in partitions(degree)),
                Fraction(0),
            ) / order
            for lam in partitions(degree)
        })

    def coefficient(self, lam: Partition) -> Fraction:
        return self.coefficients.get(lam, Fraction(0))

    def __eq__(self, other):
        if not isinstance(other, ClassFunction):
            return NotImplemented
        return self.degree == other.degree and self.coefficients == other.coefficients

    def __add__(self, other: ClassFunction) -> ClassFunction:
        if self.degree != other.degree:
            raise ValueError("degree mismatch")
        out = dict(self.coefficients)
        for lam, a in other.coefficients.items():
            out[lam] = out.get(lam, 0) + a
        return ClassFunction(self.degree, out)

    def __neg__(self) -> ClassFunction:
        return self * -1

    def __sub__(self, other: ClassFunction) -> ClassFunction:
        return self + (-other)

    def __mul__(self, scalar) -> ClassFunction:
        s = Fraction(scalar)
        return ClassFunction(self.degree, {lam: a * s for lam, a in self.coefficients.items()})

    __rmul__ = __mul__

    def __call__(self, cycle_type: Partition) -> Fraction:
        return evaluate_class_function(self, cycle_type)

    def values(self) -> dict[Partition, Fraction]:
        """Pointwise values on every conjugacy class."""
        return {rho: self(rho) for rho in partitions(self.degree)}

    def total_mass(self) -> Fraction:
        """Sum over all group elements, i.e. class-size weighted sum of values."""
        return sum((class_size(rho) * v for rho, v in self.values().items()), Fraction(0))

    def __repr__(self) -> str:
        terms = " + ".join(f"{a}*chi{lam}" for lam, a in sorted(self.coefficients.items(), reverse=True))
        return f"ClassFunction[{self.degree}]({terms or '0'})"


def evaluate_class_function(f: ClassFunction, cycle_type: Partition) -> Fraction:
    if cycle_type.n != f.degree:
        raise ValueError(f"class {cycle_type} is not in S_{f.degree}")
    return sum((a * mn_character(lam, cycle_type) for lam, a in f.coefficients.items()), Fraction(0))


def apply_linear(op: Callable[[Partition], ClassFunction], f: ClassFunction, degree: int) -> ClassFunction:
    """Extend ``op`` (defined on irreducible characters) linearly to ``f``."""
    out = ClassFunction(degree)
    for lam, a in f.coefficients.items():
        out = out + op(lam) * a
    return out


def project_char_canonical(lam: Partition) -> ClassFunction:
    """Restriction-sum onto ``S_{n-1}``: removable corners weighted by content + 1."""
    return project_char_shifted(lam, 1)


@cache
def project_char_shifted(lam: Partition, k: int) -> ClassFunction:
    """Fiber sums of ``chi_lam(w g)`` for ``g`` a ``k``-cycle on the top ``k`` points."""
    if not 1 <= k <= lam.n:
        raise ValueError(f"need 1 <= k <= {lam.n}")
    coeffs: dict[Partition, Fraction] = {}
    for mu, height in remove_skew_hooks(lam, k):
        coeffs[mu] = coeffs.get(mu, 0) + (-1) ** height * content_product(SkewShape(lam, mu))
    return ClassFunction(lam.n - k, coeffs)


def project_char_general(lam: Partition, nu: Partition | tuple[int, ...]) -> ClassFunction:
    """Same as :func:`project_char_shifted` for ``g`` of cycle type ``nu``.

    Sums over chains of skew hooks of sizes ``nu[0], nu[1], ...``; the sign is
    the total height and the weight the content product of the whole skew
    shape.
    """
    nu = tuple(nu)
    k = sum(nu)
    if any(p < 1 for p in nu) or k > lam.n:
        raise ValueError(f"bad cycle type {nu} for {lam}")
    frontier = Counter({lam: 1})
    for part in nu:
        nxt: Counter[Partition] = Counter()
        for mu, sign in frontier.items():
            for nu_i, h in remove_skew_hooks(mu, part):
                nxt[nu_i] += sign * (-1) ** h
        frontier = nxt
    return ClassFunction(
        lam.n - k, {mu: s * content_product(SkewShape(lam, mu)) for mu, s in frontier.items() if s}
    )


def _cycle_type_of_images(images: tuple[int, ...]) -> Partition:
    n = len(images)
    seen = [False] * n
    lengths = []
    for s in range(n):
        if seen[s]:
            continue
        l = 0
        e = s
        while not seen[e]:
            seen[e] = True
            e = images[e]
            l += 1
        lengths.append(l)
    return Partition(tuple(sorted(lengths, reverse=True)))


def brute_force_shifted_projection(lam: Partition, g: Permutation, n: int) -> dict[Permutation, Fraction]:
    """For each ``u`` in ``S_n``, the sum of ``chi_lam(w g)`` over ``w`` in ``S_N`` projecting to ``u``.

    ``g`` must fix ``1..n``. Enumerates all of ``S_N``, so ``N <= 8``.
    """
    N = lam.n
    if N > BRUTE_FORCE_MAX:
        raise SizeLimitError(f"brute force is capped at N = {BRUTE_FORCE_MAX}, got {N}")
    if not 0 <= n <= N:
        raise ValueError("need 0 <= n <= N")
    gmap = g.mapping()
    if any(gmap.get(e, e) != e for e in range(1, n + 1)) or any(not 1 <= e <= N for e in gmap):
        raise ValueError(f"{g} must permute only {n + 1}..{N}")
    gimg = [gmap.get(e + 1, e + 1) - 1 for e in range(N)]
    totals: dict[tuple[int, ...], int] = {}
    for w in itertools.permutations(range(N)):
        u = []
        for i in range(n):
            j = w[i]
            while j >= n:
                j = w[j]
            u.append(j)
        wg = tuple(w[gimg[e]] for e in range(N))
        key = tuple(u)
        totals[key] = totals.get(key, 0) + mn_character(lam, _cycle_type_of_images(wg))
    return {Permutation.from_images([e + 1 for e in u]): Fraction(v) for u, v in totals.items()}


def pointwise(f: ClassFunction) -> dict[Permutation, Fraction]:
    """Values of ``f`` on every element of ``S_degree``."""
    out = {}
    for w in itertools.permutations(range(1, f.degree + 1)):
        u = Permutation.from_images(w)
        out[u] = f(u.cycle_type())
    return out


def dimension(lam: Partition) -> int:
    return mn_character(lam, Partition((1,) * lam.n))


def character_table(n: int) -> dict[tuple[Partition, Partition], int]:
    return {(lam, rho): mn_character(lam, rho) for lam in partitions(n) for rho in partitions(n)}


def sum_of_squared_dimensions(n: int) -> int:
    return sum(dimension(lam) ** 2 for lam in partitions(n))

