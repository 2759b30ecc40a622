"""Exact coefficients of the averaged split-merge measures on small symmetric groups.

Starting from the uniform measure on ``N``-cycles, ``q`` averaged steps
projected down to ``S_n`` (``N = n + 2q``) give a central measure

    tau_q = sum_l a_q(l) * chi_(l, 1^(n-l))

whose hook coefficients are computed here in two independent ways: by
pushing the character decomposition through :func:`halfstep_project`, and by
the closed-form binomial sums.
"""
from __future__ import annotations

from fractions import Fraction
from functools import cache
from math import comb, factorial

from .characters import ClassFunction, apply_linear, project_char_general, project_char_shifted
from .young import Partition, SkewShape, content_product, sub_partitions


def add_horizontal_2strips(nu: Partition, bound: Partition | None = None) -> list[Partition]:
    """Partitions obtained by adding two cells to ``nu`` in distinct columns.

    With ``bound`` only results contained in it are kept.
    """
    out = set()
    for a in nu.addable_cells():
        once = nu.add_cell(a)
        if bound is not None and not bound.contains(once):
            continue
        for b in once.addable_cells():
            if b[1] == a[1]:
                continue
            twice = once.add_cell(b)
            if bound is None or bound.contains(twice):
                out.add(twice)
    return sorted(out, reverse=True)


def count_2strip_paths(lam: Partition, mu: Partition) -> int:
    """Number of chains ``mu = mu_0 < mu_1 < ... < mu_m = lam`` of horizontal 2-strips."""
    if not lam.contains(mu):
        raise ValueError(f"{mu} is not contained in {lam}")
    if (lam.n - mu.n) % 2:
        raise ValueError("sizes must differ by an even number")
    return _paths_to(lam)(mu)


@cache
def _paths_to(lam: Partition):
    @cache
    def count(nu: Partition) -> int:
        if nu == lam:
            return 1
        if nu.n >= lam.n:
            return 0
        return sum(count(nxt) for nxt in add_horizontal_2strips(nu, lam))

    return count


@cache
def halfstep_project(lam: Partition, m: int) -> ClassFunction:
    """Image of ``chi_lam`` under ``m`` averaged steps, as a class function on ``S_(N - 2m)``."""
    n = lam.n - 2 * m
    if m < 0 or n < 0:
        raise ValueError(f"cannot take {m} steps down from {lam}")
    coeffs = {}
    for mu in sub_partitions(lam, n):
        p = count_2strip_paths(lam, mu)
        if p:
            coeffs[mu] = content_product(SkewShape(lam, mu)) * p
    return ClassFunction(n, coeffs)


def averaged_step(lam: Partition) -> ClassFunction:
    """One averaged step ``(identity + transposition)/2`` taken two levels down."""
    return (project_char_general(lam, (1, 1)) + project_char_shifted(lam, 2)) * Fraction(1, 2)


def compose_averaged_steps(f: ClassFunction, m: int) -> ClassFunction:
    for _ in range(m):
        f = apply_linear(averaged_step, f, f.degree - 2)
    return f


def tau_decomposition(N: int) -> ClassFunction:
    """Character decomposition of the uniform measure on ``N``-cycles."""
    if N < 1:
        raise ValueError("N must be at least 1")
    return ClassFunction(
        N, {Partition.hook(k, N): Fraction((-1) ** (N - k), factorial(N)) for k in range(1, N + 1)}
    )


def tau_q(n: int, q: int) -> ClassFunction:
    """Projection onto ``S_n`` of ``q`` averaged steps applied to ``tau_(n + 2q)``."""
    return apply_linear(lambda lam: halfstep_project(lam, q), tau_decomposition(n + 2 * q), n)


def a_q_halfstep(n: int, q: int) -> dict[int, Fraction]:
    f = tau_q(n, q)
    stray = [lam for lam in f.coefficients if not lam.is_hook()]
    if stray:
        raise ArithmeticError(f"non-hook characters in tau_q: {stray}")
    return {l: f.coefficient(Partition.hook(l, n)) for l in range(1, n + 1)}


def a_q_closed_form(n: int, q: int) -> dict[int, Fraction]:
    N = n + 2 * q
    out = {}
    for l in range(1, n):
        s = sum(
            Fraction(factorial(k) * factorial(N - k - 1), factorial(2 * q - k + l) * factorial(k - l - q))
            for k in range(q + l, 2 * q + l + 1)
        )
        sign = (-1) ** (l + N)
        out[l] = sign * Fraction(factorial(q), factorial(l) * factorial(n - l - 1) * factorial(N)) * s
    out[n] = Fraction(1, factorial(n))
    return out


class RouteMismatch(ArithmeticError):
    pass


def a_q_coefficients(n: int, q: int) -> dict[int, Fraction]:
    """Hook coefficients ``a_q(l)``, ``l = 1..n``, checked across both routes."""
    if n < 2 or q < 0:
        raise ValueError("need n >= 2 and q >= 0")
    via_steps = a_q_halfstep(n, q)
    closed = a_q_closed_form(n, q)
    if via_steps != closed:
        raise RouteMismatch(f"n={n}, q={q}: {via_steps} != {closed}")
    return via_steps


def hook_path_count(n: int, q: int, k: int, l: int) -> int:
    """Closed form of ``count_2strip_paths((k, 1^(N-k)), (l, 1^(n-l)))``."""
    j = 2 * q - k + l
    return comb(q, j) if 0 <= j <= q else 0


def decay_envelope(n: int, q: int, l: int) -> Fraction:
    """Shape of the upper bound on ``|a_q(l)|`` for ``l < n`` (up to a constant)."""
    return Fraction(1, q + l + 1) * Fraction(q + n - l - 1, 2 * q + l + 2) ** (n - l - 1)


def format_rational(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s: str) -> Fraction:
    num, _, den = s.partition("/")
    return Fraction(int(num), int(den or 1))


def golden_record(n: int, q: int, coefficients: dict[int, Fraction]) -> dict:
    return {
        "n": n,
        "q": q,
        "coefficients": {str(l): format_rational(coefficients[l]) for l in sorted(coefficients)},
    }


def parse_golden_record(record: dict) -> tuple[int, int, dict[int, Fraction]]:
    coeffs = {int(l): parse_rational(v) for l, v in record["coefficients"].items()}
    return int(record["n"]), int(record["q"]), coeffs
