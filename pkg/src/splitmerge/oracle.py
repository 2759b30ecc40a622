"""Brute-force cross-checks of the character engine and the permutation layer.

Every check returns a :class:`Check`; :func:`run_suite` collects them for the
``oracle-check`` command.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import factorial
from typing import Callable, Iterator

from . import characters as ch
from . import coefficients as co
from . import perms
from .simplex import MassPartition, apply_T
from .stats import proportion_estimate
from .streams import stream
from .young import Partition, SkewShape, partitions, remove_skew_hooks, sub_partitions

ORACLE_MAX = ch.BRUTE_FORCE_MAX


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def element_of_type(nu: tuple[int, ...], offset: int) -> perms.Permutation:
    """A permutation of ``offset+1 .. offset+|nu|`` with cycle type ``nu``."""
    cycles, start = [], offset + 1
    for part in nu:
        cycles.append(tuple(range(start, start + part)))
        start += part
    return perms.Permutation.from_cycles(cycles)


def brute_force_hooks(lam: Partition, k: int) -> list[tuple[Partition, int]]:
    out = []
    for mu in sub_partitions(lam, lam.n - k):
        shape = SkewShape(lam, mu)
        if shape.is_skew_hook():
            out.append((mu, shape.height()))
    return sorted(out, key=lambda t: t[0].rows, reverse=True)


def check_hook_removal(nmax: int) -> Check:
    bad = [
        (lam, k)
        for N in range(1, nmax + 1)
        for lam in partitions(N)
        for k in range(1, N + 1)
        if list(remove_skew_hooks(lam, k)) != brute_force_hooks(lam, k)
    ]
    return Check("skew hook removal vs brute force", not bad, f"mismatches: {bad[:3]}" if bad else "")


def check_orthogonality(nmax: int) -> Check:
    bad = []
    for n in range(1, nmax + 1):
        if ch.sum_of_squared_dimensions(n) != factorial(n):
            bad.append((n, "dims"))
        for lam, mu in itertools.combinations_with_replacement(partitions(n), 2):
            inner = sum(ch.class_size(r) * ch.mn_character(lam, r) * ch.mn_character(mu, r) for r in partitions(n))
            if inner != (factorial(n) if lam == mu else 0):
                bad.append((n, lam, mu))
    return Check("character orthogonality", not bad, str(bad[:3]) if bad else "")


def check_dimensions(nmax: int) -> Check:
    bad = [lam for n in range(1, nmax + 1) for lam in partitions(n) if ch.dimension(lam) != lam.dimension()]
    return Check("MN dimensions vs hook length formula", not bad, str(bad[:3]) if bad else "")


def _equivalence_cases(nmax: int, kmax: int = 3) -> Iterator[tuple[Partition, tuple[int, ...]]]:
    for N in range(1, nmax + 1):
        for lam in partitions(N):
            for k in range(1, min(kmax, N) + 1):
                for nu in partitions(k):
                    yield lam, nu.rows


def check_shifted_vs_brute_force(nmax: int, kmax: int = 3) -> Check:
    bad = []
    for lam, nu in _equivalence_cases(nmax, kmax):
        n = lam.n - sum(nu)
        truth = ch.brute_force_shifted_projection(lam, element_of_type(nu, n), n)
        if len(nu) == 1 and ch.pointwise(ch.project_char_shifted(lam, nu[0])) != truth:
            bad.append(("shifted", lam, nu))
        if ch.pointwise(ch.project_char_general(lam, nu)) != truth:
            bad.append(("general", lam, nu))
    return Check("shifted/general projections vs fiber sums", not bad, str(bad[:3]) if bad else "")


def check_k1_reduction(nmax: int) -> Check:
    bad = []
    for N in range(1, nmax + 1):
        for lam in partitions(N):
            if ch.project_char_shifted(lam, 1) != _canonical_by_corners(lam):
                bad.append(lam)
    return Check("1-hook projection equals corner removal", not bad, str(bad[:3]) if bad else "")


def _canonical_by_corners(lam: Partition) -> ch.ClassFunction:
    coeffs: dict[Partition, Fraction] = {}
    for i, j in lam.removable_cells():
        coeffs[lam.remove_cell((i, j))] = Fraction(j - i + 1)
    return ch.ClassFunction(lam.n - 1, coeffs)


def check_factorization(nmax: int) -> Check:
    bad = []
    for N in range(2, nmax + 1):
        for lam in partitions(N):
            for m in range(1, N // 2 + 1):
                direct = co.halfstep_project(lam, m)
                composed = co.compose_averaged_steps(ch.ClassFunction.character(lam), m)
                if direct != composed:
                    bad.append((lam, m))
    return Check("2-strip projection equals composed averaged steps", not bad, str(bad[:3]) if bad else "")


def check_tau(nmax: int) -> Check:
    bad = []
    for N in range(1, nmax + 1):
        tau = co.tau_decomposition(N)
        expected = {lam: Fraction(ch.mn_character(lam, Partition((N,))), factorial(N)) for lam in partitions(N)}
        if tau != ch.ClassFunction(N, expected):
            bad.append((N, "coefficients"))
        for rho, v in tau.values().items():
            if v != (Fraction(1, factorial(N - 1)) if rho.rows == (N,) else 0):
                bad.append((N, rho))
    return Check("tau_N is uniform on N-cycles", not bad, str(bad[:3]) if bad else "")


def check_functoriality(nmax: int, trials: int = 200, seed: int = 0) -> Check:
    rng = stream(seed, 1)
    bad = 0
    nmax = min(nmax, ORACLE_MAX)
    for t in range(trials):
        n = int(rng.integers(1, nmax + 1))
        w = perms.haar_sample(n, rng)
        J = [e for e in range(1, n + 1) if rng.random() < 0.6]
        J2 = [e for e in J if rng.random() < 0.6]
        if perms.induced_permutation(perms.induced_permutation(w, J), J2) != perms.induced_permutation(w, J2):
            bad += 1
        if perms.induced_permutation(w, range(1, n + 1)) != w:
            bad += 1
    return Check("induced permutations compose", bad == 0, f"{bad} failures" if bad else "")


COHERENCE_STARTS = ((1.0,), (0.5, 0.5), (0.7, 0.3))


def check_coherence(nmax: int, samples: int = 2000, seed: int = 0, alpha: float = 0.01) -> list[Check]:
    out = []
    n = 2 if nmax <= 4 else 3
    for idx, x in enumerate(COHERENCE_STARTS):
        res = perms.coherence_check(MassPartition(x), n, samples, stream(seed, 2, idx))
        out.append(Check(f"coherence x={x} n={n}", res.agrees(alpha), f"chi2={res.statistic:.3f} p={res.pvalue:.3g}"))
    return out


def check_merge_probability(samples: int = 2000, degree: int = 200, seed: int = 0) -> list[Check]:
    """One-part outputs of the group route occur at rate ``2 x1 x2`` like apply_T."""
    out = []
    for idx, x in enumerate(COHERENCE_STARTS[1:]):
        mp = MassPartition(x)
        rng = stream(seed, 3, idx)
        target = 2 * x[0] * x[1]
        group = sum(len(perms.shifted_step_via_group(mp, degree, rng)) == 1 for _ in range(samples))
        direct = sum(len(apply_T(mp, rng)) == 1 for _ in range(samples))
        eg = proportion_estimate(group, samples, target)
        ed = proportion_estimate(direct, samples, target)
        out.append(Check(
            f"merge rate x={x}",
            eg.within(target) and ed.within(target),
            f"group={eg.mean:.4f} direct={ed.mean:.4f} target={target:.4f}",
        ))
    return out


def run_suite(nmax: int) -> list[Check]:
    if nmax > ORACLE_MAX:
        raise ch.SizeLimitError(f"oracle checks are capped at N = {ORACLE_MAX}")
    checks: list[Callable[[], Check | list[Check]]] = [
        lambda: check_hook_removal(nmax),
        lambda: check_dimensions(nmax),
        lambda: check_orthogonality(nmax),
        lambda: check_shifted_vs_brute_force(nmax),
        lambda: check_k1_reduction(nmax),
        lambda: check_factorization(nmax),
        lambda: check_tau(nmax),
        lambda: check_functoriality(nmax),
        lambda: check_coherence(nmax),
        lambda: check_merge_probability(),
    ]
    out: list[Check] = []
    for c in checks:
        r = c()
        out.extend(r if isinstance(r, list) else [r])
    return out


def _cycle_type(images: tuple[int, ...]) -> tuple[int, ...]:
    seen = [False] * len(images)
    out = []
    for s in range(len(images)):
        if not seen[s]:
            l, e = 0, s
            while not seen[e]:
                seen[e] = True
                e = images[e]
                l += 1
            out.append(l)
    return tuple(sorted(out, reverse=True))


def brute_force_tau_q(n: int, q: int) -> dict[tuple[int, ...], Fraction]:
    """Class values of ``tau_q`` on ``S_n`` from fiber sums of measures, without characters.

    Starts from the uniform measure on ``(n + 2q)``-cycles and applies
    ``u -> (1/2) * sum over the fiber of u of [mu(w) + mu(w t)]`` with
    ``t`` the transposition of the two top points, ``q`` times.
    """
    N = n + 2 * q
    if N > ORACLE_MAX:
        raise ch.SizeLimitError(f"brute force is capped at N = {ORACLE_MAX}")
    measure = {ct.rows: (Fraction(1, factorial(N - 1)) if ct.rows == (N,) else Fraction(0)) for ct in partitions(N)}
    for level in range(N - 2, n - 1, -2):
        top = level + 2
        t = list(range(top))
        t[level], t[level + 1] = level + 1, level
        sums: dict[tuple[int, ...], Fraction] = {}
        for w in itertools.permutations(range(top)):
            u = []
            for i in range(level):
                j = w[i]
                while j >= level:
                    j = w[j]
                u.append(j)
            wt = tuple(w[t[e]] for e in range(top))
            key = tuple(u)
            sums[key] = sums.get(key, Fraction(0)) + (measure[_cycle_type(w)] + measure[_cycle_type(wt)]) / 2
        by_class: dict[tuple[int, ...], Fraction] = {}
        for u, v in sums.items():
            ct = _cycle_type(u)
            if by_class.setdefault(ct, v) != v:
                raise ArithmeticError("projected measure is not central")
        measure = by_class
    return measure
