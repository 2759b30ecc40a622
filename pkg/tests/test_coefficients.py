import json
from fractions import Fraction
from functools import cache
from math import comb, factorial

import pytest

from splitmerge.characters import ClassFunction, pointwise
from splitmerge.coefficients import (
    a_q_closed_form,
    a_q_coefficients,
    a_q_halfstep,
    add_horizontal_2strips,
    compose_averaged_steps,
    count_2strip_paths,
    decay_envelope,
    golden_record,
    halfstep_project,
    hook_path_count,
    parse_golden_record,
    tau_decomposition,
    tau_q,
)
from splitmerge.oracle import brute_force_tau_q
from splitmerge.young import Partition, SkewShape, content_product, partitions, sub_partitions

P = Partition
chi = ClassFunction.character


def test_path_count_examples():
    assert count_2strip_paths(P((3, 2)), P((3, 2))) == 1
    assert count_2strip_paths(P((2, 1, 1)), P((1, 1))) == comb(1, 1)
    # n=3, q=2, N=7, k=5, l=2
    assert count_2strip_paths(P.hook(5, 7), P.hook(2, 3)) == 2
    # the only 2-cell extension of (1,1) inside (2,2) is a column
    assert count_2strip_paths(P((2, 2)), P((1, 1))) == 0
    with pytest.raises(ValueError):
        count_2strip_paths(P((2,)), P((1, 1)))
    with pytest.raises(ValueError):
        count_2strip_paths(P((3,)), P((2,)))


def test_strip_additions():
    assert add_horizontal_2strips(P((1,))) == [P((3,)), P((2, 1))]
    assert add_horizontal_2strips(P((1, 1)), P((2, 1, 1))) == [P((2, 1, 1))]


def brute_force_paths(lam, mu):
    """Chains through every intermediate partition, strip test done cell-wise."""

    @cache
    def count(nu):
        if nu == lam:
            return 1
        return sum(
            count(nxt)
            for nxt in sub_partitions(lam, nu.n + 2)
            if nxt.contains(nu) and SkewShape(nxt, nu).is_horizontal_strip()
        )

    return count(mu)


@pytest.mark.parametrize("N", range(2, 11))
def test_path_count_vs_brute_force(N):
    for lam in partitions(N):
        for m in range(1, N // 2 + 1):
            for mu in sub_partitions(lam, N - 2 * m):
                assert count_2strip_paths(lam, mu) == brute_force_paths(lam, mu)


@pytest.mark.parametrize("n", range(1, 7))
@pytest.mark.parametrize("q", range(0, 7))
def test_hook_path_closed_form(n, q):
    N = n + 2 * q
    for k in range(1, N + 1):
        for l in range(1, n + 1):
            lam, mu = P.hook(k, N), P.hook(l, n)
            if lam.contains(mu):
                assert count_2strip_paths(lam, mu) == hook_path_count(n, q, k, l)


def test_halfstep_examples():
    assert halfstep_project(P((2, 1)), 0) == chi(P((2, 1)))
    assert halfstep_project(P((4,)), 1) == chi(P((2,))) * 12


@pytest.mark.parametrize("N", range(2, 9))
def test_halfstep_equals_composed_steps(N):
    for lam in partitions(N):
        for m in range(0, N // 2 + 1):
            assert halfstep_project(lam, m) == compose_averaged_steps(chi(lam), m)


def test_tau_small():
    assert tau_decomposition(2) == chi(P((2,))) * Fraction(1, 2) - chi(P((1, 1))) * Fraction(1, 2)
    tau2 = tau_decomposition(2)
    assert tau2(P((1, 1))) == 0 and tau2(P((2,))) == 1
    tau3 = tau_decomposition(3)
    assert tau3 == (chi(P((3,))) - chi(P((2, 1))) + chi(P((1, 1, 1)))) * Fraction(1, 6)
    assert tau3.values() == {P((3,)): Fraction(1, 2), P((2, 1)): 0, P((1, 1, 1)): 0}


@pytest.mark.parametrize("N", range(1, 9))
def test_tau_is_uniform_on_long_cycles(N):
    uniform = {rho: (Fraction(1, factorial(N - 1)) if rho.rows == (N,) else Fraction(0)) for rho in partitions(N)}
    assert ClassFunction.from_values(N, uniform) == tau_decomposition(N)
    if N <= 7:
        for u, v in pointwise(tau_decomposition(N)).items():
            assert v == (Fraction(1, factorial(N - 1)) if len(u.cycles) == 1 else 0)


@pytest.mark.parametrize("n", range(2, 5))
@pytest.mark.parametrize("q", range(0, 9))
def test_routes_agree(n, q):
    assert a_q_halfstep(n, q) == a_q_closed_form(n, q)


@pytest.mark.parametrize("n,q", [(2, 1), (2, 2), (2, 3), (3, 1), (3, 2), (4, 1), (4, 2), (5, 1), (6, 1)])
def test_tau_q_vs_measure_brute_force(n, q):
    f = tau_q(n, q)
    for ct, v in brute_force_tau_q(n, q).items():
        assert f(P(ct)) == v


def _row_strip_tau(n, q):
    """tau_q built with strips allowing at most one added cell per row."""
    N = n + 2 * q

    def paths(lam, nu):
        if nu == lam:
            return 1
        return sum(
            paths(lam, nxt)
            for nxt in sub_partitions(lam, nu.n + 2)
            if nxt.contains(nu) and len({i for i, _ in SkewShape(nxt, nu).cells}) == 2
        )

    out = ClassFunction(n)
    for lam, a in tau_decomposition(N).coefficients.items():
        for mu in sub_partitions(lam, n):
            out = out + chi(mu) * (a * content_product(SkewShape(lam, mu)) * paths(lam, mu))
    return out


def test_row_strip_reading_disagrees_with_measures():
    truth = brute_force_tau_q(2, 1)
    assert tau_q(2, 1)(P((2,))) == truth[(2,)] == Fraction(5, 6)
    assert _row_strip_tau(2, 1)(P((2,))) != truth[(2,)]


@pytest.mark.parametrize("n", range(2, 7))
def test_haar_coefficient(n):
    for q in range(0, 9):
        assert a_q_coefficients(n, q)[n] == Fraction(1, factorial(n))


@pytest.mark.parametrize("q", range(0, 21))
def test_n2_coefficients(q):
    a = a_q_coefficients(2, q)
    assert abs(a[1]) == Fraction(1, q + 2)
    assert a[1] == Fraction(-1, q + 2)
    assert a[2] == Fraction(1, 2)
    assert tau_q(2, q)(P((2,))) == Fraction(1, 2) + Fraction(1, q + 2)


def test_n2_boundary():
    a = a_q_coefficients(2, 0)
    assert a == {1: Fraction(-1, 2), 2: Fraction(1, 2)}
    assert a[2] - a[1] == 1
    assert tau_q(2, 1)(P((2,))) == Fraction(5, 6)


@pytest.mark.parametrize("n", range(2, 6))
@pytest.mark.parametrize("q", range(0, 9))
def test_probability_measure(n, q):
    f = tau_q(n, q)
    assert all(v >= 0 for v in f.values().values())
    assert f.total_mass() == 1


@pytest.mark.parametrize("n", range(2, 6))
def test_identity_probability_nonnegative(n):
    for q in range(0, 11):
        a = a_q_coefficients(n, q)
        p_id = sum(a[l] * P.hook(l, n).dimension() for l in a)
        assert p_id >= 0
        assert p_id == tau_q(n, q)(P((1,) * n))


@pytest.mark.parametrize("n", [3, 4])
def test_decay(n):
    qs = range(0, 41)
    for l in range(1, n):
        mags = [abs(a_q_closed_form(n, q)[l]) for q in qs]
        assert all(b < a for a, b in zip(mags[1:], mags[2:]))
        ratios = [m / decay_envelope(n, q, l) for q, m in zip(qs, mags)]
        C = max(ratios[:11])
        assert all(r <= C for r in ratios)
        assert mags[-1] < Fraction(1, 40)


def test_golden_roundtrip():
    a = a_q_coefficients(3, 5)
    rec = golden_record(3, 5, a)
    assert rec["coefficients"]["3"] == "1/6"
    assert all("/" in v for v in rec["coefficients"].values())
    assert parse_golden_record(json.loads(json.dumps(rec))) == (3, 5, a)


def test_bad_arguments():
    with pytest.raises(ValueError):
        a_q_coefficients(1, 0)
    with pytest.raises(ValueError):
        halfstep_project(P((2,)), 2)
