from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, strategies as st

from splitmerge.oracle import brute_force_hooks
from splitmerge.young import (
    Partition,
    SkewShape,
    content_product,
    partitions,
    remove_skew_hooks,
    sub_partitions,
)

P = Partition


def partition_count(n):
    """Euler's pentagonal-number recurrence, independent of the generator."""
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def test_partitions_small():
    assert partitions(0) == (P(()),)
    assert [p.rows for p in partitions(4)] == [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]


@pytest.mark.parametrize("n", range(0, 16))
def test_partition_counts(n):
    assert len(partitions(n)) == partition_count(n)
    assert len(set(partitions(n))) == len(partitions(n))


def test_partition_counts_ten():
    assert len(partitions(10)) == 42


def test_reverse_lexicographic_order():
    rows = [p.rows for p in partitions(9)]
    assert rows == sorted(rows, reverse=True)


def test_partition_validation():
    with pytest.raises(ValueError):
        P((1, 2))
    with pytest.raises(ValueError):
        P((2, 0))
    assert P.of([3, 0, 0]) == P((3,))
    assert P.hook(2, 4) == P((2, 1, 1))


def test_conjugate_and_dimension():
    assert P((3, 1)).conjugate == P((2, 1, 1))
    assert P((2, 2)).conjugate == P((2, 2))
    assert P((3, 2)).dimension() == 5
    assert sum(p.dimension() ** 2 for p in partitions(6)) == factorial(6)


@given(st.integers(0, 12).flatmap(lambda n: st.sampled_from(partitions(n))))
def test_conjugate_is_involution(p):
    assert p.conjugate.conjugate == p
    assert p.conjugate.n == p.n


def test_skew_shape_cells():
    s = SkewShape(P((3, 1)), P((1, 1)))
    assert s.cells == {(1, 2), (1, 3)}
    assert s.is_skew_hook() and s.height() == 0
    with pytest.raises(ValueError):
        SkewShape(P((2,)), P((1, 1)))


def test_content_product_row():
    # (N) minus (2): contents 2..N-1, product 3*4*...*N = N!/2
    for N in range(2, 9):
        assert content_product(SkewShape(P((N,)), P((2,)))) == Fraction(factorial(N), 2)
    assert content_product(SkewShape(P((4,)), P((2,)))) == 12


def test_content_product_empty():
    assert content_product(SkewShape(P((3, 2)), P((3, 2)))) == 1


@pytest.mark.parametrize("N", [4, 6, 8, 10])
def test_content_product_hook_over_column(N):
    for k in range(1, N - 1):
        got = content_product(SkewShape(P.hook(k, N), P((1, 1))))
        assert got == (-1) ** (k + 1) * factorial(k) * factorial(N - k - 1)


def test_content_product_hook_example():
    assert content_product(SkewShape(P((3, 1)), P((1, 1)))) == 6


def test_remove_skew_hooks_examples():
    assert remove_skew_hooks(P((2, 1)), 3) == ((P(()), 1),)
    assert remove_skew_hooks(P((5,)), 1) == ((P((4,)), 0),)
    # second row (height 0) and second column (height 1)
    assert remove_skew_hooks(P((2, 2)), 2) == ((P((2,)), 0), (P((1, 1)), 1))
    assert remove_skew_hooks(P((2, 2)), 3) == ((P((1,)), 1),)
    assert remove_skew_hooks(P((2, 2)), 4) == ()


@pytest.mark.parametrize("N", range(1, 9))
def test_remove_skew_hooks_matches_brute_force(N):
    for lam in partitions(N):
        for k in range(1, N + 1):
            assert list(remove_skew_hooks(lam, k)) == brute_force_hooks(lam, k)


def test_sub_partitions():
    assert sub_partitions(P((2, 1)), 2) == [P((2,)), P((1, 1))]
    assert sub_partitions(P((3,)), 2) == [P((2,))]


def test_horizontal_strip_predicate():
    assert SkewShape(P((3, 1)), P((1, 1))).is_horizontal_strip()
    assert SkewShape(P((2, 1)), P(())).is_horizontal_strip() is False
    assert SkewShape(P((2, 2)), P((1, 1))).is_horizontal_strip() is False
    assert SkewShape(P((2, 1, 1)), P((1, 1))).is_horizontal_strip()
