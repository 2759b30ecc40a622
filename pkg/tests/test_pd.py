import math

import numpy as np
import pytest
from scipy import integrate, special

from splitmerge.pd import MAX_STICKS, StickBreakingError, gem1_sticks, pd1_sample
from splitmerge.perms import haar_cycle_fractions
from splitmerge.stats import ks_two_sample, mean_estimate


class Constant:
    def __init__(self, u):
        self.u = u

    def random(self):
        return self.u


def golomb_dickman():
    """Mean largest part of PD(1): integral of exp(-x - E1(x)) over (0, inf)."""
    value, err = integrate.quad(lambda x: np.exp(-x - special.exp1(x)), 0, np.inf, limit=200)
    assert err < 1e-9
    return value


def test_geometric_sticks():
    s = gem1_sticks(Constant(0.5), 1e-8)
    assert s.v[:4] == (0.5, 0.25, 0.125, 0.0625)
    assert len(s.v) == 27 and s.residual == 2.0**-27


def test_sorted_geometric_sample():
    x = pd1_sample(Constant(0.5), 1e-8)
    assert x.parts[:3] == pytest.approx((0.5, 0.25, 0.125), rel=1e-7)
    assert list(x.parts) == sorted(x.parts, reverse=True)


def test_unit_sum_with_residual(rng):
    for _ in range(2000):
        s = gem1_sticks(rng, 1e-8)
        assert all(v > 0 for v in s.v)
        assert abs(math.fsum(s.v) + s.residual - 1) <= 1e-12
        assert 0 <= s.residual < 1e-8


def test_iteration_cap():
    with pytest.raises(StickBreakingError):
        gem1_sticks(Constant(1e-10), 1e-8)
    assert MAX_STICKS == 10_000


def test_bad_tolerance(rng):
    for tol in (0.0, 1.0, -1):
        with pytest.raises(ValueError):
            gem1_sticks(rng, tol)


def test_stick_count(rng):
    # -log(1 - U) are unit exponentials, so the count is 1 + Poisson(log(1/tol))
    t = math.log(1e8)
    counts = [len(gem1_sticks(rng, 1e-8).v) for _ in range(20_000)]
    est = mean_estimate(counts)
    assert est.within(t + 1)
    assert np.var(counts) == pytest.approx(t, rel=0.05)


@pytest.fixture(scope="module")
def pd_samples():
    from splitmerge.experiments import pd_reference

    return pd_reference(100_000, seed=3, workers=1)


def test_sum_squares_moment(pd_samples):
    assert pd_samples.sum_squares.within(0.5)


def test_sum_cubes_moment(pd_samples):
    assert pd_samples.sum_cubes.within(1 / 3)


def test_largest_part_mean(pd_samples):
    reference = golomb_dickman()
    assert reference == pytest.approx(0.6243, abs=1e-4)
    assert pd_samples.largest.within(reference)


def test_histogram_counts(pd_samples):
    assert sum(c for _, _, c in pd_samples.histogram) == 100_000
    # x1 >= 1/2 with probability log 2
    upper = sum(c for lo, _, c in pd_samples.histogram if lo >= 0.5)
    p = math.log(2)
    assert abs(upper / 100_000 - p) <= 3 * math.sqrt(p * (1 - p) / 100_000)


def test_haar_largest_part_agrees(rng):
    a = [pd1_sample(rng).largest for _ in range(3000)]
    b = [haar_cycle_fractions(10_000, rng).largest for _ in range(3000)]
    assert ks_two_sample(a, b).agree
