"""Small statistical helpers shared by the experiments and the test suite."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import stats as sps


@dataclass(frozen=True)
class MeanEstimate:
    mean: float
    stderr: float
    count: int

    def z(self, target: float) -> float:
        diff = self.mean - target
        if self.stderr == 0:
            return 0.0 if diff == 0 else math.copysign(math.inf, diff)
        return diff / self.stderr

    def within(self, target: float, sigmas: float = 3.0, atol: float = 1e-12) -> bool:
        return abs(self.mean - target) <= sigmas * self.stderr + atol


def mean_estimate(values: Sequence[float]) -> MeanEstimate:
    v = np.asarray(values, dtype=float)
    n = len(v)
    if n == 0:
        raise ValueError("no values")
    se = float(v.std(ddof=1) / math.sqrt(n)) if n > 1 else math.inf
    return MeanEstimate(float(math.fsum(v) / n), se, n)


def proportion_estimate(successes: int, trials: int, p: float | None = None) -> MeanEstimate:
    """Frequency with binomial standard error, taken at ``p`` when given."""
    phat = successes / trials
    ref = phat if p is None else p
    return MeanEstimate(phat, math.sqrt(ref * (1 - ref) / trials), trials)


@dataclass(frozen=True)
class KSResult:
    statistic: float
    pvalue: float
    alpha: float

    @property
    def agree(self) -> bool:
        return self.pvalue >= self.alpha


def ks_two_sample(a: Sequence[float], b: Sequence[float], alpha: float = 0.01) -> KSResult:
    res = sps.ks_2samp(np.asarray(a, dtype=float), np.asarray(b, dtype=float))
    return KSResult(float(res.statistic), float(res.pvalue), alpha)
