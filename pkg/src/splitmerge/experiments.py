"""Replica-parallel Monte Carlo runs.

Replica ``r`` always uses ``streams.stream(seed, r)``; chunks are merged in
replica order, so outputs are identical for any worker count.
"""
from __future__ import annotations

import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import partial
from typing import Callable, Sequence

import numpy as np

from . import pd, simplex
from .stats import MeanEstimate, mean_estimate
from .streams import stream

CHUNK = 10_000
THREADS_ENV = "SPLITMERGE_THREADS"


def worker_count() -> int:
    cap = os.environ.get(THREADS_ENV)
    n = os.cpu_count() or 1
    if cap:
        n = min(n, max(1, int(cap)))
    return n


def run_chunks(
    fn: Callable[[int, int], np.ndarray],
    total: int,
    workers: int | None = None,
    progress: bool = False,
    chunk: int = CHUNK,
) -> np.ndarray:
    """Evaluate ``fn(start, stop)`` over replica chunks and stack rows in order."""
    bounds = [(s, min(s + chunk, total)) for s in range(0, total, chunk)]
    workers = worker_count() if workers is None else workers
    done = 0

    def tick(rows):
        nonlocal done
        done += len(rows)
        if progress:
            print(f"[splitmerge] {done}/{total} replicas", file=sys.stderr, flush=True)
        return rows

    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = [tick(r) for r in pool.map(fn, *zip(*bounds))]
    else:
        parts = [tick(fn(s, e)) for s, e in bounds]
    return np.concatenate(parts, axis=0)


def _chain_chunk(init: tuple[float, ...], steps: int, seed: int, start: int, stop: int) -> np.ndarray:
    x0 = simplex.reorder(init)
    out = np.empty((stop - start, steps + 1, 3))
    for row, r in enumerate(range(start, stop)):
        rng = stream(seed, r)
        for q, x in enumerate(simplex.iterate(x0, steps, rng)):
            out[row, q] = (x.sum_squares(), x.largest, len(x))
    return out


@dataclass(frozen=True)
class StepSummary:
    q: int
    sum_squares: MeanEstimate
    largest: MeanEstimate
    parts: MeanEstimate


def simulate(
    init: Sequence[float],
    steps: int,
    replicas: int,
    seed: int,
    workers: int | None = None,
    progress: bool = False,
) -> list[StepSummary]:
    """Per-step summaries over ``replicas`` independent half-step trajectories."""
    if steps < 0 or replicas < 1:
        raise ValueError("need steps >= 0 and replicas >= 1")
    data = run_chunks(partial(_chain_chunk, tuple(init), steps, seed), replicas, workers, progress)
    return [
        StepSummary(q, mean_estimate(data[:, q, 0]), mean_estimate(data[:, q, 1]), mean_estimate(data[:, q, 2]))
        for q in range(steps + 1)
    ]


def _pd_chunk(tol: float, seed: int, start: int, stop: int) -> np.ndarray:
    out = np.empty((stop - start, 4))
    for row, r in enumerate(range(start, stop)):
        x = pd.pd1_sample(stream(seed, r), tol)
        p = np.asarray(x.parts)
        out[row] = (p[0], np.sum(p * p), np.sum(p**3), len(p))
    return out


@dataclass(frozen=True)
class PDReference:
    largest: MeanEstimate
    sum_squares: MeanEstimate
    sum_cubes: MeanEstimate
    parts: MeanEstimate
    histogram: tuple[tuple[float, float, int], ...]
    samples: np.ndarray


def pd_reference(
    replicas: int,
    seed: int,
    tol: float = pd.DEFAULT_TOL,
    bins: int = 20,
    workers: int | None = None,
    progress: bool = False,
) -> PDReference:
    if replicas < 1:
        raise ValueError("need replicas >= 1")
    data = run_chunks(partial(_pd_chunk, tol, seed), replicas, workers, progress)
    counts, edges = np.histogram(data[:, 0], bins=bins, range=(0.0, 1.0))
    hist = tuple((float(edges[i]), float(edges[i + 1]), int(counts[i])) for i in range(bins))
    return PDReference(
        mean_estimate(data[:, 0]),
        mean_estimate(data[:, 1]),
        mean_estimate(data[:, 2]),
        mean_estimate(data[:, 3]),
        hist,
        data,
    )
