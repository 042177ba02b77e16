"""Seeded Monte Carlo estimates of random-walk hitting times.

Walk i of an estimate draws from its own PCG64 stream keyed by (seed, i), so
an estimate does not depend on how the walks are scheduled across threads.
Sums are kept as exact integers and reduced at the end.
"""
from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Hashable

import numpy as np

from .wheel_model import MultiGraph

STEP_CAP = 10**9
_BLOCK = 64


class StepCapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class WalkEstimate:
    mean: float
    std_error: float
    walks: int
    seed: int
    source: Hashable
    target: Hashable


def walk_stream(seed: int, walk: int) -> np.random.Generator:
    """Independent generator for walk number `walk` under `seed`."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence([seed, walk])))


def _neighbour_table(g: MultiGraph) -> list[list[int]]:
    # each neighbour repeated by multiplicity, so a uniform pick is multiplicity-weighted
    return [[v for v, m in row for _ in range(m)] for row in g.adjacency()]


def _require_connected(g: MultiGraph) -> None:
    if not g.is_connected():
        raise ValueError("random walk hitting times need a connected graph")


def _walk(table: list[list[int]], s: int, t: int, rng: np.random.Generator,
          max_steps: int) -> int:
    steps = 0
    here = s
    while here != t:
        for u in rng.random(_BLOCK).tolist():
            nbrs = table[here]
            here = nbrs[int(u * len(nbrs))]
            steps += 1
            if here == t:
                break
            if steps >= max_steps:
                raise StepCapExceeded(f"walk did not reach target within {max_steps} steps")
    return steps


def simulate_walk(g: MultiGraph, source: Hashable, target: Hashable,
                  rng: np.random.Generator, max_steps: int = STEP_CAP) -> int:
    """Number of steps a simple random walk from `source` takes to first hit `target`."""
    s, t = g.index(source), g.index(target)
    if s != t:
        _require_connected(g)
    return _walk(_neighbour_table(g), s, t, rng, max_steps)


def estimate_hitting(g: MultiGraph, source: Hashable, target: Hashable, walks: int,
                     seed: int = 0, workers: int = 1,
                     max_steps: int = STEP_CAP) -> WalkEstimate:
    """Sample mean and standard error of the hitting time over `walks` walks."""
    if walks < 2:
        raise ValueError(f"need at least 2 walks for a standard error, got {walks}")
    s, t = g.index(source), g.index(target)
    if s != t:
        _require_connected(g)
    table = _neighbour_table(g)

    def run(chunk: range) -> tuple[int, int]:
        total = squares = 0
        for i in chunk:
            x = _walk(table, s, t, walk_stream(seed, i), max_steps)
            total += x
            squares += x * x
        return total, squares

    if workers <= 1:
        parts = [run(range(walks))]
    else:
        bounds = np.linspace(0, walks, workers + 1, dtype=int)
        chunks = [range(a, b) for a, b in zip(bounds[:-1], bounds[1:])]
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(run, chunks))
    total = sum(p[0] for p in parts)
    squares = sum(p[1] for p in parts)
    # unbiased variance, computed from exact integer sums
    var = (squares * walks - total * total) / (walks * (walks - 1))
    return WalkEstimate(
        mean=total / walks,
        std_error=math.sqrt(var / walks),
        walks=walks,
        seed=seed,
        source=source,
        target=target,
    )
