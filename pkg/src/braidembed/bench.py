"""Timing sweep of :func:`~braidembed.braid.embed` on complete graphs."""
from __future__ import annotations

import gc
import time
from typing import NamedTuple, Sequence

import numpy as np

from .braid import embed
from .model import SourceGraph

__all__ = ["BenchRow", "run_bench", "loglog_slope", "to_csv"]


class BenchRow(NamedTuple):
    n: int
    cells: int
    bridges: int
    millis: float


def run_bench(sizes: Sequence[int], repeats: int = 3, warmup: bool = True) -> list[BenchRow]:
    """Embed K_n for each size, keeping the best of ``repeats`` wall times.

    The garbage collector is paused while timing; graph construction is not
    timed.  ``cells`` is the total island cell count, the space proxy.
    """
    sizes = list(sizes)
    if any(n < 2 for n in sizes):
        raise ValueError("bench sizes must each be >= 2")
    if any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise ValueError("bench sizes must be strictly increasing")
    if warmup and sizes:
        embed(SourceGraph.complete(sizes[0]))
    rows = []
    for n in sizes:
        g = SourceGraph.complete(n)
        best = float("inf")
        for _ in range(max(1, repeats)):
            gc.collect()
            gc.disable()
            try:
                t0 = time.perf_counter()
                e = embed(g)
                best = min(best, time.perf_counter() - t0)
            finally:
                gc.enable()
        rows.append(BenchRow(n, e.total_cells, len(e.bridges), best * 1e3))
        del e
    return rows


def loglog_slope(rows: Sequence[BenchRow], last: int | None = 3) -> float:
    """Least-squares slope of log(time) against log(n) over the ``last`` largest sizes."""
    pts = sorted(rows)[-last:] if last else sorted(rows)
    if len(pts) < 2:
        raise ValueError("need at least two sizes to fit a slope")
    x = np.log([r.n for r in pts])
    y = np.log([r.millis for r in pts])
    return float(np.polyfit(x, y, 1)[0])


def to_csv(rows: Sequence[BenchRow]) -> str:
    lines = ["n,cells,bridges,millis"]
    lines += [f"{r.n},{r.cells},{r.bridges},{r.millis:.3f}" for r in rows]
    return "\n".join(lines) + "\n"
