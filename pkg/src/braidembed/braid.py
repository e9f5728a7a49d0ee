"""Braided embedding of arbitrary graphs into EM[n - 1, n].

Every vertex starts on row 1 at the column given by its ordinal.  Odd ordinals
drift one column right per row, even ordinals one column left; on reaching a
wall a trajectory stays in the wall column for one extra row and then turns
back.  Adjacent trajectories swap places on every row transition, so within
``n - 1`` rows every pair of vertices sits side by side at least once, and the
horizontal grid edge between them can carry the bridge.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .grid import GridCoord, GridDims, coords
from .model import Bridge, Embedding, Island, SourceGraph, validate

__all__ = [
    "DomainError",
    "PreconditionError",
    "LayoutTable",
    "column_formula",
    "braid_layout",
    "assign_bridges",
    "embed",
    "prune",
]


class DomainError(ValueError):
    pass


class PreconditionError(ValueError):
    pass


def column_formula(ordinal, row, n: int):
    """Closed-form column of the vertex numbered ``ordinal`` in ``row``.

    ``ordinal`` and ``row`` may be integers or broadcastable integer arrays.
    Only defined for ``1 <= row <= n - 1``, where a trajectory reflects at
    most once.

    Raises:
        DomainError: for arguments outside that range.
    """
    k = np.asarray(ordinal, dtype=np.int64)
    i = np.asarray(row, dtype=np.int64)
    if n < 2 or np.any(i < 1) or np.any(i > n - 1) or np.any(k < 1) or np.any(k > n):
        raise DomainError(f"column_formula(ordinal={ordinal}, row={row}, n={n}) is out of range")
    h = i - 1
    r_o = h - (n - k) - 1
    r_e = h - k
    odd = k + h - ((k + h - 1) // n) * (2 * r_o + 1)
    # ceil(a / n) == -((-a) // n)
    even = k - h + (-((k - h - 1) // n)) * (2 * r_e + 1)
    col = np.where(k % 2 == 1, odd, even)
    return int(col) if col.ndim == 0 else col


@dataclass(frozen=True)
class LayoutTable:
    """Braided assignment of grid cells to vertices.

    Attributes:
        dims: ``(n - 1) x n`` grid.
        order: vertices by ascending ordinal.
        columns: ``(n, n - 1)`` int array; ``columns[k, i]`` is the 1-based
            column of the vertex numbered ``k + 1`` on row ``i + 1``.
        cells: ``(n - 1, n)`` int array of vertex indices, ``cells[i, j]`` is
            the vertex at row ``i + 1``, column ``j + 1``.
    """

    dims: GridDims
    order: tuple[int, ...]
    columns: np.ndarray
    cells: np.ndarray

    def cell_label(self, row: int, col: int) -> int:
        return int(self.cells[row - 1, col - 1])

    def trajectory(self, v: int) -> list[GridCoord]:
        k = self.order.index(v)
        return [GridCoord(i, int(c)) for i, c in enumerate(self.columns[k], start=1)]

    def chain_edges(self, v: int) -> list[tuple[GridCoord, GridCoord]]:
        path = self.trajectory(v)
        return list(zip(path, path[1:]))


def braid_layout(n: int, order: Sequence[int] | None = None) -> LayoutTable:
    """Lay out ``n`` vertices on ``n - 1`` rows by braiding.

    Steps every trajectory row by row (vectorised over vertices): move one
    column in the current direction and, on overshooting a wall, clamp back
    to it and reverse.  The clamp is what produces the one-row hold at the
    wall.

    Raises:
        DomainError: if ``n < 2`` (no rows would be produced).
    """
    if n < 2:
        raise DomainError(f"braiding needs at least 2 vertices, got {n}")
    order = tuple(range(1, n + 1)) if order is None else tuple(order)
    if sorted(order) != list(range(1, n + 1)):
        raise DomainError("order must be a permutation of 1..n")
    m = n - 1

    col = np.arange(1, n + 1, dtype=np.int64)
    moving_right = col % 2 == 1
    columns = np.empty((n, m), dtype=np.int64)
    for i in range(m):
        columns[:, i] = col
        col = np.where(moving_right, col + 1, col - 1)
        hit_right = moving_right & (col > n)
        hit_left = ~moving_right & (col < 1)
        col[hit_right] = n
        col[hit_left] = 1
        moving_right = (moving_right & ~hit_right) | hit_left

    cells = np.zeros((m, n), dtype=np.int64)
    cells[np.arange(m)[None, :], columns - 1] = np.asarray(order, dtype=np.int64)[:, None]
    return LayoutTable(GridDims(m, n), order, columns, cells)


def _first_pairs(t: LayoutTable) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Row-major first occurrence of every horizontally adjacent vertex pair.

    Returns flat positions (into the ``(m, n - 1)`` array of adjacent pairs)
    in scan order, plus the left and right vertex at each.
    """
    n = t.dims.cols
    left = t.cells[:, :-1].ravel()
    right = t.cells[:, 1:].ravel()
    key = np.minimum(left, right) * (n + 1) + np.maximum(left, right)
    _, first = np.unique(key, return_index=True)
    first.sort()
    return first, left[first], right[first]


def assign_bridges(t: LayoutTable, g: SourceGraph) -> tuple[Bridge, ...]:
    """Bridges for the edges of ``g`` along the rows of ``t``.

    Scans rows top to bottom, left to right, and bridges each edge at the
    first horizontally adjacent pair of its endpoints; later occurrences are
    ignored.
    """
    if t.dims.cols != g.n:
        raise DomainError(f"layout is for {t.dims.cols} vertices, graph has {g.n}")
    if not g.edges:
        return ()
    npairs = t.dims.cols - 1
    pos, left, right = _first_pairs(t)
    keep = g.adjacency()[left, right]
    pos = pos[keep]
    row = pos // npairs + 1
    col = pos % npairs + 1
    rows, cols = row.tolist(), col.tolist()
    ends = zip(coords(rows, cols), coords(rows, (col + 1).tolist()))
    return tuple(map(Bridge._make, zip(zip(left[keep].tolist(), right[keep].tolist()), ends)))


def embed(g: SourceGraph) -> Embedding:
    """Braided island/bridge embedding of ``g`` into EM[n - 1, n].

    A single vertex gets the 1x1 grid.  With two vertices there is one row and
    both islands are single cells.
    """
    if g.n == 1:
        return Embedding(GridDims(1, 1), {1: Island(1, (GridCoord(1, 1),))})
    t = braid_layout(g.n, g.order)
    rows = range(1, t.dims.rows + 1)
    islands = {}
    for k, v in enumerate(t.order):
        path = tuple(coords(rows, t.columns[k].tolist()))
        islands[v] = Island(v, path, frozenset(zip(path, path[1:])))
    return Embedding(t.dims, islands, assign_bridges(t, g))


def prune(e: Embedding, g: SourceGraph) -> Embedding:
    """Trim island cells that carry no bridge and hang off the end of a chain.

    Repeatedly drops cells of chain degree <= 1 that are not bridge endpoints,
    never emptying an island.  The result is a fixpoint, so pruning twice
    changes nothing.

    Raises:
        PreconditionError: if ``e`` is not a valid embedding of ``g``.
    """
    report = validate(g, e)
    if not report.passed:
        raise PreconditionError("prune needs a valid embedding:\n" + report.summary())
    anchored = {c for b in e.bridges for c in b.endpoints}
    islands = {}
    for v, isl in e.islands.items():
        adj = defaultdict(set)
        for a, b in isl.chain_edges:
            adj[a].add(b)
            adj[b].add(a)
        alive = set(isl.cells)
        stack = sorted((c for c in alive if len(adj[c]) <= 1 and c not in anchored), reverse=True)
        while stack and len(alive) > 1:
            c = stack.pop()
            if c not in alive or len(adj[c]) > 1 or c in anchored:
                continue
            alive.discard(c)
            for nb in adj.pop(c):
                adj[nb].discard(c)
                if len(adj[nb]) <= 1 and nb not in anchored:
                    stack.append(nb)
        if len(alive) == len(isl.cells):
            islands[v] = isl
            continue
        cells = tuple(c for c in isl.cells if c in alive)
        chain = frozenset((a, b) for a, b in isl.chain_edges if a in alive and b in alive)
        islands[v] = Island(v, cells, chain)
    return Embedding(e.dims, islands, e.bridges)
