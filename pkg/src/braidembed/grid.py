"""Geometry of the extended grid EM[m, n].

The extended grid is an ``m`` row by ``n`` column lattice in which every point
is joined to its horizontal, vertical and diagonal neighbours (a king's-move
graph).  Coordinates are 1-based ``(row, col)`` pairs throughout the public API.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import partial
from typing import Iterable, Iterator, NamedTuple

__all__ = [
    "GridError",
    "InvalidCoordinateError",
    "InvalidIndexError",
    "GridDims",
    "GridCoord",
    "coords",
    "em_neighbors",
    "are_adjacent",
    "to_index",
    "from_index",
]

_OFFSETS = (
    (-1, -1), (-1, 0), (-1, 1),
    (0, -1),           (0, 1),
    (1, -1),  (1, 0),  (1, 1),
)


class GridError(ValueError):
    pass


class InvalidCoordinateError(GridError):
    pass


class InvalidIndexError(GridError):
    pass


@dataclass(frozen=True)
class GridDims:
    """Size of an extended grid: ``rows`` (m) by ``cols`` (n)."""

    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise GridError(f"grid dimensions must be positive, got {self.rows}x{self.cols}")

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def contains(self, c: "GridCoord") -> bool:
        return 1 <= c[0] <= self.rows and 1 <= c[1] <= self.cols

    def __str__(self) -> str:
        return f"{self.rows}x{self.cols}"


class GridCoord(NamedTuple):
    row: int
    col: int


# C-level constructor for bulk creation: GridCoord._make goes through Python.
_new_coord = partial(tuple.__new__, GridCoord)


def coords(rows: Iterable[int], cols: Iterable[int]) -> Iterator[GridCoord]:
    """Lazily pair up row and column sequences into coordinates."""
    return map(_new_coord, zip(rows, cols))


def _require_inside(c, d: GridDims) -> None:
    if not d.contains(c):
        raise InvalidCoordinateError(f"{tuple(c)} lies outside the {d} grid")


def em_neighbors(c: GridCoord, d: GridDims) -> set[GridCoord]:
    """In-bounds nearest and next-nearest neighbours of ``c``.

    Raises:
        InvalidCoordinateError: if ``c`` is not a cell of ``d``.
    """
    _require_inside(c, d)
    r, k = c
    return {
        GridCoord(r + dr, k + dc)
        for dr, dc in _OFFSETS
        if 1 <= r + dr <= d.rows and 1 <= k + dc <= d.cols
    }


def are_adjacent(a: GridCoord, b: GridCoord) -> bool:
    """True iff ``a`` and ``b`` are joined by an edge of the extended grid."""
    dr = abs(a[0] - b[0])
    dc = abs(a[1] - b[1])
    return dr <= 1 and dc <= 1 and (dr or dc) != 0


def to_index(c: GridCoord, d: GridDims) -> int:
    """Row-major 1-based linear index ``(row - 1) * n + col``."""
    _require_inside(c, d)
    return (c[0] - 1) * d.cols + c[1]


def from_index(i: int, d: GridDims) -> GridCoord:
    if not 1 <= i <= d.size:
        raise InvalidIndexError(f"index {i} outside [1, {d.size}]")
    q, r = divmod(i - 1, d.cols)
    return GridCoord(q + 1, r + 1)
