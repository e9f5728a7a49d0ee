import itertools

import pytest
from hypothesis import given, strategies as st

from braidembed.grid import (
    GridCoord,
    GridDims,
    GridError,
    InvalidCoordinateError,
    InvalidIndexError,
    are_adjacent,
    em_neighbors,
    from_index,
    to_index,
)

from oracles import neighbours_by_enumeration


def test_corner_neighbours():
    assert em_neighbors(GridCoord(1, 1), GridDims(3, 3)) == {(1, 2), (2, 1), (2, 2)}


def test_interior_neighbours():
    got = em_neighbors(GridCoord(2, 2), GridDims(3, 3))
    assert got == {(r, c) for r in (1, 2, 3) for c in (1, 2, 3)} - {(2, 2)}


def test_top_border_of_two_row_grid():
    assert em_neighbors(GridCoord(1, 2), GridDims(2, 6)) == {(1, 1), (1, 3), (2, 1), (2, 2), (2, 3)}


def test_neighbours_out_of_bounds():
    with pytest.raises(InvalidCoordinateError):
        em_neighbors(GridCoord(4, 1), GridDims(3, 3))
    with pytest.raises(InvalidCoordinateError):
        em_neighbors(GridCoord(0, 1), GridDims(3, 3))


@pytest.mark.parametrize(
    "a, b, expected",
    [((2, 2), (3, 3), True), ((2, 2), (2, 2), False), ((1, 1), (1, 3), False), ((3, 1), (2, 2), True)],
)
def test_are_adjacent(a, b, expected):
    assert are_adjacent(GridCoord(*a), GridCoord(*b)) is expected


@pytest.mark.parametrize("c, idx", [((1, 1), 1), ((2, 3), 9), ((5, 6), 30)])
def test_index_examples(c, idx):
    d = GridDims(5, 6)
    assert to_index(GridCoord(*c), d) == idx
    assert from_index(idx, d) == c


def test_index_errors():
    d = GridDims(5, 6)
    with pytest.raises(InvalidCoordinateError):
        to_index(GridCoord(6, 1), d)
    for bad in (0, 31):
        with pytest.raises(InvalidIndexError):
            from_index(bad, d)


def test_dims_must_be_positive():
    with pytest.raises(GridError):
        GridDims(0, 3)
    GridDims(1, 1)


def test_neighbours_agree_with_adjacency_exhaustively():
    for rows, cols in itertools.product(range(1, 6), repeat=2):
        d = GridDims(rows, cols)
        cells = [GridCoord(r, c) for r in range(1, rows + 1) for c in range(1, cols + 1)]
        for a in cells:
            nb = em_neighbors(a, d)
            assert nb == neighbours_by_enumeration(a.row, a.col, rows, cols)
            for b in cells:
                assert (b in nb) == are_adjacent(a, b)
                assert (b in nb) == (a in em_neighbors(b, d))


def test_neighbour_counts():
    d = GridDims(4, 5)
    counts = {}
    for r in range(1, 5):
        for c in range(1, 6):
            corner = r in (1, 4) and c in (1, 5)
            border = r in (1, 4) or c in (1, 5)
            kind = "corner" if corner else "border" if border else "interior"
            counts.setdefault(kind, set()).add(len(em_neighbors(GridCoord(r, c), d)))
    assert counts == {"corner": {3}, "border": {5}, "interior": {8}}


@pytest.mark.parametrize("d", [GridDims(1, 5), GridDims(5, 1)])
def test_degenerate_line_grids(d):
    sizes = [len(em_neighbors(from_index(i, d), d)) for i in range(1, d.size + 1)]
    assert sizes == [1, 2, 2, 2, 1]
    assert em_neighbors(GridCoord(1, 1), GridDims(1, 1)) == set()


def test_round_trip_all_small_grids():
    for rows in range(1, 33):
        for cols in range(1, 33):
            d = GridDims(rows, cols)
            seen = [to_index(from_index(i, d), d) for i in range(1, d.size + 1)]
            assert seen == list(range(1, d.size + 1))


@given(st.integers(1, 60), st.integers(1, 60), st.data())
def test_round_trip_property(rows, cols, data):
    d = GridDims(rows, cols)
    c = GridCoord(data.draw(st.integers(1, rows)), data.draw(st.integers(1, cols)))
    assert from_index(to_index(c, d), d) == c
    assert to_index(c, d) == (c.row - 1) * cols + c.col
