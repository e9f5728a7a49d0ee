"""
The extended grid
=================

The target graph is an ``m x n`` lattice where every point also touches its
diagonal neighbours.  Coordinates are 1-based ``(row, col)`` pairs.
"""

from braidembed import GridCoord, GridDims, are_adjacent, em_neighbors, from_index, to_index

d = GridDims(3, 4)

# %%
# A corner has three neighbours, a border cell five, an interior cell eight.
for c in (GridCoord(1, 1), GridCoord(1, 2), GridCoord(2, 2)):
    print(c, "->", sorted(em_neighbors(c, d)))

# %%
# Diagonals count, distance two does not.
print(are_adjacent(GridCoord(2, 2), GridCoord(3, 3)), are_adjacent(GridCoord(1, 1), GridCoord(1, 3)))

# %%
# Cells are numbered row by row, starting at 1.
for r in range(1, d.rows + 1):
    print(" ".join(f"{to_index(GridCoord(r, c), d):2d}" for c in range(1, d.cols + 1)))
print(from_index(7, d))
