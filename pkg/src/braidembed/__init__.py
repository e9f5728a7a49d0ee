"""Embed arbitrary graphs into the extended grid by braiding.

Each source vertex becomes an *island* (a connected chain of grid cells) and
each source edge a *bridge* (one grid edge between two islands).  Any graph on
``n`` vertices fits in the ``(n - 1) x n`` king's-move grid.

>>> from braidembed import SourceGraph, embed, validate
>>> g = SourceGraph.complete(6)
>>> e = embed(g)
>>> validate(g, e).passed, len(e.bridges)
(True, 15)
"""
from .grid import (
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
from .model import (
    CLAUSES,
    Bridge,
    Embedding,
    EmbeddingStats,
    GraphError,
    Island,
    SourceGraph,
    ValidationReport,
    Violation,
    island_of,
    stats,
    validate,
)
from .braid import (
    DomainError,
    LayoutTable,
    PreconditionError,
    assign_bridges,
    braid_layout,
    column_formula,
    embed,
    prune,
)
from .formats import (
    ParseError,
    parse_edge_list,
    parse_embedding,
    parse_ordering,
    serialize_embedding,
)
from .render import render_ascii, render_svg

__version__ = "0.1.0"
