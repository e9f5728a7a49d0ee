"""Source graphs, island/bridge embeddings, and the embedding validator.

An embedding maps every source vertex ``v`` to an *island*: a set of grid
cells, all labelled ``v``, kept connected by explicitly stored chain edges.
Every source edge ``(u, v)`` maps to exactly one *bridge*: a grid edge whose
first endpoint lies in the island of ``u`` and whose second lies in the island
of ``v``.  Vertices are addressed internally by their index ``1..n``; external
string labels only live on :class:`SourceGraph`.
"""
from __future__ import annotations

from collections import Counter, defaultdict, deque
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .grid import GridCoord, GridDims, are_adjacent

__all__ = [
    "GraphError",
    "SourceGraph",
    "Island",
    "Bridge",
    "Embedding",
    "Violation",
    "ValidationReport",
    "EmbeddingStats",
    "CLAUSES",
    "chain_pair",
    "validate",
    "island_of",
    "stats",
]


class GraphError(ValueError):
    pass


def chain_pair(a, b) -> tuple[GridCoord, GridCoord]:
    """Canonical (sorted) form of an unordered pair of grid cells."""
    a, b = GridCoord(*a), GridCoord(*b)
    return (a, b) if a <= b else (b, a)


def _edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class SourceGraph:
    """Undirected simple graph on vertices ``1..n`` with a numbering.

    ``order`` lists the vertices by ascending ordinal, i.e. ``order[k - 1]`` is
    the vertex numbered ``k``.  It defaults to the identity.  ``edge_array``
    holds the edges as sorted ``(u, v)`` rows with ``u < v``.
    """

    labels: tuple[str, ...]
    edges: frozenset[tuple[int, int]]
    order: tuple[int, ...] = None
    edge_array: np.ndarray = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.labels)
        if n < 1:
            raise GraphError("a source graph needs at least one vertex")
        if len(set(self.labels)) != n:
            raise GraphError("vertex labels must be unique")
        edges = set()
        for u, v in self.edges:
            if u == v:
                raise GraphError(f"self-loop on vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise GraphError(f"edge ({u}, {v}) references a missing vertex")
            edges.add(_edge_key(u, v))
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(self, "edges", frozenset(edges))
        order = tuple(range(1, n + 1)) if self.order is None else tuple(self.order)
        if sorted(order) != list(range(1, n + 1)):
            raise GraphError("ordering must be a permutation of the vertices")
        object.__setattr__(self, "order", order)
        arr = np.array(sorted(edges), dtype=np.int64).reshape(-1, 2)
        arr.flags.writeable = False
        object.__setattr__(self, "edge_array", arr)

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Sequence[str] | None = None,
        order: Sequence[int] | None = None,
    ) -> "SourceGraph":
        if labels is None:
            labels = [str(i) for i in range(1, n + 1)]
        if len(labels) != n:
            raise GraphError(f"expected {n} labels, got {len(labels)}")
        return cls(tuple(labels), frozenset(edges), None if order is None else tuple(order))

    @classmethod
    def complete(cls, n: int) -> "SourceGraph":
        return cls.from_edges(n, ((u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)))

    @classmethod
    def biclique(cls, a: int, b: int) -> "SourceGraph":
        """K_{a,b} laid out so the two parts interleave in the default numbering.

        The first ``2 * min(a, b)`` vertices alternate between the parts (odd
        indices in the first part, even in the second) and the surplus of the
        larger part comes last.  K_{3,3} has parts {1, 3, 5} and {2, 4, 6}.
        """
        first, second = [], []
        v = 1
        for k in range(max(a, b)):
            if k < a:
                first.append(v)
                v += 1
            if k < b:
                second.append(v)
                v += 1
        return cls.from_edges(a + b, ((u, w) for u in first for w in second))

    @property
    def n(self) -> int:
        return len(self.labels)

    @cached_property
    def ordinal(self) -> dict[int, int]:
        """Vertex index -> its number in the ordering."""
        return {v: k for k, v in enumerate(self.order, start=1)}

    @cached_property
    def index_of(self) -> dict[str, int]:
        return {lab: i for i, lab in enumerate(self.labels, start=1)}

    def has_edge(self, u: int, v: int) -> bool:
        return _edge_key(u, v) in self.edges

    def with_order(self, order: Sequence[int]) -> "SourceGraph":
        return SourceGraph(self.labels, self.edges, tuple(order))

    def adjacency(self) -> np.ndarray:
        """Boolean ``(n + 1, n + 1)`` adjacency matrix (row and column 0 unused)."""
        adj = np.zeros((self.n + 1, self.n + 1), dtype=bool)
        u, v = self.edge_array.T
        adj[u, v] = True
        adj[v, u] = True
        return adj


@dataclass(frozen=True)
class Island:
    """Cells representing one source vertex, with the chain edges joining them.

    The constructor trusts its input (cells as :class:`GridCoord`, chain edges
    as sorted pairs); :meth:`build` normalises anything else.
    """

    label: int
    cells: tuple[GridCoord, ...]
    chain_edges: frozenset[tuple[GridCoord, GridCoord]] = frozenset()

    @classmethod
    def build(cls, label: int, cells, chain_edges=()) -> "Island":
        return cls(
            int(label),
            tuple(GridCoord(*c) for c in cells),
            frozenset(chain_pair(a, b) for a, b in chain_edges),
        )

    def __len__(self) -> int:
        return len(self.cells)


class Bridge(NamedTuple):
    """Grid edge realising source edge ``(u, v)``; ``endpoints[0]`` is in island ``u``."""

    source_edge: tuple[int, int]
    endpoints: tuple[GridCoord, GridCoord]

    @classmethod
    def build(cls, source_edge, endpoints) -> "Bridge":
        u, v = source_edge
        a, b = endpoints
        return cls((int(u), int(v)), (GridCoord(*a), GridCoord(*b)))

    @property
    def key(self) -> tuple[int, int]:
        return _edge_key(*self.source_edge)


@dataclass(frozen=True)
class Embedding:
    """An island/bridge embedding inside the extended grid ``dims``.

    Bridge order is kept as given; :func:`embed` emits bridges in
    row-major order of their first endpoint, the same order the document
    serializer writes.
    """

    dims: GridDims
    islands: dict[int, Island]
    bridges: tuple[Bridge, ...] = ()
    _labelling: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "islands", dict(sorted(self.islands.items())))
        object.__setattr__(self, "bridges", tuple(self.bridges))

    @property
    def labelling(self) -> dict[GridCoord, int]:
        """The labelling function l: cell -> vertex (first island wins on overlap)."""
        if self._labelling is None:
            lab = {}
            for v, isl in self.islands.items():
                for c in isl.cells:
                    lab.setdefault(c, v)
            object.__setattr__(self, "_labelling", lab)
        return self._labelling

    @property
    def total_cells(self) -> int:
        return sum(len(isl) for isl in self.islands.values())


def island_of(e: Embedding, c) -> int | None:
    """l(c), or ``None`` when no island covers ``c``."""
    return e.labelling.get(GridCoord(*c))


class EmbeddingStats(NamedTuple):
    dims: GridDims
    cells_per_island: dict[int, int]
    total_cells: int
    chain_edges: int
    bridges: int


def stats(e: Embedding) -> EmbeddingStats:
    sizes = {v: len(isl) for v, isl in e.islands.items()}
    return EmbeddingStats(
        dims=e.dims,
        cells_per_island=sizes,
        total_cells=sum(sizes.values()),
        chain_edges=sum(len(isl.chain_edges) for isl in e.islands.values()),
        bridges=len(e.bridges),
    )


# -- validation ---------------------------------------------------------------

CLAUSES = {
    "a": "every source vertex has a nonempty island",
    "b": "island chain edges are grid edges and keep the island connected",
    "c": "islands are cell-disjoint",
    "d": "all island cells lie inside the grid",
    "e": "every source edge has exactly one bridge",
    "f": "bridge endpoints are adjacent and lie in the right islands",
    "g": "no bridge realises a non-edge",
}


class Violation(NamedTuple):
    clause: str
    message: str
    element: object = None


@dataclass
class ValidationReport:
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    @property
    def failed_clauses(self) -> list[str]:
        return sorted({v.clause for v in self.violations})

    def summary(self) -> str:
        ok = len(CLAUSES) - len(self.failed_clauses)
        head = f"{'OK' if self.passed else 'FAIL'}: {ok}/{len(CLAUSES)} clauses"
        lines = [head]
        for v in self.violations:
            lines.append(f"  ({v.clause}) {v.message}")
        return "\n".join(lines)

    def __bool__(self) -> bool:
        return self.passed


def _connected(cells: Sequence[GridCoord], edges: Iterable[tuple[GridCoord, GridCoord]]) -> bool:
    if not cells:
        return True
    adj = defaultdict(list)
    for a, b in edges:
        adj[a].append(b)
        adj[b].append(a)
    start = cells[0]
    seen = {start}
    queue = deque([start])
    while queue:
        for nxt in adj[queue.popleft()]:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen >= set(cells)


def validate(g: SourceGraph, e: Embedding) -> ValidationReport:
    """Check ``e`` against every clause of the embedding definition.

    Never raises on malformed embeddings; all problems are accumulated into
    the returned report, tagged with the clause ids of :data:`CLAUSES`.
    """
    report = ValidationReport()
    add = report.violations.append
    vertices = set(range(1, g.n + 1))

    # (a)
    for v in sorted(vertices):
        isl = e.islands.get(v)
        if isl is None or not isl.cells:
            add(Violation("a", f"vertex {g.labels[v - 1]!r} has no island cells", v))
    for v in sorted(set(e.islands) - vertices):
        add(Violation("a", f"island {v} does not correspond to a source vertex", v))

    # (b)
    for v, isl in e.islands.items():
        members = set(isl.cells)
        bad = False
        for a, b in sorted(isl.chain_edges):
            if a not in members or b not in members:
                add(Violation("b", f"chain edge {a}-{b} of island {v} leaves the island", (v, (a, b))))
                bad = True
            elif not are_adjacent(a, b):
                add(Violation("b", f"chain edge {a}-{b} of island {v} is not a grid edge", (v, (a, b))))
                bad = True
        if not bad and not _connected(isl.cells, isl.chain_edges):
            add(Violation("b", f"island {v} is disconnected under its chain edges", v))

    # (c)
    owners = defaultdict(list)
    for v, isl in e.islands.items():
        for c in isl.cells:
            owners[c].append(v)
    for c, vs in sorted(owners.items()):
        if len(vs) > 1:
            add(Violation("c", f"cell {tuple(c)} is claimed {len(vs)} times (islands {sorted(set(vs))})", c))

    # (d)
    for v, isl in e.islands.items():
        for c in isl.cells:
            if not e.dims.contains(c):
                add(Violation("d", f"cell {tuple(c)} of island {v} lies outside the {e.dims} grid", c))

    # (e)
    counts = Counter(b.key for b in e.bridges)
    for uv in sorted(g.edges):
        k = counts.get(uv, 0)
        if k != 1:
            u, v = (g.labels[x - 1] for x in uv)
            what = "no bridge" if k == 0 else f"{k} bridges"
            add(Violation("e", f"edge ({u}, {v}) has {what}", uv))

    # (f)
    for br in e.bridges:
        (u, v), (p, q) = br.source_edge, br.endpoints
        if not are_adjacent(p, q):
            add(Violation("f", f"bridge {tuple(p)}-{tuple(q)} for {br.source_edge} is not a grid edge", br))
        if u not in owners.get(p, ()) or v not in owners.get(q, ()):
            add(Violation("f", f"bridge {tuple(p)}-{tuple(q)} does not join islands {u} and {v}", br))

    # (g)
    for br in e.bridges:
        if br.key not in g.edges:
            add(Violation("g", f"bridge for {br.source_edge} realises no source edge", br))

    return report
