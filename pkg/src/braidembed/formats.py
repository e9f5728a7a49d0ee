"""Edge-list input and the JSON embedding document.

Edge lists are UTF-8 text with one ``u v`` pair per line; blank lines and
lines starting with ``#`` are skipped.  Embedding documents use external
vertex labels and 1-based ``[row, col]`` coordinates::

    {
      "dims": {"rows": 1, "cols": 2},
      "ordering": ["a", "b"],
      "islands": {"a": [[1, 1]], "b": [[1, 2]]},
      "chain_edges": {"a": [], "b": []},
      "bridges": [{"edge": ["a", "b"], "endpoints": [[1, 1], [1, 2]]}]
    }
"""
from __future__ import annotations

import json

from .grid import GridDims, GridError
from .model import Bridge, Embedding, GraphError, Island, SourceGraph

__all__ = [
    "ParseError",
    "parse_edge_list",
    "parse_ordering",
    "serialize_embedding",
    "parse_embedding",
    "document_ordering",
]


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


def parse_edge_list(text: str) -> SourceGraph:
    """Read a source graph; vertices are numbered in order of first appearance.

    A line holding a single token declares an isolated vertex.  Repeated
    edges (in either direction) collapse to one.

    Raises:
        ParseError: on a self-loop or a line with more than two tokens.
    """
    index: dict[str, int] = {}
    edges = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if len(tokens) > 2:
            raise ParseError(f"expected 'u v', got {len(tokens)} tokens", lineno)
        if len(tokens) == 2 and tokens[0] == tokens[1]:
            raise ParseError(f"self-loop on {tokens[0]!r}", lineno)
        ids = [index.setdefault(tok, len(index) + 1) for tok in tokens]
        if len(ids) == 2:
            edges.add((min(ids), max(ids)))
    if not index:
        raise ParseError("edge list declares no vertices")
    return SourceGraph(tuple(index), frozenset(edges))


def parse_ordering(text: str, g: SourceGraph) -> tuple[int, ...]:
    """Vertex indices from a whitespace-separated list of labels in ordinal order."""
    labels = text.split()
    try:
        order = tuple(g.index_of[lab] for lab in labels)
    except KeyError as exc:
        raise ParseError(f"ordering names unknown vertex {exc.args[0]!r}") from None
    if sorted(order) != list(range(1, g.n + 1)):
        raise ParseError("ordering must list every vertex exactly once")
    return order


def _pt(c) -> str:
    return f"[{c[0]}, {c[1]}]"


def _js(s: str) -> str:
    return json.dumps(s, ensure_ascii=False)


def serialize_embedding(e: Embedding, g: SourceGraph) -> str:
    """The embedding document for ``e``, one island or bridge per line.

    Islands appear in vertex-index order, chain edges sorted, bridges sorted
    by their first endpoint.  Output is deterministic and LF-terminated.
    """
    lab = g.labels
    out = ["{", f'  "dims": {{"rows": {e.dims.rows}, "cols": {e.dims.cols}}},']
    out.append('  "ordering": [' + ", ".join(_js(lab[v - 1]) for v in g.order) + "],")

    def block(name, items, last=False):
        out.append(f'  "{name}": {{' if items else f'  "{name}": {{}}' + ("" if last else ","))
        if items:
            for k, (key, body) in enumerate(items):
                sep = "," if k < len(items) - 1 else ""
                out.append(f"    {_js(key)}: [{body}]{sep}")
            out.append("  }" + ("" if last else ","))

    block("islands", [
        (lab[v - 1], ", ".join(_pt(c) for c in isl.cells)) for v, isl in e.islands.items()
    ])
    block("chain_edges", [
        (lab[v - 1], ", ".join(f"[{_pt(a)}, {_pt(b)}]" for a, b in sorted(isl.chain_edges)))
        for v, isl in e.islands.items()
    ])
    bridges = sorted(e.bridges, key=lambda b: b.endpoints)
    if bridges:
        out.append('  "bridges": [')
        for k, b in enumerate(bridges):
            u, v = b.source_edge
            sep = "," if k < len(bridges) - 1 else ""
            out.append(
                f'    {{"edge": [{_js(lab[u - 1])}, {_js(lab[v - 1])}], '
                f'"endpoints": [{_pt(b.endpoints[0])}, {_pt(b.endpoints[1])}]}}{sep}'
            )
        out.append("  ]")
    else:
        out.append('  "bridges": []')
    out.append("}")
    return "\n".join(out) + "\n"


def _load(text: str) -> dict:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not a JSON document: {exc.msg}", exc.lineno) from None
    if not isinstance(doc, dict):
        raise ParseError("embedding document must be a JSON object")
    missing = [k for k in ("dims", "islands", "chain_edges", "bridges") if k not in doc]
    if missing:
        raise ParseError(f"embedding document lacks {', '.join(missing)}")
    return doc


def document_ordering(text: str) -> list[str]:
    """Labels listed under ``ordering`` (empty if the key is absent)."""
    return [str(x) for x in _load(text).get("ordering", [])]


def parse_embedding(text: str, g: SourceGraph | None = None) -> Embedding:
    """Rebuild an :class:`Embedding` from its document.

    Labels are resolved against ``g`` when given; otherwise vertex indices
    follow the key order of ``islands``, which is how
    :func:`serialize_embedding` writes them.

    Raises:
        ParseError: on malformed JSON, missing keys, bad shapes, or labels
            unknown to ``g``.
    """
    doc = _load(text)
    if g is not None:
        index = g.index_of
    else:
        index = {str(lab): i for i, lab in enumerate(doc["islands"], start=1)}

    def vid(lab) -> int:
        try:
            return index[str(lab)]
        except KeyError:
            raise ParseError(f"unknown vertex label {lab!r}") from None

    try:
        dims = GridDims(int(doc["dims"]["rows"]), int(doc["dims"]["cols"]))
        chains = doc["chain_edges"]
        islands = {}
        for lab, cells in doc["islands"].items():
            v = vid(lab)
            islands[v] = Island.build(v, [(int(r), int(c)) for r, c in cells], [
                ((int(a[0]), int(a[1])), (int(b[0]), int(b[1]))) for a, b in chains.get(lab, [])
            ])
        for lab in chains:
            if vid(lab) not in islands:
                raise ParseError(f"chain edges for {lab!r} without an island")
        bridges = []
        for b in doc["bridges"]:
            u, v = (vid(x) for x in b["edge"])
            (r1, c1), (r2, c2) = b["endpoints"]
            bridges.append(Bridge.build((u, v), ((int(r1), int(c1)), (int(r2), int(c2)))))
    except ParseError:
        raise
    except (GridError, GraphError, KeyError, TypeError, ValueError, AttributeError) as exc:
        raise ParseError(f"malformed embedding document: {exc!r}") from None
    return Embedding(dims, islands, tuple(bridges))
