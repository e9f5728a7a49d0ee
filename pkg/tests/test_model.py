import random

import networkx as nx
import pytest

from braidembed import (
    CLAUSES,
    Bridge,
    Embedding,
    GraphError,
    GridCoord,
    GridDims,
    Island,
    SourceGraph,
    embed,
    island_of,
    prune,
    stats,
    validate,
)

import mutations
from oracles import gnp


def k2_embedding():
    return Embedding(
        GridDims(1, 2),
        {1: Island.build(1, [(1, 1)]), 2: Island.build(2, [(1, 2)])},
        (Bridge.build((1, 2), ((1, 1), (1, 2))),),
    )


# -- SourceGraph -------------------------------------------------------------

def test_source_graph_normalises_edges():
    g = SourceGraph.from_edges(3, [(2, 1), (1, 2), (3, 2)])
    assert g.edges == {(1, 2), (2, 3)}
    assert g.edge_array.tolist() == [[1, 2], [2, 3]]
    assert g.order == (1, 2, 3)


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(n=2, edges=[(1, 1)]),
        dict(n=2, edges=[(1, 3)]),
        dict(n=2, edges=[], labels=["a", "a"]),
        dict(n=3, edges=[], order=[1, 1, 2]),
        dict(n=0, edges=[]),
    ],
)
def test_source_graph_rejects(kwargs):
    with pytest.raises(GraphError):
        SourceGraph.from_edges(**kwargs)


def test_ordinal_and_adjacency():
    g = SourceGraph.from_edges(3, [(1, 3)], order=[3, 1, 2])
    assert g.ordinal == {3: 1, 1: 2, 2: 3}
    adj = g.adjacency()
    assert adj[1, 3] and adj[3, 1] and not adj[1, 2]


def test_biclique_parts():
    g = SourceGraph.biclique(2, 4)
    parts = nx.bipartite.sets(nx.Graph(list(g.edges)))
    assert {frozenset(p) for p in parts} == {frozenset({1, 3}), frozenset({2, 4, 5, 6})}
    assert len(g.edges) == 8


# -- validate --------------------------------------------------------------------

def test_smallest_valid_embedding():
    report = validate(SourceGraph.complete(2), k2_embedding())
    assert report.passed and not report.violations
    assert report.summary() == "OK: 7/7 clauses"


def test_self_pair_bridge_is_clause_f():
    e = k2_embedding()
    bad = Embedding(e.dims, e.islands, (Bridge.build((1, 2), ((1, 1), (1, 1))),))
    report = validate(SourceGraph.complete(2), bad)
    assert not report.passed
    assert report.failed_clauses == ["f"]


@pytest.mark.parametrize("name, build, must, must_not", mutations.MUTATIONS, ids=[m[0] for m in mutations.MUTATIONS])
def test_mutation_detected(name, build, must, must_not):
    g, e = build()
    report = validate(g, e)
    failed = set(report.failed_clauses)
    assert must <= failed, report.summary()
    assert not failed & must_not, report.summary()
    assert not report.passed and report.summary().startswith("FAIL")


def test_every_chain_edge_deletion_in_k6_breaks_connectivity():
    g = SourceGraph.complete(6)
    e = embed(g)
    for v, isl in e.islands.items():
        for drop in isl.chain_edges:
            chain = isl.chain_edges - {drop}
            broken = Embedding(e.dims, {**e.islands, v: Island(v, isl.cells, chain)}, e.bridges)
            nxg = nx.Graph()
            nxg.add_nodes_from(isl.cells)
            nxg.add_edges_from(chain)
            assert not nx.is_connected(nxg)
            assert validate(g, broken).failed_clauses == ["b"]


def test_chain_edge_that_is_not_a_grid_edge():
    g = SourceGraph.complete(2)
    e = Embedding(
        GridDims(2, 3),
        {1: Island.build(1, [(1, 1), (1, 3)], [((1, 1), (1, 3))]), 2: Island.build(2, [(1, 2)])},
        (Bridge.build((1, 2), ((1, 1), (1, 2))),),
    )
    assert validate(g, e).failed_clauses == ["b"]


def test_extra_island_reported():
    g = SourceGraph.complete(2)
    e = k2_embedding()
    e = Embedding(e.dims, {**e.islands, 5: Island.build(5, [(1, 1)])}, e.bridges)
    assert {"a", "c"} <= set(validate(g, e).failed_clauses)


def test_validation_accumulates():
    g, e = mutations.delete_bridge()
    e = Embedding(e.dims, e.islands, e.bridges[1:])
    report = validate(g, e)
    assert [v.clause for v in report.violations] == ["e", "e"]
    assert report.summary().splitlines()[0] == "FAIL: 6/7 clauses"


def test_clause_catalogue():
    assert list(CLAUSES) == list("abcdefg")


def test_no_false_positives_on_random_graphs():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(1, 16)
        g = SourceGraph.from_edges(n, gnp(n, rng.choice([0.1, 0.5, 0.9]), rng))
        e = embed(g)
        assert validate(g, e).passed
        assert validate(g, prune(e, g)).passed


def test_validator_agrees_with_networkx_on_structure():
    g = SourceGraph.complete(7)
    e = embed(g)
    grid = nx.grid_2d_graph(e.dims.rows, e.dims.cols)
    grid.add_edges_from(((r, c), (r + 1, c + dc)) for r in range(e.dims.rows - 1)
                        for c in range(e.dims.cols) for dc in (-1, 1) if 0 <= c + dc < e.dims.cols)
    for isl in e.islands.values():
        for a, b in isl.chain_edges:
            assert grid.has_edge((a.row - 1, a.col - 1), (b.row - 1, b.col - 1))
    for br in e.bridges:
        a, b = br.endpoints
        assert grid.has_edge((a.row - 1, a.col - 1), (b.row - 1, b.col - 1))


# -- island_of / stats ------------------------------------------------------------

def test_island_of():
    e = embed(SourceGraph.complete(6))
    assert [island_of(e, (1, c)) for c in range(1, 7)] == [1, 2, 3, 4, 5, 6]
    k2 = k2_embedding()
    assert island_of(k2, GridCoord(1, 1)) == 1
    assert island_of(k2, (2, 1)) is None


def test_stats():
    s = stats(embed(SourceGraph.complete(6)))
    assert s.total_cells == 30 and s.bridges == 15 and s.dims == GridDims(5, 6)
    assert s.cells_per_island == {v: 5 for v in range(1, 7)}
    assert (stats(embed(SourceGraph.complete(2))).total_cells, stats(embed(SourceGraph.complete(2))).bridges) == (2, 1)
    assert (stats(embed(SourceGraph.complete(1))).total_cells, stats(embed(SourceGraph.complete(1))).bridges) == (1, 0)


def test_stats_recount():
    rng = random.Random(9)
    for _ in range(20):
        n = rng.randint(2, 12)
        g = SourceGraph.from_edges(n, gnp(n, 0.3, rng))
        e = embed(g)
        s = stats(e)
        union = {c for isl in e.islands.values() for c in isl.cells}
        assert s.total_cells == len(union) == sum(s.cells_per_island.values())
        assert s.bridges == len({b.key for b in e.bridges}) == len(g.edges)
