"""
Sparse graphs, pruning and documents
====================================

Any graph on ``n`` vertices reuses the K_n braid: bridges are simply dropped
for missing edges.  For sparse graphs most island cells then carry nothing,
and :func:`~braidembed.prune` trims them.
"""
import random

from braidembed import (
    Embedding,
    SourceGraph,
    embed,
    parse_edge_list,
    parse_embedding,
    prune,
    render_ascii,
    serialize_embedding,
    stats,
    validate,
)

g = parse_edge_list("""
# a small ring with a chord
a b
b c
c d
d e
e a
a c
""")
e = embed(g)
print(render_ascii(e))
p = prune(e, g)
print(render_ascii(p))
print(stats(e).total_cells, "->", stats(p).total_cells, "cells;", validate(g, p).summary())

# %%
# The numbering decides where islands start.  Any permutation gives a valid
# embedding, only the bridge rows move.
g2 = g.with_order([3, 1, 5, 2, 4])
print(render_ascii(embed(g2)))

# %%
# Embeddings serialize to a JSON document keyed by vertex label.
text = serialize_embedding(p, g)
print(text)
assert parse_embedding(text, g) == p

# %%
# The validator reports every broken clause instead of stopping at the first.
broken = Embedding(p.dims, p.islands, p.bridges[1:] + (p.bridges[2],))
print(validate(g, broken).summary())

# %%
# A random sparse graph for good measure.
rng = random.Random(1)
n = 20
edges = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if rng.random() < 0.1]
gr = SourceGraph.from_edges(n, edges)
er = prune(embed(gr), gr)
print(len(edges), "edges;", stats(embed(gr)).total_cells, "->", stats(er).total_cells, "cells")
