"""
Braiding K_6
============

Six islands start side by side on row 1.  Odd-numbered ones drift right,
even-numbered ones drift left, and each bounces off the wall after one extra
row there.  Five rows are enough for every pair of islands to touch
horizontally, so all 15 edges of K_6 get a bridge.
"""
from pathlib import Path

import numpy as np

from braidembed import SourceGraph, braid_layout, column_formula, embed, render_ascii, render_svg, stats, validate

g = SourceGraph.complete(6)
e = embed(g)
print(render_ascii(e))
print(stats(e))
print(validate(g, e).summary())

# %%
# The trajectory of each island has a closed form; it agrees with the
# row-by-row layout.
t = braid_layout(6)
k = np.arange(1, 7)[:, None]
rows = np.arange(1, 6)[None, :]
print(column_formula(k, rows, 6))
print((column_formula(k, rows, 6) == t.columns).all())

# %%
# Where each bridge ended up, row by row.
for b in e.bridges:
    print(b.source_edge, "at", b.endpoints)

# %%
# K_{3,3} with parts {1, 3, 5} and {2, 4, 6} reuses the same layout and keeps
# 9 of the 15 bridges.
g33 = SourceGraph.biclique(3, 3)
e33 = embed(g33)
print(len(e33.bridges), validate(g33, e33).passed)

out = Path(__file__).with_name("output")
out.mkdir(exist_ok=True)
(out / "k6.svg").write_text(render_svg(e), encoding="utf-8")
(out / "k33.svg").write_text(render_svg(e33), encoding="utf-8")
print("wrote", out / "k6.svg", "and", out / "k33.svg")
