"""
Quadratic time and space
========================

K_n occupies exactly ``n (n - 1)`` cells and gets ``n (n - 1) / 2`` bridges,
and the running time grows with the same square law.  This is the same sweep
as ``braidembed bench``.
"""
from pathlib import Path

from braidembed.bench import loglog_slope, run_bench, to_csv

rows = run_bench([64, 128, 256, 512, 1024], repeats=3)
print(to_csv(rows))
print("slope, all sizes:      %.3f" % loglog_slope(rows, last=None))
print("slope, largest three:  %.3f" % loglog_slope(rows, last=3))

# %%
# Log-log plot of the timings against an n^2 guide line.
try:
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    ns = [r.n for r in rows]
    ms = [r.millis for r in rows]
    guide = [ms[-1] * (n / ns[-1]) ** 2 for n in ns]
    fig, ax = plt.subplots(figsize=(4, 3))
    ax.loglog(ns, ms, "o-", label="embed(K_n)")
    ax.loglog(ns, guide, "--", label="n^2")
    ax.set_xlabel("n")
    ax.set_ylabel("ms")
    ax.legend()
    fig.tight_layout()
    out = Path(__file__).with_name("output")
    out.mkdir(exist_ok=True)
    fig.savefig(out / "scaling.png", dpi=120)
    print("wrote", out / "scaling.png")
