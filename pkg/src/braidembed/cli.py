"""``braidembed`` command line.

Exit status: 0 success, 1 validation failure, 2 input error, 3 internal
invariant breach (a freshly built embedding failed validation).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bench as _bench
from .braid import embed, prune
from .formats import ParseError, parse_edge_list, parse_embedding, parse_ordering, serialize_embedding
from .model import GraphError, SourceGraph, validate
from .render import render_ascii, render_svg

EXIT_OK, EXIT_INVALID, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3

DEFAULT_BENCH_SIZES = (64, 128, 256, 512, 1024)


class InputError(Exception):
    pass


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from None


def _emit(text: str, output: str | None) -> None:
    if output and output != "-":
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_graph(args) -> SourceGraph:
    if args.complete is not None:
        if args.complete < 1:
            raise InputError("--complete needs n >= 1")
        g = SourceGraph.complete(args.complete)
    elif args.biclique is not None:
        a, b = args.biclique
        if a < 1 or b < 1:
            raise InputError("--biclique needs two positive part sizes")
        g = SourceGraph.biclique(a, b)
    elif args.input is not None:
        g = parse_edge_list(_read(args.input))
    else:
        raise InputError("give an edge-list path, --complete N, or --biclique A B")
    if args.ordering:
        g = g.with_order(parse_ordering(_read(args.ordering), g))
    return g


def cmd_embed(args) -> int:
    g = _load_graph(args)
    e = embed(g)
    if args.prune:
        e = prune(e, g)
    report = validate(g, e)
    if not report.passed:
        print("internal error: embedding failed self-validation", file=sys.stderr)
        print(report.summary(), file=sys.stderr)
        return EXIT_INTERNAL
    if args.format == "ascii":
        text = render_ascii(e)
    elif args.format == "svg":
        text = render_svg(e)
    else:
        text = serialize_embedding(e, g)
    _emit(text, args.output)
    return EXIT_OK


def cmd_validate(args) -> int:
    g = parse_edge_list(_read(args.graph))
    e = parse_embedding(_read(args.embedding), g)
    report = validate(g, e)
    print(report.summary())
    return EXIT_OK if report.passed else EXIT_INVALID


def cmd_render(args) -> int:
    g = parse_edge_list(_read(args.graph)) if args.graph else None
    e = parse_embedding(_read(args.embedding), g)
    _emit(render_svg(e) if args.format == "svg" else render_ascii(e), args.output)
    return EXIT_OK


def cmd_bench(args) -> int:
    sizes = list(args.sizes)
    if any(n < 2 for n in sizes) or any(b <= a for a, b in zip(sizes, sizes[1:])):
        raise InputError("bench sizes must be strictly increasing and each >= 2")
    rows = _bench.run_bench(sizes, repeats=args.repeats)
    _emit(_bench.to_csv(rows), args.output)
    if len(rows) >= 2:
        slope = _bench.loglog_slope(rows, last=3)
        print(f"log-log slope (largest {min(3, len(rows))} sizes): {slope:.3f}", file=sys.stderr)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="braidembed", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    pe = sub.add_parser("embed", help="embed a graph into the extended grid")
    pe.add_argument("input", nargs="?", help="edge-list file ('-' for stdin)")
    src = pe.add_mutually_exclusive_group()
    src.add_argument("--complete", type=int, metavar="N", help="embed K_N")
    src.add_argument("--biclique", type=int, nargs=2, metavar=("A", "B"), help="embed K_{A,B}")
    pe.add_argument("--format", choices=("doc", "ascii", "svg"), default="doc")
    pe.add_argument("--ordering", metavar="FILE", help="vertex labels in numbering order")
    pe.add_argument("--prune", action="store_true", help="trim island cells that carry no bridge")
    pe.add_argument("-o", "--output")
    pe.set_defaults(func=cmd_embed)

    pv = sub.add_parser("validate", help="check an embedding document against a graph")
    pv.add_argument("graph")
    pv.add_argument("embedding")
    pv.set_defaults(func=cmd_validate)

    pr = sub.add_parser("render", help="draw an embedding document")
    pr.add_argument("embedding")
    pr.add_argument("--graph", help="edge list used to resolve labels")
    pr.add_argument("--format", choices=("ascii", "svg"), default="ascii")
    pr.add_argument("-o", "--output")
    pr.set_defaults(func=cmd_render)

    pb = sub.add_parser("bench", help="time embeddings of complete graphs")
    pb.add_argument("--sizes", type=int, nargs="+", default=list(DEFAULT_BENCH_SIZES))
    pb.add_argument("--repeats", type=int, default=3)
    pb.add_argument("-o", "--output")
    pb.set_defaults(func=cmd_bench)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, ParseError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
