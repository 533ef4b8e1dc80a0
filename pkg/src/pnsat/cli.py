"""Command-line interface.

Exit codes: 0 success or verdict true, 1 verdict false, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, TextIO

from . import __version__
from ._backend import BACKEND
from .construction import LabeledGn, build_gn, parse_label, vertex_of
from .enumeration import exhaust_labeled, scan_stream
from .graph import Graph, emit_graph6, parse_graph6, path_graph, read_graph6_lines
from .induced_path import longest_induced_path
from .saturation import classify_edge, paper_witness, verify_h_is, verify_pn_is

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


def gn_dot(g: LabeledGn) -> str:
    """DOT with the v-column at x=0 and the w-column at x=3, one row per index."""
    names = [str(l) for l in g.labels()]
    out = [f"graph G_{g.n} {{", "  node [shape=circle];"]
    for v, name in enumerate(names):
        side, i = g.label_of(v)
        x = 0 if side == "V" else 3
        out.append(f'  {name} [label="{name}", pos="{x},{-(i - 1)}!"];')
    for u, v in g.graph.edges():
        out.append(f"  {names[u]} -- {names[v]};")
    out.append("}")
    return "\n".join(out) + "\n"


def gn_edgelist(g: LabeledGn) -> str:
    lines = [f"# G_{g.n}: {g.graph.order} vertices, {g.graph.edge_count()} edges; "
             f"vertex i-1 is v_i, vertex {g.m}+i-1 is w_i"]
    lines += [f"{u} {v}" for u, v in g.graph.edges()]
    return "\n".join(lines) + "\n"


def _read_graph(path: str) -> Graph:
    try:
        with open(path) as fh:
            for _, text in read_graph6_lines(fh):
                return parse_graph6(text)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    raise UsageError(f"{path} contains no graph6 record")


def _target(k: int) -> Graph:
    if k < 1:
        raise UsageError("--target must be at least 1")
    return path_graph(k)


def cmd_gen(args, out: TextIO) -> int:
    g = build_gn(args.n)
    if args.format == "graph6":
        out.write(emit_graph6(g.graph) + "\n")
    elif args.format == "edgelist":
        out.write(gn_edgelist(g))
    else:
        out.write(gn_dot(g))
    return EXIT_OK


def cmd_verify(args, out: TextIO) -> int:
    if args.n is not None:
        if args.graph is not None:
            raise UsageError("give either --n or --graph, not both")
        report = verify_pn_is(build_gn(args.n), workers=args.threads)
    else:
        if args.graph is None or args.target is None:
            raise UsageError("verify needs --n, or --graph with --target")
        report = verify_h_is(_read_graph(args.graph), _target(args.target), workers=args.threads)
    out.write((report.to_json() if args.format == "json" else report.to_text()) + "\n")
    return EXIT_OK if report.verdict else EXIT_FALSE


def cmd_witness(args, out: TextIO) -> int:
    g = build_gn(args.n)
    parts = args.edge.split(",")
    if len(parts) != 2:
        raise UsageError("--edge takes two labels separated by a comma, e.g. v1,v6")
    a, b = (vertex_of(g, parse_label(p)) for p in parts)
    ec = classify_edge(g, (a, b), args.mode)
    path = paper_witness(g, (a, b), args.mode)
    u, v = ec.canonical_labels(g.n)
    out.write(f"case {ec.case}\n")
    out.write(f"edge {g.label_of(ec.edge.u)}-{g.label_of(ec.edge.v)} ({ec.mode}, type {ec.edge_type})\n")
    if ec.canonical_j is not None:
        out.write(f"j {ec.canonical_j}\n")
    out.write(f"applied {ec.to_canonical}\n")
    out.write(f"canonical_edge {u}-{v}\n")
    out.write("path " + " ".join(str(g.label_of(x)) for x in path) + "\n")
    return EXIT_OK


def cmd_longest(args, out: TextIO) -> int:
    k, path = longest_induced_path(_read_graph(args.graph))
    out.write(f"{k}\n")
    out.write("path " + " ".join(map(str, path)) + "\n")
    return EXIT_OK


def cmd_scan(args, out: TextIO) -> int:
    h = _target(args.target)
    if args.input in (None, "-"):
        summary = scan_stream(sys.stdin, h, strict=args.strict, workers=args.threads)
    else:
        try:
            with open(args.input) as fh:
                summary = scan_stream(fh, h, strict=args.strict, workers=args.threads)
        except OSError as exc:
            raise UsageError(f"cannot read {args.input}: {exc.strerror}") from exc
    out.write((summary.to_json() if args.format == "json" else summary.to_text()) + "\n")
    return EXIT_OK


def cmd_exhaust(args, out: TextIO) -> int:
    summary = exhaust_labeled(args.order, _target(args.target), workers=args.threads)
    out.write((summary.to_json() if args.format == "json" else summary.to_text()) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pnsat",
        description="Build and verify P_n-induced-saturated graphs.",
    )
    parser.add_argument("--version", action="version",
                        version=f"%(prog)s {__version__} ({BACKEND} kernels)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="emit G_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["graph6", "edgelist", "dot"], default="graph6")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("verify", help="three-clause induced-saturation check")
    p.add_argument("--n", type=int, help="verify G_n against P_n")
    p.add_argument("--graph", help="graph6 file (first record is used)")
    p.add_argument("--target", type=int, help="path order for --graph")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="explicit witness path for one edge of G_n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--mode", choices=["delete", "add"], required=True)
    p.add_argument("--edge", required=True, help="two labels, e.g. v1,v6")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("longest-path", help="longest induced path of a graph6 graph")
    p.add_argument("--graph", required=True)
    p.set_defaults(func=cmd_longest)

    p = sub.add_parser("scan", help="scan a graph6 stream for P_k-IS graphs")
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--input", help="graph6 file; standard input if omitted or '-'")
    p.add_argument("--strict", action="store_true", help="abort on the first malformed record")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("exhaust", help="test every labeled graph of a given order")
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--target", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=cmd_exhaust)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        print("pnsat: --threads must be at least 1", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args, sys.stdout)
    except (UsageError, ValueError) as exc:
        print(f"pnsat {args.command}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
