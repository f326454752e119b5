"""Command-line front end.

JSON goes to stdout, diagnostics to stderr. Exit status is 0 on success,
1 on a domain error and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import cobweb, digraph, oracle, textio
from .errors import KodagError

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _dump(obj) -> str:
    return json.dumps(obj) + "\n"


def _truncation(args) -> cobweb.CobwebTruncation:
    seq = cobweb.sequence_parse(args.seq)
    return cobweb.build_truncation(seq, args.levels, budget=args.budget)


def _read_graph(path: str) -> digraph.Digraph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise KodagError(f"cannot read {path}: {exc}") from None
    return textio.parse_digraph(text)


def cmd_generate(args) -> int:
    t = _truncation(args)
    _emit(textio.format_digraph(cobweb.cobweb_edges(t)), args.out)
    if args.out is not None:
        Path(args.out + ".json").write_text(textio.vertex_table_json(t) + "\n")
    return EXIT_OK


def cmd_realizer(args) -> int:
    t = _truncation(args)
    x, y, _ = cobweb.realizer(t)
    payload = {"x": textio.chain_pairs(t, x), "y": textio.chain_pairs(t, y), "verified": True}
    _emit(_dump(payload), args.out)
    return EXIT_OK


def cmd_check(args) -> int:
    g = _read_graph(args.graph)
    dag = digraph.is_dag(g)
    report = {
        "dag": dag,
        "regular": digraph.is_regular(g) if dag else False,
        "vertices": g.vertex_count,
        "arcs": len(g.arcs),
    }
    _emit(_dump(report), args.out)
    return EXIT_OK


def cmd_odag(args) -> int:
    g = _read_graph(args.graph)
    if g.vertex_count > args.bound:
        print(
            f"error: {g.vertex_count} vertices exceeds --bound {args.bound}; "
            f"rerun with --bound {g.vertex_count} or higher",
            file=sys.stderr,
        )
        return EXIT_DOMAIN
    _emit(_dump(digraph.is_odag(g, search_bound=args.bound).to_dict()), args.out)
    return EXIT_OK


def cmd_verify_theorem1(args) -> int:
    report = oracle.verify_theorem1(args.n)
    _emit(report.to_json() + "\n", args.out)
    return EXIT_OK if not report.counterexamples else EXIT_DOMAIN


def cmd_export_dot(args) -> int:
    _emit(textio.cobweb_dot(_truncation(args)), args.out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="kodag", description="Cobweb posets and DAG to oDAG tools")
    sub = parser.add_subparsers(dest="command", required=True)

    def seq_command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--seq", required=True, help="fib | nat | const:<k> | file:<path>")
        p.add_argument("--levels", type=int, required=True, help="highest level L (>= 0)")
        p.add_argument("--budget", type=int, default=cobweb.DEFAULT_VERTEX_BUDGET,
                       help="maximum vertex count")
        p.add_argument("--out", help="output path (default: stdout)")
        p.set_defaults(func=func)
        return p

    def graph_command(name, func, help):
        p = sub.add_parser(name, help=help)
        p.add_argument("--graph", required=True, help="digraph text file")
        p.add_argument("--out", help="output path (default: stdout)")
        p.set_defaults(func=func)
        return p

    seq_command("generate", cmd_generate, "write the cobweb digraph (+ <out>.json vertex table)")
    seq_command("realizer", cmd_realizer, "print the verified chains X and Y as JSON")
    seq_command("export-dot", cmd_export_dot, "write a layered DOT drawing")
    graph_command("check", cmd_check, "report acyclicity and regularity")
    odag = graph_command("odag", cmd_odag, "decide dim-2 representability")
    odag.add_argument("--bound", type=int, default=digraph.DEFAULT_SEARCH_BOUND,
                      help="refuse graphs with more vertices (default: %(default)s)")
    verify = sub.add_parser("verify-theorem1", help="exhaustive oracle check over all DAGs on n vertices")
    verify.add_argument("-n", "--n", type=int, required=True)
    verify.add_argument("--out", help="output path (default: stdout)")
    verify.set_defaults(func=cmd_verify_theorem1)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "levels", 0) < 0:
        print("error: --levels must be >= 0", file=sys.stderr)
        return EXIT_USAGE
    try:
        return args.func(args)
    except KodagError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
