"""Command-line interface.

Exit status: 0 ok, 1 usage error, 2 malformed input, 3 resource limit.
"""
from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Sequence, TextIO

from . import census, classic, families
from .errors import GraphFormatError, ParameterError, PolynomialFormatError, ResourceLimitError
from .graph import Graph
from .graphio import parse_graph, to_graph6
from .invariants import full_report
from .qpoly import DEFAULT_MEMO_CAPACITY, DEFAULT_SUBSET_BOUND, MemoTable, compute_q

EXIT_OK, EXIT_USAGE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _read_graph(spec: str | None, stdin: TextIO) -> Graph:
    if spec is None or spec == "-":
        text = stdin.read()
    elif Path(spec).is_file():
        try:
            text = Path(spec).read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as exc:
            raise GraphFormatError(f"cannot read {spec!r}: {exc}") from None
    else:
        text = spec
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise GraphFormatError(f"no graph in {spec or 'stdin'!r}")
    if lines[0].strip()[0].isdigit():
        return parse_graph(" ".join(lines))
    return parse_graph(lines[0])


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _cmd_compute(args, out: TextIO, stdin: TextIO) -> int:
    g = _read_graph(args.graph, stdin)
    if args.poly == "q":
        res = compute_q(g, args.method, subset_bound=args.subset_bound,
                        memo=MemoTable(args.memo_capacity))
        poly, extra = res.polynomial, {"method": res.method, "stats": res.stats}
    else:
        poly = {"tutte": classic.tutte_poly, "matching": classic.matching_poly,
                "charpoly": classic.characteristic_poly}[args.poly](g)
        extra = {}
    if args.format == "json":
        out.write(_dump({"graph6": to_graph6(g), "poly": args.poly,
                         "polynomial": poly.to_json_obj(), **extra}) + "\n")
    else:
        out.write(f"{poly}\n")
    return EXIT_OK


def _cmd_invariants(args, out: TextIO, stdin: TextIO) -> int:
    rep = full_report(_read_graph(args.graph, stdin), args.method)
    if args.format == "json":
        out.write(_dump(rep.to_json_obj()) + "\n")
    else:
        for key, val in rep.to_json_obj().items():
            out.write(f"{key}: {val}\n")
    return EXIT_OK


def _cmd_compare(args, out: TextIO, stdin: TextIO) -> int:
    cmp = classic.compare_powers(_read_graph(args.a, stdin), _read_graph(args.b, stdin))
    if args.format == "json":
        out.write(_dump(cmp.to_json_obj()) + "\n")
    else:
        out.write(cmp.table() + "\n")
    return EXIT_OK


def _cmd_family(args, out: TextIO, stdin: TextIO) -> int:
    try:
        params = tuple(int(p) for p in args.params)
    except ValueError:
        bad = next(p for p in args.params if not p.lstrip("-").isdigit())
        raise UsageError(f"family parameter {bad!r} is not an integer") from None
    g = families.make(families.FamilySpec(args.name, params))
    out.write(to_graph6(g) + "\n")
    return EXIT_OK


def _max_order(args) -> int:
    return census.HARD_MAX_ORDER if args.allow_order_8 else census.DEFAULT_MAX_ORDER


def _cmd_census(args, out: TextIO, stdin: TextIO) -> int:
    table = census.q_classes(args.order, _max_order(args), args.workers)
    path = Path(args.out or f"census-order{args.order}.tsv")
    census.write_census(table, path)
    summary = table.summary()
    if args.format == "json":
        out.write(_dump({**summary, "file": str(path)}) + "\n")
    else:
        out.write(f"order: {summary['order']}\ngraphs: {summary['graphs']}\n"
                  f"classes: {summary['classes']}\nlargest class: {summary['largest_class']}\n"
                  f"non-singleton classes: {len(summary['non_singleton_classes'])}\n")
        for members in summary["non_singleton_classes"]:
            out.write("  " + " ".join(members) + "\n")
        out.write(f"written: {path}\n")
    return EXIT_OK


def _cmd_verify(args, out: TextIO, stdin: TextIO) -> int:
    rep = census.verify_q_unique(_read_graph(args.graph, stdin), _max_order(args), args.workers)
    if args.format == "json":
        out.write(_dump(rep.to_json_obj()) + "\n")
    else:
        out.write(f"{rep.graph6}: {'Q-unique' if rep.unique else 'not Q-unique'} "
                  f"(class size {rep.class_size})\n")
        for s in rep.co_members:
            out.write(f"  shares Q with {s}\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="scpoly", description="Subgraph component polynomial toolkit.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def fmt(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    graph_help = "graph6 string, edge list 'n; u v; ...', file path, or '-' for stdin (default)"

    p = sub.add_parser("compute", help="print a graph polynomial")
    p.add_argument("graph", nargs="?", help=graph_help)
    p.add_argument("--poly", choices=("q", "tutte", "matching", "charpoly"), default="q")
    p.add_argument("--method", choices=("definition", "recurrence", "auto"), default="auto")
    p.add_argument("--subset-bound", type=int, default=DEFAULT_SUBSET_BOUND)
    p.add_argument("--memo-capacity", type=int, default=DEFAULT_MEMO_CAPACITY)
    fmt(p)
    p.set_defaults(func=_cmd_compute)

    p = sub.add_parser("invariants", help="invariants read off Q, checked against direct computation")
    p.add_argument("graph", nargs="?", help=graph_help)
    p.add_argument("--method", choices=("definition", "recurrence", "auto"), default="auto")
    fmt(p)
    p.set_defaults(func=_cmd_invariants)

    p = sub.add_parser("compare", help="which of Q, charpoly, matching, tutte tell two graphs apart")
    p.add_argument("a")
    p.add_argument("b")
    fmt(p)
    p.set_defaults(func=_cmd_compare)

    p = sub.add_parser("family", help="emit a named family member as graph6")
    p.add_argument("name", choices=families.FAMILY_NAMES)
    p.add_argument("params", nargs="*")
    p.set_defaults(func=_cmd_family)

    for name, func, helptext in (("census", _cmd_census, "group all graphs of one order by Q"),
                                 ("verify-unique", _cmd_verify, "is the graph alone in its Q-class")):
        p = sub.add_parser(name, help=helptext)
        if name == "census":
            p.add_argument("--order", type=int, required=True)
            p.add_argument("--group-by", choices=("q",), default="q")
            p.add_argument("--out", help="census file (default census-order<n>.tsv)")
        else:
            p.add_argument("graph", nargs="?", help=graph_help)
        p.add_argument("--workers", type=int, default=1)
        p.add_argument("--allow-order-8", action="store_true", help="opt in to the 12346-class order-8 census")
        fmt(p)
        p.set_defaults(func=func)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None,
        stdin: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    stdin = stdin or sys.stdin
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "workers", 1) < 1:
            raise UsageError("--workers must be >= 1")
        logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                            format="%(levelname)s %(name)s: %(message)s")
        return args.func(args, out, stdin)
    except (UsageError, ParameterError) as exc:
        err.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except (GraphFormatError, PolynomialFormatError) as exc:
        err.write(f"malformed input: {exc}\n")
        return EXIT_INPUT
    except ResourceLimitError as exc:
        err.write(f"resource limit: {exc}\n")
        return EXIT_RESOURCE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
