"""Command-line front end.

Exit codes: 0 success, 1 not Diophantine / no labeling / invalid labeling,
2 undecided within the search budget, 3 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from math import gcd
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path

from . import __version__
from .conditions import NOT_DIOPHANTINE, UNKNOWN, check_conditions
from .corpus import CORPUS
from .errors import DiographError
from .graphcore import FORMATS, Graph, parse_graph, serialize_graph
from .labeler import LABELED, NONE, find_labeling, load_certificate, verify_labeling
from .maximal import TABLE_HEADER, build_dn, diophantine_rule, min_degree_min_label, profile

EXIT_OK, EXIT_NEGATIVE, EXIT_UNKNOWN, EXIT_INPUT = 0, 1, 2, 3


class InputError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _guess_format(path: str, explicit: str | None) -> str:
    if explicit:
        return explicit
    suffix = Path(path).suffix.lower()
    return {".json": "json", ".g6": "graph6", ".graph6": "graph6"}.get(suffix, "edges")


def _read_graph(args) -> Graph:
    try:
        text = sys.stdin.read() if args.graph == "-" else Path(args.graph).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {args.graph}: {exc.strerror}") from None
    fmt = _guess_format(args.graph, args.input_format)
    g = parse_graph(text, fmt)
    n = getattr(args, "n", None)
    if n is not None and n != g.n:
        if n < g.n:
            raise InputError(f"--n {n} is smaller than the graph order {g.n}")
        g = Graph.from_edges(n, g.edges())
    return g


def cmd_build(args, out) -> int:
    out.write(serialize_graph(build_dn(args.n).graph, args.format))
    return EXIT_OK


def cmd_profile(args, out) -> int:
    prof = profile(args.n, audit=args.audit)
    data = prof.as_dict()
    res = min_degree_min_label(args.n)
    data["min_degree_min_label"] = {
        "status": res.status,
        "min_label": res.min_label,
        "witness_high_label": res.witness_high_label,
        "factors": list(res.factors),
    }
    out.write(_dump(data) + "\n")
    return EXIT_OK


def cmd_table(args, out) -> int:
    if args.start < 1 or args.stop < args.start:
        raise InputError("table needs 1 <= a <= b")
    ns = range(args.start, args.stop + 1)
    with ThreadPoolExecutor(max_workers=args.jobs) as pool:
        rows = list(pool.map(lambda n: profile(n, audit=args.audit), ns))
    if args.csv:
        out.write(TABLE_HEADER + "\n")
        for prof in rows:
            out.write(prof.csv_row() + "\n")
        return EXIT_OK
    cells = [["n", "|E|", "F", "Cl", "alpha", "delta", "S"]] + [
        [
            str(p.n),
            str(p.edge_count),
            str(p.full_degree_count),
            str(p.clique_number),
            str(p.independence_number),
            str(p.min_degree),
            str(p.degree_sequence),
        ]
        for p in rows
    ]
    widths = [max(len(r[i]) for r in cells) for i in range(len(cells[0]))]
    for r in cells:
        out.write("  ".join(c.rjust(w) if i < 6 else c for i, (c, w) in enumerate(zip(r, widths))).rstrip() + "\n")
    return EXIT_OK


def cmd_check(args, out) -> int:
    g = _read_graph(args)
    report = check_conditions(g, budget=args.budget, early_exit=args.early_exit)
    if args.json:
        out.write(_dump(report.as_dict()) + "\n")
    else:
        out.write(f"n = {report.n}\n")
        for name, res in sorted(report.conditions.items()):
            extra = f" (k={res.violating_k})" if res.violating_k is not None else ""
            values = f"G={res.graph_value} D_n={res.dn_value}"
            out.write(f"{name} {res.verdict.upper():7s} {res.relation}: {values}{extra}\n")
        s = report.sufficient
        out.write(f"sufficient {s.verdict.upper()} alpha(G)={s.independence_number} >= n-F(D_n)={s.threshold}\n")
        out.write(f"overall: {report.overall}\n")
    if report.overall == NOT_DIOPHANTINE:
        return EXIT_NEGATIVE
    if any(r.verdict == UNKNOWN for r in report.conditions.values()):
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_label(args, out) -> int:
    g = _read_graph(args)
    outcome = find_labeling(g, diophantine_rule(g.n), budget=args.budget, time_limit=args.time_limit)
    out.write(_dump(outcome.as_dict()) + "\n")
    if outcome.verdict == LABELED:
        return EXIT_OK
    return EXIT_NEGATIVE if outcome.verdict == NONE else EXIT_UNKNOWN


def cmd_verify(args, out) -> int:
    g = _read_graph(args)
    try:
        labels = load_certificate(Path(args.labels).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {args.labels}: {exc.strerror}") from None
    except (ValueError, json.JSONDecodeError) as exc:
        raise InputError(f"bad labeling file: {exc}") from None
    ok = verify_labeling(g, labels, diophantine_rule(g.n))
    bad = [] if ok else [[u, v] for u, v in g.edges() if g.n % gcd(labels[u], labels[v])]
    out.write(_dump({"valid": ok, "violating_edges": bad}) + "\n")
    return EXIT_OK if ok else EXIT_NEGATIVE


def cmd_export(args, out) -> int:
    name = args.name
    if name in CORPUS:
        g = CORPUS[name]()
    elif name[:1] in "Dd" and name[1:].isdigit():
        g = build_dn(int(name[1:])).graph
    else:
        raise InputError(f"unknown graph {name!r}; choose D<n> or one of {', '.join(CORPUS)}")
    out.write(serialize_graph(g, args.format))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="diograph", description="Maximal Diophantine graphs and labelings")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_graph_input(p, with_n=True):
        p.add_argument("--graph", required=True, help="graph file (edge list, .json or .g6); '-' for stdin")
        p.add_argument("--input-format", choices=("edges", "json", "graph6"), help="override format detection")
        if with_n:
            p.add_argument("--n", type=int, help="order to test against (pads with isolated vertices)")

    p = sub.add_parser("build", help="emit D_n")
    p.add_argument("n", type=int)
    p.add_argument("--format", choices=FORMATS, default="edges")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("profile", help="invariants of D_n as JSON")
    p.add_argument("n", type=int)
    p.add_argument("--audit", action="store_true", help="recompute with exact solvers on the built graph")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("table", help="invariant rows of D_n for n in [a, b]")
    p.add_argument("start", type=int)
    p.add_argument("stop", type=int)
    p.add_argument("--csv", action="store_true")
    p.add_argument("--audit", action="store_true")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="evaluate necessary conditions C1-C6 and the sufficient condition")
    add_graph_input(p)
    p.add_argument("--budget", type=int, default=10**6, help="node budget for exact clique/independence search")
    p.add_argument("--early-exit", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("label", help="search for a Diophantine labeling")
    add_graph_input(p)
    p.add_argument("--budget", type=int, default=10**6, help="node budget for the labeling search")
    p.add_argument("--time-limit", type=float, help="wall-clock ceiling in seconds (secondary to --budget)")
    p.set_defaults(func=cmd_label)

    p = sub.add_parser("verify", help="check a claimed labeling")
    add_graph_input(p, with_n=False)
    p.add_argument("--labels", required=True, help="JSON [[vertex, label], ...]")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("export", help="write a named graph (D<n>, G1..G6, H11, K3+N4)")
    p.add_argument("name")
    p.add_argument("--format", choices=FORMATS, default="edges")
    p.set_defaults(func=cmd_export)
    return parser


def main(argv: list[str] | None = None, out=None) -> int:
    out = out if out is not None else sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args, out)
    except (InputError, DiographError, ValueError) as exc:
        print(f"diograph: error: {exc}", file=sys.stderr)
        return EXIT_INPUT


run = main

if __name__ == "__main__":
    sys.exit(main())
