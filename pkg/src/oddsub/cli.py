"""``oddsub`` command line: solve, certify, scan.

Exit codes: 0 everything passed, 1 usage / parse / precondition error,
2 bound failure or incomplete search.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from .certify import (
    BoundNotAchieved,
    CertificateError,
    PreconditionError,
    clawfree_cert,
    linegraph_cert,
    linegraph_cert_extended,
    planar_reduction,
)
from .families import generate_family
from .graph import Graph, GraphError, TooLargeError, line_graph, parse_edge_list
from .oracle import fk_exact
from .scans import ReportItem, RunReport, run_scan

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FAIL = 2

CHECK_LIMIT = 30

FAMILY_HELP = """\
graph input is an edge-list file (first line "n m", then "u v" per edge,
"#" comments) or a family spec name[:args], blocks joined by "+":
  path:t cycle:l complete:n Kn empty:n star:r kbip:a,b F petersen
  gkl:k,l random-regular:n,k[,seed] gnm:n,m[,seed]
"""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with 2
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph(source: str) -> Graph:
    if os.path.isfile(source):
        with open(source) as fh:
            return parse_edge_list(fh.read())
    return generate_family(source)


def _emit(report: RunReport, as_json: bool, stream=None) -> None:
    stream = stream or sys.stdout
    if as_json:
        for item in report.items:
            print(json.dumps(item.as_dict()), file=stream)
        print(json.dumps(report.totals()), file=stream)
        return
    print(f"{'graph':<22} {'achieved':>8} {'bound':>8} {'pass':>5} {'ok':>4} {'secs':>8}", file=stream)
    for item in report.items:
        print(
            f"{item.graph_id:<22} {item.achieved:>8} {str(item.bound):>8} "
            f"{'yes' if item.passed else 'no':>5} {'ok' if item.as_expected else 'BAD':>4} {item.elapsed:>8.3f}",
            file=stream,
        )
    totals = report.totals()
    print(f"{totals['as_expected']}/{totals['items']} as expected; {report.summary}", file=stream)


def cmd_solve(args: argparse.Namespace) -> int:
    G = load_graph(args.input)
    if G.n and G.min_degree() < 1:
        print(f"warning: graph has an isolated vertex (min degree 0); f_o may be 0", file=sys.stderr)
    modulus = args.fk or 2
    result = fk_exact(G, modulus, budget=args.budget)
    if args.json:
        print(json.dumps({"input": args.input, "modulus": modulus, **result.as_dict()}))
    else:
        label = "f_o" if modulus == 2 else f"f_{modulus}"
        status = "" if result.optimal else " (INCOMPLETE: budget exhausted, lower bound only)"
        print(f"{label} = {result.value}{status}")
        print(f"witness = {list(result.witness)}")
        print(f"nodes explored = {result.nodes_explored}, elapsed = {result.elapsed:.3f}s")
    return EXIT_OK if result.optimal else EXIT_FAIL


def cmd_certify(args: argparse.Namespace) -> int:
    G = load_graph(args.input)
    start = time.perf_counter()
    if args.pipeline == "planar":
        h_set = planar_reduction(G, planar_asserted=args.planar)
        bound = Fraction(2 * G.n, 3)
        payload = {"pipeline": "planar", "h_set": list(h_set), "size": len(h_set), "bound": {"num": bound.numerator, "den": bound.denominator}}
        item = ReportItem(args.input, len(h_set), bound, elapsed=time.perf_counter() - start)
    else:
        build = {"clawfree": clawfree_cert, "linegraph": linegraph_cert, "linegraph-ext": linegraph_cert_extended}
        cert = build[args.pipeline](G)
        payload = cert.to_json()
        detail = {}
        if args.check:
            target = G if cert.target == "G" else line_graph(G).lg
            if target.n <= CHECK_LIMIT:
                fo = fk_exact(target, 2).value
                detail = {"oracle_fo": fo, "match": fo >= cert.size}
        item = ReportItem(args.input, cert.size, cert.bound, elapsed=time.perf_counter() - start, detail=detail)
    report = RunReport("certify", f"{args.input} [{args.pipeline}]", [item])
    text = json.dumps(payload, indent=None if args.json else 2)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
        _emit(report, args.json)
    else:
        print(text)
        _emit(report, args.json, sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_scan(args: argparse.Namespace) -> int:
    report = run_scan(args.name)
    _emit(report, args.json)
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="oddsub",
        description="Exact f_o solver and lower-bound certificates for odd induced subgraphs.",
        epilog=FAMILY_HELP,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--seed", type=int, default=0, help="seed for random family specs without one (default 0)")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="exact f_o (or f_k) with a witness", epilog=FAMILY_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("input", help="edge-list file or family spec")
    p.add_argument("--fk", type=int, metavar="K", help="solve f_k: degrees congruent to 1 mod K")
    p.add_argument("--budget", type=int, metavar="N", help="search node limit")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("certify", help="build a lower-bound certificate", epilog=FAMILY_HELP,
                       formatter_class=argparse.RawDescriptionHelpFormatter)
    p.add_argument("input", help="edge-list file or family spec")
    p.add_argument("pipeline", choices=["clawfree", "linegraph", "linegraph-ext", "planar"])
    p.add_argument("--out", help="write certificate JSON here instead of stdout")
    p.add_argument("--check", action="store_true", help=f"cross-check with the exact oracle (target n <= {CHECK_LIMIT})")
    p.add_argument("--planar", action="store_true", help="assert the input is planar (planar pipeline)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("scan", help="run a verification scan")
    p.add_argument(
        "name",
        help="wangwu-min-counterexample | cycle-table | counterexample-orders:<a>..<b> | clawfree-random:<m>,<trials>,<seed>",
    )
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_scan)
    return parser


def _seed_specs(source: str, seed: int) -> str:
    blocks = []
    for block in source.split("+"):
        name, _, args = block.partition(":")
        if name in ("random-regular", "gnm") and args.count(",") == 1:
            block = f"{block},{seed}"
        blocks.append(block)
    return "+".join(blocks)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if hasattr(args, "input") and not os.path.isfile(args.input):
        args.input = _seed_specs(args.input, args.seed)
    if getattr(args, "fk", None) is not None and args.fk < 2:
        parser.error("--fk needs K >= 2")
    try:
        return args.func(args)
    except (PreconditionError, GraphError, TooLargeError) as exc:
        print(f"oddsub: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (BoundNotAchieved, CertificateError) as exc:
        print(f"oddsub: bound failure: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
