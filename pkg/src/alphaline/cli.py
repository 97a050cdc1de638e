"""Command-line entry point: ``alphaline {generate,solve,verify,theorem1}``.

Exit codes: 0 success / all rows match, 1 any mismatch, 2 configuration or
input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys

from . import io as graph_io
from .families import FamilyParamError, FamilySpec, generate
from .graph import GraphError
from .harness import (
    DEFAULT_GRID,
    REPORT_FORMATS,
    RunConfig,
    emit_report,
    summarize,
    verify_all,
    verify_theorem1,
    write_report,
)
from .solvers import BudgetExhausted, alpha_line, default_budget, max_matching, mis_exact

EXIT_OK, EXIT_MISMATCH, EXIT_CONFIG = 0, 1, 2


def _on_off(value: str) -> bool:
    if value not in ("on", "off"):
        raise argparse.ArgumentTypeError("expected 'on' or 'off'")
    return value == "on"


def _positive(value: str) -> int:
    n = int(value)
    if n < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {n}")
    return n


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="alphaline",
        description="Independence numbers of graphs and their line graphs.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log warnings and progress")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", help="write a family member as DIMACS or JSON")
    p.add_argument("spec", help="family spec, e.g. wheel:n=5 or armed_crown:m=3,n=5")
    p.add_argument("--out", help="output file (default: stdout)")
    p.add_argument("--format", choices=graph_io.FORMATS, default="dimacs")

    p = sub.add_parser("solve", help="compute alpha, nu or alpha(L(G)) of a graph file")
    p.add_argument("file")
    p.add_argument("--what", choices=("alpha", "nu", "alpha-line"), default="alpha")
    p.add_argument("--input-format", choices=graph_io.FORMATS, default=None,
                   help="default: json for *.json, dimacs otherwise")
    p.add_argument("--budget", type=_positive, default=None)

    p = sub.add_parser("verify", help="check the family formulas against the solvers")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--family", action="append", metavar="SPEC",
                       help="family range, e.g. wheel:n=3..10 (repeatable)")
    group.add_argument("--all", action="store_true", help="run the default grid (the default)")
    p.add_argument("--oracle", type=_on_off, default=True, metavar="on|off")
    p.add_argument("--format", choices=REPORT_FORMATS, default="table")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=_positive, default=None)
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--out", help="write the report here instead of stdout")

    p = sub.add_parser("theorem1", help="check alpha(L(G)) == nu(G) on random graphs")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--max-vertices", type=_positive, default=10)
    p.add_argument("--max-edges", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--oracle", type=_on_off, default=True, metavar="on|off")
    p.add_argument("--budget", type=_positive, default=None)
    p.add_argument("--json", action="store_true", help="print the summary as JSON")
    return parser


def _cmd_generate(args) -> int:
    spec = FamilySpec.parse(args.spec)
    text = graph_io.dump_graph(generate(spec), args.format, comment=str(spec))
    if args.out:
        write_report(text, args.out)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _cmd_solve(args) -> int:
    g = graph_io.load_graph(args.file, args.input_format)
    if g.isolated_vertices():
        logging.getLogger("alphaline").warning(
            "input has isolated vertices %s; the family formulas assume none", g.isolated_vertices()
        )
    try:
        if args.what == "alpha":
            res = mis_exact(g, args.budget)
        elif args.what == "nu":
            res = max_matching(g)
        else:
            res = alpha_line(g, args.budget)
    except BudgetExhausted as exc:
        print(f"budget exhausted after {exc.budget} nodes; best lower bound {exc.best.value}",
              file=sys.stderr)
        return EXIT_MISMATCH
    print(f"{args.what} = {res.value}")
    witness = [[u + 1, v + 1] for u, v in res.witness] if args.what != "alpha" else [
        v + 1 for v in res.witness
    ]
    print(f"witness (1-based) = {json.dumps(witness)}")
    if res.perfect is not None:
        print(f"perfect matching = {'yes' if res.perfect else 'no'}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    config = RunConfig(
        families=tuple(args.family) if args.family else DEFAULT_GRID,
        budget=args.budget or default_budget(),
        oracle=args.oracle,
        format=args.format,
        seed=args.seed,
        jobs=args.jobs,
    )
    records = verify_all(config)
    text = emit_report(records, config.format, config)
    if args.out:
        write_report(text, args.out)
    else:
        sys.stdout.write(text)
    s = summarize(records)
    if args.out or args.format != "table":
        print(f"{s['pass']} pass, {s['fail']} fail, {s['skipped']} skipped", file=sys.stderr)
    return EXIT_OK if s["fail"] == 0 and s["skipped"] == 0 else EXIT_MISMATCH


def _cmd_theorem1(args) -> int:
    summary = verify_theorem1(
        args.count, args.max_vertices, args.max_edges, args.seed, args.oracle, args.budget
    )
    if args.json:
        print(json.dumps({
            "total": summary.total, "passed": summary.passed, "failed": summary.failed,
            "seed": summary.seed, "counterexamples": summary.counterexamples,
        }, indent=2))
    else:
        print(f"{summary.passed}/{summary.total} graphs satisfy alpha(L(G)) == nu(G) "
              f"(seed {summary.seed}, {summary.elapsed:.2f}s)")
        for row in summary.counterexamples:
            print("counterexample:", json.dumps(row))
    return EXIT_OK if summary.ok else EXIT_MISMATCH


_COMMANDS = {
    "generate": _cmd_generate,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "theorem1": _cmd_theorem1,
}


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return _COMMANDS[args.command](args)
    except (FamilyParamError, GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
