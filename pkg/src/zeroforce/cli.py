"""Command-line entry point: ``zeroforce {zf,product,family,verify}``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from .claims.core import Context
from .claims.harness import (
    EXIT_BUDGET,
    EXIT_INPUT,
    list_claims,
    exit_code,
    parse_grid,
    report_csv,
    report_json,
    report_text,
    run_grid,
    summarize,
)
from .claims.registry import REGISTRY, claim_number, get_claim
from .errors import BudgetError, FormatError, InputError
from .families import graph_from_spec
from .forcing import DEFAULT_EXACT_CAP, zero_forcing_number_exact
from .graph import Graph, emit_edge_list, emit_graph6, emit_label_table, join, parse_edge_list, parse_graph6
from .products import DEFAULT_CONSTRUCTION_CAP, iterated_corona, lexicographic

BUDGET_ENV = "ZF_BUDGET_VERTICES"


def _exact_cap(flag: int | None) -> int:
    if flag is not None:
        return flag
    env = os.environ.get(BUDGET_ENV)
    if env:
        try:
            return int(env)
        except ValueError:
            raise InputError(f"{BUDGET_ENV} must be an integer, got {env!r}") from None
    return DEFAULT_EXACT_CAP


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return value


def _read_graphs(source: str, fmt: str) -> list[Graph]:
    text = sys.stdin.read() if source == "-" else Path(source).read_text()
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.lstrip().startswith("#")]
    if not lines:
        raise FormatError("input holds no graph")
    if fmt == "auto":
        fmt = "edgelist" if len(lines[0].split()) > 1 else "graph6"
    if fmt == "edgelist":
        return [parse_edge_list(text)]
    return [parse_graph6(ln) for ln in lines]


def _emit(g: Graph, fmt: str) -> str:
    return emit_edge_list(g) if fmt == "edgelist" else emit_graph6(g) + "\n"


def _write(text: str, target: str | None) -> None:
    if target and target != "-":
        Path(target).write_text(text)
    else:
        sys.stdout.write(text)


# --------------------------------------------------------------------------
# subcommands
# --------------------------------------------------------------------------

def cmd_zf(args) -> int:
    graphs = [graph_from_spec(args.family)] if args.family else _read_graphs(args.input, args.format)
    cap = _exact_cap(args.budget)
    for g in graphs:
        res = zero_forcing_number_exact(g, cap)
        if args.json:
            payload = {"Z": res.value, "witness": list(res.witness), "explored": res.explored}
            if args.trace:
                payload["trace"] = res.trace.to_json()
            print(json.dumps(payload))
            continue
        print(f"Z={res.value} witness={list(res.witness)}")
        if args.trace:
            for u, v in res.trace.forces:
                print(f"  {u} -> {v}")
    return 0


def cmd_product(args) -> int:
    g, h = graph_from_spec(args.g), graph_from_spec(args.h)
    if args.kind == "corona":
        out = iterated_corona(g, h, args.k, args.budget).graph
    elif args.kind == "lex":
        out = lexicographic(g, h, args.budget).graph
    else:
        if g.order + h.order > args.budget:
            raise BudgetError(f"G + H has {g.order + h.order} vertices, above the construction cap {args.budget}")
        out = join(g, h)
    _write(_emit(out, args.format), args.output)
    if args.labels:
        Path(args.labels).write_text(emit_label_table(out))
    return 0


def cmd_family(args) -> int:
    g = graph_from_spec(args.spec)
    _write(_emit(g, args.format), args.output)
    if args.labels:
        Path(args.labels).write_text(emit_label_table(g))
    return 0


def _parse_perturb(items) -> dict[str, int]:
    out = {}
    for item in items or ():
        cid, sep, delta = item.partition(":")
        if not sep:
            raise InputError(f"--perturb expects ID:DELTA, got {item!r}")
        try:
            out[get_claim(cid).id] = int(delta)
        except ValueError:
            raise InputError(f"--perturb delta must be an integer, got {delta!r}") from None
    return out


def cmd_verify(args) -> int:
    if args.list:
        sys.stdout.write(list_claims())
        return 0
    if args.claims.strip().lower() == "all":
        ids = sorted(REGISTRY, key=claim_number)
    else:
        ids = [get_claim(c).id for c in args.claims.split(",") if c.strip()]
    grid = parse_grid(args.grid) if args.grid is not None else None
    ctx = Context(
        exact_cap=_exact_cap(args.budget),
        construction_cap=args.construction_budget,
        time_limit=args.time_limit,
    )
    records = run_grid(ids, grid, ctx, jobs=args.jobs, timing=args.timing, perturb=_parse_perturb(args.perturb))
    writer = {"json": report_json, "csv": report_csv, "text": report_text}[args.format]
    _write(writer(records), args.out)
    if args.out and args.out != "-":
        counts = summarize(records)
        print(f"{len(records)} records: " + " ".join(f"{k}={v}" for k, v in counts.items() if v))
    return exit_code(records)


# --------------------------------------------------------------------------
# argument parsing
# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="zeroforce", description="Exact zero forcing toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("zf", help="exact zero forcing number of a graph")
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--family", help='family spec such as "path:5" or "pruefer:0,0"')
    src.add_argument("--input", help='graph file, or "-" for stdin')
    p.add_argument("--format", choices=("auto", "graph6", "edgelist"), default="auto")
    p.add_argument("--budget", type=_positive, help=f"exact-search vertex cap (default {DEFAULT_EXACT_CAP})")
    p.add_argument("--trace", action="store_true", help="print the forcing chain of the witness")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_zf)

    p = sub.add_parser("product", help="build a corona, lexicographic or join product")
    p.add_argument("kind", choices=("corona", "lex", "join"))
    p.add_argument("--g", required=True, help="first factor (family spec)")
    p.add_argument("--h", required=True, help="second factor (family spec)")
    p.add_argument("-k", type=int, default=1, help="corona depth")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--output", help="output file (default stdout)")
    p.add_argument("--labels", help="write an id<TAB>label table here")
    p.add_argument("--budget", type=_positive, default=DEFAULT_CONSTRUCTION_CAP, help="construction vertex cap")
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("family", help="emit a named graph")
    p.add_argument("spec")
    p.add_argument("--format", choices=("graph6", "edgelist"), default="graph6")
    p.add_argument("--output")
    p.add_argument("--labels")
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("verify", help="evaluate registered claims over a parameter grid")
    p.add_argument("--claims", default="all", help='comma-separated ids such as "C3,C6", or "all"')
    p.add_argument("--grid", help='e.g. "G=path:2..4;H=complete:2;k=1..2" (default: per-claim ranges)')
    p.add_argument("--budget", type=_positive, help="exact-search vertex cap")
    p.add_argument("--construction-budget", type=_positive, default=DEFAULT_CONSTRUCTION_CAP)
    p.add_argument("--time-limit", type=float, default=30.0, help="seconds per instance")
    p.add_argument("--out", help="report file (default stdout)")
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--jobs", type=_positive, default=1)
    p.add_argument("--timing", action="store_true", help="fill elapsed_ms (reports stop being byte-stable)")
    p.add_argument("--perturb", action="append", metavar="ID:DELTA", help="shift a claim's rhs (mutation test)")
    p.add_argument("--list", action="store_true", help="list registered claims and exit")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else 0
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (InputError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
