"""Instantiate registered claims over parameter grids and report per-instance status."""

from __future__ import annotations

import csv
import io
import itertools
import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict

from ..errors import BudgetError, DomainError, FormatError, InputError
from ..families import FamilySpec, parse_family_spec, pruefer_code, tree_shapes
from .core import (
    SKIPPED_BUDGET,
    STATUSES,
    VIOLATION,
    ClaimSpec,
    Context,
    EvaluationRecord,
    Outcome,
    judge,
)
from .registry import REGISTRY, claim_number, get_claim, perturbed

FAMILY_SLOTS = ("G", "H", "T")
INT_SLOTS = ("k", "n", "m")

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


# --------------------------------------------------------------------------
# grid syntax: "G=path:2..4,cycle:3;H=complete:2;k=1..2;T=tree:5..6"
# --------------------------------------------------------------------------

def _int_range(text: str, what: str) -> list[int]:
    lo, sep, hi = text.partition("..")
    try:
        lo_i = int(lo)
        hi_i = int(hi) if sep else lo_i
    except ValueError:
        raise FormatError(f"bad range {text!r} in {what}") from None
    if hi_i < lo_i:
        raise FormatError(f"range {text!r} in {what} is reversed")
    return list(range(lo_i, hi_i + 1))


def tree_specs(n: int) -> list[FamilySpec]:
    """One ``pruefer`` spec per tree shape on ``n`` vertices."""
    return [FamilySpec("pruefer", tuple(pruefer_code(t))) for t in tree_shapes(n)]


def _family_tokens(text: str) -> list[str]:
    tokens: list[str] = []
    for tok in (t.strip() for t in text.split(",")):
        if not tok:
            raise FormatError(f"empty entry in family list {text!r}")
        if tok.isdigit() and tokens and tokens[-1].split(":")[0] in ("pruefer", "pruefer-tree", "prufer"):
            tokens[-1] += "," + tok
        else:
            tokens.append(tok)
    return tokens


def _family_values(text: str) -> list[FamilySpec]:
    out: list[FamilySpec] = []
    for tok in _family_tokens(text):
        name, sep, rest = tok.partition(":")
        if name == "tree":
            if not sep:
                raise FormatError(f"family spec {tok!r} lacks ':'")
            for n in _int_range(rest, tok):
                out.extend(tree_specs(n))
        elif ".." in rest:
            for n in _int_range(rest, tok):
                out.append(parse_family_spec(f"{name}:{n}"))
        else:
            out.append(parse_family_spec(tok))
    return out


def _int_values(text: str) -> list[int]:
    out: list[int] = []
    for tok in text.split(","):
        out.extend(_int_range(tok.strip(), text))
    return out


def parse_grid(text: str) -> dict[str, list]:
    """Parse the flat ``slot=values;...`` grid syntax (ranges inclusive)."""
    grid: dict[str, list] = {}
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        slot, sep, values = part.partition("=")
        slot = slot.strip()
        if not sep or not values.strip():
            raise FormatError(f"grid entry {part!r} is not of the form slot=values")
        if slot in grid:
            raise FormatError(f"slot {slot!r} given twice")
        if slot in FAMILY_SLOTS:
            grid[slot] = _family_values(values)
        elif slot in INT_SLOTS:
            grid[slot] = _int_values(values)
        else:
            raise FormatError(f"unknown grid slot {slot!r}; expected one of {FAMILY_SLOTS + INT_SLOTS}")
    return grid


def _slot_values(claim: ClaimSpec, slot: str, grid: dict) -> list:
    if slot in grid:
        return grid[slot]
    if slot == "T" and "n" in grid:
        return [spec for n in grid["n"] for spec in tree_specs(n)]
    return parse_grid(f"{slot}={claim.defaults[slot]}")[slot]


def instances(claim: ClaimSpec, grid: dict) -> list[dict]:
    """Cartesian product of the claim's slots, keeping only in-domain points."""
    pools = [_slot_values(claim, slot, grid) for slot in claim.slots]
    out = []
    for combo in itertools.product(*pools):
        params = dict(zip(claim.slots, combo))
        if claim.accepts(params) is None:
            out.append(params)
    return out


# --------------------------------------------------------------------------
# evaluation
# --------------------------------------------------------------------------

def _normalize(claim: ClaimSpec, params: dict) -> dict:
    extra = set(params) - set(claim.slots)
    if extra:
        raise InputError(f"{claim.id} does not take parameters {sorted(extra)}")
    out = {}
    for slot in claim.slots:
        if slot not in params:
            if slot == "k":
                out[slot] = 1
                continue
            raise InputError(f"{claim.id} needs parameter {slot!r}")
        value = params[slot]
        if slot in FAMILY_SLOTS:
            out[slot] = value if isinstance(value, FamilySpec) else parse_family_spec(str(value))
        else:
            try:
                out[slot] = int(value)
            except (TypeError, ValueError):
                raise InputError(f"parameter {slot} must be an integer, got {value!r}") from None
    return out


def _plain(value):
    if isinstance(value, FamilySpec):
        return str(value)
    if isinstance(value, tuple):
        return [_plain(v) for v in value]
    if isinstance(value, list):
        return [_plain(v) for v in value]
    return value


def _record(claim: ClaimSpec, params: dict, out: Outcome, elapsed_ms) -> EvaluationRecord:
    return EvaluationRecord(
        id=claim.id,
        params={k: _plain(v) for k, v in params.items()},
        lhs=_plain(out.lhs),
        rhs=_plain(out.rhs),
        relation=out.relation,
        status=judge(out),
        oracle_witness=None if out.oracle_witness is None else list(out.oracle_witness),
        constructive_witness=None if out.constructive_witness is None else list(out.constructive_witness),
        elapsed_ms=elapsed_ms,
        extra=out.extra,
        note=out.note,
    )


def evaluate_claim(claim, params: dict, ctx: Context | None = None, timing: bool = False) -> EvaluationRecord:
    """Evaluate one claim instance.

    Unknown ids and malformed parameters raise :class:`InputError`; points
    outside the claim's domain raise :class:`DomainError`.  Budget exhaustion
    never raises: the claim's constructive fallback runs if it has one,
    otherwise the record is ``SKIPPED_BUDGET``.
    """
    claim = claim if isinstance(claim, ClaimSpec) else get_claim(claim)
    params = _normalize(claim, params)
    reason = claim.accepts(params)
    if reason:
        raise DomainError(f"{claim.id} is not defined here: {reason}")
    ctx = ctx or Context()
    start = time.perf_counter()
    ctx.start_clock()
    try:
        out = claim.evaluate(params, ctx)
    except BudgetError as exc:
        out = Outcome(None, None, claim.rel, status=SKIPPED_BUDGET, note=str(exc))
        if claim.fallback is not None:
            ctx.start_clock()
            try:
                out = claim.fallback(params, ctx)
            except BudgetError as exc2:
                out.note = f"{exc}; fallback: {exc2}"
    elapsed = round((time.perf_counter() - start) * 1000, 3) if timing else None
    return _record(claim, params, out, elapsed)


def _resolve(ids, perturb: dict | None) -> list[ClaimSpec]:
    claims = []
    for cid in ids:
        claim = get_claim(cid)
        if perturb and claim.id in perturb:
            claim = perturbed(claim, perturb[claim.id])
        claims.append(claim)
    return claims


_WORKER: dict = {}


def _worker_init(budgets: dict, perturb: dict | None, timing: bool) -> None:
    _WORKER["ctx"] = Context(**budgets)
    _WORKER["perturb"] = perturb
    _WORKER["timing"] = timing


def _worker_eval(task):
    claim_id, params = task
    (claim,) = _resolve([claim_id], _WORKER["perturb"])
    return evaluate_claim(claim, params, _WORKER["ctx"], _WORKER["timing"])


def _budgets(ctx: Context) -> dict:
    return {k: v for k, v in asdict(ctx).items() if not k.startswith("_") and k != "deadline"}


def run_grid(
    ids,
    grid: dict | str | None = None,
    ctx: Context | None = None,
    jobs: int = 1,
    timing: bool = False,
    perturb: dict | None = None,
) -> list[EvaluationRecord]:
    """Evaluate every claim in ``ids`` over ``grid``; records sorted by (claim number, params).

    ``grid=None`` uses each claim's default ranges.  A grid that names some
    slots uses the defaults for the others; an explicitly empty grid
    evaluates nothing.  Out-of-domain points are skipped silently.
    """
    claims = _resolve(ids, perturb)
    if isinstance(grid, str):
        grid = parse_grid(grid)
        if not grid:
            return []
    elif grid is not None and not grid:
        return []
    ctx = ctx or Context()
    tasks = []
    for claim in claims:
        for params in instances(claim, grid or {}):
            key = (claim_number(claim.id), tuple(params.values()))
            tasks.append((key, claim, params))
    tasks.sort(key=lambda t: t[0])

    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(jobs, initializer=_worker_init, initargs=(_budgets(ctx), perturb, timing)) as pool:
            return list(pool.map(_worker_eval, [(c.id, p) for _, c, p in tasks]))
    return [evaluate_claim(claim, params, ctx, timing) for _, claim, params in tasks]


# --------------------------------------------------------------------------
# summaries and reports
# --------------------------------------------------------------------------

def summarize(records) -> dict[str, int]:
    counts = {s: 0 for s in STATUSES}
    for r in records:
        counts[r.status] += 1
    return counts


def exit_code(records) -> int:
    if any(r.status == VIOLATION for r in records):
        return EXIT_VIOLATION
    if records and all(r.status == SKIPPED_BUDGET for r in records):
        return EXIT_BUDGET
    return EXIT_OK


def report_json(records) -> str:
    return json.dumps([r.to_json() for r in records], indent=2) + "\n"


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, (list, dict)):
        return json.dumps(value, separators=(",", ":"))
    return str(value)


def report_csv(records) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["id", "params", "lhs", "rhs", "relation", "status", "elapsed_ms"])
    for r in records:
        w.writerow([r.id, r.params_text(), _cell(r.lhs), _cell(r.rhs), r.relation, r.status, _cell(r.elapsed_ms)])
    return buf.getvalue()


def report_text(records) -> str:
    lines = []
    for r in records:
        line = f"{r.id:<4} {r.params_text():<40} lhs={_cell(r.lhs):<6} {r.relation:<3} rhs={_cell(r.rhs):<8} {r.status}"
        if r.elapsed_ms is not None:
            line += f"  {r.elapsed_ms:.1f}ms"
        lines.append(line.rstrip())
    counts = summarize(records)
    lines.append("summary: " + " ".join(f"{k}={v}" for k, v in counts.items() if v) if records else "summary: no instances")
    return "\n".join(lines) + "\n"


def list_claims() -> str:
    return "".join(f"{c.id:<4} {c.kind:<12} {c.anchor}\n" for c in REGISTRY.values())
