"""Shared types for the claim harness: evaluation context, outcomes, records."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any, Callable

from ..families import FamilySpec
from ..forcing import DEFAULT_EXACT_CAP, ZfsResult, minimum_zero_forcing_sets, zero_forcing_number_exact, zero_forcing_number_restricted
from ..graph import Graph
from ..products import DEFAULT_CONSTRUCTION_CAP, CoronaGraph, LexGraph, iterated_corona, lexicographic
from ..trees import DEFAULT_DIM_CAP

EQUAL = "EQUAL"
WITHIN_BOUND = "WITHIN_BOUND"
SHARP = "SHARP"
VIOLATION = "VIOLATION"
WITNESS_ONLY = "WITNESS_ONLY"
SKIPPED_BUDGET = "SKIPPED_BUDGET"
INFEASIBLE = "INFEASIBLE"
STATUSES = (EQUAL, WITHIN_BOUND, SHARP, VIOLATION, WITNESS_ONLY, SKIPPED_BUDGET, INFEASIBLE)

DEFAULT_TIME_LIMIT = 30.0


@dataclass
class Context:
    """Budgets plus memoised oracle calls shared by the instances of one run."""

    exact_cap: int = DEFAULT_EXACT_CAP
    construction_cap: int = DEFAULT_CONSTRUCTION_CAP
    dim_cap: int = DEFAULT_DIM_CAP
    time_limit: float | None = DEFAULT_TIME_LIMIT
    enumerate_up_to: int = 14
    deadline: float | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    def start_clock(self) -> None:
        self.deadline = None if self.time_limit is None else time.monotonic() + self.time_limit

    def _memo(self, key, compute):
        try:
            return self._cache[key]
        except KeyError:
            value = self._cache[key] = compute()
            return value

    def graph(self, spec: FamilySpec) -> Graph:
        return self._memo(("family", spec), spec.build)

    def z(self, g: Graph) -> ZfsResult:
        return self._memo(("z", g), lambda: zero_forcing_number_exact(g, self.exact_cap, self.deadline))

    def z_restricted(self, g: Graph, pool) -> ZfsResult | None:
        pool = frozenset(pool)
        return self._memo(
            ("zr", g, pool),
            lambda: zero_forcing_number_restricted(g, pool, self.exact_cap, deadline=self.deadline),
        )

    def minimum_sets(self, g: Graph) -> list[tuple[int, ...]]:
        """Every minimum forcing set when ``|G|`` is small enough, else the oracle witness only."""
        best = self.z(g)
        if g.order > self.enumerate_up_to:
            return [best.witness]
        return self._memo(("all", g), lambda: list(minimum_zero_forcing_sets(g, best.value, self.exact_cap)))

    def corona(self, g: Graph, h: Graph, k: int) -> CoronaGraph:
        return self._memo(("corona", g, h, k), lambda: iterated_corona(g, h, k, self.construction_cap))

    def lex(self, g: Graph, h: Graph) -> LexGraph:
        return self._memo(("lex", g, h), lambda: lexicographic(g, h, self.construction_cap))


@dataclass
class Outcome:
    """What a claim evaluator reports for one instance, before the status is judged."""

    lhs: Any
    rhs: Any
    relation: str
    oracle_witness: tuple | None = None
    constructive_witness: tuple | None = None
    family_match: bool | None = None
    extra: dict = field(default_factory=dict)
    note: str = ""
    status: str | None = None


def judge(out: Outcome) -> str:
    """Status implied by the relation between two exactly computed sides."""
    if out.status is not None:
        return out.status
    lhs, rhs, rel = out.lhs, out.rhs, out.relation
    if rel == "=":
        return EQUAL if lhs == rhs else VIOLATION
    if rel == "<=":
        return VIOLATION if lhs > rhs else SHARP if lhs == rhs else WITHIN_BOUND
    if rel == ">=":
        return VIOLATION if lhs < rhs else SHARP if lhs == rhs else WITHIN_BOUND
    if rel == "in":
        lo, hi = rhs
        if not lo <= lhs <= hi:
            return VIOLATION
        return SHARP if lhs in (lo, hi) else WITHIN_BOUND
    if rel == "iff":
        return EQUAL if (lhs == rhs) == out.family_match else VIOLATION
    raise ValueError(f"unknown relation {rel!r}")


def shift_rhs(rhs, delta: int):
    if isinstance(rhs, (list, tuple)):
        return [x + delta for x in rhs]
    return rhs + delta


@dataclass(frozen=True)
class ClaimSpec:
    """A registered statement and how to instantiate and check it."""

    id: str
    kind: str
    anchor: str
    summary: str
    slots: tuple[str, ...]
    evaluate: Callable[[dict, Context], Outcome]
    accepts: Callable[[dict], str | None] = lambda p: None
    fallback: Callable[[dict, Context], Outcome] | None = None
    defaults: dict = field(default_factory=dict)
    relation: str | None = None

    @property
    def rel(self) -> str:
        """Relation used when no evaluator ran (budget skips)."""
        if self.relation:
            return self.relation
        return {"upper-bound": "<=", "lower-bound": ">=", "iff": "iff"}.get(self.kind, "=")


@dataclass
class EvaluationRecord:
    id: str
    params: dict
    lhs: Any
    rhs: Any
    relation: str
    status: str
    oracle_witness: list | None = None
    constructive_witness: list | None = None
    elapsed_ms: float | None = None
    extra: dict = field(default_factory=dict)
    note: str = ""

    def params_text(self) -> str:
        return ";".join(f"{k}={v}" for k, v in self.params.items())

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "params": dict(self.params),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "relation": self.relation,
            "status": self.status,
            "oracle_witness": self.oracle_witness,
            "constructive_witness": self.constructive_witness,
            "elapsed_ms": self.elapsed_ms,
            "extra": self.extra,
            "note": self.note,
        }
