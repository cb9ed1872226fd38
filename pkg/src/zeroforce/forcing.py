"""Colour-change closure and exact zero forcing numbers.

A black vertex whose only white neighbour is ``w`` turns ``w`` black.  The
closure of an initial black set under this rule is unique, so the fast path
used by the solver may fire forces in any order; :func:`closure` instead
records one canonical schedule (smallest eligible forcer first).

The exact solver enumerates candidate sets by ascending cardinality and, per
cardinality, in lexicographic order.  The first success is therefore a
minimum zero forcing set and the lexicographically least one, and every
smaller cardinality has been exhausted.
"""

from __future__ import annotations

import heapq
import time
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .errors import BudgetError, InputError
from .graph import Graph, connected_components, iter_bits, to_mask

DEFAULT_EXACT_CAP = 20
_DEADLINE_STRIDE = 2048


@dataclass(frozen=True)
class ForceTrace:
    initial: tuple[int, ...]
    forces: tuple[tuple[int, int], ...]
    final: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "initial": list(self.initial),
            "forces": [list(f) for f in self.forces],
            "final": list(self.final),
        }

    @classmethod
    def from_json(cls, data: dict) -> "ForceTrace":
        return cls(
            tuple(data["initial"]),
            tuple((int(u), int(v)) for u, v in data["forces"]),
            tuple(data["final"]),
        )


@dataclass(frozen=True)
class ZfsResult:
    value: int
    witness: tuple[int, ...]
    trace: ForceTrace
    explored: int


@dataclass(frozen=True)
class TraceVerdict:
    ok: bool
    failed_step: int | None = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def _mask_of(g: Graph, s: Iterable[int]) -> int:
    mask = to_mask(s)
    if mask >> g.order:
        raise InputError(f"vertex set mentions ids outside 0..{g.order - 1}")
    return mask


def close_mask(adj: tuple[int, ...], black: int) -> int:
    """Fixed point of the colour-change rule, as a bitmask."""
    active = black
    while True:
        progress = False
        b = active
        while b:
            low = b & -b
            b ^= low
            white = adj[low.bit_length() - 1] & ~black
            if not white:
                active ^= low
            elif not white & (white - 1):
                black |= white
                active ^= low
                active |= white
                progress = True
        if not progress:
            return black


def closure(g: Graph, s: Iterable[int]) -> ForceTrace:
    """Apply the colour-change rule to a fixed point and record the forces."""
    black = _mask_of(g, s)
    initial = tuple(iter_bits(black))
    adj = g.adj
    white_count = [(adj[v] & ~black).bit_count() for v in range(g.order)]
    ready = [v for v in initial if white_count[v] == 1]
    heapq.heapify(ready)
    forces = []
    while ready:
        u = heapq.heappop(ready)
        if white_count[u] != 1:
            continue
        w = (adj[u] & ~black).bit_length() - 1
        forces.append((u, w))
        black |= 1 << w
        for x in iter_bits(adj[w]):
            white_count[x] -= 1
            if white_count[x] == 1 and black >> x & 1:
                heapq.heappush(ready, x)
        if white_count[w] == 1:
            heapq.heappush(ready, w)
    return ForceTrace(initial, tuple(forces), tuple(iter_bits(black)))


def derived_set(g: Graph, s: Iterable[int]) -> set[int]:
    return set(iter_bits(close_mask(g.adj, _mask_of(g, s))))


def is_zero_forcing_set(g: Graph, s: Iterable[int]) -> bool:
    return close_mask(g.adj, _mask_of(g, s)) == g.full_mask


def verify_trace(g: Graph, t: ForceTrace) -> TraceVerdict:
    """Replay ``t`` on ``g`` and check every force and the final set."""
    try:
        black = _mask_of(g, t.initial)
    except InputError as exc:
        return TraceVerdict(False, None, str(exc))
    for step, (u, v) in enumerate(t.forces):
        if not (0 <= u < g.order and 0 <= v < g.order):
            return TraceVerdict(False, step, f"force {u}->{v} names a missing vertex")
        if not black >> u & 1:
            return TraceVerdict(False, step, f"forcer {u} is white")
        if black >> v & 1:
            return TraceVerdict(False, step, f"{v} is already black")
        if g.adj[u] & ~black != 1 << v:
            return TraceVerdict(False, step, f"{v} is not the only white neighbour of {u}")
        black |= 1 << v
    if to_mask(t.final) != black:
        return TraceVerdict(False, len(t.forces), "final set does not match the replayed forces")
    return TraceVerdict(True)


# --------------------------------------------------------------------------
# exact search
# --------------------------------------------------------------------------

def _check_budget(g: Graph, cap: int | None) -> None:
    cap = DEFAULT_EXACT_CAP if cap is None else cap
    if g.order > cap:
        raise BudgetError(f"exact search on {g.order} vertices exceeds the cap of {cap}")


def _search(g: Graph, pool: list[int], required: int, start: int, deadline: float | None):
    """Ascending-cardinality lexicographic search over subsets of ``pool``."""
    adj, full = g.adj, g.full_mask
    bits = [1 << v for v in pool]
    explored = 0
    for s in range(start, len(bits) + 1):
        for combo in combinations(bits, s):
            explored += 1
            if deadline is not None and explored % _DEADLINE_STRIDE == 0 and time.monotonic() > deadline:
                raise BudgetError("wall-clock budget exhausted during exact search")
            black = required | sum(combo)
            if close_mask(adj, black) == full:
                witness = tuple(iter_bits(black))
                return ZfsResult(len(witness), witness, closure(g, witness), explored)
    return None


def _seed(g: Graph, pool_mask: int, required: int):
    """Split off isolated vertices and count components still needing a black vertex."""
    isolated = 0
    untouched = 0
    for block in connected_components(g):
        bmask = to_mask(block)
        if len(block) == 1:
            isolated |= bmask
        elif not bmask & required:
            if not bmask & pool_mask:
                return None
            untouched += 1
    if isolated & ~(pool_mask | required):
        return None
    return isolated, untouched


def zero_forcing_number_exact(g: Graph, cap: int | None = None, deadline: float | None = None) -> ZfsResult:
    """Exact ``Z(G)`` with the lexicographically least minimum witness."""
    if g.order < 1:
        raise InputError("the zero forcing number needs at least one vertex")
    _check_budget(g, cap)
    isolated, untouched = _seed(g, g.full_mask, 0)
    pool = [v for v in range(g.order) if not isolated >> v & 1]
    result = _search(g, pool, isolated, untouched, deadline)
    assert result is not None  # V(G) always forces
    return result


def zero_forcing_number_restricted(
    g: Graph,
    pool: Iterable[int],
    cap: int | None = None,
    required: Iterable[int] = (),
    deadline: float | None = None,
) -> ZfsResult | None:
    """Minimum zero forcing set drawn from ``pool`` (plus ``required``), or ``None``."""
    _check_budget(g, cap)
    pool_mask = _mask_of(g, pool)
    req = _mask_of(g, required)
    if close_mask(g.adj, pool_mask | req) != g.full_mask:
        return None
    seed = _seed(g, pool_mask, req)
    if seed is None:
        return None
    isolated, untouched = seed
    req |= isolated
    free = [v for v in iter_bits(pool_mask & ~req)]
    return _search(g, free, req, untouched, deadline)


def minimum_zero_forcing_sets(g: Graph, size: int, cap: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every zero forcing set of exactly ``size`` vertices, lexicographically."""
    _check_budget(g, cap)
    adj, full = g.adj, g.full_mask
    for combo in combinations(range(g.order), size):
        if close_mask(adj, to_mask(combo)) == full:
            yield combo
