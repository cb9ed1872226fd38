"""Explicit zero forcing sets built the way the constructive proofs build them.

Every builder replays its set through the closure before returning, so the
result either certifies an upper bound or carries a diagnostic explaining
which vertices stayed white.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..errors import DomainError, InputError
from ..families import complete, is_edgeless
from ..forcing import close_mask, is_zero_forcing_set, zero_forcing_number_exact, zero_forcing_number_restricted
from ..graph import Graph, connected_components, iter_bits, join, to_mask
from ..products import CoronaGraph, LexGraph


@dataclass(frozen=True)
class Construction:
    vertices: tuple[int, ...]
    covers: bool
    diagnostic: str = ""

    @property
    def size(self) -> int:
        return len(self.vertices)


def checked(g: Graph, vertices: Iterable[int], what: str) -> Construction:
    s = tuple(sorted(set(vertices)))
    final = close_mask(g.adj, to_mask(s))
    if final == g.full_mask:
        return Construction(s, True)
    white = [v for v in range(g.order) if not final >> v & 1]
    return Construction(s, False, f"{what}: {len(white)} vertices stay white, first {white[:8]}")


def _require_basis(graph: Graph, basis, name: str) -> tuple[int, ...]:
    basis = tuple(sorted(set(basis)))
    if not is_zero_forcing_set(graph, basis):
        raise InputError(f"{name} {list(basis)} is not a zero forcing set")
    return basis


def construct_corona_zfs(cg: CoronaGraph, g_basis, h_basis) -> Construction:
    """``B' ∪ B_1 ∪ ... ∪ B_k``: a basis of G plus a basis of H in every copy."""
    if cg.depth < 1:
        raise DomainError("the corona construction needs depth >= 1")
    g_basis = _require_basis(cg.g, g_basis, "base basis")
    h_basis = _require_basis(cg.h, h_basis, "attachment basis")
    chosen = list(g_basis)
    for ids in cg.copies.values():
        chosen.extend(ids[j] for j in h_basis)
    return checked(cg.graph, chosen, "corona basis construction")


def construct_empty_corona_zfs(cg: CoronaGraph) -> Construction:
    """All copy vertices except the last one of every copy (edgeless ``H``)."""
    if cg.depth != 1 or not is_edgeless(cg.h) or cg.h.order < 2:
        raise DomainError("needs G ⊙ H at depth 1 with H edgeless on at least two vertices")
    chosen = [v for ids in cg.copies.values() for v in ids[:-1]]
    return checked(cg.graph, chosen, "edgeless-attachment construction")


def construct_single_edge_near_miss(cg: CoronaGraph) -> Construction:
    """The set of size ``n1(n2-1) - 1`` used to show a single edge in ``H`` lowers ``Z``.

    Copies ``1..n1-1`` keep ``u_1..u_{n2-1}``; the last copy keeps ``u_1..u_{n2-2}``.
    """
    n1, n2 = cg.base_order, cg.attach_order
    if cg.depth != 1 or n2 < 3 or not cg.h.has_edge(n2 - 3, n2 - 1) or cg.h.size != 1:
        raise DomainError("needs depth 1 and H whose only edge is u_{n2-2} u_{n2}")
    chosen = []
    for i, ids in enumerate(cg.copies.values()):
        keep = n2 - 1 if i < n1 - 1 else n2 - 2
        chosen.extend(ids[:keep])
    return checked(cg.graph, chosen, "single-edge near-miss construction")


def join_apex_basis(h: Graph, cap: int | None = None) -> tuple[int, ...]:
    """Minimum zero forcing set of ``K1 + H`` (apex is vertex 0).

    Contains the apex when ``H`` has no isolated vertex and avoids it otherwise,
    mirroring the case split of the covering construction.  When no minimum
    set of the preferred kind exists, the smallest such set is returned.
    """
    jg = join(complete(1), h)
    has_isolated = any(len(c) == 1 for c in connected_components(h))
    if has_isolated:
        res = zero_forcing_number_restricted(jg, range(1, jg.order), cap)
    else:
        res = zero_forcing_number_restricted(jg, range(1, jg.order), cap, required=[0])
    if res is None:
        return zero_forcing_number_exact(jg, cap).witness
    return res.witness


def construct_join_cover_zfs(cg: CoronaGraph, a_basis=None, cap: int | None = None) -> Construction:
    """Union over the deepest copies of a basis of ``K1 + H_i`` (apex mapped to the copy's root).

    At depth 1 the roots are the base vertices ``v_i``; deeper, ``G ⊙^k H`` is
    treated as ``(G ⊙^(k-1) H) ⊙ H`` and every vertex of the previous level
    plays the apex for its own copy.
    """
    if cg.depth < 1:
        raise DomainError("the join-cover construction needs depth >= 1")
    jg = join(complete(1), cg.h)
    a_basis = join_apex_basis(cg.h, cap) if a_basis is None else _require_basis(jg, a_basis, "K1+H basis")
    chosen = []
    for (level, _), ids in cg.copies.items():
        if level != cg.depth:
            continue
        r = cg.root[ids[0]]
        for x in a_basis:
            chosen.append(r if x == 0 else ids[x - 1])
    return checked(cg.graph, chosen, "join-cover construction")


def construct_lex_upper_zfs(lg: LexGraph) -> Construction:
    """Everything except ``(u_1, v_2^i)`` for each component ``H_i``."""
    if any(len(c) < 2 for c in lg.components):
        raise DomainError("every component of H needs at least two vertices")
    skip = {lg.vertex(0, c[1]) for c in lg.components}
    return checked(lg.graph, (x for x in range(lg.graph.order) if x not in skip), "layer-complement construction")


def construct_lex_singletons_zfs(lg: LexGraph) -> Construction:
    """Everything except ``(u_1, x_k)`` and ``(u_2, x_k)`` for adjacent ``u_1 ~ u_2``, ``H`` edgeless."""
    if not is_edgeless(lg.h) or lg.h.order < 2:
        raise DomainError("H must consist of at least two isolated vertices")
    if not lg.g.adj[0]:
        raise DomainError("G needs an edge at vertex 0")
    u2 = next(iter_bits(lg.g.adj[0]))
    last = lg.h.order - 1
    skip = {lg.vertex(0, last), lg.vertex(u2, last)}
    return checked(lg.graph, (x for x in range(lg.graph.order) if x not in skip), "singleton-layer construction")


def construct_lex_complete_upper_zfs(lg: LexGraph) -> Construction:
    """``G ∘ K_n`` minus ``(u, v_2)`` and ``(w, v_2)`` for the first non-adjacent pair ``u, w``."""
    g = lg.g
    if lg.h.order < 2 or lg.h.size != lg.h.order * (lg.h.order - 1) // 2:
        raise DomainError("H must be complete on at least two vertices")
    pair = next(((u, w) for u in range(g.order) for w in range(u + 1, g.order) if not g.has_edge(u, w)), None)
    if pair is None:
        raise DomainError("G must not be complete")
    skip = {lg.vertex(pair[0], 1), lg.vertex(pair[1], 1)}
    return checked(lg.graph, (x for x in range(lg.graph.order) if x not in skip), "complete-layer construction")


def construct_join_basis_in_G(g: Graph, cap: int | None = None) -> Construction:
    """Minimum zero forcing set of ``G + K1`` that avoids the apex (apex id ``|G|``).

    ``covers`` is False, with a diagnostic, when every apex-free forcing set
    is larger than ``Z(G + K1)``.
    """
    if g.order < 1 or not g.is_connected():
        raise DomainError("G must be connected and non-empty")
    jg = join(g, complete(1))
    z = zero_forcing_number_exact(jg, cap).value
    res = zero_forcing_number_restricted(jg, range(g.order), cap)
    if res is None:
        return Construction((), False, "no apex-free zero forcing set exists")
    if res.value != z:
        return Construction(res.witness, False, f"apex-free minimum {res.value} exceeds Z(G+K1) = {z}")
    return Construction(res.witness, True)


def wheel_triangle(n: int) -> tuple[int, ...]:
    """Hub and two consecutive rim vertices of the wheel built by ``families.wheel``."""
    return (0, 1, 2)


def fan_end_pair(n: int) -> tuple[int, ...]:
    """An end vertex of the fan's path and its path neighbour."""
    return (1, 2)

