"""Structural properties asserted about minimum forcing sets of products."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..forcing import is_zero_forcing_set
from ..graph import Graph, connected_components
from ..products import CoronaGraph, LexGraph, lex_component_layer, lex_layer, project


def copy_hits(cg: CoronaGraph, witness) -> dict:
    """For each copy at the deepest level: does the witness meet it?"""
    s = set(witness)
    return {addr: bool(s.intersection(ids)) for (lv, addr), ids in cg.copies.items() if lv == cg.depth}


def copy_restrictions_force(cg: CoronaGraph, witness) -> dict:
    """For each deepest copy: is ``S ∩ V_i`` a zero forcing set of ``H`` on its own?"""
    s = set(witness)
    out = {}
    for (lv, addr), ids in cg.copies.items():
        if lv == cg.depth:
            local = [j for j, x in enumerate(ids) if x in s]
            out[addr] = is_zero_forcing_set(cg.h, local)
    return out


@dataclass
class LexWitnessReport:
    """Layer and projection checks for one forcing set of ``G ∘ H``."""

    nonempty: list = field(default_factory=list)       # (a, i, Z_i(a) != ∅)
    large_enough: list = field(default_factory=list)   # (a, i, |Z_i(a)| >= Z(H_i))
    layer_forces: list = field(default_factory=list)   # (a, Z(a) forces H(a))
    layer_counts: list = field(default_factory=list)   # alpha(a)
    full_layer: bool = False
    projections: list = field(default_factory=list)    # (i, P_G(Z_i) == V(G))

    def failures(self) -> list[str]:
        out = [f"Z_{i + 1}(a{a}) empty" for a, i, ok in self.nonempty if not ok]
        out += [f"|Z_{i + 1}(a{a})| below Z(H_{i + 1})" for a, i, ok in self.large_enough if not ok]
        out += [f"Z(a{a}) does not force H(a{a})" for a, ok in self.layer_forces if not ok]
        if not self.full_layer:
            out.append("no layer entirely in the set")
        out += [f"P_G(Z_{i + 1}) != V(G)" for i, ok in self.projections if not ok]
        return out


def lex_witness_report(lg: LexGraph, witness, component_z: list[int]) -> LexWitnessReport:
    s = set(witness)
    rep = LexWitnessReport()
    m = lg.h.order
    for a in range(lg.g.order):
        layer = [x for x in lex_layer(lg, a) if x in s]
        rep.layer_counts.append(len(layer))
        for i, zi in enumerate(component_z):
            part = s.intersection(lex_component_layer(lg, a, i))
            rep.nonempty.append((a, i, bool(part)))
            rep.large_enough.append((a, i, len(part) >= zi))
        rep.layer_forces.append((a, is_zero_forcing_set(lg.h, [x - a * m for x in layer])))
    rep.full_layer = any(c == m for c in rep.layer_counts)
    for i in range(len(lg.components)):
        zi = [x for a in range(lg.g.order) for x in lex_component_layer(lg, a, i) if x in s]
        rep.projections.append((i, project(lg, zi, "G") == set(range(lg.g.order))))
    return rep


def component_zero_forcing_numbers(h: Graph, solve) -> list[int]:
    """``Z(H_i)`` for every component, using the supplied solver."""
    return [solve(h.induced(c)).value for c in connected_components(h)]
