"""Corona, iterated corona and lexicographic products.

Layouts are deterministic.  An iterated corona lists the base graph first and
then, depth by depth, one contiguous block per copy of ``H``; copies of one
depth are ordered by their address ``(i, j2, ..., jl)``.  A lexicographic
product stores ``(a, v)`` at id ``a * |H| + v`` so layers are contiguous.

Copy addresses follow the ``u^i_{j1 j2 ... jl}`` naming: ``i`` is the 1-based
base vertex, ``j1`` the 1-based position inside the copy and ``(j2..jl)``,
entries in ``1..n2+1``, the address of the root inside group ``i`` of the
previous level.  A vertex with index string ``s`` of length ``d`` has root
address ``(n2+1,) * (l-1-d) + s`` at level ``l``; in particular ``v_i`` is
``(n2+1, ..., n2+1)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Literal

from .errors import BudgetError, InputError
from .graph import CoronaNode, Graph, PairNode, connected_components, iter_bits, to_mask

DEFAULT_CONSTRUCTION_CAP = 4096


@dataclass(frozen=True)
class CoronaGraph:
    graph: Graph
    g: Graph
    h: Graph
    depth: int
    root: tuple[int | None, ...]
    depth_of: tuple[int, ...]
    base_index: tuple[int, ...]
    copies: dict = field(repr=False)

    @property
    def base_order(self) -> int:
        return self.g.order

    @property
    def attach_order(self) -> int:
        return self.h.order

    @property
    def order(self) -> int:
        return self.graph.order

    def addresses(self, level: int) -> list[tuple[int, ...]]:
        """Copy addresses at ``level`` in layout order."""
        return [addr for (lv, addr) in self.copies if lv == level]

    def copy_vertices(self) -> list[int]:
        """Every vertex that is not in the base graph."""
        return [v for v in range(self.order) if self.depth_of[v] > 0]

    def vertex_address(self, v: int) -> tuple[int, tuple[int, ...]]:
        """``(i, (j1, ..., jl))`` of vertex ``v``, all 1-based."""
        return self.base_index[v] + 1, self.graph.labels[v].path


def _padded(path: tuple[int, ...], length: int, filler: int) -> tuple[int, ...]:
    return (filler,) * (length - len(path)) + path


def iterated_corona(g: Graph, h: Graph, k: int, cap: int = DEFAULT_CONSTRUCTION_CAP) -> CoronaGraph:
    """``G ⊙^k H``; ``k = 0`` gives ``G`` itself."""
    n1, n2 = g.order, h.order
    if n1 < 1 or n2 < 1:
        raise InputError("corona factors must have at least one vertex")
    if k < 0:
        raise InputError(f"corona depth must be non-negative, got {k}")
    total = n1 * (n2 + 1) ** k
    if total > cap:
        raise BudgetError(f"G ⊙^{k} H has {total} vertices, above the construction cap {cap}")

    adj = list(g.adj)
    labels = [CoronaNode(g.label(i), ()) for i in range(n1)]
    root: list[int | None] = [None] * n1
    depth_of = [0] * n1
    base_index = list(range(n1))
    copies: dict = {}
    h_edges = h.adj
    filler = n2 + 1

    for level in range(1, k + 1):
        prev = len(adj)
        keyed = sorted(
            range(prev),
            key=lambda r: (base_index[r], _padded(labels[r].path, level - 1, filler)),
        )
        for r in keyed:
            start = len(adj)
            block = ((1 << n2) - 1) << start
            adj[r] |= block
            raddr = _padded(labels[r].path, level - 1, filler)
            for j in range(n2):
                adj.append((h_edges[j] << start) | (1 << r))
                labels.append(CoronaNode(labels[r].base, (j + 1,) + raddr))
                root.append(r)
                depth_of.append(level)
                base_index.append(base_index[r])
            copies[(level, (base_index[r] + 1,) + raddr)] = tuple(range(start, start + n2))

    graph = Graph(len(adj), tuple(adj), tuple(labels))
    return CoronaGraph(graph, g, h, k, tuple(root), tuple(depth_of), tuple(base_index), copies)


def corona(g: Graph, h: Graph, cap: int = DEFAULT_CONSTRUCTION_CAP) -> CoronaGraph:
    return iterated_corona(g, h, 1, cap)


def corona_copy(cg: CoronaGraph, level: int, address: Iterable[int]) -> tuple[int, ...]:
    """Ids of the copy ``V_i`` (``level`` 1) or ``V^i_{j2..jl}``, in within-copy order."""
    key = (level, tuple(address))
    try:
        return cg.copies[key]
    except KeyError:
        raise InputError(f"no copy of H at depth {level} with address {tuple(address)}") from None


def copy_root(cg: CoronaGraph, level: int, address: Iterable[int]) -> int:
    return cg.root[corona_copy(cg, level, address)[0]]


# --------------------------------------------------------------------------
# lexicographic product
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class LexGraph:
    graph: Graph
    g: Graph
    h: Graph
    components: tuple[tuple[int, ...], ...]

    @property
    def component_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.components)

    def vertex(self, a: int, v: int) -> int:
        return a * self.h.order + v

    def pair(self, x: int) -> tuple[int, int]:
        return divmod(x, self.h.order)


def lexicographic(g: Graph, h: Graph, cap: int = DEFAULT_CONSTRUCTION_CAP) -> LexGraph:
    """``G ∘ H``: ``(a,v) ~ (b,w)`` iff ``ab ∈ E(G)``, or ``a = b`` and ``vw ∈ E(H)``."""
    n, m = g.order, h.order
    if n < 1 or m < 1:
        raise InputError("lexicographic factors must have at least one vertex")
    if n * m > cap:
        raise BudgetError(f"G ∘ H has {n * m} vertices, above the construction cap {cap}")
    comps = tuple(tuple(c) for c in connected_components(h))
    comp_of = {v: i for i, c in enumerate(comps) for v in c}
    layer = (1 << m) - 1
    adj = []
    labels = []
    for a in range(n):
        outer = 0
        for b in iter_bits(g.adj[a]):
            outer |= layer << (b * m)
        for v in range(m):
            adj.append(outer | (h.adj[v] << (a * m)))
            labels.append(PairNode(g.label(a), h.label(v), comp_of[v] + 1))
    return LexGraph(Graph(n * m, tuple(adj), tuple(labels)), g, h, comps)


def lex_layer(lg: LexGraph, a: int) -> tuple[int, ...]:
    """Vertex ids of the layer ``H(a)``."""
    if not 0 <= a < lg.g.order:
        raise InputError(f"{a} is not a vertex of G")
    m = lg.h.order
    return tuple(range(a * m, (a + 1) * m))


def lex_column(lg: LexGraph, v: int) -> tuple[int, ...]:
    """Vertex ids of the layer ``G(v)``."""
    if not 0 <= v < lg.h.order:
        raise InputError(f"{v} is not a vertex of H")
    return tuple(lg.vertex(a, v) for a in range(lg.g.order))


def lex_component_layer(lg: LexGraph, a: int, i: int) -> tuple[int, ...]:
    """``H_i(a)`` for the 0-based component index ``i`` of ``H``."""
    if not 0 <= a < lg.g.order:
        raise InputError(f"{a} is not a vertex of G")
    if not 0 <= i < len(lg.components):
        raise InputError(f"H has no component {i}")
    return tuple(lg.vertex(a, v) for v in lg.components[i])


def project(lg: LexGraph, s: Iterable[int], side: Literal["G", "H"]) -> set[int]:
    """``P_G(S)`` or ``P_H(S)``."""
    if side not in ("G", "H"):
        raise InputError(f"projection side must be 'G' or 'H', got {side!r}")
    coord = 0 if side == "G" else 1
    return {lg.pair(x)[coord] for x in s}


def layers_related(lg: LexGraph, a: int, b: int) -> str:
    """``"all"`` if every ``H(a) x H(b)`` pair is adjacent, ``"none"`` if none is, else ``"mixed"``."""
    target = to_mask(lex_layer(lg, b))
    hits = [lg.graph.adj[x] & target for x in lex_layer(lg, a)]
    if all(hit == target for hit in hits):
        return "all"
    if not any(hits):
        return "none"
    return "mixed"
