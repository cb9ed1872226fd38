"""Named graph families and labelled-tree enumeration."""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .errors import FormatError, InputError
from .graph import Atom, Graph, from_edge_list, join


def _labels(name: str, n: int):
    return tuple(Atom(name, i) for i in range(n))


def _check(name: str, n: int, minimum: int) -> None:
    if not isinstance(n, int) or n < minimum:
        raise InputError(f"{name} needs order >= {minimum}, got {n}")


def path(n: int) -> Graph:
    _check("path", n, 1)
    return from_edge_list(n, [(i, i + 1) for i in range(n - 1)], _labels("p", n))


def cycle(n: int) -> Graph:
    _check("cycle", n, 3)
    return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)], _labels("c", n))


def complete(n: int) -> Graph:
    _check("complete", n, 1)
    return from_edge_list(n, itertools.combinations(range(n), 2), _labels("k", n))


def empty(n: int) -> Graph:
    _check("empty", n, 1)
    return from_edge_list(n, [], _labels("e", n))


def star(n: int) -> Graph:
    """K_{1,n-1} on ``n`` vertices with centre 0."""
    _check("star", n, 2)
    return from_edge_list(n, [(0, i) for i in range(1, n)], _labels("s", n))


def single_edge(n: int) -> Graph:
    """``n`` vertices whose only edge joins ids ``n-3`` and ``n-1``.

    In 1-based terms the edge is ``u_{n-2} u_n``, the attachment graph of the
    near-miss set for edgeless coronas.
    """
    _check("single-edge", n, 3)
    return from_edge_list(n, [(n - 3, n - 1)], _labels("x", n))


def wheel(n: int) -> Graph:
    """Hub joined to a rim cycle of length ``n``; the hub is vertex 0."""
    _check("wheel", n, 3)
    return join(complete(1), cycle(n))


def fan(n: int) -> Graph:
    """Hub joined to a path on ``n`` vertices; the hub is vertex 0."""
    _check("fan", n, 2)
    return join(complete(1), path(n))


def tree_from_pruefer(code, n: int | None = None) -> Graph:
    """Decode a Prüfer sequence over ``0..n-1`` (``n = len(code) + 2``)."""
    code = list(code)
    if n is None:
        n = len(code) + 2
    if n < 2 or len(code) != n - 2:
        raise InputError(f"Prüfer code of length {len(code)} does not describe a tree on {n} vertices")
    for x in code:
        if not isinstance(x, int) or not 0 <= x < n:
            raise InputError(f"Prüfer entry {x!r} outside 0..{n - 1}")
    return from_edge_list(n, pruefer_edges(code, n), _labels("t", n))


def pruefer_edges(code, n: int) -> list[tuple[int, int]]:
    degree = [1] * n
    for x in code:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in code:
        leaf = heapq.heappop(leaves)
        edges.append((leaf, x))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((u, v))
    return edges


def pruefer_code(t: Graph) -> list[int]:
    """Inverse of :func:`tree_from_pruefer`."""
    n = t.order
    adj = [set(t.neighbors(v)) for v in range(n)]
    leaves = [v for v in range(n) if len(adj[v]) == 1]
    heapq.heapify(leaves)
    code = []
    for _ in range(n - 2):
        leaf = heapq.heappop(leaves)
        (parent,) = adj[leaf]
        code.append(parent)
        adj[parent].discard(leaf)
        adj[leaf].clear()
        if len(adj[parent]) == 1:
            heapq.heappush(leaves, parent)
    return code


def labeled_trees(n: int) -> Iterator[Graph]:
    """All ``n**(n-2)`` labelled trees on ``0..n-1`` in Prüfer-code order."""
    if n == 1:
        yield from_edge_list(1, [], _labels("t", 1))
        return
    for code in itertools.product(range(n), repeat=n - 2):
        yield tree_from_pruefer(code, n)


def _ahu_key(nbrs: list[list[int]]) -> str:
    """AHU encoding of a tree rooted at its centre (both orders tried if bicentral)."""
    n = len(nbrs)
    if n <= 2:
        return "()" * n
    deg = [len(a) for a in nbrs]
    kids: list[list[str]] = [[] for _ in range(n)]
    removed = [False] * n
    layer = [v for v in range(n) if deg[v] == 1]
    remaining = n
    while remaining > 2:
        nxt = []
        for leaf in layer:
            removed[leaf] = True
            enc = "(" + "".join(sorted(kids[leaf])) + ")"
            for p in nbrs[leaf]:
                if not removed[p]:
                    kids[p].append(enc)
                    deg[p] -= 1
                    if deg[p] == 1:
                        nxt.append(p)
        remaining -= len(layer)
        layer = nxt
    encs = ["(" + "".join(sorted(kids[c])) + ")" for c in layer]
    return encs[0] if len(encs) == 1 else min(encs[0] + encs[1], encs[1] + encs[0])


def tree_canonical_form(t: Graph) -> str:
    """Complete isomorphism invariant of a tree."""
    return _ahu_key([t.neighbors(v) for v in range(t.order)])


def pruefer_shape_key(code, n: int) -> str:
    """``tree_canonical_form(tree_from_pruefer(code))`` without building a Graph."""
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in pruefer_edges(code, n):
        nbrs[u].append(v)
        nbrs[v].append(u)
    return _ahu_key(nbrs)


def is_path_graph(g: Graph) -> bool:
    if g.order == 1:
        return True
    return g.is_connected() and g.size == g.order - 1 and max(g.degrees()) <= 2


def is_complete_graph(g: Graph) -> bool:
    return g.size == g.order * (g.order - 1) // 2


def is_edgeless(g: Graph) -> bool:
    return not any(g.adj)


def tree_shapes(n: int) -> list[Graph]:
    """One representative per isomorphism class of trees on ``n`` vertices.

    Each representative is the Prüfer decoding of the canonical class member's
    code, so it can be written back as a ``pruefer:`` family spec.
    """
    _check("tree", n, 1)
    if n <= 2:
        return [path(n) if n == 1 else tree_from_pruefer([], 2)]
    shapes = []
    for nt in nx.nonisomorphic_trees(n):
        edges = sorted(tuple(sorted(e)) for e in nt.edges())
        t = from_edge_list(n, edges)
        shapes.append(tree_from_pruefer(pruefer_code(t), n))
    shapes.sort(key=lambda t: pruefer_code(t))
    return shapes


# --------------------------------------------------------------------------
# "name:params" specs
# --------------------------------------------------------------------------

_BUILDERS = {
    "path": path,
    "cycle": cycle,
    "complete": complete,
    "empty": empty,
    "star": star,
    "wheel": wheel,
    "fan": fan,
    "single-edge": single_edge,
}
FAMILY_NAMES = tuple(_BUILDERS) + ("pruefer",)


@dataclass(frozen=True, order=True)
class FamilySpec:
    name: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.name not in FAMILY_NAMES:
            raise FormatError(f"unknown graph family {self.name!r}")
        if self.name != "pruefer" and len(self.params) != 1:
            raise FormatError(f"family {self.name!r} takes exactly one integer")

    def build(self) -> Graph:
        if self.name == "pruefer":
            return tree_from_pruefer(list(self.params))
        return _BUILDERS[self.name](self.params[0])

    @property
    def order(self) -> int:
        if self.name == "pruefer":
            return len(self.params) + 2
        return self.params[0] + (self.name in ("wheel", "fan"))

    def __str__(self) -> str:
        return f"{self.name}:{','.join(map(str, self.params))}"


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``"path:5"``, ``"wheel:4"``, ``"pruefer:0,0"`` (``"pruefer:"`` is K2)."""
    name, sep, rest = text.strip().partition(":")
    if not sep:
        raise FormatError(f"family spec {text!r} lacks ':'")
    name = {"pruefer-tree": "pruefer", "prufer": "pruefer"}.get(name, name)
    try:
        params = tuple(int(x) for x in rest.split(",")) if rest.strip() else ()
    except ValueError:
        raise FormatError(f"family spec {text!r} has a non-integer parameter") from None
    return FamilySpec(name, params)


def graph_from_spec(text: str) -> Graph:
    return parse_family_spec(text).build()
