"""Immutable simple graphs with bitset adjacency and provenance labels.

Vertices are the dense ids ``0..n-1``.  The neighbourhood of vertex ``v`` is a
Python ``int`` whose bit ``u`` is set iff ``u ~ v``; every algorithm in the
package works on these masks directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence, Union

from .errors import FormatError, InputError, LoopError

GRAPH6_MAX_ORDER = 62


# --------------------------------------------------------------------------
# provenance labels
# --------------------------------------------------------------------------

@dataclass(frozen=True)
class Atom:
    family: str
    index: int

    def __str__(self) -> str:
        return f"{self.family}{self.index}"


@dataclass(frozen=True)
class CoronaNode:
    """Vertex of an iterated corona.

    ``path`` holds the 1-based indices ``j1..jl`` of ``u^i_{j1...jl}``; it is
    empty for vertices of the base graph, and ``len(path)`` is the corona depth
    at which the vertex appeared.  ``base`` is the label of the base vertex
    ``v_i`` the vertex hangs from.
    """

    base: "VertexLabel"
    path: tuple[int, ...] = ()

    @property
    def depth(self) -> int:
        return len(self.path)

    def __str__(self) -> str:
        if not self.path:
            return f"<{self.base}>"
        return f"<{self.base}>u_{'.'.join(map(str, self.path))}"


@dataclass(frozen=True)
class PairNode:
    """Vertex ``(a, v)`` of a lexicographic product; ``component`` is 1-based."""

    g: "VertexLabel"
    h: "VertexLabel"
    component: int

    def __str__(self) -> str:
        return f"({self.g},{self.h})"


@dataclass(frozen=True)
class Tagged:
    """Origin side of a vertex in a join or disjoint union."""

    side: str
    inner: "VertexLabel"

    def __str__(self) -> str:
        return f"{self.side}:{self.inner}"


VertexLabel = Union[Atom, CoronaNode, PairNode, Tagged]


# --------------------------------------------------------------------------
# graph
# --------------------------------------------------------------------------

def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def to_mask(vertices: Iterable[int]) -> int:
    mask = 0
    for v in vertices:
        mask |= 1 << v
    return mask


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph.

    Equality and hashing look at the structure only (order and adjacency);
    two graphs that differ only in their labels compare equal.
    """

    order: int
    adj: tuple[int, ...]
    labels: tuple[VertexLabel, ...] | None = field(default=None, compare=False)

    def __post_init__(self):
        n = self.order
        if n < 0 or len(self.adj) != n:
            raise InputError(f"adjacency has {len(self.adj)} rows for order {n}")
        full = (1 << n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise InputError(f"vertex {v} has a neighbour outside 0..{n - 1}")
            if row >> v & 1:
                raise LoopError(f"loop at vertex {v}")
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise InputError(f"adjacency not symmetric at ({v}, {u})")
        if self.labels is not None:
            if len(self.labels) != n:
                raise InputError(f"{len(self.labels)} labels for {n} vertices")
            if len(set(self.labels)) != n:
                raise InputError("vertex labels are not pairwise distinct")

    # -- basic queries ----------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def __len__(self) -> int:
        return self.order

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    @property
    def size(self) -> int:
        return sum(self.degrees()) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        return [(u, v) for u in range(self.order) for v in iter_bits(self.adj[u] >> (u + 1) << (u + 1))]

    def label(self, v: int) -> VertexLabel:
        if self.labels is None:
            return Atom("v", v)
        return self.labels[v]

    def with_labels(self, labels: Sequence[VertexLabel] | None) -> "Graph":
        return Graph(self.order, self.adj, None if labels is None else tuple(labels))

    def induced(self, vertices: Iterable[int]) -> "Graph":
        """Induced subgraph, renumbered in increasing id order."""
        keep = sorted(set(vertices))
        index = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            adj.append(to_mask(index[u] for u in iter_bits(self.adj[v]) if u in index))
        labels = None if self.labels is None else tuple(self.labels[v] for v in keep)
        return Graph(len(keep), tuple(adj), labels)

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        n = self.order
        if sorted(perm) != list(range(n)):
            raise InputError("relabelling is not a permutation")
        adj = [0] * n
        for v in range(n):
            adj[perm[v]] = to_mask(perm[u] for u in iter_bits(self.adj[v]))
        labels = None
        if self.labels is not None:
            labels = [None] * n
            for v in range(n):
                labels[perm[v]] = self.labels[v]
        return Graph(n, tuple(adj), None if labels is None else tuple(labels))

    def is_connected(self) -> bool:
        return len(connected_components(self)) <= 1

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, size={self.size})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
    """Build a graph on ``n`` vertices; duplicate edges collapse."""
    if n < 0:
        raise InputError(f"negative order {n}")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise InputError(f"edge ({u}, {v}) out of range for order {n}")
        if u == v:
            raise LoopError(f"loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if labels is None:
        labels = tuple(Atom("v", i) for i in range(n))
    return Graph(n, tuple(adj), tuple(labels))


def connected_components(g: Graph) -> list[list[int]]:
    """Maximal connected vertex sets, ordered by smallest member."""
    seen = 0
    blocks = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        block = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~block
            block |= frontier
        seen |= block
        blocks.append(list(iter_bits(block)))
    return blocks


def _tagged(g: Graph, side: str) -> list[VertexLabel]:
    return [Tagged(side, g.label(v)) for v in range(g.order)]


def disjoint_union(g: Graph, h: Graph) -> Graph:
    """Vertices of ``g`` keep their ids; those of ``h`` are shifted by ``|g|``."""
    shift = g.order
    adj = list(g.adj) + [row << shift for row in h.adj]
    return Graph(g.order + h.order, tuple(adj), tuple(_tagged(g, "L") + _tagged(h, "R")))


def join(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between the two sides."""
    shift = g.order
    g_all = g.full_mask
    h_all = h.full_mask << shift
    adj = [row | h_all for row in g.adj] + [(row << shift) | g_all for row in h.adj]
    return Graph(g.order + h.order, tuple(adj), tuple(_tagged(g, "L") + _tagged(h, "R")))


# --------------------------------------------------------------------------
# text formats
# --------------------------------------------------------------------------

def emit_graph6(g: Graph) -> str:
    """graph6 encoding (one-byte order form, so at most 62 vertices)."""
    n = g.order
    if n > GRAPH6_MAX_ORDER:
        raise InputError(f"graph6 output supports at most {GRAPH6_MAX_ORDER} vertices, got {n}")
    bits = [g.adj[j] >> i & 1 for j in range(1, n) for i in range(j)]
    bits += [0] * (-len(bits) % 6)
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode a graph6 line (an optional ``>>graph6<<`` header is accepted)."""
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise FormatError("empty graph6 string")
    codes = [ord(c) - 63 for c in line]
    if any(not 0 <= c <= 63 for c in codes):
        raise FormatError(f"graph6 string {line!r} contains bytes outside 63..126")
    n = codes[0]
    if n == 63:
        raise FormatError("graph6 orders above 62 are not supported")
    npairs = n * (n - 1) // 2
    nbytes = -(-npairs // 6)
    if len(codes) - 1 != nbytes:
        raise FormatError(f"graph6 body has {len(codes) - 1} bytes, expected {nbytes} for order {n}")
    bits = [c >> (5 - k) & 1 for c in codes[1:] for k in range(6)]
    if any(bits[npairs:]):
        raise FormatError("graph6 padding bits are not zero")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos]:
                edges.append((i, j))
            pos += 1
    return from_edge_list(n, edges)


def emit_edge_list(g: Graph) -> str:
    """Edge-list text: a header ``n m`` then one ``u v`` line per edge."""
    edges = g.edges()
    lines = [f"{g.order} {len(edges)}"] + [f"{u} {v}" for u, v in edges]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    if not rows:
        raise FormatError("edge list is empty")
    try:
        header = [int(x) for x in rows[0]]
        body = [tuple(int(x) for x in row) for row in rows[1:]]
    except ValueError as exc:
        raise FormatError(f"non-integer token in edge list: {exc}") from None
    if len(header) != 2:
        raise FormatError("edge list header must be 'n m'")
    n, m = header
    if len(body) != m or any(len(row) != 2 for row in body):
        raise FormatError(f"edge list header announces {m} edges, found {len(body)} well-formed lines")
    return from_edge_list(n, body)


def emit_label_table(g: Graph) -> str:
    """Sidecar table, one ``id<TAB>label`` line per vertex."""
    return "".join(f"{v}\t{g.label(v)}\n" for v in range(g.order))
