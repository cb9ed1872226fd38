"""Tree parameters (major/terminal structure) and metric dimension."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetError, DomainError, InputError
from .families import is_path_graph
from .graph import Graph, iter_bits

DEFAULT_DIM_CAP = 10


@dataclass(frozen=True)
class TreeMetrics:
    major: tuple[int, ...]
    terminals: dict
    ter: dict
    sigma: int
    ex: int
    exterior_deg2: tuple[int, ...]
    interior_deg2: tuple[int, ...]


def _require_tree(t: Graph) -> None:
    if t.order < 1 or t.size != t.order - 1 or not t.is_connected():
        raise InputError(f"expected a tree, got a graph with {t.order} vertices and {t.size} edges")


def distance_matrix(g: Graph) -> list[list[int]]:
    """All-pairs BFS distances; ``-1`` marks unreachable pairs."""
    n = g.order
    out = []
    for s in range(n):
        row = [-1] * n
        row[s] = 0
        seen = frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~seen
            seen |= frontier
            for v in iter_bits(frontier):
                row[v] = d
        out.append(row)
    return out


def _tree_path(t: Graph, dist, u: int, v: int) -> list[int]:
    """Vertices on the unique u-v path, endpoints included."""
    path = [u]
    while path[-1] != v:
        x = path[-1]
        path.append(next(y for y in iter_bits(t.adj[x]) if dist[y][v] == dist[x][v] - 1))
    return path


def compute_tree_metrics(t: Graph) -> TreeMetrics:
    _require_tree(t)
    deg = t.degrees()
    dist = distance_matrix(t)
    major = [v for v in range(t.order) if deg[v] >= 3]
    leaves = [v for v in range(t.order) if deg[v] == 1]

    terminals = {v: [] for v in major}
    for u in leaves:
        for v in major:
            if all(dist[u][v] < dist[u][w] for w in major if w != v):
                terminals[v].append(u)
                break
    ter = {v: len(terminals[v]) for v in major}

    leg_vertices = set()
    for v, us in terminals.items():
        for u in us:
            leg_vertices.update(_tree_path(t, dist, u, v))
    all_terminals = [u for us in terminals.values() for u in us]
    majors = set(major)
    exterior, interior = [], []
    for w in range(t.order):
        if deg[w] != 2:
            continue
        if w in leg_vertices:
            exterior.append(w)
        if all(majors.intersection(_tree_path(t, dist, w, u)) for u in all_terminals):
            interior.append(w)

    return TreeMetrics(
        major=tuple(major),
        terminals={v: tuple(us) for v, us in terminals.items()},
        ter=ter,
        sigma=sum(ter.values()),
        ex=sum(1 for v in major if ter[v] > 0),
        exterior_deg2=tuple(exterior),
        interior_deg2=tuple(interior),
    )


def metric_dimension_tree(t: Graph) -> int:
    """``sigma(T) - ex(T)``; refuses paths, whose dimension is 1."""
    _require_tree(t)
    if is_path_graph(t):
        raise DomainError("the terminal-degree formula applies to trees that are not paths")
    m = compute_tree_metrics(t)
    return m.sigma - m.ex


def resolving_set_bruteforce(g: Graph, cap: int = DEFAULT_DIM_CAP) -> tuple[int, ...]:
    """Lexicographically least minimum resolving set of a connected graph."""
    if g.order > cap:
        raise BudgetError(f"metric dimension search on {g.order} vertices exceeds the cap of {cap}")
    if not g.is_connected():
        raise InputError("metric dimension needs a connected graph")
    dist = distance_matrix(g)
    n = g.order
    for s in range(n + 1):
        for w in combinations(range(n), s):
            if len({tuple(dist[x][v] for x in w) for v in range(n)}) == n:
                return w
    raise AssertionError("V(G) always resolves")


def metric_dimension_bruteforce(g: Graph, cap: int = DEFAULT_DIM_CAP) -> int:
    return len(resolving_set_bruteforce(g, cap))


def zt_hypothesis(t: Graph) -> bool:
    """No interior degree-two vertex and every major vertex has terminal degree >= 2."""
    m = compute_tree_metrics(t)
    return not m.interior_deg2 and all(k >= 2 for k in m.ter.values())
