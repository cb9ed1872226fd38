import random

import networkx as nx
import pytest

from zeroforce.errors import BudgetError, DomainError, InputError
from zeroforce.families import complete, cycle, path, star, tree_from_pruefer
from zeroforce.graph import from_edge_list
from zeroforce.trees import (
    compute_tree_metrics,
    distance_matrix,
    metric_dimension_bruteforce,
    metric_dimension_tree,
    resolving_set_bruteforce,
    zt_hypothesis,
)

from . import oracles


def spider(legs):
    edges, nxt = [], 1
    for length in legs:
        prev = 0
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
    return from_edge_list(nxt, edges)


def test_star_metrics():
    m = compute_tree_metrics(star(4))
    assert m.major == (0,) and m.ter == {0: 3}
    assert (m.sigma, m.ex) == (3, 1)
    assert metric_dimension_tree(star(4)) == 2
    assert zt_hypothesis(star(4))


def test_path_metrics():
    m = compute_tree_metrics(path(5))
    assert m.major == () and m.sigma == 0
    # with no major vertex every degree-two vertex is vacuously interior
    assert m.interior_deg2 == (1, 2, 3)
    with pytest.raises(DomainError):
        metric_dimension_tree(path(5))


def test_double_star():
    t = from_edge_list(6, [(0, 1), (0, 2), (0, 3), (1, 4), (1, 5)])
    m = compute_tree_metrics(t)
    assert m.ter == {0: 2, 1: 2}
    assert metric_dimension_tree(t) == 2
    assert zt_hypothesis(t)


def test_spider_with_long_legs():
    t = spider([2, 2, 2])
    m = compute_tree_metrics(t)
    assert m.ter == {0: 3}
    assert set(m.exterior_deg2) == {1, 3, 5}
    assert m.interior_deg2 == ()
    assert metric_dimension_tree(t) == 2


def test_interior_vertex_breaks_hypothesis():
    # two K1,3 centres joined through a degree-two vertex
    t = from_edge_list(7, [(0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)])
    m = compute_tree_metrics(t)
    assert m.interior_deg2 == (3,)
    assert not zt_hypothesis(t)


def test_bruteforce_examples():
    assert metric_dimension_bruteforce(path(5)) == 1
    assert resolving_set_bruteforce(path(5)) == (0,)
    assert metric_dimension_bruteforce(complete(4)) == 3
    assert metric_dimension_bruteforce(star(4)) == 2
    assert metric_dimension_bruteforce(cycle(6)) == 2
    with pytest.raises(BudgetError):
        metric_dimension_bruteforce(path(11))
    with pytest.raises(InputError):
        metric_dimension_bruteforce(from_edge_list(3, [(0, 1)]))


def test_non_tree_rejected():
    with pytest.raises(InputError):
        compute_tree_metrics(cycle(4))


def test_distance_matrix():
    d = distance_matrix(path(4))
    assert d[0] == [0, 1, 2, 3]
    assert distance_matrix(from_edge_list(2, []))[0][1] == -1


def test_formula_against_networkx_bruteforce():
    rng = random.Random(5)
    for _ in range(60):
        n = rng.randint(4, 9)
        t = tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)])
        ref = oracles.brute_metric_dimension(nx.Graph(t.edges()))
        assert metric_dimension_bruteforce(t) == ref
        if not nx.is_isomorphic(nx.Graph(t.edges()), nx.path_graph(n)):
            assert metric_dimension_tree(t) == ref


def test_metrics_relabel_invariant():
    rng = random.Random(9)
    for _ in range(40):
        n = rng.randint(4, 10)
        t = tree_from_pruefer([rng.randrange(n) for _ in range(n - 2)])
        perm = list(range(n))
        rng.shuffle(perm)
        a, b = compute_tree_metrics(t), compute_tree_metrics(t.relabel(perm))
        assert (a.sigma, a.ex, len(a.interior_deg2)) == (b.sigma, b.ex, len(b.interior_deg2))
        assert zt_hypothesis(t) == zt_hypothesis(t.relabel(perm))


@pytest.mark.parametrize("n", range(3, 8))
def test_degree_two_vertices_are_partitioned(n):
    from zeroforce.families import labeled_trees

    for t in labeled_trees(n):
        m = compute_tree_metrics(t)
        deg2 = {v for v in range(n) if t.degree(v) == 2}
        ext, inner = set(m.exterior_deg2), set(m.interior_deg2)
        assert not ext & inner and ext | inner == deg2
        assert m.sigma == sum(m.ter.values()) and m.ex <= len(m.major)
