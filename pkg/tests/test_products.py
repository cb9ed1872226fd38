import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeroforce.errors import BudgetError, InputError
from zeroforce.families import complete, cycle, empty, path, star, wheel
from zeroforce.forcing import zero_forcing_number_exact
from zeroforce.graph import from_edge_list
from zeroforce.products import (
    copy_root,
    corona,
    corona_copy,
    iterated_corona,
    layers_related,
    lex_column,
    lex_component_layer,
    lex_layer,
    lexicographic,
    project,
)

from . import oracles
from .conftest import graphs


def test_corona_example():
    cg = corona(path(2), path(2))
    assert (cg.order, cg.graph.size) == (6, 7)
    assert corona_copy(cg, 1, (1,)) == (2, 3)
    assert corona_copy(cg, 1, (2,)) == (4, 5)
    assert copy_root(cg, 1, (2,)) == 1
    assert cg.copy_vertices() == [2, 3, 4, 5]
    with pytest.raises(InputError):
        corona_copy(cg, 1, (3,))


def test_corona_of_k1_and_cycle_is_wheel():
    for n in range(3, 8):
        assert corona(complete(1), cycle(n)).graph == wheel(n)


def test_corona_depth_zero_is_base():
    g = cycle(5)
    assert iterated_corona(g, path(2), 0).graph == g


def test_corona_errors():
    with pytest.raises(InputError):
        iterated_corona(path(2), path(2), -1)
    with pytest.raises(BudgetError):
        iterated_corona(path(4), path(3), 6)


def test_iterated_layout_is_prefix_consistent():
    g, h = path(3), cycle(3)
    deep = iterated_corona(g, h, 3)
    for k in range(3):
        shallow = iterated_corona(g, h, k)
        assert deep.graph.induced(range(shallow.order)) == shallow.graph


def test_iterated_roots_and_addresses():
    cg = iterated_corona(path(2), path(2), 2)
    assert cg.order == 2 * 3 ** 2
    # level-2 copies hang off every level-1 vertex and every base vertex
    assert len(cg.addresses(2)) == 6
    for (level, addr), ids in cg.copies.items():
        r = cg.root[ids[0]]
        assert cg.depth_of[r] <= level - 1
        assert all(cg.graph.adj[r] >> x & 1 for x in ids)
    assert copy_root(cg, 2, (1, 3)) == 0


@settings(max_examples=40)
@given(graphs(max_order=5), graphs(max_order=4), st.integers(1, 3))
def test_corona_order_and_degrees(g, h, k):
    cg = iterated_corona(g, h, k)
    n1, n2 = g.order, h.order
    assert cg.order == n1 * (n2 + 1) ** k
    prev = iterated_corona(g, h, k - 1)
    for v in range(prev.order):
        assert cg.graph.degree(v) == prev.graph.degree(v) + n2
    for v in range(prev.order, cg.order):
        j = cg.graph.labels[v].path[0] - 1
        assert cg.graph.degree(v) == h.degree(j) + 1


@settings(max_examples=40)
@given(graphs(max_order=5), graphs(max_order=4))
def test_corona_matches_definition(g, h):
    ref = oracles.definition_corona(g.order, g.edges(), h.order, h.edges())
    ours = nx.Graph(cg_edges := corona(g, h).graph.edges())
    ours.add_nodes_from(range(corona(g, h).order))
    assert len(cg_edges) == ref.number_of_edges()
    assert nx.is_isomorphic(ours, ref)


@settings(max_examples=40)
@given(graphs(max_order=5), graphs(max_order=5))
def test_lex_matches_networkx(g, h):
    lg = lexicographic(g, h)
    assert set(lg.graph.edges()) == oracles.nx_lex_edges(g.edges(), g.order, h.edges(), h.order)


def test_lex_example():
    lg = lexicographic(path(2), path(3))
    assert (lg.graph.order, lg.graph.size) == (6, 13)
    assert lex_layer(lg, 1) == (3, 4, 5)
    assert lex_column(lg, 2) == (2, 5)
    assert lg.pair(4) == (1, 1)


def test_lex_layers_are_copies_of_factors():
    g, h = cycle(4), path(3)
    lg = lexicographic(g, h)
    for a in range(g.order):
        assert lg.graph.induced(lex_layer(lg, a)) == h
    for v in range(h.order):
        assert lg.graph.induced(lex_column(lg, v)) == g
    assert layers_related(lg, 0, 1) == "all"
    assert layers_related(lg, 0, 2) == "none"


def test_lex_components_and_projection():
    h = from_edge_list(4, [(0, 1)])
    lg = lexicographic(path(3), h)
    assert lg.components == ((0, 1), (2,), (3,))
    assert lex_component_layer(lg, 2, 0) == (8, 9)
    s = [0, 5, 9]
    assert project(lg, s, "G") == {0, 1, 2}
    assert project(lg, s, "H") == {0, 1}
    with pytest.raises(InputError):
        project(lg, s, "X")
    with pytest.raises(InputError):
        lex_component_layer(lg, 0, 3)


def test_lex_budget():
    with pytest.raises(BudgetError):
        lexicographic(path(100), path(100))


@settings(max_examples=25)
@given(graphs(min_order=2, max_order=4), graphs(min_order=2, max_order=3))
def test_lex_zero_forcing_is_isomorphism_invariant(g, h):
    lg = lexicographic(g, h)
    n = lg.graph.order
    perm = list(reversed(range(n)))
    assert zero_forcing_number_exact(lg.graph.relabel(perm)).value == zero_forcing_number_exact(lg.graph).value


def test_corona_star_empty():
    cg = corona(star(3), empty(2))
    assert cg.order == 9 and cg.graph.size == 2 + 6
