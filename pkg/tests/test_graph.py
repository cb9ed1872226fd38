import pytest
from hypothesis import given

from zeroforce.errors import FormatError, InputError, LoopError
from zeroforce.families import complete, cycle, path
from zeroforce.graph import (
    Atom,
    Graph,
    Tagged,
    connected_components,
    disjoint_union,
    emit_edge_list,
    emit_graph6,
    emit_label_table,
    from_edge_list,
    join,
    parse_edge_list,
    parse_graph6,
)

from .conftest import graphs


def test_from_edge_list_examples():
    p3 = from_edge_list(3, [(0, 1), (1, 2)])
    assert (p3.order, p3.size) == (3, 2)
    k1 = from_edge_list(1, [])
    assert (k1.order, k1.size) == (1, 0)
    assert from_edge_list(4, [(0, 1), (0, 1), (2, 3)]).size == 2
    assert from_edge_list(4, [(1, 0)]).edges() == [(0, 1)]


def test_from_edge_list_errors():
    with pytest.raises(InputError):
        from_edge_list(3, [(0, 3)])
    with pytest.raises(LoopError):
        from_edge_list(3, [(1, 1)])
    with pytest.raises(InputError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(InputError):
        from_edge_list(2, [], labels=[Atom("v", 0), Atom("v", 0)])


def test_equality_ignores_labels():
    a = from_edge_list(2, [(0, 1)])
    b = from_edge_list(2, [(0, 1)], labels=[Atom("x", 0), Atom("x", 1)])
    assert a == b and hash(a) == hash(b)
    assert b.label(1) == Atom("x", 1)


@pytest.mark.parametrize("text, n, edges", [
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("Bg", 3, [(0, 1), (1, 2)]),
    ("@", 1, []),
])
def test_graph6_examples(text, n, edges):
    g = parse_graph6(text)
    assert g.order == n and g.edges() == edges
    assert emit_graph6(g) == text


@pytest.mark.parametrize("bad", ["", "~??", "B", "Bww", "B~", "Bx"])
def test_graph6_rejects(bad):
    with pytest.raises(FormatError):
        parse_graph6(bad)


def test_graph6_header_and_size_limit():
    assert parse_graph6(">>graph6<<Bw") == complete(3)
    with pytest.raises(InputError):
        emit_graph6(path(63))
    assert parse_graph6(emit_graph6(path(62))) == path(62)


@given(graphs(max_order=12))
def test_graph6_round_trip(g):
    text = emit_graph6(g)
    assert parse_graph6(text) == g
    assert emit_graph6(parse_graph6(text)) == text


@given(graphs(max_order=10))
def test_edge_list_round_trip(g):
    assert parse_edge_list(emit_edge_list(g)) == g


def test_edge_list_comments_and_errors():
    g = parse_edge_list("# triangle\n3 3\n0 1\n1 2 # closing\n0 2\n")
    assert g == cycle(3)
    for bad in ["", "3\n", "2 2\n0 1\n", "2 1\n0 x\n", "2 1\n0 1 1\n"]:
        with pytest.raises(FormatError):
            parse_edge_list(bad)


def test_components_examples():
    assert connected_components(path(3)) == [[0, 1, 2]]
    assert connected_components(from_edge_list(3, [])) == [[0], [1], [2]]
    assert connected_components(from_edge_list(3, [(0, 1)])) == [[0, 1], [2]]
    assert connected_components(from_edge_list(4, [(1, 3)])) == [[0], [1, 3], [2]]


def test_join_examples():
    fan3 = join(complete(1), path(3))
    assert (fan3.order, fan3.size) == (4, 5)
    assert join(complete(1), cycle(3)) == complete(4)
    assert join(complete(1), complete(1)) == complete(2)
    assert fan3.label(0) == Tagged("L", Atom("k", 0))
    assert fan3.label(1) == Tagged("R", Atom("p", 0))


def test_disjoint_union_examples():
    u = disjoint_union(path(2), path(2))
    assert (u.order, u.size, len(connected_components(u))) == (4, 2, 2)
    assert disjoint_union(complete(1), complete(1)).size == 0
    pk = disjoint_union(path(3), complete(3))
    assert connected_components(pk) == [[0, 1, 2], [3, 4, 5]]


@given(graphs(max_order=7), graphs(max_order=7))
def test_join_and_union_counts(g, h):
    j = join(g, h)
    assert j.order == g.order + h.order
    assert j.size == g.size + h.size + g.order * h.order
    u = disjoint_union(g, h)
    assert len(connected_components(u)) == len(connected_components(g)) + len(connected_components(h))


@given(graphs(max_order=9))
def test_symmetric_and_loop_free(g):
    for v in range(g.order):
        assert not g.has_edge(v, v)
        for u in g.neighbors(v):
            assert g.has_edge(u, v)


def test_induced_and_relabel():
    c = cycle(5)
    sub = c.induced([0, 1, 2])
    assert sub == path(3)
    r = path(3).relabel([1, 0, 2])
    assert r.edges() == [(0, 1), (0, 2)]
    with pytest.raises(InputError):
        path(3).relabel([0, 0, 1])


def test_label_table():
    assert emit_label_table(path(2)) == "0\tp0\n1\tp1\n"
