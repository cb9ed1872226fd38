import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zeroforce.errors import BudgetError, InputError
from zeroforce.families import complete, cycle, empty, path, star
from zeroforce.forcing import (
    ForceTrace,
    close_mask,
    closure,
    derived_set,
    is_zero_forcing_set,
    minimum_zero_forcing_sets,
    verify_trace,
    zero_forcing_number_exact,
    zero_forcing_number_restricted,
)
from zeroforce.graph import disjoint_union, from_edge_list, to_mask
from zeroforce.products import corona

from . import oracles
from .conftest import connected_graphs, graphs


def test_closure_examples():
    t = closure(path(3), [0])
    assert t.forces == ((0, 1), (1, 2)) and t.final == (0, 1, 2)
    t = closure(path(3), [1])
    assert t.forces == () and t.final == (1,)
    t = closure(complete(4), [0, 3])
    assert t.final == (0, 3)


def test_closure_schedule_is_lowest_forcer_first():
    # two chains start at once; the lower forcer fires first
    t = closure(path(5), [0, 4])
    assert t.forces[0] == (0, 1)
    assert verify_trace(path(5), t)


def test_is_zero_forcing_set_examples():
    assert is_zero_forcing_set(path(5), [0])
    for s in itertools.combinations(range(4), 3):
        assert is_zero_forcing_set(complete(4), s)
    for v in range(4):
        assert not is_zero_forcing_set(cycle(4), [v])
    with pytest.raises(InputError):
        is_zero_forcing_set(path(3), [5])


def test_exact_examples():
    r = zero_forcing_number_exact(path(7))
    assert (r.value, r.witness) == (1, (0,))
    assert zero_forcing_number_exact(complete(5)).value == 4
    r = zero_forcing_number_exact(cycle(5))
    assert (r.value, r.witness) == (2, (0, 1))
    assert zero_forcing_number_exact(complete(1)).value == 1


def test_exact_handles_disconnected_graphs():
    assert zero_forcing_number_exact(empty(4)).value == 4
    g = disjoint_union(path(3), complete(3))
    r = zero_forcing_number_exact(g)
    assert r.value == 3 and is_zero_forcing_set(g, r.witness)


def test_exact_budget():
    with pytest.raises(BudgetError):
        zero_forcing_number_exact(path(21))
    assert zero_forcing_number_exact(path(21), cap=21).value == 1
    with pytest.raises(BudgetError):
        zero_forcing_number_exact(complete(16), deadline=0.0)


def test_restricted_examples():
    cg = corona(path(2), empty(2))
    r = zero_forcing_number_restricted(cg.graph, cg.copy_vertices())
    assert r.value == 2
    assert zero_forcing_number_restricted(path(3), [1]) is None
    g = cycle(6)
    assert zero_forcing_number_restricted(g, range(6)).witness == zero_forcing_number_exact(g).witness
    r = zero_forcing_number_restricted(path(4), [1, 2, 3], required=[2])
    assert 2 in r.witness and r.value == 2


def test_verify_trace_examples():
    g = path(3)
    t = closure(g, [0])
    assert verify_trace(g, t)
    swapped = ForceTrace(t.initial, tuple(reversed(t.forces)), t.final)
    verdict = verify_trace(g, swapped)
    assert not verdict and verdict.failed_step == 0
    assert verify_trace(g, ForceTrace((0, 1, 2), (), (0, 1, 2)))
    bad_final = ForceTrace((0,), ((0, 1),), (0, 1, 2))
    assert not verify_trace(g, bad_final)


def test_trace_json_round_trip():
    t = closure(cycle(6), [0, 1])
    data = t.to_json()
    assert set(data) == {"initial", "forces", "final"}
    assert ForceTrace.from_json(data) == t
    assert len(t.forces) == 4


def test_minimum_sets_enumeration():
    sets = list(minimum_zero_forcing_sets(path(4), 1))
    assert sets == [(0,), (3,)]


@given(graphs(max_order=7), st.data())
def test_closure_matches_naive(g, data):
    s = data.draw(st.sets(st.integers(0, g.order - 1)))
    assert derived_set(g, s) == oracles.naive_closure(g.order, g.edges(), s)
    t = closure(g, s)
    assert set(t.final) == derived_set(g, s)
    assert verify_trace(g, t)


@given(graphs(max_order=7), st.data())
def test_monotone(g, data):
    t = data.draw(st.sets(st.integers(0, g.order - 1)))
    s = data.draw(st.sets(st.sampled_from(sorted(t)))) if t else set()
    assert derived_set(g, s) <= derived_set(g, t)


@given(graphs(max_order=8), st.data(), st.randoms(use_true_random=False))
def test_order_independent(g, data, rng):
    s = data.draw(st.sets(st.integers(0, g.order - 1)))
    black = set(s)
    while True:
        legal = [(u, w) for u in black for w in g.neighbors(u)
                 if w not in black and sum(x not in black for x in g.neighbors(u)) == 1]
        if not legal:
            break
        black.add(rng.choice(legal)[1])
    assert black == derived_set(g, s)


@settings(max_examples=60)
@given(graphs(max_order=8))
def test_exact_certificate(g):
    r = zero_forcing_number_exact(g)
    assert len(r.witness) == r.value
    assert is_zero_forcing_set(g, r.witness)
    assert verify_trace(g, r.trace)
    assert r.value == oracles.naive_z(g.order, g.edges())
    for s in itertools.combinations(range(g.order), r.value - 1):
        assert close_mask(g.adj, to_mask(s)) != g.full_mask
    least = next(minimum_zero_forcing_sets(g, r.value))
    assert least == r.witness


@settings(max_examples=60)
@given(connected_graphs(min_order=2, max_order=8))
def test_bounds_for_connected_graphs(g):
    z = zero_forcing_number_exact(g).value
    assert 1 <= z <= g.order - 1


@settings(max_examples=40)
@given(connected_graphs(max_order=7), st.randoms(use_true_random=False))
def test_relabel_invariance(g, rng):
    perm = list(range(g.order))
    rng.shuffle(perm)
    assert zero_forcing_number_exact(g.relabel(perm)).value == zero_forcing_number_exact(g).value


def test_star_value():
    for n in range(3, 8):
        assert zero_forcing_number_exact(star(n)).value == n - 2


def test_random_cross_check_medium():
    rng = random.Random(11)
    for _ in range(15):
        n = rng.randint(9, 11)
        edges = [e for e in itertools.combinations(range(n), 2) if rng.random() < 0.3]
        g = from_edge_list(n, edges)
        assert zero_forcing_number_exact(g).value == oracles.naive_z(n, edges)
