import pytest

from zeroforce.claims.builders import (
    checked,
    construct_corona_zfs,
    construct_empty_corona_zfs,
    construct_join_basis_in_G,
    construct_join_cover_zfs,
    construct_lex_complete_upper_zfs,
    construct_lex_singletons_zfs,
    construct_lex_upper_zfs,
    construct_single_edge_near_miss,
    fan_end_pair,
    join_apex_basis,
    wheel_triangle,
)
from zeroforce.errors import DomainError, InputError
from zeroforce.families import complete, cycle, empty, fan, path, single_edge, star, wheel
from zeroforce.forcing import is_zero_forcing_set, zero_forcing_number_exact
from zeroforce.graph import disjoint_union, join
from zeroforce.products import corona, iterated_corona, lexicographic


def test_corona_construction_examples():
    c = construct_corona_zfs(corona(path(2), path(2)), [0], [0])
    assert c.covers and c.size == 3
    c = construct_corona_zfs(iterated_corona(path(2), path(2), 2), [0], [0])
    assert c.covers and c.size == 9
    c = construct_corona_zfs(corona(complete(3), complete(2)), [0, 1], [1])
    assert c.covers and c.size == 5


def test_corona_construction_rejects_bad_basis():
    with pytest.raises(InputError):
        construct_corona_zfs(corona(path(3), path(2)), [1], [0])
    with pytest.raises(DomainError):
        construct_corona_zfs(iterated_corona(path(2), path(2), 0), [0], [0])


def test_construction_diagnostic_when_not_covering():
    cg = corona(path(2), cycle(4))
    assert construct_corona_zfs(cg, [0], [0, 1]).covers
    bad = checked(cg.graph, [0], "probe")
    assert not bad.covers and "white" in bad.diagnostic


def test_empty_corona_examples():
    c = construct_empty_corona_zfs(corona(path(2), empty(2)))
    assert c.covers and c.size == 2
    c = construct_empty_corona_zfs(corona(path(3), empty(3)))
    assert c.covers and c.size == 6
    assert construct_empty_corona_zfs(corona(complete(2), empty(2))).size == 2
    with pytest.raises(DomainError):
        construct_empty_corona_zfs(corona(path(2), path(2)))


def test_single_edge_near_miss():
    cg = corona(path(2), single_edge(3))
    c = construct_single_edge_near_miss(cg)
    assert c.size == 2 * 2 - 1 and c.covers
    with pytest.raises(DomainError):
        construct_single_edge_near_miss(corona(path(2), empty(3)))


def test_join_cover_examples():
    c = construct_join_cover_zfs(corona(path(2), cycle(3)))
    assert c.covers and c.size == 6
    c = construct_join_cover_zfs(corona(path(2), empty(3)))
    assert c.covers and c.size == 2 * zero_forcing_number_exact(join(complete(1), empty(3))).value
    c = construct_join_cover_zfs(corona(complete(2), path(2)))
    assert c.covers and c.size == 4


def test_join_cover_deeper():
    cg = iterated_corona(path(2), path(2), 2)
    c = construct_join_cover_zfs(cg)
    assert c.covers and c.size == 2 * 3 * 2


def test_join_apex_basis_case_split():
    assert 0 in join_apex_basis(cycle(3))
    assert 0 not in join_apex_basis(empty(3))
    h = disjoint_union(path(2), complete(1))
    assert 0 not in join_apex_basis(h)


def test_lex_upper_examples():
    c = construct_lex_upper_zfs(lexicographic(complete(2), complete(2)))
    assert c.covers and c.size == 3
    c = construct_lex_upper_zfs(lexicographic(path(3), path(2)))
    assert c.covers and c.size == 5
    c = construct_lex_upper_zfs(lexicographic(path(3), disjoint_union(path(2), path(2))))
    assert c.covers and c.size == 10
    with pytest.raises(DomainError):
        construct_lex_upper_zfs(lexicographic(path(2), empty(2)))


def test_lex_singletons_and_complete():
    c = construct_lex_singletons_zfs(lexicographic(path(3), empty(3)))
    assert c.covers and c.size == 7
    c = construct_lex_complete_upper_zfs(lexicographic(path(3), complete(3)))
    assert c.covers and c.size == 7
    with pytest.raises(DomainError):
        construct_lex_complete_upper_zfs(lexicographic(complete(3), complete(2)))


def test_join_basis_in_g():
    c = construct_join_basis_in_G(path(2))
    assert c.covers and c.vertices == (0, 1)
    c = construct_join_basis_in_G(cycle(4))
    assert c.covers and c.size == 3 and max(c.vertices) < 4
    c = construct_join_basis_in_G(path(4))
    assert c.covers and c.size == 2 and max(c.vertices) < 4
    for g in [star(5), complete(4), cycle(6)]:
        c = construct_join_basis_in_G(g)
        assert c.covers and is_zero_forcing_set(join(g, complete(1)), c.vertices)


@pytest.mark.parametrize("n", range(3, 8))
def test_wheel_triangle(n):
    assert is_zero_forcing_set(wheel(n), wheel_triangle(n))


@pytest.mark.parametrize("n", range(2, 8))
def test_fan_end_pair(n):
    assert is_zero_forcing_set(fan(n), fan_end_pair(n))
