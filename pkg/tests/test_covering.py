import pytest
from hypothesis import given, settings, strategies as st

from graphcover import fixtures, oracles
from graphcover.covering import (check_morphism, identity_morphism, induced_subgroup, is_covering,
                                 lift_walk, require_covering, sheets, theta, theta_map, theta_of_walk)
from graphcover.errors import AnchorMismatch, NotACovering, NotAMorphism, NotInFiber
from graphcover.freegroup import coset_space
from graphcover.fundamental import spanning_tree
from graphcover.graph import format_walk, parse_walk, reduce_walk
from graphcover.reconstruct import fuzz_covering

from conftest import walks

small_coverings = st.integers(0, 10**6).map(lambda s: fuzz_covering(s, 5, 8, 6))


def test_morphism_must_respect_endpoints(C2, L1):
    with pytest.raises(NotAMorphism) as info:
        check_morphism({"0": "0", "1": "0"}, {"e0": "e0", "e1": "e0"}, C2, C2)
    assert info.value.edge == "e0"
    assert check_morphism({"0": "u", "1": "u"}, {"e0": "e", "e1": "e"}, C2, L1)("e1") == "e"


def test_identity_is_a_covering(B2):
    cov = is_covering(identity_morphism(B2))
    assert cov and sheets(cov) == 1


def test_cycle_covers_loop():
    cov = require_covering(fixtures.cycle_over_loop(2))
    assert sheets(cov) == 2
    assert cov.fiber("u") == ["0", "1"]


def test_figure_eight_does_not_cover_loop(B2, L1):
    p = check_morphism({"u": "u"}, {"x": "e", "y": "e"}, B2, L1)
    failure = is_covering(p)
    assert not failure
    assert failure.vertex == "u"
    with pytest.raises(NotACovering):
        require_covering(p)


def test_lift_examples():
    cov = require_covering(fixtures.cycle_over_loop(2))
    ee = parse_walk(cov.codomain, "e e")
    assert format_walk(lift_walk(cov, ee, "0")) == "e0 e1"
    assert format_walk(lift_walk(cov, ee, "0", "range")) == "e0 e1"
    assert format_walk(lift_walk(cov, parse_walk(cov.codomain, "e'"), "0")) == "e1'"
    with pytest.raises(AnchorMismatch):
        ident = require_covering(identity_morphism(fixtures.cycle(2)))
        lift_walk(ident, parse_walk(ident.codomain, "e0"), "1")


def test_induced_subgroups():
    cov = require_covering(fixtures.cycle_over_loop(2))
    t = spanning_tree(cov.codomain, "u")
    H = induced_subgroup(cov, "0", t)
    F = t.free_group
    assert [str(w) for w in H.basis()] == ["g_e g_e"]
    assert H.index() == 2

    d = require_covering(fixtures.double_over_figure_eight())
    t = spanning_tree(d.codomain, "u")
    H = induced_subgroup(d, "0", t)
    F = t.free_group
    for text in ["g_y", "g_x g_x", "g_x g_y g_x'"]:
        assert H.contains(F.parse(text))
    assert not H.contains(F.parse("g_x"))
    assert H.rank == 3


def test_theta_on_two_cycle():
    cov = require_covering(fixtures.cycle_over_loop(2))
    t = spanning_tree(cov.codomain, "u")
    H = induced_subgroup(cov, "0", t)
    assert theta(cov, "0", "0", t, H) == "H"
    assert theta(cov, "0", "1", t, H) == "g_eH"
    # the longer way round from 1 to 0 lands in the same coset
    Q = coset_space(H)
    assert theta_of_walk(cov, parse_walk(cov.domain, "e1 e0 e1"), t, Q) == "g_eH"
    with pytest.raises(NotInFiber):
        theta(cov, "0", "nowhere", t, H)


def test_sheets_of_three_cycle():
    assert sheets(require_covering(fixtures.cycle_over_loop(3))) == 3


@settings(deadline=None)
@given(small_coverings, st.data())
def test_lifts_project_back_and_are_unique(case, data):
    cov, v, _ = case
    E = cov.codomain
    a = data.draw(walks(graph=E, max_len=8))
    anchor = data.draw(st.sampled_from(cov.fiber(a.source)))
    lift = lift_walk(cov, a, anchor)
    assert lift.source == anchor
    assert cov.morphism.apply_walk(lift) == a
    assert lift.is_reduced() == a.is_reduced()
    assert reduce_walk(lift) == lift_walk(cov, reduce_walk(a), anchor)
    # count lifts of the underlying edge path through the covering by brute force
    if all(s.sign > 0 for s in a.steps) and a.steps:
        path = [s.edge for s in a.steps]
        ends = cov.fiber(a.range)
        total = sum(oracles.count_lifts(cov.domain.in_edges, cov.domain.src, cov.morphism.edge_map, path, z)
                    for z in ends)
        assert total == len(cov.fiber(a.source))


@settings(deadline=None)
@given(small_coverings)
def test_sheets_equal_index_and_theta_is_bijective(case):
    cov, v, expected = case
    t = spanning_tree(cov.codomain, cov.morphism.vertex_map[v])
    H = induced_subgroup(cov, v, t)
    assert sheets(cov) == H.index() == expected
    th = theta_map(cov, v, t, H)
    assert sorted(th.values()) == sorted(coset_space(H).cosets)
    assert th[v] == "H"
    F = cov.domain
    assert H.rank == len(F.edges) - len(F.vertices) + 1


@settings(deadline=None)
@given(small_coverings, st.data())
def test_theta_does_not_depend_on_the_walk(case, data):
    cov, v, _ = case
    t = spanning_tree(cov.codomain, cov.morphism.vertex_map[v])
    Q = coset_space(induced_subgroup(cov, v, t))
    a = data.draw(walks(graph=cov.domain, start=v, max_len=10))
    w = a.range
    if cov.morphism.vertex_map[w] != cov.morphism.vertex_map[v]:
        return
    from graphcover.graph import inverse_walk
    assert theta_of_walk(cov, inverse_walk(a), t, Q) == theta(cov, v, w, t, Q.subgroup, Q)
