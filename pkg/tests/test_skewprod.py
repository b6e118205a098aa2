import random

import pytest
from hypothesis import given, settings, strategies as st

from graphcover import fixtures
from graphcover.covering import is_covering
from graphcover.errors import NotAnAction, NotCohomologous, NotFree
from graphcover.finite import cyclic, finite_subgroup
from graphcover.freegroup import FreeGroup, coset_space, stallings_graph
from graphcover.fundamental import Labelling, random_spanning_tree, spanning_tree
from graphcover.randomgen import (random_connected_graph, random_finite_group, random_finite_index_subgroup,
                                  random_finite_labelling, random_subgroup)
from graphcover.selftest import quotient_instance, skew_instance
from graphcover.skewprod import (ck_skeleton_check, coboundary_isomorphism, cohomologous, full_skew_product,
                                 gross_tucker, quotient_graph, quotient_identity, relative_skew_product,
                                 restrict_action, tree_change, validate_action, verify_isomorphism)

FX = FreeGroup(("x",))


def rotation_of_two_cycle():
    C2 = fixtures.cycle(2)
    Z2 = cyclic(2)
    return C2, validate_action(Z2, C2, {0: {"0": "0", "1": "1"}, 1: {"0": "1", "1": "0"}},
                               {0: {"e0": "e0", "e1": "e1"}, 1: {"e0": "e1", "e1": "e0"}})


def test_loop_labelled_x_mod_squares(L1):
    c = Labelling(L1, FX, {"e": FX.gen("x")})
    Q = coset_space(stallings_graph([FX.parse("x x")]))
    sp = relative_skew_product(L1, c, Q)
    P = sp.product
    assert P.vertices == ("(u|H)", "(u|xH)")
    assert P.dst("(e|H)") == "(u|H)"
    assert P.src("(e|H)") == "(u|xH)"
    assert P.src("(e|xH)") == "(u|H)"
    assert is_covering(sp.projection)


def test_full_skew_product_over_z2_is_two_cycle(L1):
    Z2 = cyclic(2)
    sp = full_skew_product(L1, Labelling(L1, Z2, {"e": 1}))
    P = sp.product
    assert len(P.vertices) == 2 and len(P.edges) == 2
    for e in P.edges:
        assert e.src != e.dst
    assert sp.action.is_free()
    # right translation by 1 swaps the sheets
    assert sp.action.vertex("(u|0)", 1) == "(u|1)"


def test_quotient_of_two_cycle_by_rotation():
    C2, a = rotation_of_two_cycle()
    q = quotient_graph(C2, a, require_free=True)
    assert q.graph.vertices == ("0",)
    assert q.graph.edge_ids == ("e0",)
    assert q.vertex_orbits == {"0": {"0", "1"}}


def test_trivial_action_is_not_free(L1):
    Z2 = cyclic(2)
    with pytest.raises(NotFree):
        validate_action(Z2, L1, {0: {"u": "u"}, 1: {"u": "u"}}, {0: {"e": "e"}, 1: {"e": "e"}},
                        require_free=True)


def test_action_law_is_checked():
    Z3 = cyclic(3)
    C3 = fixtures.cycle(3)
    ident = {v: v for v in C3.vertices}
    swap = {"0": "1", "1": "0", "2": "2"}
    eid = {e: e for e in C3.edge_ids}
    with pytest.raises(NotAnAction):
        validate_action(Z3, C3, {0: ident, 1: swap, 2: swap}, {0: eid, 1: eid, 2: eid})


def test_gross_tucker_on_two_cycle():
    C2, a = rotation_of_two_cycle()
    gt = gross_tucker(C2, a)
    assert gt.ok
    assert gt.d.group.format(gt.d["e0"]) == "1"
    assert gt.edge_representatives == {"e0": "e1"}


def test_cohomologous_examples(L1):
    Z4 = cyclic(4)
    c = Labelling(L1, Z4, {"e": 1})
    assert cohomologous(c, c, {"u": 3})
    assert not cohomologous(c, Labelling(L1, Z4, {"e": 2}), {"u": 1})
    with pytest.raises(NotCohomologous):
        coboundary_isomorphism(c, Labelling(L1, Z4, {"e": 2}), {"u": 1}, finite_subgroup(Z4, [0]).coset_space())


def test_covering_is_not_an_isomorphism():
    assert not verify_isomorphism(fixtures.cycle_over_loop(2))


def test_skeleton_check_on_small_example(L1):
    c = Labelling(L1, FX, {"e": FX.gen("x")})
    Q = coset_space(stallings_graph([FX.parse("x x x")]))
    report = ck_skeleton_check(L1, c, Q, pathlen=5)
    assert report.passed
    assert report.fiber_checks == 3
    assert report.paths_checked == 5


seeds = st.integers(0, 10**6)


@settings(deadline=None)
@given(seeds)
def test_relative_skew_product_covers_base(seed):
    E, c, Q = skew_instance(seed)
    sp = relative_skew_product(E, c, Q)
    cov = is_covering(sp.projection)
    assert cov
    for u in E.vertices:
        assert len(cov.fiber(u)) == len(Q)
    assert ck_skeleton_check(E, c, Q, 3, product=sp).passed


@settings(deadline=None, max_examples=50)
@given(seeds)
def test_quotient_of_full_product_is_relative_product(seed):
    E, c, H = quotient_instance(seed)
    m, iso, rel = quotient_identity(E, c, H)
    assert iso
    assert m.compose(rel.projection).codomain == E


@settings(deadline=None, max_examples=50)
@given(seeds)
def test_gross_tucker_round_trip(seed):
    rng = random.Random(seed)
    E = random_connected_graph(rng, 4, 6)
    G = random_finite_group(rng, 8)
    full = full_skew_product(E, random_finite_labelling(rng, E, G))
    action = restrict_action(full.action, random_subgroup(rng, G))
    gt = gross_tucker(full.product, action)
    assert gt.isomorphism and gt.equivariant
    assert len(gt.quotient.graph.vertices) * action.group.order == len(full.product.vertices)


@settings(deadline=None, max_examples=30)
@given(seeds)
def test_tree_change_gives_cohomologous_labellings(seed):
    rng = random.Random(seed)
    E = random_connected_graph(rng, 6, 10, min_vertices=2)
    root = rng.choice(E.vertices)
    t1 = spanning_tree(E, root)
    t2 = random_spanning_tree(E, root, rng)
    c1, c2, b = tree_change(t1, t2)
    assert cohomologous(c1, c2, b)
    Q = coset_space(random_finite_index_subgroup(rng, t1.free_group, 6))
    m, src, dst = coboundary_isomorphism(c1, c2, b, Q)
    assert verify_isomorphism(m)
    assert m.compose(dst.projection) == src.projection
