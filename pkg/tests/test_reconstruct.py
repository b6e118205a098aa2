import pytest
from hypothesis import given, settings, strategies as st

from graphcover import fixtures
from graphcover.covering import check_morphism, require_covering
from graphcover.errors import NotACovering, UnknownVertex
from graphcover.graph import Graph
from graphcover.reconstruct import fuzz_covering, reconstruct, roundtrip_fuzz


def test_two_cycle_over_loop():
    r = reconstruct(fixtures.cycle_over_loop(2), "0")
    assert r.phi.vertex_map == {"0": "(u|H)", "1": "(u|g_eH)"}
    assert r.phi.edge_map == {"e0": "(e|g_eH)", "e1": "(e|H)"}
    assert r.is_isomorphism and r.commutes
    assert r.sheets == r.index == 2


def test_double_figure_eight():
    r = reconstruct(fixtures.double_over_figure_eight(), "1")
    assert r.index == 2
    assert r.subgroup.rank == 3
    assert r.phi.vertex_map["1"] == "(u|H)"


def test_one_sheeted_cover_reconstructs_base(B2):
    r = reconstruct(fixtures.identity_morphism(B2), "u")
    assert r.cosets.cosets == ("H",)
    assert r.product.product.vertices == ("(u|H)",)


def test_rejects_non_coverings(B2, L1):
    p = check_morphism({"u": "u"}, {"x": "e", "y": "e"}, B2, L1)
    with pytest.raises(NotACovering):
        reconstruct(p, "u")
    with pytest.raises(UnknownVertex):
        reconstruct(fixtures.cycle_over_loop(2), "7")


def _relabel(cov, suffix):
    F = cov.domain
    ren = {v: v + suffix for v in F.vertices}
    G = Graph(ren.values(), [(e.id + suffix, ren[e.src], ren[e.dst]) for e in F.edges])
    vmap = {ren[v]: u for v, u in cov.morphism.vertex_map.items()}
    emap = {e + suffix: x for e, x in cov.morphism.edge_map.items()}
    return require_covering(check_morphism(vmap, emap, G, cov.codomain)), ren


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10**6))
def test_result_does_not_depend_on_domain_names(seed):
    cov, v, _ = fuzz_covering(seed, 6, 10, 6)
    other, ren = _relabel(cov, "_b")
    r1 = reconstruct(cov, v)
    r2 = reconstruct(other, ren[v])
    assert r1.product.product == r2.product.product
    for z in cov.domain.vertices:
        assert r1.phi.vertex_map[z] == r2.phi.vertex_map[ren[z]]


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10**6))
def test_base_vertex_goes_to_base_coset(seed):
    cov, v, _ = fuzz_covering(seed, 6, 10, 6)
    r = reconstruct(cov, v)
    assert r.phi.vertex_map[v] == f"({cov.morphism.vertex_map[v]}|H)"
    assert r.theta[r.tau[v]] == "H"


@settings(deadline=None, max_examples=25)
@given(st.integers(0, 10**6))
def test_roundtrip_fuzz(seed):
    report = roundtrip_fuzz(seed)
    assert report.passed, report.failures


def test_single_vertex_base():
    # a one-vertex base graph: every covering of it has all edges as loops downstairs
    for seed in range(20):
        cov, v, n = fuzz_covering(seed, 1, 4, 5)
        assert len(cov.codomain.vertices) == 1
        r = reconstruct(cov, v)
        assert r.sheets == n
