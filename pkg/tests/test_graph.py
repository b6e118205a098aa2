import pytest
from hypothesis import given, strategies as st

from graphcover import oracles
from graphcover.errors import DanglingEndpoint, DuplicateId, EndpointMismatch, NotComposable
from graphcover.graph import (Graph, Walk, concat_reduce, format_walk, inverse_walk, is_connected,
                              parse_walk, reduce_walk, validate_graph)

from graphcover.fundamental import spanning_tree

from conftest import graphs, walks


def test_validate_smallest_loop_graph():
    g = validate_graph({"vertices": ["u"], "edges": [{"id": "e", "src": "u", "dst": "u"}]})
    assert g.vertices == ("u",)
    assert g.out_edges("u") == ("e",) == g.in_edges("u")


def test_validate_dangling_endpoint():
    with pytest.raises(DanglingEndpoint) as info:
        validate_graph({"vertices": ["u"], "edges": [{"id": "e", "src": "z", "dst": "u"}]})
    assert "'z'" in info.value.violations[0]


def test_validate_duplicate_edge_id():
    with pytest.raises(DuplicateId):
        validate_graph({"vertices": ["u"], "edges": [{"id": "e", "src": "u", "dst": "u"},
                                                     {"id": "e", "src": "u", "dst": "u"}]})


def test_validate_reports_every_violation():
    with pytest.raises(DuplicateId) as info:
        Graph(["u", "u"], [("e", "u", "w")])
    assert len(info.value.violations) == 2


def test_connectivity(L1, C2):
    assert is_connected(L1)
    assert is_connected(C2)
    two = Graph(["u", "w"], [("e", "u", "u"), ("f", "w", "w")])
    assert not is_connected(two)
    assert not is_connected(Graph([], []))


def test_reduce_identity_and_single_cancellation(L1):
    assert reduce_walk(Walk(L1, "u")) == Walk(L1, "u")
    w = parse_walk(L1, "e e'")
    r = reduce_walk(w)
    assert r.steps == () and r.start == "u"


def test_walk_must_be_composable(C2):
    with pytest.raises(NotComposable):
        parse_walk(C2, "e0 e0")
    assert parse_walk(C2, "e0 e1").is_loop


def test_walk_text_roundtrip(D2):
    for text in ["@1", "x0 y1 x0'", "y0' y0'"]:
        assert format_walk(parse_walk(D2, text)) == text


def test_inverse(L1):
    assert inverse_walk(Walk(L1, "u")) == Walk(L1, "u")
    assert inverse_walk(parse_walk(L1, "e")) == parse_walk(L1, "e'")


def test_concat_endpoint_mismatch(C2):
    with pytest.raises(EndpointMismatch):
        concat_reduce(parse_walk(C2, "e0"), parse_walk(C2, "e0"))


@given(walks())
def test_reduce_matches_every_deletion_order(w):
    assert oracles.all_normal_forms(w.steps) == {reduce_walk(w).steps}


@given(walks())
def test_reduce_idempotent_and_keeps_endpoints(w):
    r = reduce_walk(w)
    assert r.is_reduced()
    assert reduce_walk(r) == r
    assert r.source == w.source
    assert r.range == w.range


@given(walks())
def test_inverse_is_involution_and_cancels(w):
    assert inverse_walk(inverse_walk(w)) == w
    assert concat_reduce(w, inverse_walk(w)) == Walk(w.graph, w.source)
    assert concat_reduce(Walk(w.graph, w.source), w) == reduce_walk(w)


@given(st.data())
def test_reduced_loops_form_a_group(data):
    g = data.draw(graphs)
    u = data.draw(st.sampled_from(g.vertices))
    tree = spanning_tree(g, u)
    loops = []
    for _ in range(3):
        w = data.draw(walks(graph=g, start=u))
        loops.append(concat_reduce(w, inverse_walk(tree.walk_to(w.range))))
    a, b, c = loops
    assert a.is_loop and a.is_reduced()
    assert concat_reduce(concat_reduce(a, b), c) == concat_reduce(a, concat_reduce(b, c))
    e = Walk(g, u)
    assert concat_reduce(e, a) == a == concat_reduce(a, e)
    assert concat_reduce(a, inverse_walk(a)) == e


@given(st.data())
def test_concat_associative_on_composable_triples(data):
    a = data.draw(walks())
    b = data.draw(walks(graph=a.graph, start=a.range))
    c = data.draw(walks(graph=a.graph, start=b.range))
    assert concat_reduce(concat_reduce(a, b), c) == concat_reduce(a, concat_reduce(b, c))


def test_graph_is_immutable_and_hashable(L1):
    with pytest.raises(AttributeError):
        L1.vertices = ()
    assert hash(L1) == hash(Graph(["u"], [("e", "u", "u")]))
