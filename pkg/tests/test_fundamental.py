import random

import pytest
from hypothesis import given, strategies as st

from graphcover.errors import NotConnected, UnknownVertex
from graphcover.fundamental import (canonical_labelling, loop_of_word, random_spanning_tree,
                                    spanning_tree, tree_walk, walk_to_word)
from graphcover.graph import Graph, concat_reduce, format_walk, reduce_walk

from conftest import graphs, walks


def test_spanning_tree_examples(L1, C2, D2):
    assert spanning_tree(L1, "u").edges == frozenset()
    assert spanning_tree(C2, "0").edges == {"e0"}
    # BFS breaks ties by edge id, so x0 wins over x1
    assert spanning_tree(D2, "0").edges == {"x0"}


def test_spanning_tree_errors(L1):
    with pytest.raises(UnknownVertex):
        spanning_tree(L1, "w")
    with pytest.raises(NotConnected):
        spanning_tree(Graph(["a", "b"], []), "a")


def test_tree_walk(C2):
    t = spanning_tree(C2, "0")
    assert format_walk(tree_walk(t, "0", "1")) == "e0"
    assert format_walk(tree_walk(t, "1", "0")) == "e0'"
    assert format_walk(t.walk_to("0")) == "@0"


def test_pi1_loops(C2, B2):
    t = spanning_tree(C2, "0")
    assert {g: format_walk(w) for g, w in t.loops().items()} == {"g_e1": "e0 e1"}
    assert t.free_group.generators == ("g_e1",)
    assert spanning_tree(B2, "u").free_group.rank == 2


def test_canonical_labelling_is_trivial_exactly_on_tree(D2):
    t = spanning_tree(D2, "0")
    c = canonical_labelling(D2, t)
    for e in D2.edge_ids:
        assert c[e].is_identity() == (e in t.edges)
    assert str(c["x1"]) == "g_x1"


@given(graphs, st.data())
def test_rank_formula(g, data):
    t = spanning_tree(g, data.draw(st.sampled_from(g.vertices)))
    assert t.free_group.rank == len(g.edges) - len(g.vertices) + 1
    assert len(t.edges) == len(g.vertices) - 1


@given(st.data())
def test_loop_word_correspondence(data):
    g = data.draw(graphs)
    t = spanning_tree(g, data.draw(st.sampled_from(g.vertices)))
    w = data.draw(walks(graph=g, start=t.root))
    loop = concat_reduce(w, tree_walk(t, w.range, t.root))
    word = walk_to_word(t, loop)
    assert loop_of_word(t, word) == reduce_walk(loop)
    assert walk_to_word(t, reduce_walk(loop)) == word
    letters = data.draw(st.lists(st.sampled_from(t.free_group.letters()), max_size=8)) \
        if t.free_group.rank else []
    u = t.free_group.word(letters)
    assert walk_to_word(t, loop_of_word(t, u)) == u


@given(st.data())
def test_walk_to_word_is_a_homomorphism(data):
    g = data.draw(graphs)
    t = spanning_tree(g, data.draw(st.sampled_from(g.vertices)))
    a = data.draw(walks(graph=g))
    b = data.draw(walks(graph=g, start=a.range))
    assert walk_to_word(t, concat_reduce(a, b)) == walk_to_word(t, a) * walk_to_word(t, b)


@given(graphs, st.integers(0, 10**6))
def test_random_spanning_tree_is_a_tree(g, seed):
    rng = random.Random(seed)
    t = random_spanning_tree(g, g.vertices[0], rng)
    assert len(t.edges) == len(g.vertices) - 1
    for v in g.vertices:
        assert t.walk_to(v).range == v
