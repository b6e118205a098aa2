import random

import pytest
from hypothesis import given, settings, strategies as st

from graphcover import oracles
from graphcover.errors import GeneratorMismatch, InfiniteIndex, InvalidInput
from graphcover.freegroup import FreeGroup, SubgroupGraph, contains, coset_space, index, stallings_graph, word_multiply

FX = FreeGroup(("x",))
FXY = FreeGroup(("x", "y"))

letters = st.sampled_from(FXY.letters())
words = st.lists(letters, max_size=10).map(FXY.word)


def test_word_multiply_cancels():
    x = FXY.gen("x")
    assert word_multiply(x, x.inverse()).is_identity
    assert str(word_multiply(x, FXY.parse("x' y"))) == "y"


def test_word_multiply_rejects_mixed_groups():
    with pytest.raises(GeneratorMismatch):
        word_multiply(FX.gen("x"), FXY.gen("x"))


def test_parse_and_format():
    assert str(FXY.parse("1")) == "1"
    assert str(FXY.parse("x y y' x")) == "x x"
    with pytest.raises(InvalidInput):
        FXY.parse("z")


def test_generator_names_are_checked():
    with pytest.raises(InvalidInput):
        FreeGroup(("a'",))
    with pytest.raises(InvalidInput):
        FreeGroup(("a", "a"))


def test_stallings_examples():
    trivial = stallings_graph([], group=FX)
    assert trivial.n_states == 1 and trivial.n_edges == 0
    squares = stallings_graph([FX.parse("x x")])
    assert squares.n_states == 2 and squares.n_edges == 2
    whole = stallings_graph([FXY.gen("x"), FXY.gen("y")])
    assert whole.n_states == 1 and whole.n_edges == 2


def test_contains():
    h = stallings_graph([FX.parse("x x")])
    assert contains(h, FX.parse("x x x x"))
    assert not contains(h, FX.parse("x x x"))
    assert contains(h, FX.identity)


def test_index():
    assert index(stallings_graph([FXY.gen("x"), FXY.gen("y")])) == 1
    assert index(stallings_graph([FX.parse("x x")])) == 2
    assert index(stallings_graph([FXY.gen("x")])) is None


def test_coset_space_of_squares():
    Q = coset_space(stallings_graph([FX.parse("x x")]))
    x = FX.gen("x")
    assert Q.cosets == ("H", "xH")
    assert Q.act(x, "H") == "xH"
    assert Q.act(x, "xH") == "H"


def test_infinite_index_has_no_coset_space():
    with pytest.raises(InfiniteIndex):
        coset_space(stallings_graph([FXY.gen("x")]))


def test_basis_generates_the_same_subgroup():
    h = stallings_graph([FXY.parse("x y x'"), FXY.parse("x x"), FXY.parse("y x y'")])
    again = stallings_graph(h.basis(), group=FXY)
    assert again.transitions == h.transitions
    assert len(h.basis()) == h.rank


def test_from_permutations_matches_folding():
    # Z/3 quotient sending x and y to the same rotation
    h = SubgroupGraph.from_permutations(FXY, {"x": [1, 2, 0], "y": [1, 2, 0]})
    assert h.index() == 3
    assert h.contains(FXY.parse("x y'"))
    assert h.contains(FXY.parse("x x x"))
    assert not h.contains(FXY.parse("x"))
    assert stallings_graph(h.basis(), group=FXY).transitions == h.transitions


@given(st.lists(words, min_size=1, max_size=3), st.randoms(use_true_random=False))
def test_generator_order_does_not_matter(gens, rnd):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert stallings_graph(gens, group=FXY).transitions == stallings_graph(shuffled, group=FXY).transitions


@given(st.lists(words, min_size=1, max_size=3), words)
def test_membership_closed_under_products(gens, w):
    h = stallings_graph(gens, group=FXY)
    for g in gens:
        assert h.contains(g)
        assert h.contains(g.inverse())
        assert h.contains(g * gens[0])
    if h.contains(w):
        assert h.contains(w * w * gens[0].inverse())


@settings(max_examples=50, deadline=None)
@given(st.lists(st.lists(letters, min_size=1, max_size=3).map(FXY.word), min_size=1, max_size=3))
def test_membership_matches_enumeration(gens):
    h = stallings_graph(gens, group=FXY)
    raw = [w.letters for w in gens]
    found = oracles.subgroup_elements(raw, 5) | oracles.ball_closure(raw, 7)
    for w in found:
        assert h.contains(FXY.word(w))
    for u in oracles.reduced_words(FXY.generators, 3):
        if h.contains(FXY.word(u)):
            assert u in found


@st.composite
def finite_index(draw):
    from graphcover.randomgen import random_finite_index_subgroup
    return random_finite_index_subgroup(random.Random(draw(st.integers(0, 10**6))), FXY, 8)


@given(finite_index(), words, words)
def test_coset_action_is_a_left_action(h, a, b):
    Q = coset_space(h)
    for q in Q.cosets:
        assert Q.act(a * b, q) == Q.act(a, Q.act(b, q))
    assert Q.act(FXY.identity, Q.cosets[-1]) == Q.cosets[-1]


@given(finite_index(), words)
def test_stabiliser_of_base_coset_is_h(h, w):
    Q = coset_space(h)
    assert (Q.act(w, Q.identity) == Q.identity) == h.contains(w)
    assert len(Q) == h.index()
    for q in Q.cosets:
        assert Q.coset_of(Q.representative(q)) == q
