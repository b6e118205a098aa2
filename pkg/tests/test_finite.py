import pytest

from graphcover.errors import NotAGroup, NotASubgroup
from graphcover.finite import (alternating4, cyclic, dihedral, direct_product, finite_group_from_table,
                               finite_subgroup, generated_subgroup, quaternion, symmetric)


def test_z2_from_table():
    G = finite_group_from_table({"elements": ["e", "a"], "table": [[0, 1], [1, 0]], "identity": 0})
    a = G.parse("a")
    assert G.order == 2
    assert G.multiply(a, a) == G.identity
    assert G.format(G.inverse(a)) == "a"


def test_table_must_be_a_group():
    with pytest.raises(NotAGroup):
        finite_group_from_table({"elements": ["e", "a"], "table": [[0, 1], [1, 1]], "identity": 0})


def test_subgroups_of_z4():
    Z4 = cyclic(4)
    H = finite_subgroup(Z4, [Z4.parse("0"), Z4.parse("2")])
    assert H.order == 2 and H.index == 2
    with pytest.raises(NotASubgroup):
        finite_subgroup(Z4, [Z4.parse("0"), Z4.parse("1")])


def test_coset_names():
    Z4 = cyclic(4)
    Q = finite_subgroup(Z4, [0, 2]).coset_space()
    assert Q.cosets == ("H", "1H")
    assert Q.act(Z4.parse("1"), "1H") == "H"
    trivial = finite_subgroup(Z4, [0]).coset_space()
    assert trivial.cosets == ("0", "1", "2", "3")


@pytest.mark.parametrize("make, order, abelian", [
    (lambda: cyclic(5), 5, True),
    (lambda: dihedral(4), 8, False),
    (lambda: symmetric(3), 6, False),
    (alternating4, 12, False),
    (quaternion, 8, False),
    (lambda: direct_product(cyclic(2), cyclic(2)), 4, True),
])
def test_catalogue(make, order, abelian):
    G = make()
    assert G.order == order
    commutes = all(G.multiply(a, b) == G.multiply(b, a) for a in G.elements() for b in G.elements())
    assert commutes == abelian


def test_quaternion_has_one_involution():
    Q8 = quaternion()
    assert [Q8.format(a) for a in Q8.elements() if Q8.element_order(a) == 2] == ["-1"]


def test_generated_subgroup():
    D4 = dihedral(4)
    assert generated_subgroup(D4, [D4.parse("r1")]).order == 4
    assert generated_subgroup(D4, [D4.parse("r1"), D4.parse("s0")]).order == 8


def test_as_group_keeps_identity_first():
    D4 = dihedral(4)
    H = generated_subgroup(D4, [D4.parse("r2")])
    K, members = H.as_group()
    assert K.order == 2 and members[0] == D4.identity
