"""Finite groups given by multiplication tables, their subgroups and left cosets."""

from __future__ import annotations

import itertools
from typing import Iterable, Sequence

from .errors import GroupMismatch, InvalidInput, NotAGroup, NotASubgroup


class FiniteGroup:
    """A group on ``{0, ..., n-1}`` with ``table[a][b] = a*b``.

    The table is checked for closure, identity, inverses and associativity on
    construction, so every instance is a genuine group.
    """

    def __init__(self, names: Sequence[str], table, identity: int = 0):
        names = tuple(names)
        n = len(names)
        if n == 0:
            raise NotAGroup("a group needs at least one element")
        for name in names:
            if not isinstance(name, str) or not name or any(ch.isspace() for ch in name):
                raise NotAGroup(f"element name {name!r} must be a nonempty string without whitespace")
        if len(set(names)) != n:
            raise NotAGroup("element names must be distinct")
        try:
            table = tuple(tuple(int(x) for x in row) for row in table)
        except (TypeError, ValueError):
            raise NotAGroup("multiplication table must be a square array of element indices") from None
        if len(table) != n or any(len(row) != n for row in table):
            raise NotAGroup(f"multiplication table must be {n}x{n}")
        if not 0 <= identity < n:
            raise NotAGroup(f"identity index {identity} out of range")
        full = list(range(n))
        for a in range(n):
            if sorted(table[a]) != full:
                raise NotAGroup(f"row {names[a]!r} is not a permutation of the elements")
            if table[identity][a] != a or table[a][identity] != a:
                raise NotAGroup(f"{names[identity]!r} is not a two-sided identity")
        for a, b, c in itertools.product(range(n), repeat=3):
            if table[table[a][b]][c] != table[a][table[b][c]]:
                raise NotAGroup(f"not associative: ({names[a]}{names[b]}){names[c]} != "
                                f"{names[a]}({names[b]}{names[c]})")
        self.names = names
        self.table = table
        self.identity = identity
        self._index = {name: i for i, name in enumerate(names)}
        self._inverse = tuple(row.index(identity) for row in table)

    @property
    def order(self) -> int:
        return len(self.names)

    def elements(self):
        return range(self.order)

    def multiply(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self._inverse[a]

    def power(self, a: int, k: int) -> int:
        out = self.identity
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != self.identity:
            x = self.table[x][a]
            k += 1
        return k

    def parse(self, name: str) -> int:
        try:
            return self._index[name.strip()]
        except KeyError:
            raise InvalidInput(f"{name!r} is not an element of this group") from None

    def format(self, a: int) -> str:
        return self.names[a]

    def check(self, a):
        if not isinstance(a, int) or not 0 <= a < self.order:
            raise GroupMismatch(f"{a!r} is not an element index of this group")
        return a

    def __eq__(self, other):
        return (isinstance(other, FiniteGroup) and self.names == other.names
                and self.table == other.table and self.identity == other.identity)

    def __hash__(self):
        return hash((self.names, self.table, self.identity))

    def to_dict(self) -> dict:
        return {"finite": {"elements": list(self.names),
                           "table": [list(r) for r in self.table],
                           "identity": self.identity}}

    def __repr__(self):
        return f"FiniteGroup(order={self.order})"


def finite_group_from_table(spec: dict) -> FiniteGroup:
    """Build from ``{"elements": [...], "table": [[...]], "identity": 0}``."""
    try:
        return FiniteGroup(spec["elements"], spec["table"], spec.get("identity", 0))
    except (KeyError, TypeError) as exc:
        raise NotAGroup(f"malformed finite group description: {exc!r}") from None


class FiniteSubgroup:
    def __init__(self, group: FiniteGroup, elements: Iterable[int]):
        self.group = group
        self.elements = frozenset(elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    @property
    def index(self) -> int:
        return self.group.order // self.order

    def __contains__(self, a):
        return a in self.elements

    def coset_space(self) -> "FiniteCosetSpace":
        return FiniteCosetSpace(self)

    def as_group(self):
        """The subgroup as a standalone group, plus the index embedding into the parent."""
        members = sorted(self.elements, key=lambda a: (a != self.group.identity, a))
        pos = {a: i for i, a in enumerate(members)}
        table = [[pos[self.group.multiply(a, b)] for b in members] for a in members]
        return FiniteGroup([self.group.names[a] for a in members], table, 0), members

    def to_dict(self) -> dict:
        return {"group": self.group.to_dict(),
                "elements": [self.group.names[a] for a in sorted(self.elements)]}


def finite_subgroup(group: FiniteGroup, subset: Iterable[int]) -> FiniteSubgroup:
    subset = set(subset)
    for a in subset:
        group.check(a)
    if group.identity not in subset:
        raise NotASubgroup("subset does not contain the identity")
    for a in subset:
        if group.inverse(a) not in subset:
            raise NotASubgroup(f"not closed under inverses: {group.names[a]}")
        for b in subset:
            if group.multiply(a, b) not in subset:
                raise NotASubgroup(f"not closed: {group.names[a]}*{group.names[b]} = "
                                   f"{group.names[group.multiply(a, b)]}")
    return FiniteSubgroup(group, subset)


def generated_subgroup(group: FiniteGroup, gens: Iterable[int]) -> FiniteSubgroup:
    elems = {group.identity}
    frontier = list(elems)
    gens = list(gens)
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = group.multiply(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
        frontier = nxt
    return FiniteSubgroup(group, elems)


class FiniteCosetSpace:
    """Left cosets ``gH`` with left multiplication.

    Each coset is represented by its least element index. For the trivial
    subgroup cosets are singletons and carry the element names; otherwise
    the identity coset is ``"H"`` and the others ``"<rep>H"``.
    """

    def __init__(self, subgroup: FiniteSubgroup):
        G = subgroup.group
        self.subgroup = subgroup
        self.group = G
        self._coset_of = {}
        reps = []
        for g in sorted(G.elements(), key=lambda a: (a != G.identity, a)):
            if g in self._coset_of:
                continue
            reps.append(g)
            for h in subgroup.elements:
                self._coset_of[G.multiply(g, h)] = g
        trivial = subgroup.order == 1
        self._name = {}
        for g in reps:
            if trivial:
                self._name[g] = G.names[g]
            else:
                self._name[g] = "H" if g == G.identity else G.names[g] + "H"
        self._rep = {n: g for g, n in self._name.items()}
        self.cosets = tuple(self._name[g] for g in reps)
        self.identity = self._name[G.identity]

    def act(self, g: int, coset: str) -> str:
        return self._name[self._coset_of[self.group.multiply(g, self._rep[coset])]]

    def coset_of(self, g: int) -> str:
        return self._name[self._coset_of[g]]

    def representative(self, coset: str) -> int:
        return self._rep[coset]

    def __len__(self):
        return len(self.cosets)

    def __contains__(self, coset):
        return coset in self._rep

    def generator_elements(self):
        return [(self.group.names[g], g) for g in self.group.elements()]

    def to_dict(self) -> dict:
        G = self.group
        return {
            "kind": "finite",
            "names": list(self.cosets),
            "identity": self.identity,
            "representatives": {n: G.names[self._rep[n]] for n in self.cosets},
            "action": {name: {q: self.act(g, q) for q in self.cosets}
                       for name, g in self.generator_elements()},
        }


# ---- constructors for common groups ---------------------------------------

def from_permutations(gens: Sequence[Sequence[int]], prefix="p") -> FiniteGroup:
    """Closure of a set of permutations of ``range(d)`` under composition.

    Elements are numbered in BFS order from the identity (named ``"e"``);
    ``a*b`` means apply ``a`` then ``b``.
    """
    gens = [tuple(p) for p in gens]
    d = len(gens[0]) if gens else 1
    ident = tuple(range(d))
    elems = [ident]
    pos = {ident: 0}
    i = 0
    while i < len(elems):
        a = elems[i]
        for g in gens:
            b = tuple(g[a[k]] for k in range(d))
            if b not in pos:
                pos[b] = len(elems)
                elems.append(b)
        i += 1
    table = [[pos[tuple(b[a[k]] for k in range(d))] for b in elems] for a in elems]
    names = ["e"] + [f"{prefix}{k}" for k in range(1, len(elems))]
    return FiniteGroup(names, table, 0)


def cyclic(n: int) -> FiniteGroup:
    return FiniteGroup([str(k) for k in range(n)],
                       [[(a + b) % n for b in range(n)] for a in range(n)], 0)


def dihedral(n: int) -> FiniteGroup:
    """Symmetries of the n-gon, order 2n; ``rk`` rotations, ``sk`` reflections."""
    elems = [(k, 0) for k in range(n)] + [(k, 1) for k in range(n)]
    pos = {x: i for i, x in enumerate(elems)}

    def mul(a, b):
        (i, f), (j, g) = a, b
        return ((i + (-j if f else j)) % n, f ^ g)

    names = [f"r{k}" for k in range(n)] + [f"s{k}" for k in range(n)]
    return FiniteGroup(names, [[pos[mul(a, b)] for b in elems] for a in elems], 0)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    pairs = [(a, b) for a in G.elements() for b in H.elements()]
    pos = {x: i for i, x in enumerate(pairs)}
    table = [[pos[(G.multiply(a, c), H.multiply(b, d))] for (c, d) in pairs] for (a, b) in pairs]
    names = [f"{G.names[a]},{H.names[b]}" for a, b in pairs]
    return FiniteGroup(names, table, pos[(G.identity, H.identity)])


def symmetric(d: int) -> FiniteGroup:
    if d < 2:
        return cyclic(1)
    swap = [1, 0] + list(range(2, d))
    cycle = list(range(1, d)) + [0]
    return from_permutations([swap, cycle], prefix="s")


def alternating4() -> FiniteGroup:
    return from_permutations([[1, 2, 0, 3], [1, 0, 3, 2]], prefix="a")


def quaternion() -> FiniteGroup:
    # units are (sign, basis) with basis in 1, i, j, k; ij = k, jk = i, ki = j
    basis = "1ijk"
    rule = {("i", "j"): (1, "k"), ("j", "k"): (1, "i"), ("k", "i"): (1, "j"),
            ("j", "i"): (-1, "k"), ("k", "j"): (-1, "i"), ("i", "k"): (-1, "j")}

    def mul(a, b):
        (sa, x), (sb, y) = a, b
        if x == "1":
            return sa * sb, y
        if y == "1":
            return sa * sb, x
        if x == y:
            return -sa * sb, "1"
        s, z = rule[(x, y)]
        return s * sa * sb, z

    elems = [(s, x) for x in basis for s in (1, -1)]
    pos = {u: n for n, u in enumerate(elems)}
    names = [("" if s > 0 else "-") + x for s, x in elems]
    return FiniteGroup(names, [[pos[mul(a, b)] for b in elems] for a in elems], 0)
