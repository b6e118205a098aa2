"""Free groups, reduced words, and finitely generated subgroups via folded automata.

A subgroup ``H`` of a free group is represented by its Stallings graph: a
folded, core automaton whose base-to-base reduced paths spell exactly the
elements of ``H``. Reading a word from a state is the right Schreier action
``Hg -> Hgw``; the left action on left cosets used by skew products is
derived from it through ``gH <-> Hg^{-1}``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GeneratorMismatch, InfiniteIndex, InvalidInput


def _check_generator_name(name):
    if not isinstance(name, str) or not name:
        raise InvalidInput(f"generator name {name!r} must be a nonempty string")
    if any(ch.isspace() for ch in name) or "'" in name:
        raise InvalidInput(f"generator name {name!r} may not contain whitespace or apostrophes")
    if name == "1":
        raise InvalidInput("'1' is reserved for the identity word")


@dataclass(frozen=True)
class FreeGroup:
    generators: tuple

    def __post_init__(self):
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            _check_generator_name(g)
        if len(set(gens)) != len(gens):
            raise InvalidInput(f"repeated generator names in {gens}")
        object.__setattr__(self, "_position", {g: i for i, g in enumerate(gens)})

    @property
    def rank(self) -> int:
        return len(self.generators)

    @property
    def identity(self) -> "FreeWord":
        return FreeWord(self, ())

    def gen(self, name: str) -> "FreeWord":
        return self.word([(name, 1)])

    def word(self, letters: Iterable) -> "FreeWord":
        """Freely reduced word from ``(generator, ±1)`` letters."""
        out = []
        for name, exp in letters:
            if name not in self._position:
                raise GeneratorMismatch(f"{name!r} is not a generator of {self}")
            if exp not in (1, -1):
                raise InvalidInput(f"letter exponent must be ±1, got {exp!r}")
            if out and out[-1][0] == name and out[-1][1] == -exp:
                out.pop()
            else:
                out.append((name, exp))
        return FreeWord(self, tuple(out))

    def letters(self):
        """All ``2 * rank`` letters in canonical order: x, x', y, y', ..."""
        return [(g, e) for g in self.generators for e in (1, -1)]

    def parse(self, text: str) -> "FreeWord":
        tokens = text.split()
        if tokens == ["1"]:
            return self.identity
        if not tokens:
            raise InvalidInput("empty word text; write '1' for the identity")
        return self.word((t[:-1], -1) if t.endswith("'") else (t, 1) for t in tokens)

    # uniform group interface shared with FiniteGroup
    def multiply(self, a, b):
        return word_multiply(a, b)

    def inverse(self, a):
        return a.inverse()

    def format(self, a) -> str:
        return str(a)

    def check(self, a):
        if not isinstance(a, FreeWord) or a.group != self:
            raise GeneratorMismatch(f"{a!r} is not an element of {self}")
        return a

    def to_dict(self) -> dict:
        return {"free": list(self.generators)}

    def __str__(self):
        return "F(" + ", ".join(self.generators) + ")"


@dataclass(frozen=True)
class FreeWord:
    group: FreeGroup = field(repr=False)
    letters: tuple

    def __mul__(self, other):
        return word_multiply(self, other)

    def inverse(self) -> "FreeWord":
        return FreeWord(self.group, tuple((g, -e) for g, e in reversed(self.letters)))

    def __pow__(self, n: int) -> "FreeWord":
        base = self if n >= 0 else self.inverse()
        out = self.group.identity
        for _ in range(abs(n)):
            out = out * base
        return out

    def is_identity(self) -> bool:
        return not self.letters

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(g if e > 0 else g + "'" for g, e in self.letters)


def word_multiply(a: FreeWord, b: FreeWord) -> FreeWord:
    if a.group != b.group:
        raise GeneratorMismatch(f"cannot multiply words of {a.group} and {b.group}")
    left = list(a.letters)
    right = b.letters
    i = 0
    while left and i < len(right) and left[-1][0] == right[i][0] and left[-1][1] == -right[i][1]:
        left.pop()
        i += 1
    return FreeWord(a.group, tuple(left) + right[i:])


class _Folder:
    """Incremental Stallings folding with union-find over states."""

    def __init__(self):
        self.parent = []
        self.adj = []  # state -> {(gen, ±1): state}

    def new_state(self):
        self.parent.append(len(self.parent))
        self.adj.append({})
        return len(self.parent) - 1

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def add_edge(self, a, gen, b):
        pending = []
        self._link(a, (gen, 1), b, pending)
        self._link(b, (gen, -1), a, pending)
        self._drain(pending)

    def _link(self, a, key, b, pending):
        a, b = self.find(a), self.find(b)
        have = self.adj[a].get(key)
        if have is None:
            self.adj[a][key] = b
        elif self.find(have) != b:
            pending.append((have, b))

    def _drain(self, pending):
        while pending:
            x, y = pending.pop()
            x, y = self.find(x), self.find(y)
            if x == y:
                continue
            if y < x:
                x, y = y, x
            self.parent[y] = x
            moved = self.adj[y]
            self.adj[y] = {}
            for key, t in moved.items():
                self._link(x, key, t, pending)

    def resolved(self):
        """Map of live states to ``{key: live target}``."""
        out = {}
        for s in range(len(self.parent)):
            if self.find(s) == s:
                out[s] = {k: self.find(t) for k, t in self.adj[s].items()}
        return out


class SubgroupGraph:
    """Folded core automaton of a subgroup; state 0 is the base.

    ``transitions[q]`` maps a letter ``(gen, ±1)`` to a state. Reading ``(g, -1)``
    follows a ``g``-edge backwards, so the structure is symmetric.
    """

    def __init__(self, group: FreeGroup, transitions: dict, base=0):
        self.group = group
        self.transitions = _canonical(group, transitions, base)
        self.n_states = len(self.transitions)

    @classmethod
    def from_permutations(cls, group: FreeGroup, perms: dict, base=0) -> "SubgroupGraph":
        """Complete automaton from one permutation per generator (restricted to base's orbit)."""
        trans = {}
        n = len(next(iter(perms.values()))) if perms else 1
        for q in range(n):
            trans.setdefault(q, {})
        for g in group.generators:
            p = perms[g]
            if sorted(p) != list(range(n)):
                raise InvalidInput(f"transition of {g!r} is not a permutation of {n} states")
            for q in range(n):
                trans[q][(g, 1)] = p[q]
                trans[p[q]][(g, -1)] = q
        return cls(group, trans, base)

    def read(self, word: FreeWord, state=0):
        """Follow ``word`` from ``state``; None if the automaton gets stuck."""
        for letter in word.letters:
            state = self.transitions[state].get(letter)
            if state is None:
                return None
        return state

    def contains(self, w: FreeWord) -> bool:
        return contains(self, w)

    def is_complete(self) -> bool:
        need = 2 * self.group.rank
        return all(len(t) == need for t in self.transitions.values())

    def index(self):
        return index(self)

    @property
    def n_edges(self) -> int:
        return sum(1 for t in self.transitions.values() for (_, e) in t if e > 0)

    @property
    def rank(self) -> int:
        return self.n_edges - self.n_states + 1

    def basis(self) -> list:
        """Free basis read off a BFS spanning tree of the automaton."""
        path = {0: self.group.identity}
        tree = set()
        queue = deque([0])
        while queue:
            q = queue.popleft()
            for letter in self.group.letters():
                t = self.transitions[q].get(letter)
                if t is not None and t not in path:
                    path[t] = path[q] * self.group.word([letter])
                    tree.add((q, letter[0], t) if letter[1] > 0 else (t, letter[0], q))
                    queue.append(t)
        out = []
        for q in range(self.n_states):
            for g in self.group.generators:
                t = self.transitions[q].get((g, 1))
                if t is not None and (q, g, t) not in tree:
                    out.append(path[q] * self.group.gen(g) * path[t].inverse())
        return out

    def coset_space(self) -> "CosetSpace":
        return coset_space(self)

    def to_dict(self) -> dict:
        idx = index(self)
        return {
            "group": self.group.to_dict(),
            "generators": [str(w) for w in self.basis()],
            "index": idx if idx is not None else "infinite",
            "states": self.n_states,
            "transitions": [[q, g, t] for q in range(self.n_states)
                            for g in self.group.generators
                            for t in [self.transitions[q].get((g, 1))] if t is not None],
        }

    def __repr__(self):
        return f"SubgroupGraph({self.group}, states={self.n_states}, rank={self.rank})"


def _canonical(group, trans, base):
    """Trim to the core at ``base`` and renumber states in BFS order."""
    trans = {q: dict(t) for q, t in trans.items()}
    # drop everything not reachable from base
    seen = {base}
    queue = deque([base])
    while queue:
        q = queue.popleft()
        for t in trans[q].values():
            if t not in seen:
                seen.add(t)
                queue.append(t)
    trans = {q: t for q, t in trans.items() if q in seen}
    # prune hanging trees: non-base states of degree one
    stack = [q for q, t in trans.items() if q != base and len(t) <= 1]
    while stack:
        q = stack.pop()
        if q not in trans or q == base or len(trans[q]) > 1:
            continue
        for (g, e), t in trans.pop(q).items():
            if t in trans:
                trans[t].pop((g, -e), None)
                if t != base and len(trans[t]) <= 1:
                    stack.append(t)
    order = {base: 0}
    queue = deque([base])
    letters = group.letters()
    while queue:
        q = queue.popleft()
        for letter in letters:
            t = trans[q].get(letter)
            if t is not None and t not in order:
                order[t] = len(order)
                queue.append(t)
    return {order[q]: {k: order[t] for k, t in sorted(trans[q].items(), key=lambda kv: letters.index(kv[0]))}
            for q in sorted(trans, key=order.get)}


def stallings_graph(gens: Sequence[FreeWord], group: FreeGroup = None) -> SubgroupGraph:
    """Folded core automaton of the subgroup generated by ``gens``."""
    if group is None:
        if not gens:
            raise InvalidInput("need the ambient group when there are no generators")
        group = gens[0].group
    folder = _Folder()
    base = folder.new_state()
    for w in gens:
        if w.group != group:
            raise GeneratorMismatch(f"generator {w} is not in {group}")
        if not w.letters:
            continue
        here = base
        for i, (g, e) in enumerate(w.letters):
            nxt = base if i == len(w.letters) - 1 else folder.new_state()
            if e > 0:
                folder.add_edge(here, g, nxt)
            else:
                folder.add_edge(nxt, g, here)
            here = nxt
    return SubgroupGraph(group, folder.resolved(), folder.find(base))


def contains(h: SubgroupGraph, w: FreeWord) -> bool:
    if w.group != h.group:
        raise GeneratorMismatch(f"word {w} is not in {h.group}")
    return h.read(w) == 0


def index(h: SubgroupGraph):
    """Number of cosets, or None for infinite index."""
    return h.n_states if h.is_complete() else None


class CosetSpace:
    """Left cosets ``gH`` of a finite-index subgroup of a free group.

    Cosets are named by a shortest representative: ``"H"`` for ``H`` itself,
    otherwise the representative's letters joined with ``*`` followed by ``H``
    (``"xH"``, ``"x*y'H"``).
    """

    def __init__(self, subgroup: SubgroupGraph):
        if not subgroup.is_complete():
            raise InfiniteIndex("subgroup has infinite index; its coset space is infinite")
        self.subgroup = subgroup
        self.group = subgroup.group
        # BFS over the left action from H; act(l, act(w, H)) = act(l w, H)
        reps = {0: self.group.identity}
        queue = deque([0])
        while queue:
            q = queue.popleft()
            for letter in self.group.letters():
                t = self._act_letter(letter, q)
                if t not in reps:
                    reps[t] = self.group.word([letter]) * reps[q]
                    queue.append(t)
        self._states = list(reps)
        self._rep = reps
        self._name = {q: _coset_name(w) for q, w in reps.items()}
        if len(set(self._name.values())) != len(self._name):
            self._name = {q: f"{_coset_name(w)}#{q}" for q, w in reps.items()}
        self._state = {n: q for q, n in self._name.items()}
        self.cosets = tuple(self._name[q] for q in self._states)
        self.identity = self._name[0]

    def _act_letter(self, letter, q):
        g, e = letter
        return self.subgroup.transitions[q][(g, -e)]

    def act(self, w: FreeWord, coset: str) -> str:
        """Left multiplication ``w * coset``."""
        if w.group != self.group:
            raise GeneratorMismatch(f"word {w} is not in {self.group}")
        q = self._state[coset]
        trans = self.subgroup.transitions
        for g, e in reversed(w.letters):
            q = trans[q][(g, -e)]
        return self._name[q]

    def coset_of(self, w: FreeWord) -> str:
        return self.act(w, self.identity)

    def representative(self, coset: str) -> FreeWord:
        return self._rep[self._state[coset]]

    def __len__(self):
        return len(self.cosets)

    def __contains__(self, coset):
        return coset in self._state

    def generator_elements(self):
        return [(g, self.group.gen(g)) for g in self.group.generators]

    def to_dict(self) -> dict:
        return {
            "kind": "free",
            "names": list(self.cosets),
            "identity": self.identity,
            "representatives": {n: str(self.representative(n)) for n in self.cosets},
            "action": {g: {q: self.act(w, q) for q in self.cosets}
                       for g, w in self.generator_elements()},
        }


def _coset_name(w: FreeWord) -> str:
    if not w.letters:
        return "H"
    return "*".join(g if e > 0 else g + "'" for g, e in w.letters) + "H"


def coset_space(h: SubgroupGraph) -> CosetSpace:
    return CosetSpace(h)
