"""Brute-force reference computations.

These deliberately share no code with the fast paths they check: they work
on bare tuples and enumerate instead of reasoning.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import product


def _cancels(a, b):
    return a[0] == b[0] and a[1] == -b[1]


def all_normal_forms(letters: tuple) -> frozenset:
    """Every irreducible result of deleting adjacent inverse pairs in every possible order.

    ``letters`` is a tuple of ``(name, ±1)``; confluence means the answer has one element.
    """

    @lru_cache(maxsize=None)
    def explore(word):
        results = set()
        moved = False
        for i in range(len(word) - 1):
            if _cancels(word[i], word[i + 1]):
                moved = True
                results |= explore(word[:i] + word[i + 2:])
        if not moved:
            results.add(word)
        return frozenset(results)

    return explore(tuple(letters))


def _free_reduce(word):
    # repeated scan-and-delete, independent of the stack algorithm
    word = list(word)
    changed = True
    while changed:
        changed = False
        for i in range(len(word) - 1):
            if _cancels(word[i], word[i + 1]):
                del word[i:i + 2]
                changed = True
                break
    return tuple(word)


def _invert(word):
    return tuple((g, -e) for g, e in reversed(word))


def subgroup_elements(generators, max_factors: int) -> set:
    """Reduced words that are products of at most ``max_factors`` generators or inverses."""
    factors = []
    for w in generators:
        w = tuple(w)
        if w:
            factors += [w, _invert(w)]
    seen = {()}
    frontier = {()}
    for _ in range(max_factors):
        nxt = set()
        for x in frontier:
            for f in factors:
                y = _free_reduce(x + f)
                if y not in seen:
                    nxt.add(y)
        seen |= nxt
        frontier = nxt
    return seen


def reduced_words(generators, max_length: int):
    """All freely reduced words over the generators up to ``max_length``."""
    letters = [(g, e) for g in generators for e in (1, -1)]
    out = [()]
    for n in range(1, max_length + 1):
        for w in product(letters, repeat=n):
            if all(not _cancels(w[i], w[i + 1]) for i in range(n - 1)):
                out.append(w)
    return out


def count_lifts(product_in_edges, product_src, projection, path, end):
    """Number of product paths over ``path`` (a list of base edges) ending at ``end``."""
    count = 0
    stack = [(len(path) - 1, end)]
    while stack:
        i, here = stack.pop()
        if i < 0:
            count += 1
            continue
        for f in product_in_edges(here):
            if projection[f] == path[i]:
                stack.append((i - 1, product_src(f)))
    return count


def ball_closure(generators, max_length: int) -> set:
    """Subgroup elements reachable from 1 by multiplying generator factors without
    ever leaving the ball of reduced words of length ``max_length``.

    Like ``subgroup_elements`` this only ever certifies membership, but it reaches
    short members whose factorisations are long (e.g. ``y^4`` in ``<x, y x^3>``).
    """
    factors = []
    for w in generators:
        w = tuple(w)
        if w:
            factors += [w, _invert(w)]
    seen = {()}
    stack = [()]
    while stack:
        x = stack.pop()
        for f in factors:
            y = _free_reduce(x + f)
            if len(y) <= max_length and y not in seen:
                seen.add(y)
                stack.append(y)
    return seen
