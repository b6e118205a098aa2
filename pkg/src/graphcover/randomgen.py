"""Seeded random instances for property tests and the self-test suite."""

from __future__ import annotations

import random
from functools import lru_cache

from . import finite
from .freegroup import FreeGroup, SubgroupGraph
from .fundamental import Labelling
from .graph import Graph, Walk


def random_connected_graph(rng: random.Random, max_vertices: int = 12, max_edges: int = 24,
                           min_vertices: int = 1, min_edges: int = 1) -> Graph:
    """Random tree with random orientations plus extra random edges (loops allowed)."""
    n = rng.randint(min_vertices, max_vertices)
    max_edges = max(max_edges, n - 1, min_edges)
    names = [f"v{i}" for i in range(n)]
    rng.shuffle(names)
    edges = []
    for i in range(1, n):
        j = rng.randrange(i)
        a, b = (names[i], names[j]) if rng.random() < 0.5 else (names[j], names[i])
        edges.append((a, b))
    extra = rng.randint(max(0, min_edges - len(edges)), max_edges - len(edges))
    for _ in range(extra):
        edges.append((rng.choice(names), rng.choice(names)))
    rng.shuffle(edges)
    return Graph(names, [(f"e{k}", a, b) for k, (a, b) in enumerate(edges)])


def random_walk(rng: random.Random, g: Graph, length: int, start: str = None) -> Walk:
    """Uniform random composable walk; backtracking is allowed, so cancellations are common."""
    here = start if start is not None else rng.choice(g.vertices)
    w0 = here
    steps = []
    for _ in range(length):
        options = g.neighbours(here)
        if not options:
            break
        step = rng.choice(options)
        steps.append(step)
        here = g.step_range(step)
    return Walk(g, w0, steps)


def random_reduced_walk(rng: random.Random, g: Graph, length: int, start: str = None) -> Walk:
    here = start if start is not None else rng.choice(g.vertices)
    w0 = here
    steps = []
    for _ in range(length):
        options = [s for s in g.neighbours(here)
                   if not steps or s != steps[-1].inverse()]
        if not options:
            break
        step = rng.choice(options)
        steps.append(step)
        here = g.step_range(step)
    return Walk(g, w0, steps)


def random_loop(rng: random.Random, g: Graph, base: str, length: int) -> Walk:
    """Random walk out and back along a random return path, so the result is a loop at ``base``."""
    from .fundamental import spanning_tree, tree_walk
    from .graph import concat
    w = random_walk(rng, g, length, base)
    return concat(w, tree_walk(spanning_tree(g, base), w.range, base))


def random_word(rng: random.Random, F: FreeGroup, max_length: int):
    letters = F.letters()
    if not letters:
        return F.identity
    return F.word(rng.choice(letters) for _ in range(rng.randint(0, max_length)))


def random_finite_index_subgroup(rng: random.Random, F: FreeGroup, max_index: int = 12) -> SubgroupGraph:
    """Complete folded automaton from random permutations, cut down to the base's orbit."""
    n = rng.randint(1, max_index)
    perms = {}
    for g in F.generators:
        p = list(range(n))
        rng.shuffle(p)
        perms[g] = p
    return SubgroupGraph.from_permutations(F, perms) if perms else SubgroupGraph(F, {0: {}})


@lru_cache(maxsize=None)
def group_catalogue(max_order: int = 12):
    """Small finite groups, abelian and not, up to ``max_order``."""
    groups = [finite.cyclic(n) for n in range(1, max_order + 1)]
    groups += [finite.dihedral(n) for n in range(2, max_order // 2 + 1)]
    extra = [
        finite.direct_product(finite.cyclic(2), finite.cyclic(4)),
        finite.direct_product(finite.cyclic(3), finite.cyclic(3)),
        finite.direct_product(finite.cyclic(2), finite.cyclic(6)),
        finite.direct_product(finite.direct_product(finite.cyclic(2), finite.cyclic(2)), finite.cyclic(2)),
        finite.quaternion(),
        finite.alternating4(),
    ]
    groups += [G for G in extra if G.order <= max_order]
    return tuple(groups)


def random_finite_group(rng: random.Random, max_order: int = 12) -> finite.FiniteGroup:
    return rng.choice(group_catalogue(max_order))


def random_subgroup(rng: random.Random, G: finite.FiniteGroup) -> finite.FiniteSubgroup:
    gens = [rng.randrange(G.order) for _ in range(rng.randint(0, 2))]
    return finite.generated_subgroup(G, gens)


def random_finite_labelling(rng: random.Random, E: Graph, G: finite.FiniteGroup) -> Labelling:
    return Labelling(E, G, {e: rng.randrange(G.order) for e in E.edge_ids})


def random_free_labelling(rng: random.Random, E: Graph, F: FreeGroup, max_length: int = 3) -> Labelling:
    return Labelling(E, F, {e: random_word(rng, F, max_length) for e in E.edge_ids})
