"""Spanning trees, canonical labellings and the free group ``pi_1(E, u)``.

For a spanning tree ``T`` rooted at ``u`` let ``a_w`` be the tree walk from
``u`` to ``w``. Each non-tree edge ``e`` gives a generator ``g_e`` whose
representative loop is ``a_{s(e)} e a_{r(e)}^{-1}``; these freely generate
``pi_1(E, u)``.
"""

from __future__ import annotations

import random
from collections import deque
from typing import Iterable

from .errors import (GeneratorMismatch, GroupMismatch, InvalidInput, NotConnected, UnknownEdge,
                     UnknownVertex)
from .freegroup import FreeGroup, FreeWord
from .graph import Graph, Step, Walk, concat, inverse_walk, is_connected, reduce_walk

GENERATOR_PREFIX = "g_"


class SpanningTree:
    """A spanning tree of ``graph`` given by its edge set, rooted at ``root``."""

    def __init__(self, graph: Graph, root: str, tree_edges: Iterable[str]):
        graph.check_vertex(root)
        tree_edges = frozenset(tree_edges)
        for e in tree_edges:
            graph.edge(e)
        if len(tree_edges) != len(graph.vertices) - 1:
            raise InvalidInput(f"a spanning tree needs {len(graph.vertices) - 1} edges, "
                               f"got {len(tree_edges)}")
        parent = {root: None}
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for step in graph.neighbours(v):
                if step.edge not in tree_edges:
                    continue
                w = graph.step_range(step)
                if w in parent:
                    if parent[v] is None or parent[v].edge != step.edge:
                        raise InvalidInput(f"tree edges contain a cycle through {step.edge!r}")
                    continue
                parent[w] = step
                queue.append(w)
        if len(parent) != len(graph.vertices):
            raise InvalidInput("tree edges do not reach every vertex")
        self.graph = graph
        self.root = root
        self.edges = tree_edges
        self._parent = parent
        self._to = {}
        self._group = None
        self._loops = None

    def walk_to(self, w: str) -> Walk:
        """``a_w``: the reduced tree walk from the root to ``w``."""
        if w not in self._to:
            self.graph.check_vertex(w)
            steps = []
            v = w
            while self._parent[v] is not None:
                step = self._parent[v]
                steps.append(step)
                v = self.graph.step_source(step)
            self._to[w] = Walk._unchecked(self.graph, self.root, reversed(steps))
        return self._to[w]

    @property
    def non_tree_edges(self) -> tuple:
        return tuple(e for e in self.graph.edge_ids if e not in self.edges)

    @property
    def free_group(self) -> FreeGroup:
        if self._group is None:
            self._group = FreeGroup(tuple(GENERATOR_PREFIX + e for e in self.non_tree_edges))
        return self._group

    def generator_edge(self, gen: str) -> str:
        if not gen.startswith(GENERATOR_PREFIX) or gen not in self.free_group._position:
            raise GeneratorMismatch(f"{gen!r} is not a generator of {self.free_group}")
        return gen[len(GENERATOR_PREFIX):]

    def representative_loop(self, e: str) -> Walk:
        """Reduced form of ``a_{s(e)} e a_{r(e)}^{-1}``."""
        g = self.graph
        mid = Walk._unchecked(g, g.src(e), [Step(e, 1)])
        return reduce_walk(concat(concat(self.walk_to(g.src(e)), mid),
                                  inverse_walk(self.walk_to(g.dst(e)))))

    def loops(self) -> dict:
        if self._loops is None:
            self._loops = {GENERATOR_PREFIX + e: self.representative_loop(e)
                           for e in self.non_tree_edges}
        return self._loops

    def __eq__(self, other):
        return (isinstance(other, SpanningTree) and self.graph == other.graph
                and self.root == other.root and self.edges == other.edges)

    def __hash__(self):
        return hash((self.root, self.edges))

    def __repr__(self):
        return f"SpanningTree(root={self.root!r}, edges={sorted(self.edges)})"


def spanning_tree(g: Graph, root: str) -> SpanningTree:
    """Breadth-first spanning tree, expanding incident edges in edge-id order."""
    g.check_vertex(root)
    if not is_connected(g):
        raise NotConnected("spanning trees need a connected graph")
    seen = {root}
    tree = []
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for step in g.neighbours(v):
            w = g.step_range(step)
            if w not in seen:
                seen.add(w)
                tree.append(step.edge)
                queue.append(w)
    return SpanningTree(g, root, tree)


def random_spanning_tree(g: Graph, root: str, rng: random.Random) -> SpanningTree:
    """Kruskal over a shuffled edge order; every spanning tree has positive probability."""
    g.check_vertex(root)
    if not is_connected(g):
        raise NotConnected("spanning trees need a connected graph")
    parent = {v: v for v in g.vertices}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    order = list(g.edges)
    rng.shuffle(order)
    tree = []
    for e in order:
        a, b = find(e.src), find(e.dst)
        if a != b:
            parent[a] = b
            tree.append(e.id)
    return SpanningTree(g, root, tree)


def tree_walk(t: SpanningTree, start: str, end: str) -> Walk:
    """The unique reduced walk in the tree from ``start`` to ``end``."""
    for v in (start, end):
        if not t.graph.has_vertex(v):
            raise UnknownVertex(f"unknown vertex {v!r}")
    return reduce_walk(concat(inverse_walk(t.walk_to(start)), t.walk_to(end)))


def pi1_free_group(g: Graph, t: SpanningTree):
    """The free group on non-tree edges and each generator's representative loop."""
    if t.graph != g:
        raise InvalidInput("spanning tree belongs to a different graph")
    return t.free_group, t.loops()


class Labelling:
    """A total map from edge ids to elements of ``group``."""

    def __init__(self, graph: Graph, group, values: dict):
        missing = [e for e in graph.edge_ids if e not in values]
        if missing:
            raise InvalidInput(f"labelling has no value for edges {missing}")
        extra = sorted(set(values) - set(graph.edge_ids))
        if extra:
            raise UnknownEdge(f"labelling mentions unknown edges {extra}")
        for e in graph.edge_ids:
            try:
                group.check(values[e])
            except GroupMismatch:
                raise GroupMismatch(f"label of {e!r} is not in the labelling's group") from None
        self.graph = graph
        self.group = group
        self.values = {e: values[e] for e in graph.edge_ids}

    def __getitem__(self, e):
        return self.values[e]

    def __eq__(self, other):
        return (isinstance(other, Labelling) and self.graph == other.graph
                and self.group == other.group and self.values == other.values)

    def to_dict(self) -> dict:
        return {"graph": self.graph.to_dict(), "group": self.group.to_dict(),
                "values": {e: self.group.format(x) for e, x in self.values.items()}}


def canonical_labelling(g: Graph, t: SpanningTree) -> Labelling:
    """``c(e) = a_{s(e)} e a_{r(e)}^{-1}`` written in the free basis: 1 on tree edges, ``g_e`` otherwise."""
    F = t.free_group
    return Labelling(g, F, {e: F.identity if e in t.edges else F.gen(GENERATOR_PREFIX + e)
                            for e in g.edge_ids})


def walk_to_word(t: SpanningTree, w: Walk) -> FreeWord:
    """Read a walk as a word: ``g_e^{±1}`` per non-tree step, nothing for tree steps."""
    F = t.free_group
    return F.word((GENERATOR_PREFIX + s.edge, s.sign) for s in w.steps if s.edge not in t.edges)


def loop_of_word(t: SpanningTree, w: FreeWord) -> Walk:
    """Inverse of ``walk_to_word`` on reduced loops at the root."""
    if w.group != t.free_group:
        raise GeneratorMismatch(f"word {w} is not over {t.free_group}")
    loops = t.loops()
    steps = []
    for gen, e in w.letters:
        loop = loops[gen]
        steps.extend(loop.steps if e > 0 else inverse_walk(loop).steps)
    return reduce_walk(Walk._unchecked(t.graph, t.root, steps))
