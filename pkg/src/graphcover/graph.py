"""Finite directed multigraphs and walks in their underlying undirected graph.

A walk is a sequence of signed edge traversals: ``Step(e, +1)`` crosses ``e``
from its source to its range, ``Step(e, -1)`` crosses it backwards. Walks
are composed left to right, so ``r(a_i) == s(a_{i+1})``.
"""

from __future__ import annotations

from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, NamedTuple

from .errors import (DanglingEndpoint, DuplicateId, EndpointMismatch, InvalidGraph, InvalidId,
                     NotComposable, UnknownEdge, UnknownVertex)


class Edge(NamedTuple):
    id: str
    src: str
    dst: str


class Step(NamedTuple):
    """One signed edge traversal: ``sign`` is +1 forward, -1 backward."""

    edge: str
    sign: int  # +1 forward, -1 reverse

    def inverse(self) -> "Step":
        return Step(self.edge, -self.sign)

    def __str__(self):
        return self.edge if self.sign > 0 else self.edge + "'"


def _id_problem(kind, ident):
    if not isinstance(ident, str) or not ident:
        return f"{kind} id {ident!r} must be a nonempty string"
    if any(ch.isspace() for ch in ident):
        return f"{kind} id {ident!r} contains whitespace"
    if kind == "edge" and ident.endswith("'"):
        return f"edge id {ident!r} ends with an apostrophe"
    return None


@dataclass(frozen=True)
class Graph:
    """Directed multigraph ``(E0, E1, r, s)``; loops and parallel edges allowed.

    Vertices and edges are stored sorted by id so that every derived output
    is deterministic.
    """

    vertices: tuple
    edges: tuple
    _edge: dict = field(init=False, repr=False, compare=False, hash=False)
    _out: dict = field(init=False, repr=False, compare=False, hash=False)
    _in: dict = field(init=False, repr=False, compare=False, hash=False)

    def __init__(self, vertices: Iterable[str], edges: Iterable):
        vertices = list(vertices)
        edges = [Edge(*e) for e in edges]
        problems = []
        kinds = []
        for v in vertices:
            msg = _id_problem("vertex", v)
            if msg:
                problems.append(msg)
                kinds.append(InvalidId)
        for e in edges:
            msg = _id_problem("edge", e.id)
            if msg:
                problems.append(msg)
                kinds.append(InvalidId)
        for ident, count in _duplicates(vertices):
            problems.append(f"duplicate vertex id {ident!r} ({count} times)")
            kinds.append(DuplicateId)
        for ident, count in _duplicates(e.id for e in edges):
            problems.append(f"duplicate edge id {ident!r} ({count} times)")
            kinds.append(DuplicateId)
        vset = set(vertices)
        for e in edges:
            for end in ("src", "dst"):
                if getattr(e, end) not in vset:
                    problems.append(f"edge {e.id!r}: {end} {getattr(e, end)!r} is not a vertex")
                    kinds.append(DanglingEndpoint)
        if problems:
            raise kinds[0](problems[0], problems)

        object.__setattr__(self, "vertices", tuple(sorted(vertices)))
        object.__setattr__(self, "edges", tuple(sorted(edges)))
        out, inc = defaultdict(list), defaultdict(list)
        for e in self.edges:
            out[e.src].append(e.id)
            inc[e.dst].append(e.id)
        object.__setattr__(self, "_edge", {e.id: e for e in self.edges})
        object.__setattr__(self, "_out", {v: tuple(out[v]) for v in self.vertices})
        object.__setattr__(self, "_in", {v: tuple(inc[v]) for v in self.vertices})

    def __reduce__(self):
        return (Graph, (self.vertices, self.edges))

    @property
    def edge_ids(self) -> tuple:
        return tuple(e.id for e in self.edges)

    def has_vertex(self, v) -> bool:
        return v in self._out

    def has_edge(self, e) -> bool:
        return e in self._edge

    def edge(self, e: str) -> Edge:
        try:
            return self._edge[e]
        except KeyError:
            raise UnknownEdge(f"unknown edge {e!r}") from None

    def src(self, e: str) -> str:
        return self.edge(e).src

    def dst(self, e: str) -> str:
        return self.edge(e).dst

    def out_edges(self, v: str) -> tuple:
        """``s^{-1}(v)``, sorted by id."""
        try:
            return self._out[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def in_edges(self, v: str) -> tuple:
        """``r^{-1}(v)``, sorted by id."""
        try:
            return self._in[v]
        except KeyError:
            raise UnknownVertex(f"unknown vertex {v!r}") from None

    def check_vertex(self, v):
        if v not in self._out:
            raise UnknownVertex(f"unknown vertex {v!r}")

    def step_source(self, step: Step) -> str:
        e = self.edge(step.edge)
        return e.src if step.sign > 0 else e.dst

    def step_range(self, step: Step) -> str:
        e = self.edge(step.edge)
        return e.dst if step.sign > 0 else e.src

    def neighbours(self, v):
        """Signed steps leaving ``v`` in the underlying undirected graph."""
        steps = [Step(e, 1) for e in self.out_edges(v)]
        steps += [Step(e, -1) for e in self.in_edges(v)]
        return sorted(steps)

    def to_dict(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [{"id": e.id, "src": e.src, "dst": e.dst} for e in self.edges],
        }


def _duplicates(items):
    seen = defaultdict(int)
    for x in items:
        seen[x] += 1
    return sorted((k, n) for k, n in seen.items() if n > 1)


def validate_graph(raw: Mapping) -> Graph:
    """Build a :class:`Graph` from ``{"vertices": [...], "edges": [{id, src, dst}]}``.

    Raises a subclass of :class:`InvalidGraph` whose ``violations`` attribute
    lists every problem, not just the first.
    """
    try:
        vertices = list(raw["vertices"])
        edges = [(e["id"], e["src"], e["dst"]) for e in raw["edges"]]
    except (KeyError, TypeError) as exc:
        raise InvalidGraph(f"malformed graph description: {exc!r}") from None
    return Graph(vertices, edges)


def is_connected(g: Graph) -> bool:
    """True iff the underlying undirected graph has exactly one component."""
    if not g.vertices:
        return False
    return len(_component(g, g.vertices[0])) == len(g.vertices)


def _component(g, start):
    seen = {start}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for step in g.neighbours(v):
            w = g.step_range(step)
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return seen


@dataclass(frozen=True)
class Walk:
    """A composable walk; empty walks keep an explicit anchor ``start``."""

    graph: Graph = field(compare=False, repr=False)
    start: str
    steps: tuple = ()

    def __post_init__(self):
        g = self.graph
        steps = tuple(Step(s[0], s[1]) for s in self.steps)
        object.__setattr__(self, "steps", steps)
        g.check_vertex(self.start)
        here = self.start
        for i, step in enumerate(steps):
            if step.sign not in (1, -1):
                raise NotComposable(f"step {i}: sign must be +1 or -1, got {step.sign!r}")
            if not g.has_edge(step.edge):
                raise UnknownEdge(f"step {i}: unknown edge {step.edge!r}")
            if g.step_source(step) != here:
                raise NotComposable(f"step {i} ({step}) does not start at {here!r}")
            here = g.step_range(step)

    @classmethod
    def _unchecked(cls, graph, start, steps):
        w = object.__new__(cls)
        object.__setattr__(w, "graph", graph)
        object.__setattr__(w, "start", start)
        object.__setattr__(w, "steps", tuple(steps))
        return w

    @classmethod
    def of_edges(cls, graph: Graph, steps) -> "Walk":
        """Walk from a nonempty step list; tokens may be ``Step``s or ``(edge, sign)``."""
        steps = [Step(*s) for s in steps]
        if not steps:
            raise NotComposable("an empty walk needs an explicit anchor vertex")
        graph.edge(steps[0].edge)
        return cls(graph, graph.step_source(steps[0]), tuple(steps))

    @property
    def source(self) -> str:
        return self.start

    @property
    def range(self) -> str:
        if not self.steps:
            return self.start
        return self.graph.step_range(self.steps[-1])

    @property
    def is_loop(self) -> bool:
        return self.source == self.range

    def is_reduced(self) -> bool:
        return all(a.edge != b.edge or a.sign == b.sign
                   for a, b in zip(self.steps, self.steps[1:]))

    def __len__(self):
        return len(self.steps)

    def __str__(self):
        return format_walk(self)


def format_walk(w: Walk) -> str:
    if not w.steps:
        return "@" + w.start
    return " ".join(str(s) for s in w.steps)


def parse_walk(g: Graph, text: str) -> Walk:
    """Parse ``"e f' g"`` (apostrophe = reverse) or ``"@v"`` for the empty walk at v."""
    tokens = text.split()
    if len(tokens) == 1 and tokens[0].startswith("@"):
        return Walk(g, tokens[0][1:])
    if not tokens:
        raise NotComposable("empty walk text; write '@v' for the empty walk at v")
    steps = []
    for tok in tokens:
        if tok.startswith("@"):
            raise NotComposable(f"anchor token {tok!r} only allowed on its own")
        steps.append(Step(tok[:-1], -1) if tok.endswith("'") else Step(tok, 1))
    return Walk.of_edges(g, steps)


def reduce_walk(w: Walk) -> Walk:
    """Free reduction by one left-to-right stack pass."""
    stack = []
    for step in w.steps:
        if stack and stack[-1].edge == step.edge and stack[-1].sign == -step.sign:
            stack.pop()
        else:
            stack.append(step)
    return Walk._unchecked(w.graph, w.start, stack)


def inverse_walk(w: Walk) -> Walk:
    return Walk._unchecked(w.graph, w.range, [s.inverse() for s in reversed(w.steps)])


def concat(a: Walk, b: Walk) -> Walk:
    """Plain (unreduced) concatenation."""
    if a.range != b.source:
        raise EndpointMismatch(f"walk ends at {a.range!r} but next walk starts at {b.source!r}")
    return Walk._unchecked(a.graph, a.start, a.steps + b.steps)


def concat_reduce(a: Walk, b: Walk) -> Walk:
    """The reduced product ``ab``."""
    return reduce_walk(concat(a, b))
