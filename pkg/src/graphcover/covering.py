"""Graph morphisms, coverings, unique walk lifting and the fiber/coset bijection."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Optional

from .errors import (AnchorMismatch, BasePointMismatch, GraphCoverError, NotACovering, NotAMorphism,
                     NotConnected, NotInFiber)
from .freegroup import CosetSpace, SubgroupGraph, coset_space, stallings_graph
from .fundamental import SpanningTree, spanning_tree, tree_walk, walk_to_word
from .graph import Graph, Step, Walk, inverse_walk, is_connected


class GraphMorphism:
    """Vertex and edge maps ``F -> E`` commuting with source and range."""

    def __init__(self, domain: Graph, codomain: Graph, vertex_map: Mapping, edge_map: Mapping):
        self.domain = domain
        self.codomain = codomain
        self.vertex_map = {v: vertex_map[v] for v in domain.vertices}
        self.edge_map = {e: edge_map[e] for e in domain.edge_ids}

    def __call__(self, x):
        if x in self.edge_map:
            return self.edge_map[x]
        return self.vertex_map[x]

    def apply_walk(self, w: Walk) -> Walk:
        return Walk._unchecked(self.codomain, self.vertex_map[w.start],
                               [Step(self.edge_map[s.edge], s.sign) for s in w.steps])

    def compose(self, other: "GraphMorphism") -> "GraphMorphism":
        """``other`` after ``self``."""
        return GraphMorphism(self.domain, other.codomain,
                             {v: other.vertex_map[x] for v, x in self.vertex_map.items()},
                             {e: other.edge_map[x] for e, x in self.edge_map.items()})

    def __eq__(self, other):
        return (isinstance(other, GraphMorphism) and self.domain == other.domain
                and self.codomain == other.codomain and self.vertex_map == other.vertex_map
                and self.edge_map == other.edge_map)

    def to_dict(self) -> dict:
        return {"domain": self.domain.to_dict(), "codomain": self.codomain.to_dict(),
                "vertex_map": dict(self.vertex_map), "edge_map": dict(self.edge_map)}


def check_morphism(vertex_map: Mapping, edge_map: Mapping, F: Graph, E: Graph) -> GraphMorphism:
    for v in F.vertices:
        if v not in vertex_map:
            raise NotAMorphism(f"vertex {v!r} has no image")
        if not E.has_vertex(vertex_map[v]):
            raise NotAMorphism(f"vertex {v!r} maps to {vertex_map[v]!r}, which is not a vertex")
    for extra in sorted(set(vertex_map) - set(F.vertices)):
        raise NotAMorphism(f"vertex map mentions unknown vertex {extra!r}")
    for extra in sorted(set(edge_map) - set(F.edge_ids)):
        raise NotAMorphism(f"edge map mentions unknown edge {extra!r}", edge=extra)
    for e in F.edges:
        if e.id not in edge_map:
            raise NotAMorphism(f"edge {e.id!r} has no image", edge=e.id)
        target = edge_map[e.id]
        if not E.has_edge(target):
            raise NotAMorphism(f"edge {e.id!r} maps to {target!r}, which is not an edge", edge=e.id)
        img = E.edge(target)
        if img.src != vertex_map[e.src]:
            raise NotAMorphism(f"edge {e.id!r}: s(p(e)) = {img.src!r} but p(s(e)) = "
                               f"{vertex_map[e.src]!r}", edge=e.id)
        if img.dst != vertex_map[e.dst]:
            raise NotAMorphism(f"edge {e.id!r}: r(p(e)) = {img.dst!r} but p(r(e)) = "
                               f"{vertex_map[e.dst]!r}", edge=e.id)
    return GraphMorphism(F, E, vertex_map, edge_map)


def identity_morphism(g: Graph) -> GraphMorphism:
    return GraphMorphism(g, g, {v: v for v in g.vertices}, {e: e for e in g.edge_ids})


@dataclass
class CoveringFailure:
    vertex: Optional[str]
    reason: str

    def __bool__(self):
        return False

    def __str__(self):
        where = f"at vertex {self.vertex!r}: " if self.vertex is not None else ""
        return f"not a covering {where}{self.reason}"


class Covering:
    """A morphism with its local-bijectivity certificate.

    ``out_lift[v][e]`` is the unique edge of ``s^{-1}(v)`` over ``e`` and
    ``in_lift[v][e]`` the unique edge of ``r^{-1}(v)`` over ``e``.
    """

    def __init__(self, morphism: GraphMorphism, out_lift: dict, in_lift: dict):
        self.morphism = morphism
        self.out_lift = out_lift
        self.in_lift = in_lift
        self._trees = {}

    @property
    def domain(self) -> Graph:
        return self.morphism.domain

    @property
    def codomain(self) -> Graph:
        return self.morphism.codomain

    def __call__(self, x):
        return self.morphism(x)

    def fiber(self, u: str) -> list:
        return [z for z in self.domain.vertices if self.morphism.vertex_map[z] == u]

    def tree(self, v: str) -> SpanningTree:
        """BFS spanning tree of the covering graph at ``v`` (cached)."""
        if v not in self._trees:
            self._trees[v] = spanning_tree(self.domain, v)
        return self._trees[v]

    def __bool__(self):
        return True


def is_covering(p: GraphMorphism):
    """Return a :class:`Covering` or the first :class:`CoveringFailure` found."""
    F, E = p.domain, p.codomain
    out_lift, in_lift = {}, {}
    for v in F.vertices:
        u = p.vertex_map[v]
        for kind, local, target, store in (("s", F.out_edges, E.out_edges, out_lift),
                                           ("r", F.in_edges, E.in_edges, in_lift)):
            upstairs = local(v)
            downstairs = target(u)
            images = {}
            for e in upstairs:
                x = p.edge_map[e]
                if x in images:
                    return CoveringFailure(v, f"{kind}^-1({v}) has edges {images[x]!r} and {e!r} "
                                              f"both over {x!r}")
                images[x] = e
            if len(upstairs) != len(downstairs):
                return CoveringFailure(v, f"|{kind}^-1({v})| = {len(upstairs)} != "
                                          f"{len(downstairs)} = |{kind}^-1({u})|")
            store[v] = images
    hit_v = set(p.vertex_map.values())
    for u in E.vertices:
        if u not in hit_v:
            return CoveringFailure(None, f"vertex {u!r} is not in the image")
    hit_e = set(p.edge_map.values())
    for e in E.edge_ids:
        if e not in hit_e:
            return CoveringFailure(None, f"edge {e!r} is not in the image")
    return Covering(p, out_lift, in_lift)


def require_covering(p: GraphMorphism) -> Covering:
    cov = is_covering(p)
    if not cov:
        raise NotACovering(str(cov))
    return cov


def lift_walk(p: Covering, a: Walk, anchor: str, anchor_end: str = "source") -> Walk:
    """The unique lift of ``a`` whose source (or range) is ``anchor``."""
    if anchor_end not in ("source", "range"):
        raise ValueError("anchor_end must be 'source' or 'range'")
    p.domain.check_vertex(anchor)
    if anchor_end == "range":
        return inverse_walk(lift_walk(p, inverse_walk(a), anchor, "source"))
    if p.morphism.vertex_map[anchor] != a.source:
        raise AnchorMismatch(f"p({anchor}) = {p.morphism.vertex_map[anchor]!r} but the walk "
                             f"starts at {a.source!r}")
    F = p.domain
    here = anchor
    steps = []
    for step in a.steps:
        table = p.out_lift if step.sign > 0 else p.in_lift
        e = table[here][step.edge]
        steps.append(Step(e, step.sign))
        here = F.dst(e) if step.sign > 0 else F.src(e)
    return Walk._unchecked(F, anchor, steps)


def _require_connected(p):
    if not is_connected(p.domain):
        raise NotConnected("covering graph is not connected")
    if not is_connected(p.codomain):
        raise NotConnected("base graph is not connected")


def induced_subgroup(p: Covering, v: str, t_E: SpanningTree) -> SubgroupGraph:
    """Folded automaton of ``p_* pi_1(F, v)`` inside ``pi_1(E, p(v))``."""
    _require_connected(p)
    p.domain.check_vertex(v)
    if t_E.root != p.morphism.vertex_map[v]:
        raise BasePointMismatch(f"tree is rooted at {t_E.root!r}, expected p({v}) = "
                                f"{p.morphism.vertex_map[v]!r}")
    t_F = p.tree(v)
    words = [walk_to_word(t_E, p.morphism.apply_walk(loop)) for loop in t_F.loops().values()]
    return stallings_graph(words, group=t_E.free_group)


def theta(p: Covering, v: str, w: str, t_E: SpanningTree, h: SubgroupGraph,
          cosets: CosetSpace = None) -> str:
    """Coset ``p(a) H`` for a reduced walk ``a`` from ``w`` to ``v`` (taken in F's tree)."""
    if p.morphism.vertex_map.get(w) != p.morphism.vertex_map[v]:
        raise NotInFiber(f"{w!r} is not in the fiber over p({v}) = {p.morphism.vertex_map[v]!r}")
    if cosets is None:
        cosets = coset_space(h)
    a = tree_walk(p.tree(v), w, v)
    return theta_of_walk(p, a, t_E, cosets)


def theta_of_walk(p: Covering, a: Walk, t_E: SpanningTree, cosets: CosetSpace) -> str:
    return cosets.coset_of(walk_to_word(t_E, p.morphism.apply_walk(a)))


def theta_map(p: Covering, v: str, t_E: SpanningTree, h: SubgroupGraph,
              cosets: CosetSpace = None) -> dict:
    if cosets is None:
        cosets = coset_space(h)
    fiber = p.fiber(p.morphism.vertex_map[v])
    return {w: theta(p, v, w, t_E, h, cosets) for w in fiber}


def sheets(p: Covering) -> int:
    _require_connected(p)
    sizes = {}
    for z, u in p.morphism.vertex_map.items():
        sizes[u] = sizes.get(u, 0) + 1
    counts = {sizes.get(u, 0) for u in p.codomain.vertices}
    if len(counts) != 1:
        raise GraphCoverError(f"internal inconsistency: fibers of a connected covering have sizes {counts}")
    return counts.pop()
