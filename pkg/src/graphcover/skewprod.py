"""Relative skew products ``E x_c (G/H)``, right group actions and their quotients.

Product vertices and edges are named ``"(v|q)"`` and ``"(e|q)"`` where ``q`` is
the coset name, with ``r(e, q) = (r(e), q)`` and ``s(e, q) = (s(e), c(e) q)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping, Optional

from .covering import Covering, GraphMorphism, check_morphism, is_covering
from .errors import (GroupMismatch, InvalidInput, IsomorphismFailure, NotAMorphism, NotAnAction,
                     NotCohomologous, NotFree)
from .finite import FiniteGroup, FiniteSubgroup
from .fundamental import Labelling, SpanningTree, walk_to_word
from .graph import Graph, concat, inverse_walk


def pair_id(x: str, q: str) -> str:
    return f"({x}|{q})"


@dataclass
class SkewProductGraph:
    base: Graph
    labelling: Labelling
    cosets: object
    product: Graph
    projection: GraphMorphism
    covering: Covering
    vertex_pair: dict  # product vertex id -> (base vertex, coset)
    edge_pair: dict    # product edge id -> (base edge, coset)
    action: Optional["GroupAction"] = None

    def vertex(self, v: str, q: str) -> str:
        return pair_id(v, q)

    def edge(self, e: str, q: str) -> str:
        return pair_id(e, q)

    def to_dict(self) -> dict:
        return {
            "base": self.base.to_dict(),
            "labelling": {"group": self.labelling.group.to_dict(),
                          "values": {e: self.labelling.group.format(x)
                                     for e, x in self.labelling.values.items()}},
            "cosets": self.cosets.to_dict(),
            "product": self.product.to_dict(),
            "projection": {"vertex_map": dict(self.projection.vertex_map),
                           "edge_map": dict(self.projection.edge_map)},
        }


def relative_skew_product(E: Graph, c: Labelling, Q) -> SkewProductGraph:
    if c.graph != E:
        raise InvalidInput("labelling is over a different graph")
    if c.group != Q.group:
        raise GroupMismatch("labelling group differs from the coset space's group")
    vertex_pair = {pair_id(v, q): (v, q) for v in E.vertices for q in Q.cosets}
    edge_pair = {}
    edges = []
    for e in E.edges:
        label = c[e.id]
        for q in Q.cosets:
            eid = pair_id(e.id, q)
            edge_pair[eid] = (e.id, q)
            edges.append((eid, pair_id(e.src, Q.act(label, q)), pair_id(e.dst, q)))
    product = Graph(vertex_pair, edges)
    projection = GraphMorphism(product, E, {x: vq[0] for x, vq in vertex_pair.items()},
                               {x: eq[0] for x, eq in edge_pair.items()})
    cov = is_covering(projection)
    if not cov:
        raise IsomorphismFailure(f"skew product projection failed the covering check: {cov}")
    return SkewProductGraph(E, c, Q, product, projection, cov, vertex_pair, edge_pair)


class GroupAction:
    """A right action of a finite group on a graph by automorphisms.

    ``vertex_action[h][x]`` is ``x.h``; the action law is ``x.(gh) = (x.g).h``.
    """

    def __init__(self, group: FiniteGroup, graph: Graph, vertex_action: Mapping, edge_action: Mapping):
        self.group = group
        self.graph = graph
        self.vertex_action = {h: dict(vertex_action[h]) for h in group.elements()}
        self.edge_action = {h: dict(edge_action[h]) for h in group.elements()}

    def vertex(self, x: str, h: int) -> str:
        return self.vertex_action[h][x]

    def edge(self, e: str, h: int) -> str:
        return self.edge_action[h][e]

    def is_free(self) -> bool:
        return not self.fixed_points()

    def fixed_points(self):
        out = []
        for h in self.group.elements():
            if h == self.group.identity:
                continue
            out += [(h, x) for x, y in self.vertex_action[h].items() if x == y]
            out += [(h, x) for x, y in self.edge_action[h].items() if x == y]
        return out

    def to_dict(self) -> dict:
        names = self.group.names
        return {"group": self.group.to_dict()["finite"],
                "vertex_action": {names[h]: dict(sorted(m.items())) for h, m in self.vertex_action.items()},
                "edge_action": {names[h]: dict(sorted(m.items())) for h, m in self.edge_action.items()}}


def validate_action(group: FiniteGroup, graph: Graph, vertex_action: Mapping, edge_action: Mapping,
                    require_free: bool = False) -> GroupAction:
    G = group
    for h in G.elements():
        if h not in vertex_action or h not in edge_action:
            raise NotAnAction(f"no action given for element {G.names[h]!r}")
        vmap, emap = vertex_action[h], edge_action[h]
        if set(vmap) != set(graph.vertices) or sorted(vmap.values()) != list(graph.vertices):
            raise NotAnAction(f"element {G.names[h]!r} does not permute the vertices")
        if set(emap) != set(graph.edge_ids) or sorted(emap.values()) != list(graph.edge_ids):
            raise NotAnAction(f"element {G.names[h]!r} does not permute the edges")
        for e in graph.edges:
            img = graph.edge(emap[e.id])
            if img.src != vmap[e.src] or img.dst != vmap[e.dst]:
                raise NotAnAction(f"element {G.names[h]!r} is not a graph automorphism at edge {e.id!r}")
    ident = G.identity
    if any(x != y for x, y in vertex_action[ident].items()) or \
            any(x != y for x, y in edge_action[ident].items()):
        raise NotAnAction("the identity does not act trivially")
    for g in G.elements():
        for h in G.elements():
            gh = G.multiply(g, h)
            for table in (vertex_action, edge_action):
                for x in table[g]:
                    if table[h][table[g][x]] != table[gh][x]:
                        raise NotAnAction(f"action law fails: ({x}.{G.names[g]}).{G.names[h]} != "
                                          f"{x}.({G.names[g]}{G.names[h]})")
    action = GroupAction(G, graph, vertex_action, edge_action)
    if require_free and not action.is_free():
        h, x = action.fixed_points()[0]
        raise NotFree(f"element {G.names[h]!r} fixes {x!r}")
    return action


def restrict_action(a: GroupAction, subgroup: FiniteSubgroup) -> GroupAction:
    """The action of ``subgroup`` (re-indexed as a standalone group)."""
    H, members = subgroup.as_group()
    return GroupAction(H, a.graph, {i: a.vertex_action[g] for i, g in enumerate(members)},
                       {i: a.edge_action[g] for i, g in enumerate(members)})


def full_skew_product(E: Graph, c: Labelling) -> SkewProductGraph:
    """``E x_c G`` for finite ``G`` with the free right action ``(x, g).h = (x, gh)``."""
    G = c.group
    if not isinstance(G, FiniteGroup):
        raise GroupMismatch("full skew products are only built for finite groups")
    Q = FiniteSubgroup(G, {G.identity}).coset_space()
    sp = relative_skew_product(E, c, Q)
    names = G.names
    va, ea = {}, {}
    for h in G.elements():
        va[h] = {x: pair_id(v, names[G.multiply(G.parse(q), h)]) for x, (v, q) in sp.vertex_pair.items()}
        ea[h] = {x: pair_id(e, names[G.multiply(G.parse(q), h)]) for x, (e, q) in sp.edge_pair.items()}
    sp.action = validate_action(G, sp.product, va, ea, require_free=True)
    return sp


@dataclass
class QuotientResult:
    graph: Graph
    morphism: GraphMorphism
    vertex_orbits: dict = field(default_factory=dict)
    edge_orbits: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {"quotient": self.graph.to_dict(),
                "quotient_map": {"vertex_map": dict(self.morphism.vertex_map),
                                 "edge_map": dict(self.morphism.edge_map)},
                "vertex_orbits": {k: sorted(v) for k, v in self.vertex_orbits.items()},
                "edge_orbits": {k: sorted(v) for k, v in self.edge_orbits.items()}}


def quotient_graph(X: Graph, a: GroupAction, require_free: bool = False) -> QuotientResult:
    """Orbit graph ``X/H``; each orbit is named by its least member."""
    if a.graph != X:
        raise NotAnAction("action is on a different graph")
    if require_free and not a.is_free():
        h, x = a.fixed_points()[0]
        raise NotFree(f"element {a.group.names[h]!r} fixes {x!r}")
    elems = list(a.group.elements())
    vorb = {}
    vorbits = {}
    for x in X.vertices:
        if x not in vorb:
            orbit = {a.vertex_action[h][x] for h in elems}
            name = min(orbit)
            vorbits[name] = orbit
            for y in orbit:
                vorb[y] = name
    eorb = {}
    eorbits = {}
    edges = []
    for e in X.edges:
        if e.id not in eorb:
            orbit = {a.edge_action[h][e.id] for h in elems}
            name = min(orbit)
            eorbits[name] = orbit
            for y in orbit:
                eorb[y] = name
            rep = X.edge(name)
            edges.append((name, vorb[rep.src], vorb[rep.dst]))
    Q = Graph(vorbits, edges)
    m = check_morphism(vorb, eorb, X, Q)
    return QuotientResult(Q, m, vorbits, eorbits)


def verify_isomorphism(m: GraphMorphism) -> bool:
    """True iff both maps are bijections (commutation is already part of being a morphism)."""
    F, E = m.domain, m.codomain
    return (len(F.vertices) == len(E.vertices) and len(F.edges) == len(E.edges)
            and set(m.vertex_map.values()) == set(E.vertices)
            and set(m.edge_map.values()) == set(E.edge_ids))


def quotient_identity(E: Graph, c: Labelling, subgroup: FiniteSubgroup):
    """The map ``(E x_c G)/H -> E x_c (G/H)`` induced by ``(v, g) -> (v, gH)``.

    Returns ``(morphism, is_isomorphism, relative_skew_product)``.
    """
    G = c.group
    full = full_skew_product(E, c)
    quotient = quotient_graph(full.product, restrict_action(full.action, subgroup), require_free=True)
    Q = subgroup.coset_space()
    rel = relative_skew_product(E, c, Q)
    vmap = {}
    for x in quotient.graph.vertices:
        v, g = full.vertex_pair[x]
        vmap[x] = pair_id(v, Q.coset_of(G.parse(g)))
    emap = {}
    for x in quotient.graph.edge_ids:
        e, g = full.edge_pair[x]
        emap[x] = pair_id(e, Q.coset_of(G.parse(g)))
    m = check_morphism(vmap, emap, quotient.graph, rel.product)
    return m, verify_isomorphism(m), rel


@dataclass
class GrossTuckerResult:
    quotient: QuotientResult
    d: Labelling
    skew: SkewProductGraph
    phi: GraphMorphism
    transversal: dict
    edge_representatives: dict
    isomorphism: bool
    equivariant: bool

    @property
    def ok(self) -> bool:
        return self.isomorphism and self.equivariant

    def to_dict(self) -> dict:
        H = self.d.group
        return {"quotient": self.quotient.graph.to_dict(),
                "d": {"group": H.to_dict(), "values": {e: H.format(x) for e, x in self.d.values.items()}},
                "transversal": dict(self.transversal),
                "edge_representatives": dict(self.edge_representatives),
                "skew_product": self.skew.product.to_dict(),
                "phi": {"vertex_map": dict(self.phi.vertex_map), "edge_map": dict(self.phi.edge_map)},
                "isomorphism": self.isomorphism,
                "equivariant": self.equivariant}


def gross_tucker(X: Graph, a: GroupAction) -> GrossTuckerResult:
    """Decompose a free right action as ``X ~ (X/H) x_d H``.

    Transversal vertices are the least members of their orbits; the edge
    representative of an orbit is the member whose range is the transversal
    vertex, and ``d(f)`` is the ``h`` with ``s(rep) = x_{s(f)} . h``.
    """
    H = a.group
    quotient = quotient_graph(X, a, require_free=True)
    Q = quotient.graph
    coord = {}  # vertex x -> h with x = x_orbit . h
    for name in Q.vertices:
        for h in H.elements():
            coord[a.vertex_action[h][name]] = h
    reps = {}
    d_values = {}
    for f in Q.edges:
        member = X.edge(f.id)
        h = coord[member.dst]
        rep = a.edge_action[H.inverse(h)][f.id]
        reps[f.id] = rep
        if X.dst(rep) != f.dst:
            raise IsomorphismFailure(f"edge representative {rep!r} does not end at {f.dst!r}")
        d_values[f.id] = coord[X.src(rep)]
    d = Labelling(Q, H, d_values)
    skew = full_skew_product(Q, d)
    vmap = {x: a.vertex_action[H.parse(g)][q] for x, (q, g) in skew.vertex_pair.items()}
    emap = {x: a.edge_action[H.parse(g)][reps[f]] for x, (f, g) in skew.edge_pair.items()}
    try:
        phi = check_morphism(vmap, emap, skew.product, X)
    except NotAMorphism as exc:
        raise IsomorphismFailure(f"Gross-Tucker map is not a morphism: {exc}") from None
    iso = verify_isomorphism(phi)
    equivariant = all(
        phi.vertex_map[skew.action.vertex_action[h][y]] == a.vertex_action[h][phi.vertex_map[y]]
        for h in H.elements() for y in skew.product.vertices
    ) and all(
        phi.edge_map[skew.action.edge_action[h][y]] == a.edge_action[h][phi.edge_map[y]]
        for h in H.elements() for y in skew.product.edge_ids
    )
    return GrossTuckerResult(quotient, d, skew, phi, {q: q for q in Q.vertices},
                             reps, iso, equivariant)


def cohomologous(c: Labelling, c2: Labelling, b: Mapping) -> bool:
    """Check ``b(s(e)) c2(e) == c(e) b(r(e))`` on every edge."""
    if c.group != c2.group:
        raise GroupMismatch("labellings take values in different groups")
    if c.graph != c2.graph:
        raise InvalidInput("labellings are over different graphs")
    G, E = c.group, c.graph
    for v in E.vertices:
        if v not in b:
            raise InvalidInput(f"b has no value at vertex {v!r}")
        G.check(b[v])
    return all(G.multiply(b[e.src], c2[e.id]) == G.multiply(c[e.id], b[e.dst]) for e in E.edges)


def coboundary_isomorphism(c: Labelling, c2: Labelling, b: Mapping, Q):
    """Isomorphism ``E x_{c2} Q -> E x_c Q``: ``(v, q) -> (v, b(v) q)``, ``(e, q) -> (e, b(r(e)) q)``.

    Returns ``(morphism, source_product, target_product)`` after checking it.
    """
    if not cohomologous(c, c2, b):
        raise NotCohomologous("b(s(e)) c2(e) != c(e) b(r(e)) for some edge")
    E = c.graph
    src = relative_skew_product(E, c2, Q)
    dst = relative_skew_product(E, c, Q)
    vmap = {x: pair_id(v, Q.act(b[v], q)) for x, (v, q) in src.vertex_pair.items()}
    emap = {x: pair_id(e, Q.act(b[E.dst(e)], q)) for x, (e, q) in src.edge_pair.items()}
    try:
        m = check_morphism(vmap, emap, src.product, dst.product)
    except NotAMorphism as exc:
        raise IsomorphismFailure(f"coboundary map is not a morphism: {exc}") from None
    if not verify_isomorphism(m):
        raise IsomorphismFailure("coboundary map is not bijective")
    return m, src, dst


def tree_change(t1: SpanningTree, t2: SpanningTree):
    """Compare the canonical labellings of two spanning trees with the same root.

    Both labellings are written in ``t1``'s free basis. Returns ``(c1, c2, b)``
    with ``b(w)`` the word of the loop ``a_w a'_w^{-1}``.
    """
    if t1.graph != t2.graph or t1.root != t2.root:
        raise InvalidInput("trees must span the same graph from the same root")
    E = t1.graph
    F = t1.free_group
    c1 = Labelling(E, F, {e: walk_to_word(t1, t1.representative_loop(e)) for e in E.edge_ids})
    c2 = Labelling(E, F, {e: walk_to_word(t1, t2.representative_loop(e)) for e in E.edge_ids})
    b = {w: walk_to_word(t1, concat(t1.walk_to(w), inverse_walk(t2.walk_to(w)))) for w in E.vertices}
    return c1, c2, b


@dataclass
class SkeletonReport:
    violations: list
    fiber_checks: int
    paths_checked: int
    lifts_checked: int

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {"passed": self.passed, "fiber_checks": self.fiber_checks,
                "paths_checked": self.paths_checked, "lifts_checked": self.lifts_checked,
                "violations": list(self.violations)}


def ck_skeleton_check(E: Graph, c: Labelling, Q, pathlen: int = 4,
                      product: SkewProductGraph = None) -> SkeletonReport:
    """Fiber bijections at every product vertex and unique lifting of directed paths.

    A directed path ``e1 ... en`` has ``r(e_i) = s(e_{i+1})`` and range
    ``r(en)``; it is lifted backwards from ``(r(en), q)``.
    """
    sp = product or relative_skew_product(E, c, Q)
    P = sp.product
    G = c.group
    violations = []
    fiber_checks = 0
    for v in E.vertices:
        for q in Q.cosets:
            x = pair_id(v, q)
            out_img = [pair_id(e, Q.act(G.inverse(c[e]), q)) for e in E.out_edges(v)]
            if sorted(out_img) != sorted(P.out_edges(x)) or len(set(out_img)) != len(out_img):
                violations.append(f"s^-1({x}) is not {{(e, c(e)^-1 q) : s(e) = {v}}}")
            in_img = [pair_id(e, q) for e in E.in_edges(v)]
            if sorted(in_img) != sorted(P.in_edges(x)) or len(set(in_img)) != len(in_img):
                violations.append(f"r^-1({x}) is not {{(e, q) : r(e) = {v}}}")
            fiber_checks += 1
    proj = sp.projection.edge_map
    paths = 0
    lifts = 0

    def extend(path, partials):
        # path: base edges, newest first; partials: per coset, list of (lift, start vertex)
        nonlocal paths, lifts
        paths += 1
        for q, cands in partials.items():
            lifts += 1
            if len(cands) != 1:
                word = " ".join(path)
                violations.append(f"path [{word}] has {len(cands)} lifts with range "
                                  f"({E.dst(path[-1])}|{q})")
        if len(path) == pathlen:
            return
        first = path[0]
        for e in E.in_edges(E.src(first)):
            nxt = {}
            for q, cands in partials.items():
                grown = []
                for lift, start in cands:
                    for f in P.in_edges(start):
                        if proj[f] == e:
                            grown.append(([f] + lift, P.src(f)))
                nxt[q] = grown
            extend([e] + path, nxt)

    if pathlen >= 1:
        for e in E.edges:
            partials = {}
            for q in Q.cosets:
                end = pair_id(e.dst, q)
                partials[q] = [([f], P.src(f)) for f in P.in_edges(end) if proj[f] == e.id]
            extend([e.id], partials)
    return SkeletonReport(violations, fiber_checks, paths, lifts)
