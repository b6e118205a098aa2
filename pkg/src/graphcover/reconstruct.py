"""Rebuild a connected covering ``p: F -> E`` as a relative skew product of ``E``.

With ``T`` the BFS tree of ``E`` at ``p(v)``, ``c`` the canonical labelling
and ``H = p_* pi_1(F, v)``, the map

    phi(z) = (p(z), theta(tau(z))),   phi(e) = (p(e), theta(tau(r(e))))

is an isomorphism ``F -> E x_c (pi_1(E, p(v)) / H)``, where ``tau(z)`` is the
source of the lift of ``a_{p(z)}`` ending at ``z``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .covering import (Covering, GraphMorphism, check_morphism, induced_subgroup,
                       lift_walk, require_covering, sheets, theta)
from .errors import GraphCoverError, IsomorphismFailure, NotAMorphism
from .freegroup import CosetSpace, SubgroupGraph, coset_space
from .fundamental import Labelling, SpanningTree, canonical_labelling, spanning_tree
from .randomgen import random_connected_graph, random_finite_index_subgroup
from .skewprod import SkewProductGraph, pair_id, relative_skew_product, verify_isomorphism


@dataclass
class ReconstructionResult:
    covering: Covering
    base: str
    tree: SpanningTree
    labelling: Labelling
    subgroup: SubgroupGraph
    cosets: CosetSpace
    product: SkewProductGraph
    phi: GraphMorphism
    tau: dict
    theta: dict
    is_isomorphism: bool
    commutes: bool

    @property
    def sheets(self) -> int:
        return len(self.covering.fiber(self.tree.root))

    @property
    def index(self):
        return self.subgroup.index()

    def to_dict(self) -> dict:
        return {
            "base": self.base,
            "base_image": self.tree.root,
            "tree_edges": sorted(self.tree.edges),
            "labelling": self.labelling.to_dict(),
            "subgroup": self.subgroup.to_dict(),
            "cosets": self.cosets.to_dict(),
            "skew": self.product.to_dict(),
            "phi": {"vertex_map": dict(self.phi.vertex_map), "edge_map": dict(self.phi.edge_map)},
            "tau": dict(self.tau),
            "theta": dict(self.theta),
            "checks": {"sheets": self.sheets, "index": self.index, "rank": self.subgroup.rank,
                       "phi_isomorphism": self.is_isomorphism,
                       "projection_after_phi_equals_p": self.commutes},
        }


def reconstruct(p, v: str) -> ReconstructionResult:
    """Accepts a :class:`Covering` or a morphism (checked; raises NotACovering)."""
    cov = p if isinstance(p, Covering) else require_covering(p)
    F, E = cov.domain, cov.codomain
    F.check_vertex(v)
    pmap = cov.morphism.vertex_map
    T = spanning_tree(E, pmap[v])
    c = canonical_labelling(E, T)
    H = induced_subgroup(cov, v, T)
    Q = coset_space(H)
    sp = relative_skew_product(E, c, Q)
    tau = {z: lift_walk(cov, T.walk_to(pmap[z]), z, "range").source for z in F.vertices}
    th = {w: theta(cov, v, w, T, H, Q) for w in sorted(set(tau.values()))}
    vmap = {z: pair_id(pmap[z], th[tau[z]]) for z in F.vertices}
    emap = {e.id: pair_id(cov.morphism.edge_map[e.id], th[tau[e.dst]]) for e in F.edges}
    try:
        phi = check_morphism(vmap, emap, F, sp.product)
    except NotAMorphism as exc:
        raise IsomorphismFailure(f"phi is not a graph morphism: {exc}") from None
    iso = verify_isomorphism(phi)
    commutes = phi.compose(sp.projection) == cov.morphism
    if not (iso and commutes):
        raise IsomorphismFailure(f"reconstruction failed: isomorphism={iso}, commutes={commutes}")
    return ReconstructionResult(cov, v, T, c, H, Q, sp, phi, tau, th, iso, commutes)


@dataclass
class FuzzReport:
    seed: int
    passed: bool
    failures: list = field(default_factory=list)
    base_vertices: int = 0
    base_edges: int = 0
    index: int = 0
    seconds: float = 0.0

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def fuzz_covering(seed: int, max_vertices: int = 12, max_edges: int = 24, max_index: int = 12):
    """A random connected covering built as a skew product projection.

    Returns ``(covering, base vertex of F, expected index)``.
    """
    rng = random.Random(seed)
    E = random_connected_graph(rng, max_vertices, max_edges)
    root = rng.choice(E.vertices)
    T = spanning_tree(E, root)
    c = canonical_labelling(E, T)
    H = random_finite_index_subgroup(rng, T.free_group, max_index)
    sp = relative_skew_product(E, c, coset_space(H))
    v = rng.choice(sp.product.vertices)
    return sp.covering, v, H.n_states


def roundtrip_fuzz(seed: int, max_vertices: int = 12, max_edges: int = 24,
                   max_index: int = 12) -> FuzzReport:
    """Build a random covering, reconstruct it, and cross-check sheets, index and theta."""
    start = time.perf_counter()
    report = FuzzReport(seed, True)
    try:
        cov, v, expected = fuzz_covering(seed, max_vertices, max_edges, max_index)
        report.base_vertices = len(cov.codomain.vertices)
        report.base_edges = len(cov.codomain.edges)
        res = reconstruct(cov, v)
        n = sheets(cov)
        idx = res.index
        report.index = idx
        if not res.is_isomorphism:
            report.failures.append("phi is not an isomorphism")
        if not res.commutes:
            report.failures.append("projection o phi != p")
        if n != idx:
            report.failures.append(f"sheets {n} != index {idx}")
        if idx != expected:
            report.failures.append(f"index {idx} != generated index {expected}")
        fiber = cov.fiber(cov.morphism.vertex_map[v])
        images = [res.theta.get(w) for w in fiber]
        if sorted(images, key=str) != sorted(res.cosets.cosets, key=str):
            report.failures.append("theta is not a bijection onto the cosets")
    except GraphCoverError as exc:
        report.failures.append(f"{type(exc).__name__}: {exc}")
    report.passed = not report.failures
    report.seconds = time.perf_counter() - start
    return report
