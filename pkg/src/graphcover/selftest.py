"""The acceptance property suite, runnable from the CLI and from pytest.

Each criterion is a function ``(seed, cases) -> CriterionResult``. All case
generation is seeded, so reports are reproducible byte for byte (apart from
timings, which are reported separately).
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from . import fixtures, oracles
from .covering import induced_subgroup, is_covering, require_covering, sheets, theta_map
from .errors import GraphCoverError
from .freegroup import FreeGroup, coset_space, stallings_graph
from .fundamental import canonical_labelling, random_spanning_tree, spanning_tree
from .graph import reduce_walk
from .randomgen import (random_connected_graph, random_finite_group, random_finite_index_subgroup,
                        random_finite_labelling, random_free_labelling, random_subgroup, random_walk,
                        random_word)
from .reconstruct import fuzz_covering, reconstruct
from .skewprod import (ck_skeleton_check, coboundary_isomorphism, cohomologous, full_skew_product,
                       gross_tucker, quotient_identity, relative_skew_product, restrict_action,
                       tree_change)


@dataclass
class CriterionResult:
    number: int
    title: str
    cases: int = 0
    failures: list = field(default_factory=list)
    max_case_seconds: float = 0.0
    time_limit: float = None

    @property
    def passed(self) -> bool:
        within = self.time_limit is None or self.max_case_seconds < self.time_limit
        return self.cases > 0 and not self.failures and within

    def line(self) -> str:
        verdict = "PASS" if self.passed else "FAIL"
        timing = f", slowest case {self.max_case_seconds:.3f}s"
        if self.time_limit is not None:
            timing += f" (limit {self.time_limit:g}s)"
        extra = f"; first failure: {self.failures[0]}" if self.failures else ""
        return f"[{verdict}] criterion {self.number}: {self.title} - {self.cases} cases{timing}{extra}"

    def to_dict(self) -> dict:
        return {"criterion": self.number, "title": self.title, "passed": self.passed,
                "cases": self.cases, "failures": self.failures[:20]}


class _Timer:
    def __init__(self, result):
        self.result = result

    def __enter__(self):
        self.t = time.perf_counter()

    def __exit__(self, *exc):
        dt = time.perf_counter() - self.t
        self.result.max_case_seconds = max(self.result.max_case_seconds, dt)
        self.result.cases += 1
        return False


def covering_corpus(seed: int, cases: int):
    """The four named fixtures followed by ``cases`` fuzz coverings."""
    out = [(name, require_covering(m), v) for name, m, v in fixtures.fixture_coverings()]
    for k in range(cases):
        cov, v, _ = fuzz_covering(seed * 100003 + k)
        out.append((f"fuzz#{k}", cov, v))
    return out


def criterion_sheets_index(seed=0, cases=100) -> CriterionResult:
    res = CriterionResult(1, "sheets = index and theta is a bijection", time_limit=1.0)
    for name, cov, v in covering_corpus(seed, cases):
        with _Timer(res):
            try:
                T = spanning_tree(cov.codomain, cov.morphism.vertex_map[v])
                H = induced_subgroup(cov, v, T)
                n, idx = sheets(cov), H.index()
                if n != idx:
                    res.failures.append(f"{name}: sheets {n} != index {idx}")
                    continue
                Q = coset_space(H)
                th = theta_map(cov, v, T, H, Q)
                if len(set(th.values())) != len(th) or set(th.values()) != set(Q.cosets):
                    res.failures.append(f"{name}: theta is not a bijection")
            except GraphCoverError as exc:
                res.failures.append(f"{name}: {type(exc).__name__}: {exc}")
    return res


def criterion_reconstruct(seed=0, cases=100) -> CriterionResult:
    res = CriterionResult(2, "reconstruct gives an isomorphism phi with projection o phi = p",
                          time_limit=2.0)
    for name, cov, v in covering_corpus(seed, cases):
        with _Timer(res):
            try:
                r = reconstruct(cov, v)
                if not (r.is_isomorphism and r.commutes):
                    res.failures.append(f"{name}: phi check failed")
            except GraphCoverError as exc:
                res.failures.append(f"{name}: {type(exc).__name__}: {exc}")
    return res


def skew_instance(seed: int):
    """A random ``(E, c, Q)``; alternates free-group and finite-group labellings."""
    rng = random.Random(seed)
    E = random_connected_graph(rng, 6, 8)
    kind = seed % 3
    if kind == 0:
        T = spanning_tree(E, rng.choice(E.vertices))
        c = canonical_labelling(E, T)
        Q = coset_space(random_finite_index_subgroup(rng, T.free_group, 12))
    elif kind == 1:
        F = FreeGroup(("x", "y"))
        c = random_free_labelling(rng, E, F, 3)
        Q = coset_space(random_finite_index_subgroup(rng, F, 12))
    else:
        G = random_finite_group(rng, 12)
        c = random_finite_labelling(rng, E, G)
        Q = random_subgroup(rng, G).coset_space()
    return E, c, Q


def quotient_instance(seed: int):
    rng = random.Random(seed)
    E = random_connected_graph(rng, 5, 7)
    G = random_finite_group(rng, 12)
    return E, random_finite_labelling(rng, E, G), random_subgroup(rng, G)


def criterion_skew_covering(seed=0, cases=100) -> CriterionResult:
    res = CriterionResult(3, "relative skew product projection is a covering with fibers |Q|")
    for k in range(cases):
        with _Timer(res):
            try:
                E, c, Q = skew_instance(seed * 100003 + k)
                sp = relative_skew_product(E, c, Q)
                cov = is_covering(sp.projection)
                if not cov:
                    res.failures.append(f"case {k}: {cov}")
                    continue
                sizes = {len(cov.fiber(u)) for u in E.vertices}
                if sizes != {len(Q)}:
                    res.failures.append(f"case {k}: fiber sizes {sorted(sizes)} != {{{len(Q)}}}")
            except GraphCoverError as exc:
                res.failures.append(f"case {k}: {type(exc).__name__}: {exc}")
    return res


def criterion_quotient(seed=0, cases=50) -> CriterionResult:
    res = CriterionResult(4, "(E x_c G)/H is isomorphic to E x_c (G/H)")
    for k in range(cases):
        with _Timer(res):
            try:
                E, c, H = quotient_instance(seed * 100003 + k)
                _, iso, _ = quotient_identity(E, c, H)
                if not iso:
                    res.failures.append(f"case {k}: induced map is not an isomorphism")
            except GraphCoverError as exc:
                res.failures.append(f"case {k}: {type(exc).__name__}: {exc}")
    return res


def criterion_gross_tucker(seed=0, cases=50) -> CriterionResult:
    res = CriterionResult(5, "Gross-Tucker map is an equivariant isomorphism")
    for k in range(cases):
        with _Timer(res):
            try:
                rng = random.Random(seed * 100003 + k)
                E = random_connected_graph(rng, 5, 8)
                G = random_finite_group(rng, 8)
                full = full_skew_product(E, random_finite_labelling(rng, E, G))
                action = full.action if rng.random() < 0.5 else \
                    restrict_action(full.action, random_subgroup(rng, G))
                gt = gross_tucker(full.product, action)
                if not gt.isomorphism:
                    res.failures.append(f"case {k}: Phi is not an isomorphism")
                if not gt.equivariant:
                    res.failures.append(f"case {k}: Phi is not equivariant")
            except GraphCoverError as exc:
                res.failures.append(f"case {k}: {type(exc).__name__}: {exc}")
    return res


def criterion_skeleton(seed=0, cases=100, pathlen=4) -> CriterionResult:
    res = CriterionResult(6, f"fiber bijections and unique path lifts (length <= {pathlen})")
    instances = [skew_instance(seed * 100003 + k) for k in range(cases)]
    for k in range(max(1, cases // 2)):
        E, c, H = quotient_instance(seed * 100003 + k)
        instances.append((E, c, H.coset_space()))
    for k, (E, c, Q) in enumerate(instances):
        with _Timer(res):
            try:
                report = ck_skeleton_check(E, c, Q, pathlen)
                if not report.passed:
                    res.failures.append(f"instance {k}: {report.violations[0]}")
            except GraphCoverError as exc:
                res.failures.append(f"instance {k}: {type(exc).__name__}: {exc}")
    return res


def criterion_engine(seed=0, walks=1000, subgroups=50) -> CriterionResult:
    res = CriterionResult(7, "reduction and membership agree with brute force")
    rng = random.Random(seed)
    graphs = [fixtures.loop_graph(), fixtures.figure_eight(), fixtures.cycle(2),
              fixtures.double_figure_eight()]
    graphs += [random_connected_graph(rng, 4, 6) for _ in range(4)]
    for k in range(walks):
        with _Timer(res):
            g = rng.choice(graphs)
            w = random_walk(rng, g, rng.randint(0, 12))
            forms = oracles.all_normal_forms(tuple(w.steps))
            fast = tuple(reduce_walk(w).steps)
            if forms != {fast}:
                res.failures.append(f"walk {w}: reduce_walk gives {fast}, brute force {sorted(forms)}")
    F = FreeGroup(("x", "y"))
    universe = oracles.reduced_words(F.generators, 4)
    for k in range(subgroups):
        with _Timer(res):
            gens = [random_word(rng, F, 4) for _ in range(rng.randint(1, 3))]
            H = stallings_graph(gens, group=F)
            raw = [w.letters for w in gens]
            members = oracles.subgroup_elements(raw, 6)
            members |= oracles.ball_closure(raw, 4 + max(len(w) for w in gens))
            label = "<" + ", ".join(map(str, gens)) + ">"
            rejected = [m for m in members if not H.contains(F.word(m))]
            if rejected:
                res.failures.append(f"{label}: enumerated member {F.word(rejected[0])} rejected")
            unconfirmed = [u for u in universe if H.contains(F.word(u)) and u not in members]
            if unconfirmed:
                res.failures.append(f"{label}: contains({F.word(unconfirmed[0])}) has no "
                                    f"brute-force factorisation")
    return res


def criterion_cohomology(seed=0, cases=20) -> CriterionResult:
    res = CriterionResult(8, "labellings from different trees are cohomologous; skew products isomorphic")
    k = 0
    attempt = 0
    while k < cases:
        attempt += 1
        rng = random.Random(seed * 100003 + attempt)
        E = random_connected_graph(rng, 8, 14, min_vertices=3)
        root = rng.choice(E.vertices)
        t1 = spanning_tree(E, root)
        t2 = random_spanning_tree(E, root, rng)
        if t1.edges == t2.edges:
            continue
        k += 1
        with _Timer(res):
            try:
                c1, c2, b = tree_change(t1, t2)
                if not cohomologous(c1, c2, b):
                    res.failures.append(f"case {k}: tree-derived b is not a coboundary")
                    continue
                Q = coset_space(random_finite_index_subgroup(rng, t1.free_group, 8))
                coboundary_isomorphism(c1, c2, b, Q)
            except GraphCoverError as exc:
                res.failures.append(f"case {k}: {type(exc).__name__}: {exc}")
    return res


def run_selftest(seed: int = 0, cases: int = 100):
    """All eight criteria; ``cases`` scales the corpus sizes (100 = acceptance sizes)."""
    half = max(1, cases // 2)
    return [
        criterion_sheets_index(seed, cases),
        criterion_reconstruct(seed, cases),
        criterion_skew_covering(seed, cases),
        criterion_quotient(seed, half),
        criterion_gross_tucker(seed, half),
        criterion_skeleton(seed, cases),
        criterion_engine(seed, walks=10 * cases, subgroups=half),
        criterion_cohomology(seed, max(1, cases // 5)),
    ]
