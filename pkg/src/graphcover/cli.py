"""Command-line front end.

Exit codes: 0 success, 1 a verification or check failed, 2 invalid input.
"""

from __future__ import annotations

import argparse
import sys

from . import serialize as io
from .covering import (induced_subgroup, is_covering, lift_walk, require_covering, sheets)
from .dot import to_dot
from .errors import GraphCoverError, InvalidGraph, InvalidInput, IsomorphismFailure
from .finite import FiniteSubgroup
from .freegroup import coset_space
from .fundamental import canonical_labelling, spanning_tree
from .graph import format_walk, parse_walk
from .reconstruct import reconstruct
from .selftest import run_selftest
from .skewprod import ck_skeleton_check, gross_tucker, quotient_graph, relative_skew_product


class _Out:
    def __init__(self, stream):
        self.stream = stream

    def text(self, *lines):
        for line in lines:
            self.stream.write(line + "\n")

    def json(self, kind, body):
        doc = io.document(kind, body)
        io.check_output(doc)
        self.stream.write(io.dumps(doc))


def _cosets_for(subgroup):
    if isinstance(subgroup, FiniteSubgroup):
        return subgroup.coset_space()
    return coset_space(subgroup)


def cmd_validate(args, out):
    doc = io.load_document(args.graph).validate(io.GRAPH_SCHEMA, "graph")
    try:
        g = io.graph_from_data(doc, doc.data)
    except io.InputError as exc:
        cause = exc.__context__
        violations = cause.violations if isinstance(cause, InvalidGraph) else [str(exc)]
        if args.json:
            out.json("validation", {"valid": False, "violations": violations})
        else:
            out.text(f"INVALID {args.graph}", *(f"- {v}" for v in violations))
        return 2
    if args.json:
        out.json("validation", {"valid": True, "violations": []})
    else:
        out.text(f"VALID {args.graph}: {len(g.vertices)} vertices, {len(g.edges)} edges")
    return 0


def cmd_pi1(args, out):
    g = io.read_graph(args.graph)
    t = spanning_tree(g, args.base)
    loops = t.loops()
    if args.json:
        out.json("pi1", {"base": args.base, "tree_edges": sorted(t.edges),
                         "generators": list(t.free_group.generators),
                         "loops": {k: format_walk(w) for k, w in loops.items()}})
        return 0
    out.text(f"base: {args.base}",
             "tree edges: " + (" ".join(sorted(t.edges)) or "(none)"),
             f"rank: {t.free_group.rank}")
    for gen, w in loops.items():
        out.text(f"{gen}: {format_walk(w)}")
    return 0


def cmd_label(args, out):
    g = io.read_graph(args.graph)
    c = canonical_labelling(g, spanning_tree(g, args.base))
    out.json("labelling", c.to_dict())
    return 0


def cmd_cover_check(args, out):
    m = io.read_morphism(args.morphism)
    cov = is_covering(m)
    if args.json:
        body = {"covering": bool(cov)}
        if cov:
            body["certificate"] = {
                v: {"s": cov.out_lift[v], "r": cov.in_lift[v]} for v in m.domain.vertices}
        else:
            body["failure"] = {"vertex": cov.vertex, "reason": cov.reason}
        out.json("covering_check", body)
    elif cov:
        out.text(f"covering: yes ({len(m.domain.vertices)} vertices over {len(m.codomain.vertices)})")
    else:
        out.text(f"covering: no - {cov}")
    return 0 if cov else 1


def cmd_cover_lift(args, out):
    cov = require_covering(io.read_morphism(args.morphism))
    walk = parse_walk(cov.codomain, args.walk)
    lifted = lift_walk(cov, walk, args.anchor, args.end)
    if args.json:
        out.json("lift", {"walk": format_walk(walk), "lift": format_walk(lifted),
                          "anchor": args.anchor, "end": args.end})
    else:
        out.text(format_walk(lifted))
    return 0


def cmd_cover_subgroup(args, out):
    cov = require_covering(io.read_morphism(args.morphism))
    cov.domain.check_vertex(args.base)
    t = spanning_tree(cov.codomain, cov.morphism.vertex_map[args.base])
    h = induced_subgroup(cov, args.base, t)
    out.json("subgroup", h.to_dict())
    return 0


def cmd_cover_sheets(args, out):
    cov = require_covering(io.read_morphism(args.morphism))
    n = sheets(cov)
    if args.json:
        out.json("sheets", {"sheets": n})
    else:
        out.text(str(n))
    return 0


def _skew_inputs(args):
    g = io.read_graph(args.graph)
    c = io.read_labelling(args.labelling, g)
    Q = _cosets_for(io.read_subgroup(args.subgroup))
    return g, c, Q


def cmd_skew(args, out):
    g, c, Q = _skew_inputs(args)
    out.json("skew_product", relative_skew_product(g, c, Q).to_dict())
    return 0


def cmd_quotient(args, out):
    g = io.read_graph(args.graph)
    a = io.read_action(args.action, g, require_free=args.require_free)
    q = quotient_graph(g, a, require_free=args.require_free)
    body = q.to_dict()
    body["free"] = a.is_free()
    body["covering"] = bool(is_covering(q.morphism))
    out.json("quotient", body)
    return 0


def cmd_gross_tucker(args, out):
    g = io.read_graph(args.graph)
    a = io.read_action(args.action, g, require_free=True)
    res = gross_tucker(g, a)
    out.json("gross_tucker", res.to_dict())
    return 0 if res.ok else 1


def cmd_reconstruct(args, out):
    m = io.read_morphism(args.morphism)
    res = reconstruct(m, args.base)
    if args.json:
        out.json("reconstruction", res.to_dict())
        return 0
    chk = res.to_dict()["checks"]
    ok = lambda b: "pass" if b else "FAIL"
    out.text(f"base vertex: {res.base} over {res.tree.root}",
             "spanning tree of base graph: " + (" ".join(sorted(res.tree.edges)) or "(none)"),
             f"sheets: {chk['sheets']}",
             f"index of p_*pi1: {chk['index']}",
             f"rank of p_*pi1: {chk['rank']}",
             f"cosets: {' '.join(res.cosets.cosets)}",
             f"sheets = index: {ok(chk['sheets'] == chk['index'])}",
             f"phi is an isomorphism: {ok(res.is_isomorphism)}",
             f"projection o phi = p: {ok(res.commutes)}")
    for z in res.covering.domain.vertices:
        out.text(f"  phi({z}) = {res.phi.vertex_map[z]}")
    return 0


def cmd_ck_check(args, out):
    g, c, Q = _skew_inputs(args)
    report = ck_skeleton_check(g, c, Q, args.pathlen)
    if args.json:
        out.json("skeleton_check", report.to_dict())
    else:
        out.text(f"fiber bijections checked: {report.fiber_checks}",
                 f"paths up to length {args.pathlen}: {report.paths_checked}, "
                 f"lifts checked: {report.lifts_checked}",
                 "result: " + ("pass" if report.passed else "FAIL"),
                 *(f"- {v}" for v in report.violations[:20]))
    return 0 if report.passed else 1


def cmd_dot(args, out):
    out.stream.write(to_dot(io.read_graph(args.graph)))
    return 0


def cmd_selftest(args, out):
    results = run_selftest(args.seed, args.cases)
    passed = all(r.passed for r in results)
    if args.json:
        out.json("selftest", {"passed": passed, "seed": args.seed, "cases": args.cases,
                              "criteria": [r.to_dict() for r in results]})
    else:
        for r in results:
            line = r.line()
            if not args.timings:
                line = line.split(", slowest case")[0] + (
                    f"; first failure: {r.failures[0]}" if r.failures else "")
            out.text(line)
        out.text("selftest: " + ("pass" if passed else "FAIL"))
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable JSON output")

    ap = argparse.ArgumentParser(prog="graphcover",
                                 description="Coverings, voltage labellings and skew products of directed graphs.")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="validate a graph file")
    p.add_argument("graph")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("pi1", parents=[common], help="spanning tree and free generators of pi_1")
    p.add_argument("graph")
    p.add_argument("--base", required=True)
    p.set_defaults(func=cmd_pi1)

    p = sub.add_parser("label", parents=[common], help="canonical labelling as JSON")
    p.add_argument("graph")
    p.add_argument("--base", required=True)
    p.set_defaults(func=cmd_label)

    cover = sub.add_parser("cover", help="covering tools").add_subparsers(dest="cover_command", required=True)
    p = cover.add_parser("check", parents=[common], help="covering certificate or failure vertex")
    p.add_argument("morphism")
    p.set_defaults(func=cmd_cover_check)
    p = cover.add_parser("lift", parents=[common], help="lift a walk of the base graph")
    p.add_argument("morphism")
    p.add_argument("--walk", required=True)
    p.add_argument("--anchor", required=True)
    p.add_argument("--end", choices=["source", "range"], default="source")
    p.set_defaults(func=cmd_cover_lift)
    p = cover.add_parser("subgroup", parents=[common], help="the induced subgroup p_* pi_1(F, v)")
    p.add_argument("morphism")
    p.add_argument("--base", required=True)
    p.set_defaults(func=cmd_cover_subgroup)
    p = cover.add_parser("sheets", parents=[common], help="number of sheets")
    p.add_argument("morphism")
    p.set_defaults(func=cmd_cover_sheets)

    p = sub.add_parser("skew", parents=[common], help="relative skew product document")
    p.add_argument("graph")
    p.add_argument("labelling")
    p.add_argument("--subgroup", required=True)
    p.set_defaults(func=cmd_skew)

    p = sub.add_parser("quotient", parents=[common], help="quotient by a finite group action")
    p.add_argument("graph")
    p.add_argument("action")
    p.add_argument("--require-free", action="store_true")
    p.set_defaults(func=cmd_quotient)

    p = sub.add_parser("gross-tucker", parents=[common], help="decompose a free action")
    p.add_argument("graph")
    p.add_argument("action")
    p.set_defaults(func=cmd_gross_tucker)

    p = sub.add_parser("reconstruct", parents=[common], help="rebuild a covering as a skew product")
    p.add_argument("morphism")
    p.add_argument("--base", required=True)
    p.set_defaults(func=cmd_reconstruct)

    p = sub.add_parser("ck-check", parents=[common], help="fiber bijections and unique path lifts")
    p.add_argument("graph")
    p.add_argument("labelling")
    p.add_argument("--subgroup", required=True)
    p.add_argument("--pathlen", type=int, default=4)
    p.set_defaults(func=cmd_ck_check)

    p = sub.add_parser("dot", parents=[common], help="Graphviz DOT text")
    p.add_argument("graph")
    p.set_defaults(func=cmd_dot)

    p = sub.add_parser("selftest", parents=[common], help="run the property suite")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--timings", action="store_true", help="also print per-criterion timings")
    p.set_defaults(func=cmd_selftest)
    return ap


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, _Out(stdout))
    except InvalidInput as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except IsomorphismFailure as exc:
        stderr.write(f"internal check failed: {exc}\n")
        return 1
    except GraphCoverError as exc:
        stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    raise SystemExit(main())
