"""Command-line interface: ``balanced <verb> [options]``.

Exit status is 0 on success, 1 on a domain error (with ``{"error": ...}``
on stdout) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import contextlib
import csv
import io
import json
import shlex
import sys
from pathlib import Path
from typing import Optional, Sequence

from . import graph as gr
from .certify import run_all
from .constructions import JoinFamilySpec, build_example_14, build_gh, build_join_family, c4c4
from .decomposition import decompose, hull_membership
from .enumeration import (
    compatibility_graph,
    components,
    enumerate_basic,
    maximal_cliques,
)
from .errors import BalancedError, ParseError
from .extrapolation import LineFamily, balanced_interval, extrapolate_right
from .measure import (
    energy,
    epsilon_balanced,
    greedy_sequence,
    is_balanced,
    is_compatible,
    make_measure,
    max_deficit,
    measure_to_json,
    support,
    to_fraction,
    transport_cost,
)


class UsageError(Exception):
    pass


# ----------------------------------------------------------------------
# input helpers
# ----------------------------------------------------------------------

def _gen_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="gen", add_help=False)
    sub = p.add_subparsers(dest="family", required=True)
    for name in ("path", "cycle", "complete"):
        sub.add_parser(name).add_argument("n", type=int)
    jf = sub.add_parser("join-family")
    jf.add_argument("--l", type=int, default=0)
    jf.add_argument("--k", type=int, required=True)
    sub.add_parser("example14")
    sub.add_parser("c4c4")
    gh = sub.add_parser("gh")
    gh.add_argument("--input", required=True)
    return p


def graph_from_spec(tokens: Sequence[str]) -> gr.Graph:
    try:
        with contextlib.redirect_stderr(io.StringIO()):
            ns = _gen_parser().parse_args(list(tokens))
    except SystemExit:
        raise UsageError(f"bad generator spec: {' '.join(tokens)!r}") from None
    if ns.family in ("path", "cycle", "complete"):
        return gr.generate(ns.family, ns.n)
    if ns.family == "join-family":
        return build_join_family(JoinFamilySpec(ns.l, ns.k))
    if ns.family == "example14":
        return build_example_14()
    if ns.family == "c4c4":
        return c4c4()
    h = gr.parse_graph(_read(ns.input), allow_disconnected=True)
    return build_gh(h)


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def load_graph(args) -> gr.Graph:
    if args.graph:
        return gr.parse_graph(_read(args.graph))
    if args.gen:
        return graph_from_spec(shlex.split(args.gen))
    raise UsageError("one of --graph or --gen is required")


def _json_arg(text: str):
    """Inline JSON, or a path to a file holding it."""
    src = text if text.lstrip()[:1] in "[{" else _read(text)
    try:
        return json.loads(src)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None


def load_measure(text: str, n: int) -> tuple:
    values = _json_arg(text)
    if not isinstance(values, list):
        raise ParseError("a measure is a JSON array of fraction strings")
    mu = make_measure(values)
    if len(mu) != n:
        raise ParseError(f"measure has {len(mu)} entries, graph has {n} vertices")
    return mu


def load_measures(text: str, n: int) -> list[tuple]:
    values = _json_arg(text)
    if not isinstance(values, list) or not all(isinstance(v, list) for v in values):
        raise ParseError("expected a JSON array of measures")
    return [load_measure(json.dumps(v), n) for v in values]


def _fr(x) -> str:
    return str(to_fraction(x))


# ----------------------------------------------------------------------
# verbs; each returns a JSON-able document or a ready string
# ----------------------------------------------------------------------

def cmd_gen(args):
    g = graph_from_spec(args.spec)
    if args.format == "dot":
        return gr.to_dot(g)
    if args.format == "csv":
        return gr.to_edgelist(g)
    return gr.to_json(g)


def cmd_distances(args):
    g = load_graph(args)
    D = g.distances
    if args.format == "csv":
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(D)
        return buf.getvalue()
    return {"n": g.n, "distances": [list(r) for r in D]}


def cmd_check(args):
    g = load_graph(args)
    mu = load_measure(args.measure, g.n)
    rep = is_balanced(g, mu)
    doc = {
        "balanced": rep.balanced,
        "max_cost": _fr(rep.max_cost),
        "costs": measure_to_json(transport_cost(g, mu)),
        "support": sorted(support(mu)),
    }
    if not rep.balanced:
        doc["violations"] = [{"vertex": v, "deficit": _fr(d)} for v, d in sorted(rep.deficits.items())]
    if args.format == "dot":
        return gr.to_dot(g, measure_to_json(mu))
    return doc


def cmd_energy(args):
    g = load_graph(args)
    mu = load_measure(args.measure, g.n)
    return {"energy": _fr(energy(g, mu))}


def cmd_greedy(args):
    g = load_graph(args)
    try:
        seed = [int(x) for x in args.seed.split(",")]
    except ValueError:
        raise UsageError("--seed takes comma-separated vertex indices") from None
    seq = greedy_sequence(g, seed, args.steps)
    mu = seq[-1][1]
    doc = {
        "added": [v for v, _ in seq[1:]],
        "measure": measure_to_json(mu),
        "max_deficit": _fr(max_deficit(g, mu)),
    }
    if args.eps is not None:
        doc["eps"] = _fr(args.eps)
        doc["eps_balanced"] = epsilon_balanced(g, mu, args.eps)
    return doc


def _catalog_doc(cat):
    return {
        "n": cat.graph.n,
        "count": len(cat),
        "basics": [
            {"mu": measure_to_json(e.mu), "support": sorted(e.pair.support), "max_set": sorted(e.pair.max_set)}
            for e in cat
        ],
    }


def _compat_dot(cg) -> str:
    out = ["graph compatibility {\n"]
    for i, e in enumerate(cg.catalog):
        label = " ".join(_fr(x) for x in e.mu)
        out.append(f'  {i} [label="{label}"];\n')
    for a, b in sorted(cg.edges):
        out.append(f"  {a} -- {b};\n")
    out.append("}\n")
    return "".join(out)


def cmd_enumerate(args):
    g = load_graph(args)
    cat = enumerate_basic(g)
    if args.format == "dot":
        return _compat_dot(compatibility_graph(cat))
    return _catalog_doc(cat)


def cmd_compat(args):
    g = load_graph(args)
    if args.measures:
        return {"compatible": is_compatible(load_measures(args.measures, g.n), g)}
    cg = compatibility_graph(enumerate_basic(g))
    if args.format == "dot":
        return _compat_dot(cg)
    return {
        "count": cg.n,
        "edges": [list(e) for e in sorted(cg.edges)],
        "components": components(cg),
        "maximal_cliques": [list(c) for c in maximal_cliques(cg)],
    }


def cmd_decompose(args):
    g = load_graph(args)
    mu = load_measure(args.measure, g.n)
    dec = decompose(g, mu)
    parts = sorted(dec.parts, key=lambda p: [-x for x in p[1]])
    return {
        "parts": [{"coeff": _fr(c), "mu": measure_to_json(m)} for c, m in parts],
        "chain_length": len(dec.chain),
        "verified": dec.reconstruct() == dec.target,
    }


def cmd_extrapolate(args):
    g = load_graph(args)
    fam = LineFamily(g, load_measure(args.mu, g.n), load_measure(args.nu, g.n))
    iv = balanced_interval(fam)
    ext = extrapolate_right(fam)
    return {
        "L": _fr(iv.L),
        "R": _fr(iv.R),
        "lambda_R": measure_to_json(ext.lam_R),
        "binding": [c.to_json() for c in iv.binding_R],
    }


def cmd_hull(args):
    g = load_graph(args)
    mu = load_measure(args.measure, g.n)
    if args.basics:
        basics = load_measures(args.basics, g.n)
    else:
        basics = enumerate_basic(g).measures
    res = hull_membership(g, mu, basics)
    if res.member:
        return {"member": True, "coefficients": [_fr(c) for c in res.coefficients]}
    w, beta = res.separator
    return {"member": False, "separator": {"w": [_fr(x) for x in w], "beta": _fr(beta)}}


def cmd_verify(args):
    rows = run_all()
    if args.format == "json":
        doc = {"checks": [{"name": n, "summary": s, "passed": p, "detail": d} for n, s, p, d in rows],
               "all_passed": all(r[2] for r in rows)}
        return doc, 0 if doc["all_passed"] else 1
    width = max(len(r[0]) for r in rows)
    lines = [f"{'PASS' if p else 'FAIL'}  {n:<{width}}  {s}  [{d}]\n" for n, s, p, d in rows]
    ok = all(r[2] for r in rows)
    lines.append(f"{sum(r[2] for r in rows)}/{len(rows)} checks passed\n")
    return "".join(lines), 0 if ok else 1


# ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="balanced", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="verb", required=True)

    def verb(name, fn, formats=("json", "pretty"), graph=True, help=None):
        p = sub.add_parser(name, help=help)
        p.set_defaults(fn=fn)
        p.add_argument("--format", choices=formats, default=formats[0])
        p.add_argument("--out", help="write the document here instead of stdout")
        if graph:
            src = p.add_mutually_exclusive_group()
            src.add_argument("--graph", help="graph file (JSON or edge list)")
            src.add_argument("--gen", help="generator spec, e.g. 'join-family --l 0 --k 2'")
        return p

    p = verb("gen", cmd_gen, ("json", "dot", "csv", "pretty"), graph=False, help="generate a graph")
    p.add_argument("spec", nargs=argparse.REMAINDER)
    verb("distances", cmd_distances, ("json", "csv", "pretty"), help="all-pairs hop distances")
    p = verb("check", cmd_check, ("json", "dot", "pretty"), help="test a measure for balancedness")
    p.add_argument("--measure", required=True)
    p = verb("energy", cmd_energy, help="quadratic form <mu, D mu>")
    p.add_argument("--measure", required=True)
    p = verb("greedy", cmd_greedy, help="greedy far-point sequence")
    p.add_argument("--seed", default="0")
    p.add_argument("--steps", type=int, default=100)
    p.add_argument("--eps", type=to_fraction)
    verb("enumerate", cmd_enumerate, ("json", "dot", "pretty"), help="all basic balanced measures")
    p = verb("compat", cmd_compat, ("json", "dot", "pretty"), help="compatibility test or graph")
    p.add_argument("--measures")
    p = verb("decompose", cmd_decompose, help="write a balanced measure as a mix of basics")
    p.add_argument("--measure", required=True)
    p = verb("extrapolate", cmd_extrapolate, help="one-sided extrapolation from mu through nu")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p = verb("hull", cmd_hull, help="convex hull membership")
    p.add_argument("--measure", required=True)
    p.add_argument("--basics", help="generators; defaults to the full basic catalog")
    verb("verify-paper", cmd_verify, ("pretty", "json"), graph=False, help="run the worked-example suite")
    return parser


def _render(doc, fmt: str) -> str:
    if isinstance(doc, str):
        return doc
    indent = 2 if fmt == "pretty" else None
    return json.dumps(doc, sort_keys=True, indent=indent) + "\n"


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    status = 0
    try:
        result = args.fn(args)
        if isinstance(result, tuple):
            result, status = result
        text = _render(result, args.format)
    except UsageError as exc:
        parser.error(str(exc))
    except BalancedError as exc:
        text = json.dumps({"error": str(exc), "kind": type(exc).__name__}, sort_keys=True) + "\n"
        status = 1
    if args.out and status != 1:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
