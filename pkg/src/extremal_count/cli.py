"""Command-line interface binding the modules into reproducible experiments.

Subcommands: count, verify, optimize, search, gen.  JSON is the canonical
output (sorted keys, exact rationals as "p/q" strings); CSV is a flat
key,value projection of the same payload.  Exit codes: 0 success / all
inequalities hold, 1 a verified inequality is false, 2 usage, parse, or
budget errors.  Output depends only on the arguments, never on worker
count, ordering of parallel partial results, or the clock.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import bounds, oracle
from .blowup import OptimizerConfig, optimize_weights
from .bounds import frac_str
from .embeddings import count_automorphisms, count_copies, h_degrees
from .graphs import (Graph, GraphFormatError, build_blowup, build_gps_example1,
                     build_theorem2_H, build_turan2, complete_bipartite,
                     cycle_graph, path_graph, read_graph_file, star_graph,
                     write_graph_file, write_graph_text)
from .matchings import NotBipartiteError
from .oracle import BudgetExceededError, find_maximizers


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("EXTREMAL_COUNT_WORKERS", "1")))
    except ValueError:
        return 1


def _parse_fraction(text: str) -> Fraction:
    return Fraction(text)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="extremal-count",
        description="Embedding counts in triangle-free graphs: exact "
                    "counting, maximizer search, blow-up weight "
                    "optimization, and inequality certificates.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--out", help="write the report here instead of stdout")
    common.add_argument("--workers", type=int, default=_default_workers(),
                        help="worker processes (default: EXTREMAL_COUNT_WORKERS or 1)")
    sub = parser.add_subparsers(dest="command", required=True)

    p_count = sub.add_parser("count", parents=[common],
                             help="embeddings, automorphisms, copies, H-degrees")
    p_count.add_argument("pattern", help="pattern graph file")
    p_count.add_argument("host", help="host graph file")
    p_count.set_defaults(func=cmd_count)

    p_verify = sub.add_parser("verify", parents=[common], help="emit an exact inequality certificate")
    p_verify.add_argument("theorem", choices=("lemma2", "thm1-coeff", "thm1-chain",
                                              "thm2-params", "thm2-e2e"))
    p_verify.add_argument("--graph", help="graph file (lemma2)")
    p_verify.add_argument("--x", type=int, help="matching size parameter")
    p_verify.add_argument("--d", type=int, help="half-defect parameter")
    p_verify.add_argument("--sweep-max", type=int,
                          help="sweep all (x, d) hypothesis pairs up to this x (thm1-coeff)")
    p_verify.add_argument("--lam", type=_parse_fraction,
                          help="defect ratio lambda as a fraction, e.g. 1 or 1/2")
    p_verify.set_defaults(func=cmd_verify)

    p_opt = sub.add_parser("optimize", parents=[common], help="maximize the blow-up leading coefficient")
    p_opt.add_argument("pattern", help="pattern graph file")
    p_opt.add_argument("blowup_pattern",
                       help="blow-up skeleton: k2, c5, or a graph file path")
    p_opt.add_argument("--grid", type=int, default=50,
                       help="grid resolution per simplex coordinate")
    p_opt.set_defaults(func=cmd_optimize)

    p_search = sub.add_parser("search", parents=[common], help="exact maximizers over triangle-free hosts")
    p_search.add_argument("pattern", help="pattern graph file")
    p_search.add_argument("n", type=int, help="host vertex count")
    p_search.add_argument("--budget-n", type=int, default=8,
                          help="largest allowed host size (9 requires opting in)")
    p_search.add_argument("--witness-dir",
                          help="also write each witness as a graph file here")
    p_search.set_defaults(func=cmd_search)

    p_gen = sub.add_parser("gen", parents=[common], help="write a named construction as a graph file")
    p_gen.add_argument("family", choices=("turan2", "complete-bipartite", "path",
                                          "cycle", "star", "gps-example1",
                                          "theorem2-h", "blowup"))
    p_gen.add_argument("--n", type=int, help="vertex count (turan2, path, cycle, star)")
    p_gen.add_argument("--a", type=int, help="first side (complete-bipartite)")
    p_gen.add_argument("--b", type=int, help="second side (complete-bipartite)")
    p_gen.add_argument("--k", type=int, help="star size parameter (gps-example1)")
    p_gen.add_argument("--d", type=int, help="half-defect (theorem2-h)")
    p_gen.add_argument("--x", type=int, help="matching size (theorem2-h)")
    p_gen.add_argument("--pattern", help="blow-up skeleton: k2, c5, or a file (blowup)")
    p_gen.add_argument("--sizes", help="comma-separated blob sizes (blowup)")
    p_gen.set_defaults(func=cmd_gen)

    return parser


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------

def cmd_count(args):
    pattern = read_graph_file(args.pattern)
    host = read_graph_file(args.host)
    report = h_degrees(pattern, host)
    payload = {
        "command": "count",
        "pattern_file": args.pattern,
        "host_file": args.host,
        "pattern_vertices": pattern.n,
        "host_vertices": host.n,
        "embeddings": report.total,
        "automorphisms": count_automorphisms(pattern),
        "copies": count_copies(pattern, host),
        "h_degrees": [report.h[v] for v in range(host.n)],
    }
    return payload, 0


def _require(args, names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"verify {args.theorem} requires --{name.replace('_', '-')}")


def cmd_verify(args):
    theorem = args.theorem
    if theorem == "lemma2":
        _require(args, ["graph"])
        report = bounds.edge_bound_check(read_graph_file(args.graph))
        cert = report.as_dict()
        ok = report.holds and (report.equality_is_complete_bipartite
                               if report.equality else True)
    elif theorem == "thm1-coeff":
        if args.sweep_max is not None:
            report = bounds.thm1_sweep(args.sweep_max)
            cert = report.as_dict()
            ok = not report.violations
        else:
            _require(args, ["x", "d"])
            coeff = bounds.thm1_coefficient(args.x, args.d)
            cert = coeff.as_dict()
            ok = coeff.exceeds_two_fifths
    elif theorem == "thm1-chain":
        _require(args, ["x", "d"])
        report = bounds.thm1_chain_check(args.x, args.d)
        cert = report.as_dict()
        ok = report.all_hold
    elif theorem == "thm2-params":
        _require(args, ["lam"])
        params = bounds.solve_theorem2_params(args.lam)
        cert = params.as_dict()
        ok = params.all_hold
    else:  # thm2-e2e
        _require(args, ["lam"])
        certificate = bounds.theorem2_end_to_end(args.lam, args.x)
        cert = certificate.as_dict()
        ok = certificate.holds and certificate.params.all_hold
    payload = {"command": "verify", "theorem": theorem,
               "certificate": cert, "all_hold": ok}
    return payload, 0 if ok else 1


def _load_blowup_pattern(spec_text: str) -> Graph:
    if spec_text == "k2":
        return path_graph(2)
    if spec_text == "c5":
        return cycle_graph(5)
    return read_graph_file(spec_text)


def cmd_optimize(args):
    pattern = read_graph_file(args.pattern)
    skeleton = _load_blowup_pattern(args.blowup_pattern)
    config = OptimizerConfig(grid_resolution=args.grid, workers=args.workers)
    wp, coeff = optimize_weights(pattern, skeleton, config)
    payload = {
        "command": "optimize",
        "pattern_file": args.pattern,
        "blowup_pattern": args.blowup_pattern,
        "grid_resolution": args.grid,
        "weights": [frac_str(w) for w in wp.weights],
        "coefficient": frac_str(coeff.value),
        "hom_count": coeff.hom_count,
    }
    return payload, 0


def cmd_search(args):
    pattern = read_graph_file(args.pattern)
    if args.n > args.budget_n:
        raise BudgetExceededError(
            f"n={args.n} exceeds the configured budget {args.budget_n}")
    report = find_maximizers(pattern, args.n, allow_nine=args.budget_n >= 9,
                             workers=args.workers)
    witnesses = []
    for i, w in enumerate(report.witnesses):
        witnesses.append({
            "index": i,
            "canonical_mask": oracle.canonical_form(w),
            "edges": [[u, v] for u, v in w.edges()],
        })
    if args.witness_dir:
        os.makedirs(args.witness_dir, exist_ok=True)
        for i, w in enumerate(report.witnesses):
            write_graph_file(w, os.path.join(args.witness_dir,
                                             f"witness_{i:03d}.graph"))
    payload = {
        "command": "search",
        "pattern_file": args.pattern,
        "n": args.n,
        "max_count": report.max_count,
        "witness_count": len(report.witnesses),
        "witnesses": witnesses,
        "all_bipartite": report.all_bipartite,
        "all_complete_bipartite": report.all_complete_bipartite,
    }
    return payload, 0


def cmd_gen(args):
    family = args.family
    if family == "turan2":
        _require_gen(args, ["n"])
        g = build_turan2(args.n)
    elif family == "complete-bipartite":
        _require_gen(args, ["a", "b"])
        g = complete_bipartite(args.a, args.b)
    elif family == "path":
        _require_gen(args, ["n"])
        g = path_graph(args.n)
    elif family == "cycle":
        _require_gen(args, ["n"])
        g = cycle_graph(args.n)
    elif family == "star":
        _require_gen(args, ["n"])
        g = star_graph(args.n)
    elif family == "gps-example1":
        _require_gen(args, ["k"])
        g = build_gps_example1(args.k)
    elif family == "theorem2-h":
        _require_gen(args, ["d", "x"])
        g = build_theorem2_H(args.d, args.x)
    else:  # blowup
        _require_gen(args, ["pattern", "sizes"])
        base = _load_blowup_pattern(args.pattern)
        sizes = [int(s) for s in args.sizes.split(",")]
        g = build_blowup(base, sizes)
    return g, 0


def _require_gen(args, names):
    for name in names:
        if getattr(args, name) is None:
            raise ValueError(f"gen {args.family} requires --{name}")


# ---------------------------------------------------------------------------
# output rendering
# ---------------------------------------------------------------------------

def _flatten(payload, prefix=""):
    rows = []
    if isinstance(payload, dict):
        for key in sorted(payload):
            rows.extend(_flatten(payload[key], f"{prefix}{key}."))
    elif isinstance(payload, (list, tuple)):
        for i, item in enumerate(payload):
            rows.extend(_flatten(item, f"{prefix}{i}."))
    else:
        rows.append((prefix[:-1], payload))
    return rows


def render(payload, fmt: str) -> str:
    if isinstance(payload, Graph):
        return write_graph_text(payload)
    if fmt == "json":
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["key", "value"])
    for key, value in _flatten(payload):
        writer.writerow([key, value])
    return buf.getvalue()


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        payload, code = args.func(args)
    except GraphFormatError as exc:
        print(f"error: parse failure at {exc}", file=sys.stderr)
        return 2
    except (BudgetExceededError, NotBipartiteError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render(payload, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
