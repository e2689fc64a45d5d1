"""Command-line interface.

Subcommands: solve, gen, bench, diverse, oddpath.  Exit codes are a
stable contract: 0 for optimal/already-bridge (or a found path), 1 for
infeasible/no path, 2 for input or configuration errors.
"""

from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from .bench import format_summary_table, run_bench, write_records_csv
from .cuts import diverse_cuts, min_cut_weight
from .diversion import ALREADY_BRIDGE, INFEASIBLE, OPTIMAL, \
    DiversionInstance, solve
from .errors import GraphError
from .fileio import (
    format_solution,
    read_graph_file,
    write_instance,
)
from .generate import GeneratorConfig, generate
from .oddpath import shortest_even_path, shortest_odd_path
from .plane import verify_embedding

__all__ = ["main"]


def _parse_weights(spec: str):
    """'lo:hi' or 'invlen' -> (lo, hi, inverse_length)."""
    if spec == "invlen":
        return 0.0, 1000.0, True
    parts = spec.split(":")
    if len(parts) != 2:
        raise ValueError(f"bad weight spec {spec!r}; use lo:hi or invlen")
    return float(parts[0]), float(parts[1]), False


def _edge_by_pair(g, spec: str) -> int:
    parts = spec.split(",")
    if len(parts) != 2:
        raise ValueError(f"bad edge spec {spec!r}; use u,v")
    u, v = int(parts[0]), int(parts[1])
    e = g.edge_between(u, v)
    if e is None:
        raise ValueError(f"no edge between {u} and {v}")
    return e


def _cmd_solve(args) -> int:
    parsed = read_graph_file(args.graph)
    pg = parsed.plane_graph()
    if args.verify_embedding:
        verify_embedding(pg)
    b = _edge_by_pair(pg.graph, args.b)
    inst = DiversionInstance(pg, args.s, args.t, b, budget=args.budget)
    sol = solve(inst, tracker=args.tracker)
    sys.stdout.write(format_solution(sol, pg.graph))
    if args.budget is not None and sol.status != INFEASIBLE:
        print(f"within-budget: {'yes' if sol.within_budget else 'no'}")
    return 0 if sol.status in (OPTIMAL, ALREADY_BRIDGE) else 1


def _cmd_gen(args) -> int:
    lo, hi, invlen = _parse_weights(args.weights)
    cfg = GeneratorConfig(args.family, args.size, seed=args.seed,
                          weight_lo=lo, weight_hi=hi, inverse_length=invlen,
                          terminal_policy=args.terminals)
    inst = generate(cfg)
    line = write_instance(args.out, inst.pg, inst.s, inst.t, inst.b)
    print(line)
    return 0


def _cmd_bench(args) -> int:
    lo, hi, invlen = _parse_weights(args.weights)
    sizes = [int(x) for x in args.sizes.split(",") if x]
    if not sizes:
        raise ValueError("no sizes given")
    progress = (lambda line: print(line, file=sys.stderr)) if args.verbose \
        else None
    records, summaries = run_bench(
        args.family, sizes, args.reps, args.seed, tracker=args.tracker,
        weight_lo=lo, weight_hi=hi, inverse_length=invlen,
        terminal_policy=args.terminals, progress=progress)
    if args.out:
        write_records_csv(args.out, records)
    print(format_summary_table(summaries))
    return 0


def _cmd_diverse(args) -> int:
    parsed = read_graph_file(args.graph)
    pg = parsed.plane_graph()
    report = diverse_cuts(pg, args.s, args.t, tracker=args.tracker)
    oracle = min_cut_weight(pg, args.s, args.t)
    rows = ["weight,size,multiplicity,edges"]
    for cut, weight in report.unique_cuts:
        pairs = " ".join(
            f"{int(pg.graph.edge_u[e])}-{int(pg.graph.edge_v[e])}"
            for e in cut)
        rows.append(f"{weight!r},{len(cut)},{report.multiplicity[cut]},"
                    f"\"{pairs}\"")
    text = "\n".join(rows) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    print(f"min-cut-weight: {oracle!r}")
    if report.unique_cuts and not math.isclose(
            report.cheapest_weight, oracle, rel_tol=1e-9, abs_tol=1e-12):
        print("warning: cheapest cut does not match the max-flow oracle",
              file=sys.stderr)
        return 1
    return 0


def _cmd_oddpath(args) -> int:
    parsed = read_graph_file(args.graph, need_coords=False)
    g = parsed.weighted_graph()
    fn = shortest_odd_path if args.parity == "odd" else shortest_even_path
    res = fn(g, args.s, args.t, tracker=args.tracker)
    if not res.found:
        print(f"no {args.parity} path")
        return 1
    print(f"cost {res.path.total_weight!r}")
    print(" ".join(str(v) for v in res.path.vertices))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="netdiv",
        description="Network diversion on plane graphs, and friends.")
    sub = ap.add_subparsers(dest="command", required=True)

    def add_tracker(p):
        p.add_argument("--tracker", choices=("naive", "unionfind"),
                       default="unionfind",
                       help="blossom base bookkeeping variant")

    p = sub.add_parser("solve", help="solve one diversion instance")
    p.add_argument("graph", help="graph file (with coordinates)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--b", required=True, metavar="U,V",
                   help="the edge to divert through, as endpoint pair")
    p.add_argument("--budget", type=float, default=None)
    p.add_argument("--verify-embedding", action="store_true",
                   help="exact geometric check of the drawing first")
    add_tracker(p)
    p.set_defaults(fn=_cmd_solve)

    p = sub.add_parser("gen", help="generate a seeded instance file")
    p.add_argument("--family", choices=("grid", "delaunay"), required=True)
    p.add_argument("--size", type=int, required=True,
                   help="grid side length or delaunay point count")
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--weights", default="0:1000",
                   help="lo:hi uniform range, or invlen (delaunay)")
    p.add_argument("--terminals", choices=("uniform", "outer"),
                   default="uniform")
    p.add_argument("--out", required=True)
    p.set_defaults(fn=_cmd_gen)

    p = sub.add_parser("bench", help="benchmark solve times")
    p.add_argument("--family", choices=("grid", "delaunay"), required=True)
    p.add_argument("--sizes", required=True,
                   help="comma-separated sizes, e.g. 10,20,50")
    p.add_argument("--reps", type=int, default=100)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--weights", default="0:1000")
    p.add_argument("--terminals", choices=("uniform", "outer"),
                   default="uniform")
    p.add_argument("--out", help="write per-repetition CSV here")
    p.add_argument("--verbose", action="store_true")
    add_tracker(p)
    p.set_defaults(fn=_cmd_bench)

    p = sub.add_parser("diverse",
                       help="all diverse minimal s-t cuts, one per edge")
    p.add_argument("graph")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--out", help="write the cut CSV here instead of stdout")
    add_tracker(p)
    p.set_defaults(fn=_cmd_diverse)

    p = sub.add_parser("oddpath",
                       help="cheapest odd/even path (planarity not needed)")
    p.add_argument("graph", help="graph file; coordinate block optional")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--t", type=int, required=True)
    p.add_argument("--parity", choices=("odd", "even"), default="odd")
    add_tracker(p)
    p.set_defaults(fn=_cmd_oddpath)
    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        return args.fn(args)
    except (GraphError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
