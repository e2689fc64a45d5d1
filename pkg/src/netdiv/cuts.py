"""Diverse minimal s-t cuts, one diversion solve per edge.

Forcing each edge of the graph in turn to be the kept edge b yields, for
every feasible b, a cheapest minimal s-t cut through b.  Many edges share
a cut, so deduplicating leaves a far smaller family of distinct minimal
cuts, sorted by weight; the cheapest one is the plain minimum s-t cut,
which ``min_cut_weight`` recomputes independently by augmenting paths as
a cross-check.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

import numpy as np

from .diversion import (
    OPTIMAL,
    DiversionInstance,
    DiversionSolution,
    solve,
    validate_solution,
)
from .errors import ValidationError
from .graph import WeightedGraph
from .plane import PlaneGraph, trace_faces

__all__ = ["DiverseCutsReport", "diverse_cuts", "min_cut_weight"]


@dataclass(frozen=True)
class DiverseCutsReport:
    """All per-edge diversion solutions and the deduplicated cut family.

    ``unique_cuts`` holds (cut edge ids sorted, total cut weight) pairs
    sorted by weight then lexicographically; the cut includes the kept
    edge b.  ``multiplicity`` counts how many choices of b produced each
    cut; infeasible edges appear in ``per_edge`` only.
    """

    per_edge: dict
    unique_cuts: tuple
    multiplicity: dict

    @property
    def cheapest_weight(self) -> float:
        return self.unique_cuts[0][1] if self.unique_cuts else math.inf


def diverse_cuts(pg: PlaneGraph, s: int, t: int,
                 tracker="unionfind") -> DiverseCutsReport:
    """Solve diversion once per edge and deduplicate the resulting cuts.

    The face structure is computed once and shared by all solves.
    Every unique cut is re-validated against its generating instance.
    """
    trace_faces(pg)
    g = pg.graph
    per_edge: dict[int, DiversionSolution] = {}
    cuts: dict[tuple, float] = {}
    mult: dict[tuple, int] = {}
    witness: dict[tuple, int] = {}
    for b in range(g.m):
        inst = DiversionInstance(pg, s, t, b)
        sol = solve(inst, tracker=tracker)
        per_edge[b] = sol
        if not sol.feasible:
            continue
        # already-bridge means {b} alone is the minimal cut
        cut = tuple(sorted(set(sol.removal) | {b}))
        if cut not in cuts:
            cuts[cut] = math.fsum(float(g.edge_w[e]) for e in cut)
            mult[cut] = 0
            witness[cut] = b
        mult[cut] += 1
    for cut, b in witness.items():
        sol = per_edge[b]
        if sol.status == OPTIMAL:
            ok, why = validate_solution(
                DiversionInstance(pg, s, t, b), sol)
            if not ok:
                raise ValidationError(
                    f"cut via edge {b} failed validation: {why}")
    ordered = tuple(sorted(cuts.items(), key=lambda kv: (kv[1], kv[0])))
    ordered = tuple((cut, w) for cut, w in ordered)
    return DiverseCutsReport(per_edge, ordered, mult)


def min_cut_weight(pg, s: int, t: int) -> float:
    """Minimum s-t cut weight by augmenting-path max-flow on the primal.

    Deliberately independent of all dual-graph machinery; used as the
    oracle the diverse-cuts family is checked against.  Accepts a
    WeightedGraph or anything carrying one as ``.graph``.
    """
    g: WeightedGraph = pg if isinstance(pg, WeightedGraph) else pg.graph
    if s == t:
        raise ValueError("s and t must differ")
    m = g.m
    # residual capacities per edge and direction: index 2e is u->v
    res = np.repeat(g.edge_w, 2).astype(np.float64)
    res = res.reshape(m, 2) if m else res.reshape(0, 2)
    tol = 1e-12 * float(g.edge_w.max()) if m and g.edge_w.max() > 0 else 0.0

    def bfs():
        pred = {s: (None, None)}
        q = deque([s])
        while q:
            v = q.popleft()
            if v == t:
                break
            nbrs, eids = g.neighbors(v)
            for u, e in zip(nbrs.tolist(), eids.tolist()):
                if u in pred:
                    continue
                d = 0 if g.edge_u[e] == v else 1
                if res[e, d] > tol:
                    pred[u] = (v, e)
                    q.append(u)
        return pred if t in pred else None

    while True:
        pred = bfs()
        if pred is None:
            break
        # bottleneck
        bottleneck = math.inf
        v = t
        while pred[v][0] is not None:
            pv, e = pred[v]
            d = 0 if g.edge_u[e] == pv else 1
            bottleneck = min(bottleneck, res[e, d])
            v = pv
        v = t
        while pred[v][0] is not None:
            pv, e = pred[v]
            d = 0 if g.edge_u[e] == pv else 1
            res[e, d] -= bottleneck
            res[e, 1 - d] += bottleneck
            v = pv
    # saturated cut: edges leaving the residual-reachable side
    reach = {s}
    q = deque([s])
    while q:
        v = q.popleft()
        nbrs, eids = g.neighbors(v)
        for u, e in zip(nbrs.tolist(), eids.tolist()):
            if u in reach:
                continue
            d = 0 if g.edge_u[e] == v else 1
            if res[e, d] > tol:
                reach.add(u)
                q.append(u)
    if t in reach:
        return 0.0  # disconnected or zero-capacity everywhere
    cut_edges = [e for e in range(m)
                 if (int(g.edge_u[e]) in reach) != (int(g.edge_v[e]) in reach)]
    return math.fsum(float(g.edge_w[e]) for e in cut_edges)
