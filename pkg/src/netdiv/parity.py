"""Parity-of-a-marked-set path queries, by subdivision.

Splitting every edge *outside* a marked set F into two halves makes the
edge count of any path between original vertices congruent mod 2 to the
number of F edges it uses, while total weights are unchanged (each half
carries w/2; halving a float is exact).  A cheapest path using an odd
number of F edges is then just a cheapest odd path on the subdivided
graph, projected back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .graph import Path, WeightedGraph
from .oddpath import OddPathResult, shortest_odd_path

__all__ = [
    "SubdividedGraph",
    "subdivide_except",
    "shortest_path_odd_in_F",
    "detour_path",
]


@dataclass(frozen=True)
class SubdividedGraph:
    """A graph with all non-marked edges split, plus the projection data.

    ``origin[e]`` is the source-graph edge a subdivided edge stands for;
    marked edges map one-to-one, split edges two-to-one.  Split vertices
    are appended after the source vertices, so ``v < source_n`` tests
    membership in the source graph.
    """

    graph: WeightedGraph
    origin: np.ndarray
    marked: frozenset
    source_n: int

    def project(self, path: Path, source: WeightedGraph) -> Path:
        """Map a path between source vertices back to the source graph."""
        verts = [int(v) for v in path.vertices if v < self.source_n]
        edges = []
        for e in path.edges:
            oe = int(self.origin[e])
            if not edges or edges[-1] != oe:
                edges.append(oe)
        if len(edges) != len(verts) - 1:
            raise RuntimeError("projection produced a broken path")
        weight = math.fsum(float(source.edge_w[e]) for e in edges)
        if not math.isclose(weight, path.total_weight,
                            rel_tol=1e-9, abs_tol=1e-9):
            raise RuntimeError("projection changed the path weight")
        return Path(tuple(verts), tuple(edges), weight)


def subdivide_except(g: WeightedGraph, keep: Iterable[int]) -> SubdividedGraph:
    """Split every edge of g not in ``keep`` around a fresh vertex.

    Each half receives exactly half the original weight.  The result has
    n + (m - |keep|) vertices.
    """
    marked = frozenset(int(e) for e in keep)
    for e in marked:
        if not (0 <= e < g.m):
            raise ValueError(f"edge id {e} out of range")
    mask = np.zeros(g.m, np.bool_)
    if marked:
        mask[list(marked)] = True
    um = ~mask
    n_split = int(um.sum())
    xs = g.n + np.arange(n_split, dtype=np.int64)
    u = g.edge_u.astype(np.int64)
    v = g.edge_v.astype(np.int64)
    w = g.edge_w
    iu = np.concatenate([u[mask], u[um], xs])
    iv = np.concatenate([v[mask], xs, v[um]])
    iw = np.concatenate([w[mask], w[um] * 0.5, w[um] * 0.5])
    eid = np.arange(g.m, dtype=np.int64)
    origin = np.concatenate([eid[mask], eid[um], eid[um]])
    graph = WeightedGraph(g.n + n_split, iu, iv, iw, validate=False)
    return SubdividedGraph(graph, origin, marked, g.n)


def shortest_path_odd_in_F(g: WeightedGraph, F: Iterable[int], s: int,
                           t: int, tracker="unionfind") -> OddPathResult:
    """Cheapest simple s-t path using an odd number of edges from F."""
    sub = subdivide_except(g, F)
    res = shortest_odd_path(sub.graph, s, t, tracker=tracker)
    if not res.found:
        return res
    path = sub.project(res.path, g)
    odd_used = sum(1 for e in path.edges if e in sub.marked)
    if odd_used % 2 != 1:
        raise RuntimeError("projected path uses an even number of F edges")
    return OddPathResult(True, path)


def detour_path(g: WeightedGraph, s: int, t: int, b: int,
                tracker="unionfind") -> OddPathResult:
    """Cheapest simple s-t path that uses the edge b, or absence.

    With F = {b}, a path is odd in F exactly when it contains b.
    """
    res = shortest_path_odd_in_F(g, (b,), s, t, tracker=tracker)
    if res.found and b not in res.path.edges:
        raise RuntimeError("detour path does not contain its edge")
    return res
