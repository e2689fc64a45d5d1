"""Simple weighted undirected graphs backed by flat numpy arrays.

Graphs are immutable after construction and safe to share; every algorithm
in the package takes them read-only.  Vertices and edges are dense integer
ids.  ``build_graph`` is the validating entry point; internal code that
constructs graphs whose invariants hold by construction uses
``WeightedGraph(..., validate=False)``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels
from .errors import (
    NegativeWeightError,
    ParallelEdgeError,
    SelfLoopError,
    VertexRangeError,
)

__all__ = [
    "WeightedGraph",
    "Path",
    "build_graph",
    "bfs_path",
    "connected",
    "reachable_from",
]


class WeightedGraph:
    """Undirected simple graph with non-negative float edge weights.

    Attributes
    ----------
    n : int
        Vertex count; vertices are 0..n-1.
    edge_u, edge_v : int32 arrays of length m
        Edge endpoints.
    edge_w : float64 array of length m
        Edge weights, all finite and >= 0.
    adj_indptr, adj_nbr, adj_eid :
        CSR adjacency: the neighbors of v are
        ``adj_nbr[adj_indptr[v]:adj_indptr[v+1]]`` with matching edge ids in
        ``adj_eid``.
    """

    __slots__ = ("n", "edge_u", "edge_v", "edge_w",
                 "adj_indptr", "adj_nbr", "adj_eid")

    def __init__(self, n, edge_u, edge_v, edge_w, validate=True):
        edge_u = np.ascontiguousarray(edge_u, dtype=np.int64)
        edge_v = np.ascontiguousarray(edge_v, dtype=np.int64)
        edge_w = np.ascontiguousarray(edge_w, dtype=np.float64)
        if not (edge_u.shape == edge_v.shape == edge_w.shape):
            raise ValueError("endpoint and weight arrays must align")
        if validate:
            _validate_edges(n, edge_u, edge_v, edge_w)
        self.n = int(n)
        self.edge_u = edge_u.astype(np.int32)
        self.edge_v = edge_v.astype(np.int32)
        self.edge_w = edge_w
        self.adj_indptr, self.adj_nbr, self.adj_eid = _build_csr(
            self.n, self.edge_u, self.edge_v)

    @property
    def m(self) -> int:
        return self.edge_u.shape[0]

    def neighbors(self, v: int):
        """(neighbor array, edge id array) views for vertex v."""
        lo, hi = self.adj_indptr[v], self.adj_indptr[v + 1]
        return self.adj_nbr[lo:hi], self.adj_eid[lo:hi]

    def degree(self, v: int) -> int:
        return int(self.adj_indptr[v + 1] - self.adj_indptr[v])

    def edge_between(self, u: int, v: int) -> Optional[int]:
        """Edge id joining u and v, or None."""
        nbrs, eids = self.neighbors(u)
        hits = np.nonzero(nbrs == v)[0]
        if hits.shape[0] == 0:
            return None
        return int(eids[hits[0]])

    def edge_endpoints(self, e: int) -> tuple[int, int]:
        return int(self.edge_u[e]), int(self.edge_v[e])

    def __repr__(self) -> str:
        return f"WeightedGraph(n={self.n}, m={self.m})"


def _validate_edges(n, edge_u, edge_v, edge_w):
    if n < 0:
        raise VertexRangeError("vertex count must be non-negative")

    def _describe(i):
        return (f"edge {i} = ({int(edge_u[i])}, {int(edge_v[i])}, "
                f"{float(edge_w[i])})")

    bad = np.nonzero((edge_u < 0) | (edge_u >= n) | (edge_v < 0) | (edge_v >= n))[0]
    if bad.shape[0]:
        raise VertexRangeError(
            f"{_describe(bad[0])}: endpoint outside [0, {n})")
    bad = np.nonzero(edge_u == edge_v)[0]
    if bad.shape[0]:
        raise SelfLoopError(f"{_describe(bad[0])}: self-loop")
    bad = np.nonzero(~np.isfinite(edge_w) | (edge_w < 0))[0]
    if bad.shape[0]:
        raise NegativeWeightError(
            f"{_describe(bad[0])}: weight must be finite and >= 0")
    if edge_u.shape[0] > 1:
        a = np.minimum(edge_u, edge_v)
        b = np.maximum(edge_u, edge_v)
        order = np.lexsort((b, a))
        dup = np.nonzero((np.diff(a[order]) == 0) & (np.diff(b[order]) == 0))[0]
        if dup.shape[0]:
            i = order[dup[0]]
            j = order[dup[0] + 1]
            raise ParallelEdgeError(
                f"{_describe(max(i, j))} duplicates {_describe(min(i, j))}")


def _build_csr(n, edge_u, edge_v):
    m = edge_u.shape[0]
    src = np.concatenate([edge_u, edge_v])
    dst = np.concatenate([edge_v, edge_u])
    eid = np.concatenate([np.arange(m, dtype=np.int32)] * 2) if m else \
        np.empty(0, np.int32)
    order = np.argsort(src, kind="stable")
    indptr = np.zeros(n + 1, np.int64)
    np.cumsum(np.bincount(src, minlength=n), out=indptr[1:])
    return indptr, np.ascontiguousarray(dst[order]), \
        np.ascontiguousarray(eid[order])


def build_graph(n: int, edge_list: Iterable[tuple]) -> WeightedGraph:
    """Build a validated graph from (u, v, w) triples.

    Raises SelfLoopError, ParallelEdgeError, NegativeWeightError or
    VertexRangeError naming the offending edge.
    """
    edges = list(edge_list)
    if edges:
        u, v, w = zip(*edges)
    else:
        u = v = w = ()
    return WeightedGraph(n, np.array(u, np.int64), np.array(v, np.int64),
                         np.array(w, np.float64), validate=True)


@dataclass(frozen=True)
class Path:
    """A simple path: vertex sequence, edge id sequence, and total weight."""

    vertices: tuple[int, ...]
    edges: tuple[int, ...]
    total_weight: float

    def __len__(self) -> int:
        return len(self.edges)

    def check(self, g: WeightedGraph) -> None:
        """Assert the path invariants against its graph; raises ValueError."""
        if len(self.vertices) != len(self.edges) + 1:
            raise ValueError("vertex/edge counts inconsistent")
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("path repeats a vertex")
        for i, e in enumerate(self.edges):
            a, b = g.edge_endpoints(e)
            if {a, b} != {self.vertices[i], self.vertices[i + 1]}:
                raise ValueError(f"edge {e} does not join step {i}")
        w = math.fsum(float(g.edge_w[e]) for e in self.edges)
        if not math.isclose(w, self.total_weight, rel_tol=1e-9, abs_tol=1e-12):
            raise ValueError("total_weight does not match edge weights")


def path_from_vertices(g: WeightedGraph, vertices: Sequence[int]) -> Path:
    """Build a Path from a vertex sequence, resolving edge ids and weight."""
    edges = []
    for a, b in zip(vertices, vertices[1:]):
        e = g.edge_between(a, b)
        if e is None:
            raise ValueError(f"no edge between {a} and {b}")
        edges.append(e)
    weight = math.fsum(float(g.edge_w[e]) for e in edges)
    return Path(tuple(int(v) for v in vertices), tuple(edges), weight)


def bfs_path(g: WeightedGraph, s: int, t: int,
             forbidden: Optional[int] = None) -> Optional[Path]:
    """Any simple s-t path avoiding the ``forbidden`` edge, or None.

    The path is a BFS tree path (fewest edges), but callers must not rely
    on that: any simple path is an equally valid reference.
    """
    if s == t:
        raise ValueError("s and t must differ")
    parent, paredge = _kernels.bfs_parents(
        g.adj_indptr, g.adj_nbr, g.adj_eid, s,
        -1 if forbidden is None else int(forbidden),
        np.empty(0, np.bool_))
    if parent[t] == -1:
        return None
    verts = [t]
    edges = []
    v = t
    while v != s:
        edges.append(int(paredge[v]))
        v = int(parent[v])
        verts.append(v)
    verts.reverse()
    edges.reverse()
    weight = math.fsum(float(g.edge_w[e]) for e in edges)
    return Path(tuple(verts), tuple(edges), weight)


def connected(g: WeightedGraph, s: int, t: int) -> bool:
    """True iff some s-t path exists."""
    if s == t:
        return True
    parent, _ = _kernels.bfs_parents(
        g.adj_indptr, g.adj_nbr, g.adj_eid, s, -1, np.empty(0, np.bool_))
    return parent[t] != -1


def reachable_from(g: WeightedGraph, s: int,
                   blocked_edges: Optional[np.ndarray] = None,
                   forbidden: Optional[int] = None) -> np.ndarray:
    """Bool mask of vertices reachable from s, skipping blocked edge ids."""
    mask = np.empty(0, np.bool_) if blocked_edges is None else \
        np.ascontiguousarray(blocked_edges, dtype=np.bool_)
    parent, _ = _kernels.bfs_parents(
        g.adj_indptr, g.adj_nbr, g.adj_eid, s,
        -1 if forbidden is None else int(forbidden), mask)
    return parent != -1
