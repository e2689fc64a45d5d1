"""Plane graphs: straight-line embeddings, faces, and dual graphs.

A plane graph is a connected simple graph plus a rotation system: the
counter-clockwise cyclic order of incident edges at every vertex, derived
here from vertex coordinates.  Faces are traced by walking directed edges
(darts): the successor of the dart (u, v) is the dart (v, w) where {v, w}
follows {u, v} in the rotation at v.  Every dart lies on exactly one face,
and the embedding is accepted only if V - E + F = 2.

The dual has one vertex per face and one edge candidate per primal edge
joining its two side faces.  Bridges (both sides the same face) yield
self-loop candidates, which are dropped: a simple path never uses them.
Parallel candidates are merged keeping the cheapest.  When a candidate
subset is *marked* (the diversion pipeline marks the duals of a reference
path), merging only happens within the same marked/unmarked class, so that
a cheapest marked and a cheapest unmarked candidate can survive side by
side; subdividing the unmarked ones afterwards removes the parallelism.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

import numpy as np

from . import _kernels
from .errors import (
    CoincidentPointsError,
    DisconnectedGraphError,
    EmbeddingError,
    EulerCheckError,
    GraphError,
)
from .graph import WeightedGraph, reachable_from

__all__ = [
    "PlaneGraph",
    "DualGraph",
    "rotation_from_coordinates",
    "trace_faces",
    "compute_dual",
    "parity_dual_instance",
    "verify_embedding",
]


class PlaneGraph:
    """A WeightedGraph with coordinates and a CCW rotation system.

    ``rot_indptr``/``rot_eid`` store, per vertex, its incident edge ids in
    counter-clockwise angular order starting from the positive x axis.
    Face data is computed on first use and cached; instances are otherwise
    immutable and safe to share.
    """

    __slots__ = ("graph", "coords", "rot_indptr", "rot_eid",
                 "_face_count", "_side_faces")

    def __init__(self, graph: WeightedGraph, coords: np.ndarray,
                 rot_indptr: np.ndarray, rot_eid: np.ndarray):
        self.graph = graph
        self.coords = coords
        self.rot_indptr = rot_indptr
        self.rot_eid = rot_eid
        self._face_count: Optional[int] = None
        self._side_faces: Optional[np.ndarray] = None

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def m(self) -> int:
        return self.graph.m

    def rotation(self, v: int) -> np.ndarray:
        """Incident edge ids at v in CCW order."""
        return self.rot_eid[self.rot_indptr[v]:self.rot_indptr[v + 1]]

    @property
    def face_count(self) -> int:
        if self._face_count is None:
            trace_faces(self)
        return self._face_count

    @property
    def side_faces(self) -> np.ndarray:
        """(m, 2) array: faces on the two sides of each edge.

        Column 0 is the face containing the dart u->v, column 1 the face of
        v->u; both entries are equal exactly for bridges.
        """
        if self._side_faces is None:
            trace_faces(self)
        return self._side_faces

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m})"


def rotation_from_coordinates(graph: WeightedGraph,
                              coords) -> PlaneGraph:
    """Build a PlaneGraph by sorting each vertex's edges by angle.

    Edges are ordered counter-clockwise by the angle of the vector to the
    neighbor, starting from the positive x axis; exact angular ties
    (collinear neighbors on the same side) are broken by distance.

    Raises CoincidentPointsError or DisconnectedGraphError for inputs that
    cannot describe a plane embedding.
    """
    coords = np.ascontiguousarray(coords, dtype=np.float64)
    if coords.shape != (graph.n, 2):
        raise GraphError(f"expected coords of shape ({graph.n}, 2)")
    if not np.all(np.isfinite(coords)):
        raise CoincidentPointsError("coordinates must be finite")
    if graph.n > 1:
        order = np.lexsort((coords[:, 1], coords[:, 0]))
        same = np.nonzero((np.diff(coords[order, 0]) == 0)
                          & (np.diff(coords[order, 1]) == 0))[0]
        if same.shape[0]:
            i, j = int(order[same[0]]), int(order[same[0] + 1])
            raise CoincidentPointsError(
                f"vertices {min(i, j)} and {max(i, j)} share coordinates "
                f"{tuple(coords[i])}")
    if graph.n > 0 and not bool(np.all(reachable_from(graph, 0))):
        raise DisconnectedGraphError("plane graphs must be connected")
    if graph.n >= 3 and graph.m > 3 * graph.n - 6:
        raise GraphError(
            f"m={graph.m} exceeds the planar bound 3n-6={3 * graph.n - 6}")

    m = graph.m
    if m == 0:
        rot_indptr = np.zeros(graph.n + 1, np.int64)
        return PlaneGraph(graph, coords, rot_indptr, np.empty(0, np.int32))
    src = np.concatenate([graph.edge_u, graph.edge_v]).astype(np.int64)
    dst = np.concatenate([graph.edge_v, graph.edge_u]).astype(np.int64)
    deid = np.concatenate([np.arange(m, dtype=np.int32)] * 2)
    delta = coords[dst] - coords[src]
    ang = np.arctan2(delta[:, 1], delta[:, 0])
    ang = np.where(ang < 0, ang + 2 * np.pi, ang)
    dist2 = delta[:, 0] ** 2 + delta[:, 1] ** 2
    order = np.lexsort((dist2, ang, src))
    rot_eid = np.ascontiguousarray(deid[order])
    rot_indptr = np.zeros(graph.n + 1, np.int64)
    np.cumsum(np.bincount(src, minlength=graph.n), out=rot_indptr[1:])
    return PlaneGraph(graph, coords, rot_indptr, rot_eid)


def trace_faces(pg: PlaneGraph) -> tuple[int, np.ndarray]:
    """Assign every dart to a face; returns (face count, side_faces).

    Each edge contributes two darts, 2e for u->v and 2e+1 for v->u, so
    every edge is visited exactly twice.  Raises EulerCheckError when
    V - E + F != 2, which signals a rotation system that does not come
    from a plane embedding of a connected graph.
    """
    if pg._face_count is not None:
        return pg._face_count, pg._side_faces
    g = pg.graph
    n, m = g.n, g.m
    if m == 0:
        if n != 1:
            raise EulerCheckError("edgeless plane graph must be a point")
        pg._face_count = 1
        pg._side_faces = np.empty((0, 2), np.int32)
        return 1, pg._side_faces
    # entry arrays over the rotation lists
    verts = np.repeat(np.arange(n, dtype=np.int64),
                      np.diff(pg.rot_indptr))
    eids = pg.rot_eid.astype(np.int64)
    # cyclic successor entry within each vertex block
    idx = np.arange(2 * m, dtype=np.int64)
    nxt = idx + 1
    ends = pg.rot_indptr[1:][np.diff(pg.rot_indptr) > 0] - 1
    nxt[ends] = pg.rot_indptr[:-1][np.diff(pg.rot_indptr) > 0]
    next_e = eids[nxt]
    # dart entering this vertex via e, dart leaving it via next_e
    dart_in = np.where(g.edge_v[eids] == verts, 2 * eids, 2 * eids + 1)
    dart_out = np.where(g.edge_u[next_e] == verts, 2 * next_e,
                        2 * next_e + 1)
    succ = np.empty(2 * m, np.int64)
    succ[dart_in] = dart_out
    face_of, count = _kernels.face_labels(succ)
    if n - m + count != 2:
        raise EulerCheckError(
            f"V - E + F = {n} - {m} + {count} != 2: not a plane embedding")
    side = np.empty((m, 2), np.int32)
    side[:, 0] = face_of[0::2]
    side[:, 1] = face_of[1::2]
    pg._face_count = int(count)
    pg._side_faces = side
    return pg._face_count, side


class DualGraph:
    """Faces-as-vertices view of a plane graph.

    ``graph`` is simple: self-loop candidates (bridges) are dropped and
    parallel candidates merged, each dual edge keeping the weight and
    identity of its cheapest primal representative.  ``primal_to_dual`` is
    -1 for primal edges whose candidate was dropped or merged away.
    """

    __slots__ = ("graph", "primal_to_dual", "dual_to_primal",
                 "side_faces", "face_count")

    def __init__(self, graph, primal_to_dual, dual_to_primal, side_faces,
                 face_count):
        self.graph = graph
        self.primal_to_dual = primal_to_dual
        self.dual_to_primal = dual_to_primal
        self.side_faces = side_faces
        self.face_count = face_count

    def __repr__(self) -> str:
        return (f"DualGraph(faces={self.face_count}, "
                f"edges={self.graph.m})")


def compute_dual(pg: PlaneGraph) -> DualGraph:
    """Dual graph with merged parallels and dropped self-loops."""
    count, side = trace_faces(pg)
    g = pg.graph
    w = g.edge_w
    eid = np.arange(g.m, dtype=np.int64)
    keep = side[:, 0] != side[:, 1]
    a = np.minimum(side[keep, 0], side[keep, 1]).astype(np.int64)
    b = np.maximum(side[keep, 0], side[keep, 1]).astype(np.int64)
    wk = w[keep]
    ek = eid[keep]
    primal_to_dual = np.full(g.m, -1, np.int64)
    if a.shape[0] == 0:
        dual = WeightedGraph(count, np.empty(0, np.int64),
                             np.empty(0, np.int64), np.empty(0, np.float64),
                             validate=False)
        return DualGraph(dual, primal_to_dual, np.empty(0, np.int64),
                         side, count)
    order = np.lexsort((ek, wk, b, a))
    a, b, wk, ek = a[order], b[order], wk[order], ek[order]
    first = np.ones(a.shape[0], np.bool_)
    first[1:] = (np.diff(a) != 0) | (np.diff(b) != 0)
    dual = WeightedGraph(count, a[first], b[first], wk[first],
                         validate=False)
    dual_to_primal = ek[first]
    primal_to_dual[dual_to_primal] = np.arange(dual_to_primal.shape[0])
    return DualGraph(dual, primal_to_dual, dual_to_primal, side, count)


def parity_dual_instance(pg: PlaneGraph, marked: np.ndarray,
                         exclude: int) -> tuple:
    """Build the subdivided dual on which the diversion query runs.

    ``marked`` flags primal edges (the reference path); ``exclude`` is the
    primal edge whose dual is removed.  Candidates are merged only within
    the same marked/unmarked class, then every unmarked survivor is split
    in two halves of weight w/2 around a fresh vertex, so the result is a
    simple graph in which any path's edge-count parity equals its
    marked-origin parity.

    Returns (instance graph, origin, origin_marked, face_count) where
    ``origin`` maps instance edges to their representative primal edge and
    ``origin_marked`` flags the instance edges that stand for marked
    primal edges directly.
    """
    count, side = trace_faces(pg)
    g = pg.graph
    eid = np.arange(g.m, dtype=np.int64)
    keep = (side[:, 0] != side[:, 1]) & (eid != exclude)
    a = np.minimum(side[keep, 0], side[keep, 1]).astype(np.int64)
    b = np.maximum(side[keep, 0], side[keep, 1]).astype(np.int64)
    wk = g.edge_w[keep]
    ek = eid[keep]
    mk = np.ascontiguousarray(marked, np.bool_)[keep]
    if a.shape[0]:
        order = np.lexsort((ek, wk, mk, b, a))
        a, b, wk, ek, mk = (a[order], b[order], wk[order], ek[order],
                            mk[order])
        first = np.ones(a.shape[0], np.bool_)
        first[1:] = (np.diff(a) != 0) | (np.diff(b) != 0) | (mk[1:] != mk[:-1])
        a, b, wk, ek, mk = a[first], b[first], wk[first], ek[first], mk[first]
    um = ~mk
    n_split = int(um.sum())
    xs = count + np.arange(n_split, dtype=np.int64)
    iu = np.concatenate([a[mk], a[um], xs])
    iv = np.concatenate([b[mk], xs, b[um]])
    iw = np.concatenate([wk[mk], wk[um] * 0.5, wk[um] * 0.5])
    origin = np.concatenate([ek[mk], ek[um], ek[um]])
    origin_marked = np.zeros(iu.shape[0], np.bool_)
    origin_marked[:int(mk.sum())] = True
    inst = WeightedGraph(count + n_split, iu, iv, iw, validate=False)
    return inst, origin, origin_marked, count


# ---------------------------------------------------------------------------
# Optional exact geometric check for untrusted straight-line input.
# ---------------------------------------------------------------------------


def _orient_exact(ax, ay, bx, by, cx, cy):
    """Exact sign of the orientation determinant, via rationals on demand."""
    det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    mag = (abs(bx - ax) + abs(by - ay)) * (abs(cx - ax) + abs(cy - ay))
    if abs(det) > 1e-12 * max(mag, 1.0):
        return 1 if det > 0 else -1
    det = ((Fraction(bx) - Fraction(ax)) * (Fraction(cy) - Fraction(ay))
           - (Fraction(by) - Fraction(ay)) * (Fraction(cx) - Fraction(ax)))
    return (det > 0) - (det < 0)


def _on_segment(px, py, ax, ay, bx, by):
    """Is p on the closed segment ab, assuming p, a, b collinear."""
    return (min(ax, bx) <= px <= max(ax, bx)
            and min(ay, by) <= py <= max(ay, by))


def verify_embedding(pg: PlaneGraph) -> None:
    """Exact check that the straight-line drawing is a plane embedding.

    Raises EmbeddingError if two edges cross, overlap, or a vertex lies in
    the interior of a non-incident edge.  Quadratic broad phase pruned by
    a coordinate sweep; meant for untrusted input files, not for the
    million-edge benchmark path.
    """
    g = pg.graph
    pts = pg.coords
    m = g.m
    if m <= 1:
        return
    ex = np.stack([pts[g.edge_u, 0], pts[g.edge_v, 0]], axis=1)
    ey = np.stack([pts[g.edge_u, 1], pts[g.edge_v, 1]], axis=1)
    xmin, xmax = ex.min(axis=1), ex.max(axis=1)
    ymin, ymax = ey.min(axis=1), ey.max(axis=1)
    by_xmin = np.argsort(xmin, kind="stable")
    active: list[int] = []
    for e in by_xmin:
        e = int(e)
        active = [f for f in active if xmax[f] >= xmin[e]]
        for f in active:
            if ymin[e] > ymax[f] or ymin[f] > ymax[e]:
                continue
            _check_pair(g, pts, e, f)
        active.append(e)
    # vertices must not sit inside edges
    for e in range(m):
        u, v = g.edge_endpoints(e)
        ax, ay = pts[u]
        bx, by = pts[v]
        nearby = np.nonzero(
            (pts[:, 0] >= min(ax, bx)) & (pts[:, 0] <= max(ax, bx))
            & (pts[:, 1] >= min(ay, by)) & (pts[:, 1] <= max(ay, by)))[0]
        for p in nearby:
            p = int(p)
            if p in (u, v):
                continue
            if _orient_exact(ax, ay, bx, by, pts[p, 0], pts[p, 1]) == 0 \
                    and _on_segment(pts[p, 0], pts[p, 1], ax, ay, bx, by):
                raise EmbeddingError(
                    f"vertex {p} lies on edge {e} = ({u}, {v})")


def _check_pair(g, pts, e, f):
    u1, v1 = g.edge_endpoints(e)
    u2, v2 = g.edge_endpoints(f)
    shared = {u1, v1} & {u2, v2}
    p1, q1 = pts[u1], pts[v1]
    p2, q2 = pts[u2], pts[v2]
    if shared:
        if len(shared) == 2:
            raise EmbeddingError(f"edges {e} and {f} coincide")
        s = shared.pop()
        a = pts[s]
        b1 = pts[v1 if u1 == s else u1]
        b2 = pts[v2 if u2 == s else u2]
        if _orient_exact(a[0], a[1], b1[0], b1[1], b2[0], b2[1]) == 0:
            if _on_segment(b1[0], b1[1], a[0], a[1], b2[0], b2[1]) or \
                    _on_segment(b2[0], b2[1], a[0], a[1], b1[0], b1[1]):
                raise EmbeddingError(
                    f"edges {e} and {f} overlap at vertex {s}")
        return
    d1 = _orient_exact(p1[0], p1[1], q1[0], q1[1], p2[0], p2[1])
    d2 = _orient_exact(p1[0], p1[1], q1[0], q1[1], q2[0], q2[1])
    d3 = _orient_exact(p2[0], p2[1], q2[0], q2[1], p1[0], p1[1])
    d4 = _orient_exact(p2[0], p2[1], q2[0], q2[1], q1[0], q1[1])
    if d1 != d2 and d3 != d4:
        raise EmbeddingError(f"edges {e} and {f} cross")
    for d, (px, py), (ax, ay), (bx, by) in (
            (d1, p2, p1, q1), (d2, q2, p1, q1),
            (d3, p1, p2, q2), (d4, q1, p2, q2)):
        if d == 0 and _on_segment(px, py, ax, ay, bx, by):
            raise EmbeddingError(f"edges {e} and {f} touch")
