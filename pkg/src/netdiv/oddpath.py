"""Cheapest odd and even simple paths in weighted graphs.

A parity-constrained path query on ``G`` becomes an alternating-path query
on a *mirror graph*: two copies of ``G`` (vertex ``v`` and its mirror
``v + n``) joined by zero-weight matched edges ``{v, v+n}``, with one
mirror vertex deleted at each terminal so that exactly the two query
endpoints are exposed.  Which copies get deleted decides the parity:

* odd query:  delete ``s+n`` and ``t+n``; search ``s`` -> ``t``.
* even query: delete ``s+n`` and ``t``;   search ``s`` -> ``t+n``.

Every alternating path between the exposed vertices uses original edges
alternately in the two copies, so its projection to ``G`` is a simple path
whose edge count has the requested parity, and weights are preserved.  The
search itself lives in ``_kernels.alternating_search``; this module builds
the arrays, recovers the path from the label arrays, and projects it back.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from . import _kernels
from .graph import Path, WeightedGraph, path_from_vertices
from .trackers import resolve_tracker_kind

__all__ = ["OddPathResult", "shortest_odd_path", "shortest_even_path"]


@dataclass(frozen=True)
class OddPathResult:
    """Outcome of a parity-constrained path query.

    ``found`` False is a proof of absence: no simple path of the requested
    parity exists.  When True, ``path`` holds a cheapest one.
    """

    found: bool
    path: Optional[Path] = None

    @property
    def cost(self) -> float:
        if not self.found:
            return math.inf
        return self.path.total_weight


def shortest_odd_path(g: WeightedGraph, s: int, t: int,
                      tracker="unionfind") -> OddPathResult:
    """Cheapest simple s-t path with an odd number of edges.

    ``tracker`` selects the blossom base bookkeeping ("naive" or
    "unionfind"); both yield an optimal path.
    """
    return _parity_path(g, s, t, odd=True, tracker=tracker)


def shortest_even_path(g: WeightedGraph, s: int, t: int,
                       tracker="unionfind") -> OddPathResult:
    """Cheapest simple s-t path with an even (nonzero) number of edges."""
    return _parity_path(g, s, t, odd=False, tracker=tracker)


def _parity_path(g, s, t, odd, tracker):
    if not (0 <= s < g.n and 0 <= t < g.n):
        raise ValueError("terminal out of range")
    if s == t:
        raise ValueError("s and t must differ")
    use_uf = resolve_tracker_kind(tracker)
    indptr, nbr, wts, mate, root, target = _mirror_arrays(g, s, t, odd)
    nh = mate.shape[0]
    l_odd = np.full(nh, np.inf)
    odd_pred = np.full(nh, -1, np.int32)
    e_even = np.full(nh, np.inf)
    e_type = np.zeros(nh, np.int8)
    e_g = np.zeros(nh, np.int32)
    e_h = np.zeros(nh, np.int32)
    found, cost = _kernels.alternating_search(
        indptr, nbr, wts, mate, root, target, use_uf,
        l_odd, odd_pred, e_even, e_type, e_g, e_h)
    if not found:
        return OddPathResult(False)
    h_path = _recover_alternating_path(
        target, mate, odd_pred, e_type, e_g, e_h)
    path = _project(g, h_path)
    _check_result(g, path, s, t, odd, cost)
    return OddPathResult(True, path)


def _mirror_arrays(g, s, t, odd):
    n = g.n
    u = g.edge_u.astype(np.int64)
    v = g.edge_v.astype(np.int64)
    w = g.edge_w
    alive = np.ones(2 * n, np.bool_)
    if odd:
        alive[s + n] = False
        alive[t + n] = False
        root, target = s, t
    else:
        alive[s + n] = False
        alive[t] = False
        root, target = s, t + n
    keep1 = alive[u] & alive[v]
    keep2 = alive[u + n] & alive[v + n]
    xs = np.arange(n, dtype=np.int64)
    paired = alive[xs] & alive[xs + n]
    xp = xs[paired]
    src = np.concatenate([u[keep1], u[keep2] + n, xp])
    dst = np.concatenate([v[keep1], v[keep2] + n, xp + n])
    wts = np.concatenate([w[keep1], w[keep2], np.zeros(xp.shape[0])])
    mate = np.full(2 * n, -1, np.int32)
    mate[xp] = xp + n
    mate[xp + n] = xp
    s2 = np.concatenate([src, dst])
    d2 = np.concatenate([dst, src])
    w2 = np.concatenate([wts, wts])
    order = np.argsort(s2, kind="stable")
    indptr = np.zeros(2 * n + 1, np.int64)
    np.cumsum(np.bincount(s2, minlength=2 * n), out=indptr[1:])
    return (indptr, d2[order].astype(np.int32),
            np.ascontiguousarray(w2[order]), mate, root, target)


_ODD, _EVEN = 0, 1


def _recover_alternating_path(target, mate, odd_pred, e_type, e_g, e_h):
    """Expand the label arrays into the mirror-graph vertex sequence.

    Odd labels record the even endpoint that grew them; even labels come
    from the matched partner's odd label or from a blossom-closing edge
    (g, h), in which case the path to the labeled vertex u is the path to
    g, the edge to h, and the reverse of the path-to-h suffix starting at
    u.  Expansion is memoized and iterative: blossoms nest.
    """
    memo: dict = {}
    start = (_ODD, int(target))
    stack = [start]
    # The dependency structure is a DAG: every label only references labels
    # finalized strictly earlier in the search.  The guard below is a
    # defensive bound, not an expected exit.
    guard = 0
    limit = 64 * (len(mate) + 16)
    while stack:
        guard += 1
        if guard > limit:
            raise RuntimeError("path reconstruction did not converge")
        key = stack[-1]
        if key in memo:
            stack.pop()
            continue
        kind, vtx = key
        if kind == _ODD:
            needs = ((_EVEN, int(odd_pred[vtx])),)
        else:
            et = e_type[vtx]
            if et == 1:
                memo[key] = [vtx]
                stack.pop()
                continue
            if et == 2:
                needs = ((_ODD, int(mate[vtx])),)
            elif et == 3:
                needs = ((_EVEN, int(e_g[vtx])), (_EVEN, int(e_h[vtx])))
            else:
                raise RuntimeError(f"vertex {vtx} has no even label")
        missing = [k for k in needs if k not in memo]
        if missing:
            stack.extend(missing)
            continue
        if kind == _ODD:
            memo[key] = memo[needs[0]] + [vtx]
        elif e_type[vtx] == 2:
            memo[key] = memo[needs[0]] + [vtx]
        else:
            gpath = memo[needs[0]]
            hpath = memo[needs[1]]
            try:
                i = hpath.index(vtx)
            except ValueError:
                raise RuntimeError(
                    f"blossom label for {vtx} detached from its arm") from None
            memo[key] = gpath + hpath[i:][::-1]
        stack.pop()
    return memo[start]


def _project(g, h_path):
    n = g.n
    verts = []
    for hv in h_path:
        ov = hv - n if hv >= n else hv
        if not verts or verts[-1] != ov:
            verts.append(ov)
    return path_from_vertices(g, verts)


def _check_result(g, path, s, t, odd, kernel_cost):
    ends = {path.vertices[0], path.vertices[-1]}
    if ends != {s, t}:
        raise RuntimeError("recovered path has wrong endpoints")
    if len(set(path.vertices)) != len(path.vertices):
        raise RuntimeError("recovered path is not simple")
    if len(path.edges) % 2 != (1 if odd else 0):
        raise RuntimeError("recovered path has wrong parity")
    if not math.isclose(path.total_weight, kernel_cost,
                        rel_tol=1e-9, abs_tol=1e-9):
        raise RuntimeError(
            f"recovered path weight {path.total_weight} != search cost "
            f"{kernel_cost}")
