"""Independent brute-force oracles the library is tested against.

Nothing here touches the library's search code: parity-constrained path
optima come from a bitmask dynamic program over simple paths, diversion
optima from enumerating all vertex bipartitions, and tiny cases from
plain DFS enumeration.  The numba kernels only make exhaustive
enumeration fast enough; they implement the obvious algorithms.
"""

from __future__ import annotations

import math

import numpy as np
from numba import njit


@njit(cache=True)
def _parity_dp(n, indptr, nbr, wt, s, t):
    """dp over (visited set, endpoint): cheapest simple path costs.

    Returns (best odd cost, best even cost) for s-t paths with at least
    one edge; inf when none exists.
    """
    full = 1 << n
    dp = np.full((full, n), np.inf)
    dp[1 << s, s] = 0.0
    best_odd = np.inf
    best_even = np.inf
    for mask in range(full):
        if not (mask >> s) & 1:
            continue
        for v in range(n):
            c = dp[mask, v]
            if not np.isfinite(c):
                continue
            if v == t and mask != (1 << s):
                bits = 0
                mm = mask
                while mm:
                    mm &= mm - 1
                    bits += 1
                if (bits - 1) % 2 == 1:
                    if c < best_odd:
                        best_odd = c
                else:
                    if c < best_even:
                        best_even = c
                continue  # simple paths must stop at t
            for k in range(indptr[v], indptr[v + 1]):
                u = nbr[k]
                if (mask >> u) & 1:
                    continue
                nm = mask | (1 << u)
                nc = c + wt[k]
                if nc < dp[nm, u]:
                    dp[nm, u] = nc
    return best_odd, best_even


def best_parity_costs(g, s, t):
    """(cheapest odd, cheapest even) simple s-t path costs, by DP."""
    return _parity_dp(g.n, g.adj_indptr, g.adj_nbr,
                      g.edge_w[g.adj_eid] if g.m else np.empty(0),
                      s, t)


@njit(cache=True)
def _side_bfs(adj_masks, side, start):
    """Vertices reachable from start using only edges inside ``side``."""
    if not (side >> start) & 1:
        return np.int64(0)
    reach = np.int64(1) << start
    while True:
        new = reach
        mm = reach
        while mm:
            v = 0
            low = mm & -mm
            while (low >> v) & 1 == 0:
                v += 1
            mm ^= low
            new |= adj_masks[v] & side
        if new == reach:
            return reach
        reach = new


@njit(cache=True)
def _diversion_brute(n, adj_masks, edge_u, edge_v, edge_w, s, t, b):
    """Min-weight F with b an s-t bridge in G - F, over all bipartitions.

    Scans every S with s in S, t outside: F = crossing edges minus b is
    feasible iff b crosses and both terminals reach b's endpoints within
    their sides.  Every feasible F induces such an S with no larger
    weight, so the scan minimum is the true optimum.
    """
    others = np.empty(n - 2, np.int64)
    j = 0
    for v in range(n):
        if v != s and v != t:
            others[j] = v
            j += 1
    bu = edge_u[b]
    bv = edge_v[b]
    m = edge_u.shape[0]
    best = np.inf
    for mask in range(1 << (n - 2)):
        S = np.int64(1) << s
        for i in range(n - 2):
            if (mask >> i) & 1:
                S |= np.int64(1) << others[i]
        inb_u = (S >> bu) & 1
        inb_v = (S >> bv) & 1
        if inb_u == inb_v:
            continue
        ss = _side_bfs(adj_masks, S, s)
        bs = bu if inb_u else bv
        if not (ss >> bs) & 1:
            continue
        notS = ~S
        tt = _side_bfs(adj_masks, notS, t)
        bt = bv if inb_u else bu
        if not (tt >> bt) & 1:
            continue
        w = 0.0
        for e in range(m):
            if e == b:
                continue
            if ((S >> edge_u[e]) & 1) != ((S >> edge_v[e]) & 1):
                w += edge_w[e]
        if w < best:
            best = w
    return best


def diversion_optimum(g, s, t, b):
    """Brute-force diversion optimum (inf when infeasible); n <= ~25."""
    adj_masks = np.zeros(g.n, np.int64)
    for e in range(g.m):
        u, v = int(g.edge_u[e]), int(g.edge_v[e])
        adj_masks[u] |= np.int64(1) << v
        adj_masks[v] |= np.int64(1) << u
    return _diversion_brute(g.n, adj_masks,
                            g.edge_u.astype(np.int64),
                            g.edge_v.astype(np.int64),
                            g.edge_w, s, t, b)


def enum_simple_paths(g, s, t):
    """Yield (edge id tuple, cost) over all simple s-t paths.  Tiny n only."""
    adj = [[] for _ in range(g.n)]
    for e in range(g.m):
        u, v = int(g.edge_u[e]), int(g.edge_v[e])
        adj[u].append((v, e))
        adj[v].append((u, e))
    out = []

    def dfs(v, seen, edges):
        if v == t and edges:
            out.append((tuple(edges),
                        math.fsum(float(g.edge_w[e]) for e in edges)))
            return
        for u, e in adj[v]:
            if not (seen >> u) & 1:
                edges.append(e)
                dfs(u, seen | (1 << u), edges)
                edges.pop()
    dfs(s, 1 << s, [])
    return out


def best_path_odd_in_set(g, s, t, F):
    """Cheapest simple s-t path using an odd number of edges from F."""
    F = set(F)
    best = math.inf
    for edges, cost in enum_simple_paths(g, s, t):
        if sum(1 for e in edges if e in F) % 2 == 1:
            best = min(best, cost)
    return best
