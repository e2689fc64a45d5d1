"""Compiled kernels behind the pure-Python API.

Everything in this module operates on flat CSR arrays so numba can compile
it.  The public modules build the arrays, call in here, and turn the raw
label/parent arrays back into friendly objects.  None of these functions
validate their inputs.
"""

from __future__ import annotations

import numpy as np
from numba import njit

_MASK31 = np.int64(0x7FFFFFFF)


@njit(cache=True)
def bfs_parents(indptr, nbr, eids, src, forbidden_eid, blocked):
    """BFS tree from ``src``.

    ``forbidden_eid`` is a single edge id to skip (-1 for none); ``blocked``
    is a bool mask over edge ids (length 0 for none).  Returns per-vertex
    ``parent`` (-1 unreached, src is its own parent) and ``paredge`` arrays.
    """
    n = indptr.shape[0] - 1
    parent = np.full(n, -1, np.int32)
    paredge = np.full(n, -1, np.int32)
    parent[src] = src
    queue = np.empty(n, np.int32)
    head = 0
    tail = 0
    queue[tail] = src
    tail += 1
    use_mask = blocked.shape[0] > 0
    while head < tail:
        v = queue[head]
        head += 1
        for k in range(indptr[v], indptr[v + 1]):
            e = eids[k]
            if e == forbidden_eid:
                continue
            if use_mask and blocked[e]:
                continue
            u = nbr[k]
            if parent[u] == -1:
                parent[u] = v
                paredge[u] = e
                queue[tail] = u
                tail += 1
    return parent, paredge


@njit(cache=True)
def face_labels(succ):
    """Label the cycles of the dart-successor permutation.

    Returns (face id per dart, number of faces).
    """
    nd = succ.shape[0]
    face_of = np.full(nd, -1, np.int32)
    count = 0
    for start in range(nd):
        if face_of[start] >= 0:
            continue
        d = start
        while face_of[d] < 0:
            face_of[d] = count
            d = succ[d]
        count += 1
    return face_of, count


# ---------------------------------------------------------------------------
# Cheapest alternating (augmenting) path search.
#
# The graph handed to the search is a mirror graph: two copies of a base
# graph joined by zero-weight matched edges, with one exposed vertex per
# copy.  The cheapest alternating path between the two exposed vertices
# projects back to the cheapest odd (or even) simple path in the base graph.
#
# Labels, in matching-search terminology:
#   inner label l(v): cheapest alternating path from the root entering v on
#                     a non-matching edge,
#   outer label E(v): cheapest alternating path entering v on its matched
#                     edge (the root is outer at cost 0).
# This is the single-tree search of the primal-dual matching tradition, run
# with all duals starting at zero (matched edges cost 0, all costs >= 0, so
# the zero dual is feasible).  A priority queue drives a nondecreasing
# clock over two event kinds:
#   grow:    an edge from an outer x to a vertex y with no label, at key
#            E(x) + w; pops make y inner and its matched partner outer.
#            Reaching the exposed target this way ends the search.
#   blossom: an edge joining two outer vertices, at key
#            (E(x) + E(y) + w) / 2, the point where the two search moats
#            meet.  If the endpoints still have distinct bases when the
#            event pops, the edge closes an odd cycle through their lowest
#            common base: every inner-only vertex u on the cycle turns
#            outer *at that moment* with label E(x) + E(y) + w - l(u) and
#            is scanned immediately (the label, which may exceed the
#            clock, only feeds future event keys), and the cycle is shrunk
#            by pointing its bases at the common one.
# Stale events are discarded on pop.  Edges into inner vertices never make
# events, and edges inside one pseudonode are dropped when their event
# pops and finds equal bases.
# ---------------------------------------------------------------------------


@njit(cache=True, inline="always")
def _heap_push(hc, hp, hcnt, cost, payload):
    i = hcnt[0]
    hc[i] = cost
    hp[i] = payload
    hcnt[0] = i + 1
    while i > 0:
        par = (i - 1) >> 1
        if hc[par] > hc[i]:
            tc = hc[par]
            hc[par] = hc[i]
            hc[i] = tc
            tp = hp[par]
            hp[par] = hp[i]
            hp[i] = tp
            i = par
        else:
            break


@njit(cache=True, inline="always")
def _heap_pop(hc, hp, hcnt):
    cost = hc[0]
    payload = hp[0]
    n = hcnt[0] - 1
    hcnt[0] = n
    hc[0] = hc[n]
    hp[0] = hp[n]
    i = 0
    while True:
        left = 2 * i + 1
        if left >= n:
            break
        small = left
        right = left + 1
        if right < n and hc[right] < hc[left]:
            small = right
        if hc[small] < hc[i]:
            tc = hc[small]
            hc[small] = hc[i]
            hc[i] = tc
            tp = hp[small]
            hp[small] = hp[i]
            hp[i] = tp
            i = small
        else:
            break
    return cost, payload


@njit(cache=True, inline="always")
def _find_base(use_uf, uf_parent, base, v):
    if use_uf:
        # path halving
        while uf_parent[v] != v:
            uf_parent[v] = uf_parent[uf_parent[v]]
            v = uf_parent[v]
        return v
    return base[v]


@njit(cache=True, inline="always")
def _rebase(use_uf, uf_parent, base, lhead, lnext, ltail, z, beta):
    # z must currently be its own base.
    if use_uf:
        uf_parent[z] = beta
    else:
        w = lhead[z]
        last = w
        while w != -1:
            base[w] = beta
            last = w
            w = lnext[w]
        lnext[ltail[beta]] = lhead[z]
        ltail[beta] = last


@njit(cache=True)
def _scan_outer(x, indptr, nbr, wt, mate, odd_pred, e_even, e_type,
                tent_odd, hc, hp, hcnt):
    """Queue events for all non-matching edges out of a fresh outer vertex."""
    cx = e_even[x]
    mx = mate[x]
    for k in range(indptr[x], indptr[x + 1]):
        y = nbr[k]
        if y == mx:
            continue
        if e_type[y] != 0:
            # outer-outer: blossom event at the moat-meeting point.
            _heap_push(hc, hp, hcnt, 0.5 * (cx + e_even[y] + wt[k]),
                       (np.int64(k) << 32) | (np.int64(x) << 1) | 1)
        elif odd_pred[y] != -1:
            # y is inner; if a blossom ever turns it outer, its own scan
            # revisits this edge from the other side.
            continue
        else:
            c = cx + wt[k]
            if c < tent_odd[y]:
                tent_odd[y] = c
                _heap_push(hc, hp, hcnt, c,
                           (np.int64(x) << 32) | (np.int64(y) << 1))


@njit(cache=True)
def _blossom(
    x,
    y,
    w,
    bx,
    by,
    indptr,
    nbr,
    wt,
    mate,
    l_odd,
    odd_pred,
    e_even,
    e_type,
    e_g,
    e_h,
    tent_odd,
    hc,
    hp,
    hcnt,
    use_uf,
    uf_parent,
    base,
    lhead,
    lnext,
    ltail,
    stamp,
    stamp_cnt,
):
    """Shrink the odd cycle closed by the outer-outer edge (x, y).

    ``bx``/``by`` are the two (distinct) base representatives.  Walks the
    two alternating-tree arms to their lowest common base, turns every
    inner-only vertex on the cycle outer (scanning it on the spot), and
    points all bases on both arms at the common one.
    """
    stamp_cnt[0] += 1
    sc = stamp_cnt[0]
    stamp[bx] = sc
    stamp[by] = sc
    pa = bx
    pb = by
    beta = np.int64(-1)
    while True:
        if pa != -1:
            p = mate[pa]
            if p == -1:
                pa = -1
            else:
                up = _find_base(use_uf, uf_parent, base, odd_pred[p])
                if stamp[up] == sc:
                    beta = up
                    break
                stamp[up] = sc
                pa = up
        if pb != -1:
            p = mate[pb]
            if p == -1:
                pb = -1
            else:
                up = _find_base(use_uf, uf_parent, base, odd_pred[p])
                if stamp[up] == sc:
                    beta = up
                    break
                stamp[up] = sc
                pb = up
        if pa == -1 and pb == -1:
            # Both arms ran off the root without meeting: cannot happen in
            # a single alternating tree.
            return
    csum = e_even[x] + e_even[y] + w
    for side in range(2):
        if side == 0:
            z = bx
            gg = y
            hh = x
        else:
            z = by
            gg = x
            hh = y
        while z != beta:
            p = mate[z]
            nxt = _find_base(use_uf, uf_parent, base, odd_pred[p])
            _rebase(use_uf, uf_parent, base, lhead, lnext, ltail, z, beta)
            _rebase(use_uf, uf_parent, base, lhead, lnext, ltail, p, beta)
            if e_type[p] == 0:
                e_even[p] = csum - l_odd[p]
                e_type[p] = 3
                e_g[p] = gg
                e_h[p] = hh
                _scan_outer(p, indptr, nbr, wt, mate, odd_pred, e_even,
                            e_type, tent_odd, hc, hp, hcnt)
            z = nxt


@njit(cache=True)
def alternating_search(indptr, nbr, wt, mate, root, target, use_uf,
                       l_odd, odd_pred, e_even, e_type, e_g, e_h):
    """Cheapest alternating path from ``root`` to the exposed ``target``.

    The caller allocates the label arrays: ``l_odd``/``e_even`` filled with
    inf, ``odd_pred`` with -1, ``e_type``/``e_g``/``e_h`` with 0.  On return
    they describe the search: ``e_type`` is 0 unlabeled / 1 root / 2 outer
    via the matched edge / 3 outer via a blossom whose closing edge was
    ``(e_g, e_h)``, oriented so the path runs root -> e_g -> e_h -> vertex.

    Returns (1, cost) when the target was reached, else (0, inf).
    """
    n = mate.shape[0]
    cap = nbr.shape[0] + n + 16
    hc = np.empty(cap, np.float64)
    hp = np.empty(cap, np.int64)
    hcnt = np.zeros(1, np.int64)
    tent_odd = np.full(n, np.inf)
    uf_parent = np.empty(n, np.int32)
    base = np.empty(n, np.int32)
    lhead = np.empty(n, np.int32)
    lnext = np.full(n, -1, np.int32)
    ltail = np.empty(n, np.int32)
    for v in range(n):
        uf_parent[v] = v
        base[v] = v
        lhead[v] = v
        ltail[v] = v
    stamp = np.zeros(n, np.int64)
    stamp_cnt = np.zeros(1, np.int64)

    e_even[root] = 0.0
    e_type[root] = 1
    _scan_outer(root, indptr, nbr, wt, mate, odd_pred, e_even, e_type,
                tent_odd, hc, hp, hcnt)
    while hcnt[0] > 0:
        cost, payload = _heap_pop(hc, hp, hcnt)
        kind = payload & 1
        v = (payload >> 1) & _MASK31
        aux = payload >> 32
        if kind == 0:
            # grow: v becomes inner via the edge from outer vertex aux.
            if odd_pred[v] != -1 or e_type[v] != 0:
                continue
            l_odd[v] = cost
            odd_pred[v] = aux
            if v == target:
                return 1, cost
            mv = mate[v]
            if mv != -1 and e_type[mv] == 0:
                e_even[mv] = cost
                e_type[mv] = 2
                _scan_outer(mv, indptr, nbr, wt, mate, odd_pred, e_even,
                            e_type, tent_odd, hc, hp, hcnt)
        else:
            # blossom edge between outer v and outer nbr[aux].
            y = nbr[aux]
            bx = _find_base(use_uf, uf_parent, base, v)
            by = _find_base(use_uf, uf_parent, base, y)
            if bx == by:
                continue
            _blossom(
                v, y, wt[aux], bx, by,
                indptr, nbr, wt, mate, l_odd, odd_pred, e_even, e_type,
                e_g, e_h, tent_odd, hc, hp, hcnt,
                use_uf, uf_parent, base, lhead, lnext, ltail,
                stamp, stamp_cnt,
            )
    return 0, np.inf
