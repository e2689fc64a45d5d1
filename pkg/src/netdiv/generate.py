"""Seeded instance generators: weighted grids and Delaunay graphs.

Both families draw every random quantity from one SplitMix64 stream in a
documented order, so a (family, size, seed, weights, terminal policy)
tuple pins the instance bit for bit:

* grid:     edge weights in canonical edge order (all horizontal edges in
            row-major order, then all vertical ones), then s, then t
            (redrawn until distinct), then b.
* delaunay: point coordinates (x then y per point, exact duplicates
            redrawn), then after triangulating, edge weights in canonical
            (sorted endpoint pair) order unless inverse-length weighting
            is on, then s, t, b as above.

The Delaunay triangulation itself comes from scipy (Qhull), which is
deterministic for a fixed point set.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import DegenerateInputError
from .graph import WeightedGraph
from .plane import PlaneGraph, rotation_from_coordinates

__all__ = ["SplitMix64", "GeneratorConfig", "GeneratedInstance",
           "gen_grid", "gen_delaunay", "generate"]

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """Tiny deterministic PRNG (splitmix64).

    State update: state += 0x9E3779B97F4A7C15 (mod 2^64); the output mixes
    z = state through z ^= z >> 30; z *= 0xBF58476D1CE4E5B9;
    z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31.
    Floats take the top 53 bits: (z >> 11) * 2**-53.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + 0x9E3779B97F4A7C15) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform float in [0, 1)."""
        return (self.next_u64() >> 11) * 2.0 ** -53

    def random_array(self, k: int) -> np.ndarray:
        """k uniform floats in [0, 1), bit-identical to k random() calls.

        The state advance is a counter, so a block of outputs vectorizes.
        """
        start = self._state
        idx = np.arange(1, k + 1, dtype=np.uint64)
        with np.errstate(over="ignore"):
            z = np.uint64(start) + idx * np.uint64(0x9E3779B97F4A7C15)
            z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
            z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
            z = z ^ (z >> np.uint64(31))
        self._state = (start + k * 0x9E3779B97F4A7C15) & _MASK64
        return (z >> np.uint64(11)).astype(np.float64) * 2.0 ** -53

    def uniform(self, lo: float, hi: float) -> float:
        return lo + (hi - lo) * self.random()

    def uniform_array(self, k: int, lo: float, hi: float) -> np.ndarray:
        return lo + (hi - lo) * self.random_array(k)

    def below(self, n: int) -> int:
        """Uniform integer in [0, n), unbiased by rejection."""
        if n <= 0:
            raise ValueError("n must be positive")
        limit = (1 << 64) - ((1 << 64) % n)
        while True:
            r = self.next_u64()
            if r < limit:
                return r % n


@dataclass(frozen=True)
class GeneratorConfig:
    """Instance recipe: family, size, seed, weights, terminal policy.

    ``size`` is the grid side N or the Delaunay point count.  Weights are
    uniform in [weight_lo, weight_hi) unless ``inverse_length`` (Delaunay
    only) replaces them with 1/edge-length.  ``terminal_policy`` is
    "uniform" over all vertices or "outer" for boundary (grid) / convex
    hull (Delaunay) vertices.
    """

    family: str
    size: int
    seed: int
    weight_lo: float = 0.0
    weight_hi: float = 1000.0
    inverse_length: bool = False
    terminal_policy: str = "uniform"

    def __post_init__(self):
        if self.family not in ("grid", "delaunay"):
            raise ValueError(f"unknown family {self.family!r}")
        if self.family == "grid" and self.size < 2:
            raise ValueError("grid size must be at least 2")
        if self.family == "delaunay" and self.size < 3:
            raise ValueError("delaunay size must be at least 3")
        if self.weight_lo < 0 or not (self.weight_hi > self.weight_lo):
            raise ValueError("need 0 <= weight_lo < weight_hi")
        if self.terminal_policy not in ("uniform", "outer"):
            raise ValueError(f"unknown terminal policy "
                             f"{self.terminal_policy!r}")
        if self.inverse_length and self.family != "delaunay":
            raise ValueError("inverse-length weights are a delaunay option")


class GeneratedInstance(NamedTuple):
    pg: PlaneGraph
    s: int
    t: int
    b: int


def generate(cfg: GeneratorConfig) -> GeneratedInstance:
    if cfg.family == "grid":
        return gen_grid(cfg)
    return gen_delaunay(cfg)


def _draw_terminals(rng: SplitMix64, n: int, m: int, outer_ids) -> tuple:
    if outer_ids is None:
        s = rng.below(n)
        t = rng.below(n)
        while t == s:
            t = rng.below(n)
    else:
        s = int(outer_ids[rng.below(len(outer_ids))])
        t = int(outer_ids[rng.below(len(outer_ids))])
        while t == s:
            t = int(outer_ids[rng.below(len(outer_ids))])
    b = rng.below(m)
    return int(s), int(t), int(b)


def gen_grid(cfg: GeneratorConfig) -> GeneratedInstance:
    """N x N grid with unit spacing and random edge weights.

    n = N^2 vertices at integer coordinates, m = 2N(N-1) axis-aligned
    edges.
    """
    N = cfg.size
    n = N * N
    ids = np.arange(n, dtype=np.int64).reshape(N, N)
    # row-major horizontal edges, then row-major vertical edges
    hu = ids[:, :-1].ravel()
    hv = ids[:, 1:].ravel()
    vu = ids[:-1, :].ravel()
    vv = ids[1:, :].ravel()
    eu = np.concatenate([hu, vu])
    ev = np.concatenate([hv, vv])
    m = eu.shape[0]
    rng = SplitMix64(cfg.seed)
    w = rng.uniform_array(m, cfg.weight_lo, cfg.weight_hi)
    g = WeightedGraph(n, eu, ev, w, validate=False)
    rows, cols = np.divmod(np.arange(n), N)
    coords = np.stack([cols.astype(np.float64),
                       rows.astype(np.float64)], axis=1)
    pg = rotation_from_coordinates(g, coords)
    outer = None
    if cfg.terminal_policy == "outer":
        outer = np.nonzero((rows == 0) | (rows == N - 1)
                           | (cols == 0) | (cols == N - 1))[0]
    s, t, b = _draw_terminals(rng, n, m, outer)
    return GeneratedInstance(pg, s, t, b)


def gen_delaunay(cfg: GeneratorConfig) -> GeneratedInstance:
    """Delaunay triangulation of random points in the unit square."""
    from scipy.spatial import Delaunay, QhullError

    p = cfg.size
    rng = SplitMix64(cfg.seed)
    pts = np.empty((p, 2), np.float64)
    seen = set()
    i = 0
    while i < p:
        x = rng.random()
        y = rng.random()
        if (x, y) in seen:
            continue
        seen.add((x, y))
        pts[i, 0] = x
        pts[i, 1] = y
        i += 1
    try:
        tri = Delaunay(pts)
    except QhullError as exc:
        raise DegenerateInputError(
            f"cannot triangulate {p} points: {exc}") from exc
    if tri.coplanar.shape[0]:
        raise DegenerateInputError("degenerate point set: "
                                   "coplanar points dropped by qhull")
    simp = tri.simplices
    pairs = np.concatenate([simp[:, [0, 1]], simp[:, [1, 2]],
                            simp[:, [0, 2]]])
    pairs = np.sort(pairs, axis=1)
    pairs = np.unique(pairs, axis=0)
    eu = pairs[:, 0].astype(np.int64)
    ev = pairs[:, 1].astype(np.int64)
    m = eu.shape[0]
    if cfg.inverse_length:
        d = np.hypot(pts[eu, 0] - pts[ev, 0], pts[eu, 1] - pts[ev, 1])
        w = 1.0 / d
    else:
        w = rng.uniform_array(m, cfg.weight_lo, cfg.weight_hi)
    g = WeightedGraph(p, eu, ev, w, validate=False)
    pg = rotation_from_coordinates(g, pts)
    outer = None
    if cfg.terminal_policy == "outer":
        outer = np.unique(tri.convex_hull)
    s, t, b = _draw_terminals(rng, p, m, outer)
    return GeneratedInstance(pg, s, t, b)
