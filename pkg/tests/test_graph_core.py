import math
import random

import numpy as np
import pytest

from netdiv import (
    NegativeWeightError,
    ParallelEdgeError,
    SelfLoopError,
    VertexRangeError,
    bfs_path,
    build_graph,
    connected,
)
from netdiv.graph import path_from_vertices

from conftest import random_connected_graph


def test_build_single_edge():
    g = build_graph(2, [(0, 1, 5.0)])
    assert (g.n, g.m) == (2, 1)
    assert g.edge_between(0, 1) == 0
    assert g.edge_between(1, 0) == 0


def test_build_triangle():
    g = build_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    assert (g.n, g.m) == (3, 3)
    assert g.degree(0) == 2


def test_rejects_self_loop():
    with pytest.raises(SelfLoopError, match="edge 0"):
        build_graph(2, [(0, 0, 1)])


def test_rejects_parallel_edges():
    with pytest.raises(ParallelEdgeError):
        build_graph(3, [(0, 1, 1), (1, 2, 1), (1, 0, 2)])


def test_rejects_bad_weights():
    with pytest.raises(NegativeWeightError):
        build_graph(2, [(0, 1, -1.0)])
    with pytest.raises(NegativeWeightError):
        build_graph(2, [(0, 1, float("nan"))])
    with pytest.raises(NegativeWeightError):
        build_graph(2, [(0, 1, float("inf"))])


def test_rejects_out_of_range():
    with pytest.raises(VertexRangeError, match="edge 1"):
        build_graph(2, [(0, 1, 1), (1, 2, 1)])


def test_bfs_path_on_path_graph():
    g = build_graph(3, [(0, 1, 1), (1, 2, 1)])
    p = bfs_path(g, 0, 2)
    assert p.vertices == (0, 1, 2)
    p.check(g)
    assert bfs_path(g, 0, 2, forbidden=g.edge_between(1, 2)) is None


def test_bfs_path_around_forbidden_edge():
    g = build_graph(4, [(0, 1, 1), (1, 2, 1), (2, 3, 1), (3, 0, 1)])
    p = bfs_path(g, 0, 2, forbidden=g.edge_between(1, 2))
    assert p.vertices == (0, 3, 2)
    p.check(g)


def test_connected_basics():
    g = build_graph(2, [(0, 1, 1)])
    assert connected(g, 0, 1)
    g = build_graph(2, [])
    assert not connected(g, 0, 1)


def test_connected_agrees_with_bfs_path():
    rng = random.Random(7)
    for _ in range(60):
        n = rng.randint(2, 9)
        g, triples = random_connected_graph(rng, n, rng.uniform(0, 0.5))
        if rng.random() < 0.3 and g.m > n - 1:
            # occasionally disconnect by rebuilding without one vertex's edges
            v = rng.randrange(n)
            triples = [t for t in triples if v not in t[:2]]
            g = build_graph(n, triples)
        s, t = rng.sample(range(n), 2)
        assert connected(g, s, t) == (bfs_path(g, s, t) is not None)


def test_bfs_paths_satisfy_invariants():
    rng = random.Random(11)
    for _ in range(40):
        n = rng.randint(2, 12)
        g, _ = random_connected_graph(rng, n, 0.3)
        s, t = rng.sample(range(n), 2)
        p = bfs_path(g, s, t)
        p.check(g)
        assert p.vertices[0] == s and p.vertices[-1] == t


def test_path_from_vertices_and_check():
    g = build_graph(3, [(0, 1, 1.5), (1, 2, 2.5)])
    p = path_from_vertices(g, [0, 1, 2])
    assert math.isclose(p.total_weight, 4.0)
    with pytest.raises(ValueError):
        path_from_vertices(g, [0, 2])
