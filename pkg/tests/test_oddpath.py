import math
import random

import pytest

from netdiv import build_graph, shortest_even_path, shortest_odd_path

from _oracles import best_parity_costs
from conftest import random_connected_graph

TRACKERS = ("naive", "unionfind")


@pytest.mark.parametrize("tracker", TRACKERS)
def test_single_edge_is_odd(tracker):
    g = build_graph(2, [(0, 1, 5.0)])
    res = shortest_odd_path(g, 0, 1, tracker=tracker)
    assert res.found and res.cost == 5.0
    assert res.path.vertices == (0, 1)
    assert not shortest_even_path(g, 0, 1, tracker=tracker).found


@pytest.mark.parametrize("tracker", TRACKERS)
def test_two_edge_path_has_no_odd(tracker):
    g = build_graph(3, [(0, 1, 1), (1, 2, 1)])
    assert not shortest_odd_path(g, 0, 2, tracker=tracker).found
    ev = shortest_even_path(g, 0, 2, tracker=tracker)
    assert ev.found and ev.cost == 2.0


@pytest.mark.parametrize("tracker", TRACKERS)
def test_four_cycle_prefers_long_odd_path(tracker):
    # s-a-t-b-s square: direct edge to a costs 100, going the long way 3
    g = build_graph(4, [(0, 1, 100.0), (1, 2, 1.0), (2, 3, 1.0),
                        (3, 0, 1.0)])
    res = shortest_odd_path(g, 0, 1, tracker=tracker)
    assert res.found and res.cost == 3.0
    assert res.path.vertices == (0, 3, 2, 1)


def test_k4_direct_edge():
    g = build_graph(4, [(i, j, 1.0) for i in range(4)
                        for j in range(i + 1, 4)])
    res = shortest_odd_path(g, 0, 3)
    assert res.found and res.cost == 1.0


def test_triangle_even_goes_around():
    g = build_graph(3, [(0, 1, 1), (1, 2, 1), (0, 2, 1)])
    res = shortest_even_path(g, 0, 1)
    assert res.found and res.cost == 2.0
    assert res.path.vertices == (0, 2, 1)


def test_rejects_equal_terminals():
    g = build_graph(2, [(0, 1, 1)])
    with pytest.raises(ValueError):
        shortest_odd_path(g, 0, 0)


def test_bad_tracker_name():
    g = build_graph(2, [(0, 1, 1)])
    with pytest.raises(ValueError):
        shortest_odd_path(g, 0, 1, tracker="fancy")


@pytest.mark.parametrize("weights", ["uniform", "small-int", "unit"])
def test_oracle_equivalence_random_graphs(weights):
    # exhaustive-DP oracle over simple paths, both parities and trackers
    rng = random.Random(hash(weights) & 0xFFFF)
    for trial in range(150):
        n = rng.randint(2, 10)
        g, _ = random_connected_graph(rng, n, rng.uniform(0.1, 0.8), weights)
        s, t = rng.sample(range(n), 2)
        exp_odd, exp_even = best_parity_costs(g, s, t)
        for parity, fn, exp in (("odd", shortest_odd_path, exp_odd),
                                ("even", shortest_even_path, exp_even)):
            tracker = TRACKERS[trial % 2]
            res = fn(g, s, t, tracker=tracker)
            got = res.cost if res.found else math.inf
            assert math.isfinite(exp) == res.found, \
                (parity, n, s, t, exp, got)
            if res.found:
                assert math.isclose(exp, got, rel_tol=1e-9, abs_tol=1e-9), \
                    (parity, n, s, t, exp, got)
                res.path.check(g)
                assert len(res.path.edges) % 2 == (1 if parity == "odd"
                                                   else 0)


def test_tracker_equivalence_random():
    rng = random.Random(5150)
    for _ in range(80):
        n = rng.randint(3, 12)
        g, _ = random_connected_graph(rng, n, 0.5)
        s, t = rng.sample(range(n), 2)
        a = shortest_odd_path(g, s, t, tracker="naive")
        b = shortest_odd_path(g, s, t, tracker="unionfind")
        assert a.found == b.found
        if a.found:
            assert math.isclose(a.cost, b.cost, rel_tol=1e-9)


def test_monotone_under_edge_deletion():
    # removing an edge never makes the best odd path cheaper
    rng = random.Random(99)
    for _ in range(40):
        n = rng.randint(3, 9)
        g, triples = random_connected_graph(rng, n, 0.6)
        s, t = rng.sample(range(n), 2)
        before = shortest_odd_path(g, s, t)
        drop = rng.randrange(len(triples))
        g2 = build_graph(n, [e for i, e in enumerate(triples) if i != drop])
        after = shortest_odd_path(g2, s, t)
        if before.found and after.found:
            assert after.cost >= before.cost - 1e-9
        elif not before.found:
            assert not after.found


def test_zero_weight_graphs():
    rng = random.Random(4242)
    for _ in range(30):
        n = rng.randint(2, 9)
        g, _ = random_connected_graph(rng, n, 0.7, "unit")
        g0 = build_graph(n, [(int(g.edge_u[e]), int(g.edge_v[e]), 0.0)
                             for e in range(g.m)])
        s, t = rng.sample(range(n), 2)
        exp_odd, _ = best_parity_costs(g0, s, t)
        res = shortest_odd_path(g0, s, t)
        assert res.found == math.isfinite(exp_odd)
        if res.found:
            assert res.cost == 0.0
