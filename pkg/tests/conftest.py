from __future__ import annotations

import random

import numpy as np
import pytest

from netdiv import DiversionInstance, build_graph, gen_grid, solve
from netdiv.generate import GeneratorConfig


def random_connected_graph(rng: random.Random, n: int, extra_p: float,
                           weights="uniform"):
    """Random spanning tree plus extra edges; returns (graph, edge list)."""
    edges = {}
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        u = order[i]
        v = order[rng.randrange(i)]
        edges[(min(u, v), max(u, v))] = None
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < extra_p:
                edges[(i, j)] = None
    triples = []
    for (u, v) in sorted(edges):
        if weights == "uniform":
            w = rng.uniform(0.0, 1000.0)
        elif weights == "small-int":
            w = float(rng.randint(0, 4))
        else:
            w = 1.0
        triples.append((u, v, w))
    return build_graph(n, triples), triples


@pytest.fixture(scope="session", autouse=True)
def _warm_jit():
    """Compile the kernels once so individual tests time only themselves."""
    inst = gen_grid(GeneratorConfig("grid", 3, seed=0))
    solve(DiversionInstance(inst.pg, inst.s, inst.t, inst.b))
    yield
