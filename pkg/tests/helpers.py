"""Shared samplers and small utilities for the test suite."""

from __future__ import annotations

import random

from hfree_mis.graph import Graph, random_graph
from hfree_mis.induced import find_induced
from hfree_mis.patterns import HPattern


def random_graphs(count: int, max_n: int, seed: int, densities=(0.15, 0.3, 0.5, 0.7)):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randrange(1, max_n + 1)
        yield random_graph(n, rng.choice(densities), rng), rng


def sample_hfree(pattern: HPattern | Graph, count: int, max_n: int, seed: int,
                 densities=(0.1, 0.2, 0.3), max_tries: int = 20000):
    """Up to ``count`` random graphs verified free of the pattern."""
    rng = random.Random(seed)
    out = []
    tries = 0
    while len(out) < count and tries < max_tries:
        tries += 1
        n = rng.randrange(1, max_n + 1)
        g = random_graph(n, rng.choice(densities), rng)
        if find_induced(g, pattern) is None:
            out.append(g)
    return out
