import random

import pytest

from hfree_mis.errors import PatternViolationError
from hfree_mis.graph import disjoint_union, random_graph
from hfree_mis.induced import find_induced
from hfree_mis.oracle import alpha_exact
from hfree_mis.patterns import clique_minus_star, complete, cycle, empty_graph
from hfree_mis.ramsey import ceil_root, eh_extract, ramsey_bound, ramsey_extract, ramsey_multicolor_bound

from helpers import sample_hfree


def test_bound_values():
    assert ramsey_bound(3, 3) == 6
    for k in range(1, 8):
        assert ramsey_bound(2, k) == k
    for r in range(1, 8):
        assert ramsey_bound(r, 2) == r
    assert ramsey_bound(4, 4) == 20


def test_bound_pascal_recurrence():
    for r in range(2, 7):
        for k in range(2, 7):
            assert ramsey_bound(r, k) == ramsey_bound(r - 1, k) + ramsey_bound(r, k - 1)


def test_multicolor_bound_grows_and_matches_two_colors():
    assert ramsey_multicolor_bound(1, 5) == 5
    assert ramsey_multicolor_bound(2, 3) == ramsey_bound(3, 3)
    assert ramsey_multicolor_bound(3, 3) >= ramsey_multicolor_bound(2, 3)
    big = ramsey_multicolor_bound(4, 4)
    assert big > 10**6  # astronomically large, exact integer


def test_extract_trivial_cases():
    out = ramsey_extract(complete(6), 3, 3)
    assert out.kind == "clique" and out.size >= 3
    out = ramsey_extract(empty_graph(6), 3, 3)
    assert out.kind == "independent_set" and out.size >= 3


def test_extract_two_c5_gives_is4():
    g = disjoint_union(cycle(5), cycle(5))
    out = ramsey_extract(g, 3, 4)
    assert out.kind == "independent_set" and out.size >= 4
    assert alpha_exact(g).alpha >= 4


def test_extract_valid_at_exact_bound():
    rng = random.Random(10)
    for r in range(2, 6):
        for k in range(2, 6):
            n = ramsey_bound(r, k)
            for _ in range(8):
                g = random_graph(n, rng.random(), rng)
                out = ramsey_extract(g, r, k)
                out.validate(g)
                if out.kind == "clique":
                    assert out.size >= r
                else:
                    assert out.size >= k


def test_extract_rejects_small_input():
    with pytest.raises(ValueError):
        ramsey_extract(empty_graph(3), 3, 3)


def test_ceil_root():
    assert ceil_root(1, 3) == 1
    assert ceil_root(8, 3) == 2
    assert ceil_root(9, 3) == 3
    assert ceil_root(27, 3) == 3
    assert ceil_root(28, 3) == 4
    for n in range(1, 200):
        t = ceil_root(n, 3)
        assert (t - 1) ** 3 < n <= t**3


def test_eh_whole_clique_and_empty():
    out = eh_extract(complete(9), 4, 1)
    assert out.kind == "clique" and out.size >= 3
    out = eh_extract(empty_graph(9), 4, 1)
    assert out.kind == "independent_set" and out.size >= 3


def test_eh_guarantee_on_sampled_corpus():
    graphs = sample_hfree(clique_minus_star(4, 2), 120, 60, seed=21,
                          densities=(0.02, 0.05, 0.08))
    assert len(graphs) >= 100
    for g in graphs:
        out = eh_extract(g, 4, 2)
        out.validate(g)
        assert out.size >= ceil_root(g.n, 3)


def test_eh_violation_carries_embedding():
    # complete graph plus one isolated vertex is exactly the forbidden
    # pattern for s = r-1 at r = 4
    g = disjoint_union(complete(8), empty_graph(1))
    with pytest.raises(PatternViolationError) as err:
        eh_extract(g, 4, 3)
    emb = err.value.vertices
    sub, _ = g.induced(sum(1 << v for v in emb))
    assert find_induced(sub, clique_minus_star(4, 3)) is not None
