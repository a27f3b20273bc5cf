import random

import pytest

from hfree_mis.graph import Graph, bits, complement, disjoint_union, join, mask_of, random_graph
from hfree_mis.oracle import alpha_exact
from hfree_mis.patterns import complete, empty_graph, pattern


def test_no_self_loops():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])


def test_edge_range_checked():
    with pytest.raises(ValueError):
        Graph(2, [(0, 5)])


def test_adjacency_symmetric():
    rng = random.Random(0)
    for _ in range(20):
        g = random_graph(8, 0.4, rng)
        for u in range(g.n):
            for v in range(g.n):
                assert g.has_edge(u, v) == g.has_edge(v, u)
            assert not g.has_edge(u, u)


def test_join_of_single_vertices_is_edge():
    g = join(empty_graph(1), empty_graph(1))
    assert g.n == 2 and g.has_edge(0, 1)


def test_complement_involution():
    rng = random.Random(1)
    for _ in range(25):
        g = random_graph(rng.randrange(1, 13), rng.random(), rng)
        assert complement(complement(g)) == g


def test_union_of_two_edges_alpha():
    g = disjoint_union(complete(2), complete(2))
    assert alpha_exact(g).alpha == 2


def test_join_alpha_is_max():
    rng = random.Random(2)
    for _ in range(25):
        g1 = random_graph(rng.randrange(1, 11), rng.random(), rng)
        g2 = random_graph(rng.randrange(1, 11), rng.random(), rng)
        a = alpha_exact(join(g1, g2)).alpha
        assert a == max(alpha_exact(g1).alpha, alpha_exact(g2).alpha)


def test_disjoint_union_alpha_is_sum():
    rng = random.Random(3)
    for _ in range(25):
        g1 = random_graph(rng.randrange(1, 11), rng.random(), rng)
        g2 = random_graph(rng.randrange(1, 11), rng.random(), rng)
        a = alpha_exact(disjoint_union(g1, g2)).alpha
        assert a == alpha_exact(g1).alpha + alpha_exact(g2).alpha


def test_components_partition_vertices():
    rng = random.Random(4)
    for _ in range(20):
        g = random_graph(rng.randrange(1, 14), 0.15, rng)
        comps = g.connected_components()
        total = 0
        for c in comps:
            assert total & c == 0
            total |= c
        assert total == g.full_mask


def test_induced_subgraph_keeps_edges():
    g = pattern("C5").graph
    sub, kept = g.induced(mask_of([0, 1, 3]))
    assert sub.n == 3
    for i in range(3):
        for j in range(3):
            if i != j:
                assert sub.has_edge(i, j) == g.has_edge(kept[i], kept[j])


def test_labels_follow_operations():
    g = Graph(2, [(0, 1)], labels=("a", "b"))
    h = Graph(1, labels=("c",))
    u = disjoint_union(g, h)
    assert u.labels == ("a", "b", "c")
    assert complement(u).labels == ("a", "b", "c")
    sub, _ = u.induced(mask_of([1, 2]))
    assert sub.labels == ("b", "c")


def test_bits_round_trip():
    m = mask_of([0, 3, 7])
    assert list(bits(m)) == [0, 3, 7]
