import random

import pytest

from hfree_mis.cluster import ClusterResult, solve_cluster_free
from hfree_mis.errors import PatternViolationError
from hfree_mis.graph import disjoint_union, random_graph
from hfree_mis.induced import find_induced
from hfree_mis.oracle import alpha_exact
from hfree_mis.patterns import cluster, complete, cycle, pattern, star

from helpers import sample_hfree


def test_c5_examples():
    res = solve_cluster_free(cycle(5), 2, 2, 2)
    assert res.found and len(res.witness) >= 2
    res = solve_cluster_free(cycle(5), 3, 2, 2)
    assert not res.found


def test_single_vertex_goal():
    res = solve_cluster_free(complete(3), 1, 2, 2)
    assert res.found and len(res.witness) >= 1


def test_star_needs_seedless_run():
    # no valid anchor clique exists for the leaf set of a star
    g = star(3)
    res = solve_cluster_free(g, 3, 2, 2)
    assert res.found and len(res.witness) >= 3


def test_oracle_equivalence_2k2(seed=31):
    graphs = sample_hfree(cluster(2, 2), 40, 12, seed, densities=(0.5, 0.7, 0.85))
    assert len(graphs) >= 20
    for g in graphs:
        a = alpha_exact(g).alpha
        for k in range(1, 6):
            res = solve_cluster_free(g, k, 2, 2)
            assert res.found == (a >= k)
            if res.found:
                assert g.is_independent_set(res.witness) and len(res.witness) >= k


def test_oracle_equivalence_2k3(seed=32):
    graphs = sample_hfree(cluster(3, 2), 40, 14, seed, densities=(0.3, 0.5, 0.7))
    assert len(graphs) >= 20
    for g in graphs:
        a = alpha_exact(g).alpha
        for k in range(1, 6):
            res = solve_cluster_free(g, k, 3, 2)
            assert res.found == (a >= k)


def test_family_size_bound():
    rng = random.Random(33)
    for _ in range(25):
        g = random_graph(rng.randrange(1, 13), rng.choice([0.5, 0.7]), rng)
        if find_induced(g, cluster(2, 2)) is not None:
            continue
        for k in range(1, 6):
            res = solve_cluster_free(g, k, 2, 2)
            assert res.family_insertions <= ClusterResult.family_bound(g.n, k, 2, 2)


def test_violation_on_lying_caller():
    # an edge plus a clique: the anchored region is big enough that the
    # base-case extraction runs straight into the second edge
    g = disjoint_union(complete(2), complete(4))
    with pytest.raises(PatternViolationError) as err:
        solve_cluster_free(g, 4, 2, 2)
    emb = err.value.vertices
    assert len(emb) == 4
    sub, _ = g.induced(sum(1 << v for v in emb))
    assert find_induced(sub, cluster(2, 2)) is not None
