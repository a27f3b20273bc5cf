import random

import pytest

from hfree_mis.errors import PatternViolationError
from hfree_mis.graph import Graph, disjoint_union, random_graph
from hfree_mis.induced import find_induced
from hfree_mis.kernelize import (
    kernel_krfree,
    kernel_paw_like,
    solve_via_isolated_clique,
    solve_via_turing,
    turing_kernel_star,
)
from hfree_mis.oracle import alpha_exact
from hfree_mis.patterns import (
    clique_minus_bipartite,
    clique_minus_star,
    complete,
    complete_multipartite,
    cycle,
    empty_graph,
    pattern,
)
from hfree_mis.ramsey import ramsey_bound

from helpers import sample_hfree


def test_krfree_solves_large_instances():
    res = kernel_krfree(empty_graph(6), 3, 3)
    assert res.verdict == "solved_yes" and len(res.witness) >= 3


def test_krfree_keeps_small_instances():
    res = kernel_krfree(cycle(5), 3, 3)
    assert res.verdict == "reduced" and res.graph.n == 5
    assert alpha_exact(res.graph).alpha == 2  # answer stays no


def test_krfree_two_c5():
    g = disjoint_union(cycle(5), cycle(5))
    res = kernel_krfree(g, 4, 3)
    assert res.verdict == "solved_yes"
    assert g.is_independent_set(res.witness) and len(res.witness) >= 4


def test_krfree_violation():
    with pytest.raises(PatternViolationError):
        kernel_krfree(complete(10), 3, 3)


def test_paw_kernel_multipartite_rule():
    # complete multipartite with parts of size 2: alpha 2 preserved
    g = complete_multipartite([2] * 8)
    res = kernel_paw_like(g, 3, 5)
    if res.verdict == "reduced":
        assert alpha_exact(res.graph).alpha == 2
    else:
        assert res.verdict == "solved_no"


def test_paw_kernel_star_rule_fires_r5():
    # core clique of size 6 with matched near-twins and a D vertex:
    # the part-deletion rule must fire and keep the answer
    core = complete(6)
    n = core.n
    edges = core.edges()
    b = []
    for x in range(4):  # near-twins missing exactly core vertex x
        u = n
        n += 1
        b.append(u)
        for w in range(6):
            if w != x:
                edges.append((u, w))
    # the near-twins pairwise: distinct misses -> adjacent
    for i in range(len(b)):
        for j in range(i + 1, len(b)):
            edges.append((b[i], b[j]))
    d = n
    n += 1
    edges.append((d, 0))  # touches one part only
    g = Graph(n, edges)
    assert find_induced(g, clique_minus_star(5, 2)) is None
    a_before = alpha_exact(g).alpha
    res = kernel_paw_like(g, 2, 5)
    if res.verdict == "reduced":
        deleted = g.n - res.graph.n
        assert deleted > 0
        assert (alpha_exact(res.graph).alpha >= 2) == (a_before >= 2)
    else:
        assert res.verdict == "solved_yes" or a_before < 2


def test_paw_kernel_answer_preservation_random():
    graphs = sample_hfree(pattern("paw"), 60, 30, seed=50, densities=(0.06, 0.12, 0.2))
    assert len(graphs) >= 40
    for g in graphs:
        a = alpha_exact(g).alpha
        for k in range(1, 6):
            res = kernel_paw_like(g, k, 4)
            if res.verdict == "solved_yes":
                assert a >= k and g.is_independent_set(res.witness)
            elif res.verdict == "solved_no":
                assert a < k
            else:
                assert (alpha_exact(res.graph).alpha >= k) == (a >= k)
                # the reduced graph is an induced subgraph of the input
                sub, _ = g.induced(sum(1 << v for v in res.kept_vertices))
                assert sub == res.graph


def test_paw_kernel_violation_on_lie():
    g = pattern("paw").graph
    big = disjoint_union(g, complete(9))
    with pytest.raises(PatternViolationError) as err:
        # k above alpha so no early positive exit preempts the checks
        kernel_paw_like(big, 4, 4)
    emb = err.value.vertices
    sub, _ = big.induced(sum(1 << v for v in emb))
    assert find_induced(sub, clique_minus_star(4, 2)) is not None


def test_turing_connected_required():
    g = disjoint_union(complete(3), complete(3))
    with pytest.raises(ValueError):
        turing_kernel_star(g, 2, 5)


def test_turing_small_instances_pass_through():
    g = cycle(5)
    out = turing_kernel_star(g, 2, 5)
    assert out.subinstances  # either emitted pieces or the instance itself


def test_turing_driver_component_sum():
    g = disjoint_union(complete(8), complete(1))
    assert solve_via_turing(g, 2, 5)
    assert not solve_via_turing(complete(8), 2, 5)


def test_turing_driver_oracle_equivalence():
    graphs = sample_hfree(clique_minus_star(5, 3), 40, 24, seed=51,
                          densities=(0.08, 0.15, 0.25))
    assert len(graphs) >= 25
    for g in graphs:
        a = alpha_exact(g).alpha
        for k in range(1, 6):
            assert solve_via_turing(g, k, 5) == (a >= k)


def test_turing_subinstances_are_bounded():
    graphs = sample_hfree(clique_minus_star(5, 3), 15, 30, seed=52,
                          densities=(0.1, 0.2))
    for g in graphs:
        for comp in g.connected_components():
            sub, _ = g.induced(comp)
            out = turing_kernel_star(sub, 4, 5)
            for j_g, j_k in out.subinstances:
                if j_g.n == sub.n:
                    continue  # passed-through small instance
                assert j_g.n < ramsey_bound(3, max(j_k, 1)) or j_k <= 0


def test_isolated_clique_route():
    # graphs excluding a triangle plus an isolated vertex (r = 4)
    h = disjoint_union(complete(3), complete(1))
    graphs = sample_hfree(h, 30, 16, seed=53, densities=(0.3, 0.5, 0.7))
    assert len(graphs) >= 15
    for g in graphs:
        a = alpha_exact(g).alpha
        for k in range(1, 5):
            assert solve_via_isolated_clique(g, k, 4) == (a >= k)
