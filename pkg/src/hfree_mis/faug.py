"""Solvers for the structured rainbow instances of the three clique-like
forbidden patterns: clique minus a triangle, clique minus a complete
bipartite graph, and the gem.

Every solver either returns an independent set of size >= k (always
verified before returning), reports that no independent set meets every
part, or raises PatternViolationError with an embedding when the host graph
turns out not to be H-free after all.  The randomized ones never report a
false positive; misses are controlled by their repetition counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from typing import Callable

from .cograph import cograph_alpha, cograph_clique_cover, find_p4
from .errors import PatternViolationError
from .graph import Graph, bits, mask_of
from .iterexp import FaugInstance
from .ramsey import ramsey_bound, ramsey_extract

MisCallback = Callable[[Graph, int], "tuple[int, ...] | None"]
"""Complete decider used for branching: witness of size k in the given
graph, or None when alpha < k."""


@dataclass(frozen=True)
class FaugResult:
    found: bool
    witness: tuple[int, ...] = ()
    reason: str = ""


def _verify_found(g: Graph, vertices: tuple[int, ...], k: int) -> FaugResult:
    assert len(set(vertices)) >= k and g.is_independent_set(vertices)
    return FaugResult(True, tuple(sorted(vertices)), "independent set found")


def _branch_on_part(inst: FaugInstance, part_idx: int, callback: MisCallback) -> FaugResult:
    """Decide the instance by branching on every vertex of one part.

    Sound and complete given a complete callback: every rainbow set meets
    the part, so if no branch extends to k the rainbow answer is no.
    """
    g = inst.graph
    for v in bits(inst.parts[part_idx]):
        keep = g.full_mask & ~g.closed_neighborhood(v)
        sub, kept = g.induced(keep)
        wit = callback(sub, inst.k - 1)
        if wit is not None:
            lifted = tuple(kept[w] for w in wit) + (v,)
            return _verify_found(g, lifted, inst.k)
    return FaugResult(False, (), f"no independent set of size k meets part {part_idx}")


def _rainbow_exhaustive(g: Graph, parts: tuple[int, ...]) -> tuple[int, ...] | None:
    """Backtracking transversal search: one vertex per part, pairwise
    non-adjacent.  Exponential in the number of parts only."""
    order = sorted(range(len(parts)), key=lambda i: parts[i].bit_count())
    chosen: list[int] = []

    def rec(level: int, blocked: int):
        if level == len(order):
            return tuple(chosen)
        cand = parts[order[level]] & ~blocked
        for v in bits(cand):
            chosen.append(v)
            hit = rec(level + 1, blocked | g.closed_neighborhood(v))
            if hit is not None:
                return hit
            chosen.pop()
        return None

    return rec(0, 0)


# -- clique minus a triangle --------------------------------------------------

def solve_faug_clique_minus_triangle(
    inst: FaugInstance, r: int, rng: random.Random,
    callback: MisCallback,
    separation_rounds: int = 1024,
    part_threshold: int | None = None,
) -> FaugResult:
    """Rainbow solver for hosts excluding the complete graph on r+3 vertices
    minus a triangle; extracted cliques have size r.

    Verifies the part/clique bipartite graph is a path, guesses the two
    endpoint vertices, clears long edges by random separation and finishes
    with the path dynamic program.  One-sided error.
    """
    g, k = inst.graph, inst.k
    if k == 1:
        return _verify_found(g, (next(bits(inst.parts[0])),), 1)
    if any(len(cl) != r for cl in inst.cliques.cliques):
        raise ValueError("extracted cliques must have size r")
    threshold = ramsey_bound(r, k) if part_threshold is None else part_threshold

    for p in inst.parts:
        if p.bit_count() >= ramsey_bound(r, k):
            out = ramsey_extract(g, r, k, p)
            if out.kind == "independent_set":
                return _verify_found(g, out.members, k)
    small = min(range(k), key=lambda i: inst.parts[i].bit_count())
    if inst.parts[small].bit_count() < threshold:
        return _branch_on_part(inst, small, callback)

    order = _check_bip_path(inst, r)
    if isinstance(order, FaugResult):
        return order
    parts = tuple(inst.parts[i] for i in order)

    if k <= 4:
        hit = _rainbow_exhaustive(g, parts)
        return _verify_found(g, hit, k) if hit else FaugResult(False, (), "exhaustive transversal search")

    long_pairs = [(i, j) for i in range(1, k - 1) for j in range(i + 2, k - 1)]
    for x1 in bits(parts[0]):
        for xk in bits(parts[k - 1] & ~g.adj[x1]):
            blocked = g.closed_neighborhood(x1) | g.closed_neighborhood(xk)
            middles = [parts[i] & ~blocked for i in range(1, k - 1)]
            if any(m == 0 for m in middles):
                continue
            long_edges = []
            for i, j in long_pairs:
                for u in bits(middles[i - 1]):
                    for w in bits(middles[j - 1] & g.adj[u]):
                        long_edges.append((u, w))
            rounds = 1 if not long_edges else separation_rounds
            for _ in range(rounds):
                if long_edges:
                    keep = 0
                    for i in range(g.n):
                        if rng.random() < 0.5:
                            keep |= 1 << i
                    kept = [m & keep for m in middles]
                    for u, w in long_edges:
                        if keep >> u & 1 and keep >> w & 1:
                            kept = [m & ~(1 << u) & ~(1 << w) for m in kept]
                else:
                    kept = middles
                hit = _path_dp(g, kept)
                if hit is not None:
                    return _verify_found(g, (x1, xk) + hit, k)
    return FaugResult(False, (), "no transversal found (one-sided)")


def _check_bip_path(inst: FaugInstance, r: int):
    """Part indices in path order, or a FaugResult / PatternViolationError
    when the bipartite graph is not the path the host class forces."""
    g, k = inst.graph, inst.k
    clique_deg = [0] * (k - 1)
    for row in inst.bip:
        for ci in bits(row):
            clique_deg[ci] += 1
    for i in range(k):
        if inst.bip[i].bit_count() > 2:
            cs = list(bits(inst.bip[i]))[:3]
            part = inst.parts[i]
            if part.bit_count() < ramsey_bound(r, k):
                raise ValueError("part sees three cliques but is too small to certify")
            out = ramsey_extract(g, r, k, part)
            if out.kind == "independent_set":
                return _verify_found(g, out.members, k)
            witness = out.members + tuple(inst.cliques.cliques[c][0] for c in cs)
            raise PatternViolationError(f"K{r + 3}-K3", witness, "part sees three cliques")
    for ci in range(k - 1):
        if clique_deg[ci] > 2:
            nbr_parts = [i for i in range(k) if inst.bip[i] >> ci & 1][:3]
            triple = _independent_transversal_triple(g, [inst.parts[i] for i in nbr_parts])
            if triple is None:
                return FaugResult(False, (), "no independent triple across a degree-3 clique")
            raise PatternViolationError(
                f"K{r + 3}-K3", tuple(inst.cliques.cliques[ci]) + triple,
                "clique sees three parts")
    # connected, max degree 2, k parts vs k-1 cliques: must be a path
    ends = [i for i in range(k) if inst.bip[i].bit_count() <= 1]
    if k == 1:
        return [0]
    order = [ends[0]]
    used_cliques = 0
    while len(order) < k:
        row = inst.bip[order[-1]] & ~used_cliques
        ci = next(bits(row))
        used_cliques |= 1 << ci
        nxt = next(i for i in range(k) if i not in order and inst.bip[i] >> ci & 1)
        order.append(nxt)
    return order


def _independent_transversal_triple(g: Graph, parts: list[int]) -> tuple[int, ...] | None:
    for a in bits(parts[0]):
        for b in bits(parts[1] & ~g.adj[a]):
            cand = parts[2] & ~g.adj[a] & ~g.adj[b]
            if cand:
                return (a, next(bits(cand)), b)
    return None


def _path_dp(g: Graph, parts: list[int]) -> tuple[int, ...] | None:
    """One vertex per part, consecutive parts non-adjacent; assumes no edges
    between non-consecutive parts."""
    if not parts:
        return ()
    parent: list[dict[int, int]] = [dict() for _ in parts]
    for v in bits(parts[0]):
        parent[0][v] = -1
    for i in range(1, len(parts)):
        for v in bits(parts[i]):
            for u in parent[i - 1]:
                if not g.has_edge(u, v):
                    parent[i][v] = u
                    break
        if not parent[i]:
            return None
    v = next(iter(parent[-1]))
    path = [v]
    for i in range(len(parts) - 1, 0, -1):
        v = parent[i][v]
        path.append(v)
    return tuple(reversed(path))


# -- clique minus a complete bipartite graph ----------------------------------

def solve_faug_clique_minus_bipartite(
    inst: FaugInstance, r: int,
    callback: MisCallback,
    part_threshold: int | None = None,
) -> FaugResult:
    """Rainbow solver for hosts excluding K_{3r} minus K_{r,r}; extracted
    cliques have size 3r.

    Shows the clique-relation graph is one clique and the part/clique
    bipartite graph complete, concludes the part union excludes two disjoint
    r-cliques, and delegates to the cluster-free solver.  Deterministic.
    """
    g, k = inst.graph, inst.k
    if k == 1:
        return _verify_found(g, (next(bits(inst.parts[0])),), 1)
    if any(len(cl) != 3 * r for cl in inst.cliques.cliques):
        raise ValueError("extracted cliques must have size 3r")
    threshold = ramsey_bound(r, k) if part_threshold is None else part_threshold

    part_cliques: dict[int, tuple[int, ...]] = {}
    for i, p in enumerate(inst.parts):
        if p.bit_count() < threshold:
            return _branch_on_part(inst, i, callback)
        if p.bit_count() >= ramsey_bound(r, k):
            out = ramsey_extract(g, r, k, p)
            if out.kind == "independent_set":
                return _verify_found(g, out.members, k)
            part_cliques[i] = out.members
        else:
            small = _clique_in_mask(g, p, r)
            if small is not None:
                part_cliques[i] = small

    rel = inst.cliques.relations
    kk = k - 1  # number of extracted cliques

    def slice_of(ci: int, which: str) -> tuple[int, ...]:
        cl = inst.cliques.cliques[ci]
        return {"low": cl[:r], "mid": cl[r:2 * r], "high": cl[2 * r:]}[which]

    # any induced two-edge path in the relation graph yields the forbidden
    # pattern out of three clique slices
    for b in range(kk):
        nbrs = [a for a in range(kk) if a != b and rel[a][b] != "empty"]
        for ai in range(len(nbrs)):
            for ci in range(ai + 1, len(nbrs)):
                a, c = nbrs[ai], nbrs[ci]
                if rel[a][c] == "empty":
                    sa = slice_of(a, "high" if rel[a][b] == "semi_desc" else "low")
                    sc = slice_of(c, "high" if rel[b][c] == "semi_asc" else "low")
                    witness = sa + slice_of(b, "mid") + sc
                    _assert_clique_minus_bipartite(g, sa, slice_of(b, "mid"), sc, r)
                    raise PatternViolationError(
                        f"K{3 * r}-K{r},{r}", witness, "two-edge path among extracted cliques")

    comp_id = _relation_components(rel, kk)
    if len(set(comp_id)) > 1:
        for i in range(k):
            comps_seen = {comp_id[ci] for ci in bits(inst.bip[i])}
            if len(comps_seen) > 1:
                cs = sorted(bits(inst.bip[i]), key=lambda ci: comp_id[ci])
                a = cs[0]
                c = next(ci for ci in cs if comp_id[ci] != comp_id[a])
                ka = part_cliques.get(i)
                if ka is None:
                    raise ValueError("part bridges two components but is too small to certify")
                _assert_clique_minus_bipartite(g, slice_of(a, "low"), ka, slice_of(c, "low"), r)
                raise PatternViolationError(
                    f"K{3 * r}-K{r},{r}", ka + slice_of(a, "low") + slice_of(c, "low"),
                    "part bridges two relation components")
        raise AssertionError("disconnected relation graph with no bridging part")

    full_row = (1 << kk) - 1
    for i in range(k):
        if inst.bip[i] != full_row:
            a = next(bits(inst.bip[i]))
            c = next(bits(full_row & ~inst.bip[i]))
            ka = part_cliques.get(i)
            if ka is None:
                raise ValueError("part misses a clique but is too small to certify")
            if rel[a][c] == "semi_desc":
                sa, sc = slice_of(a, "high"), slice_of(c, "low")
            else:
                sa, sc = slice_of(a, "low"), slice_of(c, "high")
            _assert_clique_minus_bipartite(g, ka, sa, sc, r)
            raise PatternViolationError(
                f"K{3 * r}-K{r},{r}", ka + sa + sc, "part misses a clique")

    # every clique vertex dominates the part union, so it excludes K_r + K_r
    union = inst.all_parts_mask()
    sub, kept = g.induced(union)
    from .cluster import solve_cluster_free

    try:
        res = solve_cluster_free(sub, k, r, 2)
    except PatternViolationError as exc:
        lifted = tuple(kept[v] for v in exc.vertices)
        mid = inst.cliques.cliques[0][:r] if kk else ()
        raise PatternViolationError(
            f"K{3 * r}-K{r},{r}", lifted + mid,
            "two disjoint cliques inside the part union") from None
    if res.found:
        return _verify_found(g, tuple(kept[v] for v in res.witness), k)
    return FaugResult(False, (), "part union has no independent set of size k")


def _clique_in_mask(g: Graph, mask: int, r: int) -> tuple[int, ...] | None:
    """Any r-clique inside the mask, by direct search (small masks only)."""

    def grow(cur: list[int], cands: int):
        if len(cur) == r:
            return tuple(cur)
        for v in bits(cands):
            hit = grow(cur + [v], cands & g.adj[v] & ~((1 << (v + 1)) - 1))
            if hit is not None:
                return hit
        return None

    return grow([], mask)


def _relation_components(rel, kk: int) -> list[int]:
    comp = list(range(kk))

    def root(x):
        while comp[x] != x:
            comp[x] = comp[comp[x]]
            x = comp[x]
        return x

    for a in range(kk):
        for b in range(a + 1, kk):
            if rel[a][b] != "empty":
                comp[root(a)] = root(b)
    return [root(x) for x in range(kk)]


def _assert_clique_minus_bipartite(g: Graph, side_a, middle, side_b, r: int) -> None:
    """The three r-sets must induce the clique-minus-complete-bipartite
    pattern: everything complete except side_a x side_b."""
    assert len(side_a) == len(middle) == len(side_b) == r
    for part in (side_a, middle, side_b):
        assert g.is_clique(part)
    for u in side_a:
        for w in middle:
            assert g.has_edge(u, w)
    for u in middle:
        for w in side_b:
            assert g.has_edge(u, w)
    for u in side_a:
        for w in side_b:
            assert not g.has_edge(u, w)


# -- the gem ------------------------------------------------------------------

def solve_faug_gem(
    inst: FaugInstance, rng: random.Random,
    rounds: int | None = None,
) -> FaugResult:
    """Rainbow solver for gem-free hosts; extracted cliques are single
    vertices, so every part is dominated and induces a cograph.

    Covers each part by cliques, branches over cover tuples, then repeatedly
    clears part pairs without a balanced diamond via the three-way branching
    rule (the third branch splits the matched sub-cliques by a random
    subset).  Finds a rainbow set with probability at least 2^(-k^2) per
    round; never reports a false positive.
    """
    g, k = inst.graph, inst.k
    if k == 1:
        return _verify_found(g, (next(bits(inst.parts[0])),), 1)
    if any(len(cl) != 1 for cl in inst.cliques.cliques):
        raise ValueError("extracted cliques must be single vertices")
    if rounds is None:
        rounds = min(2 ** (k * k + 1), 512)
    centers = tuple(cl[0] for cl in inst.cliques.cliques)

    covers: list[list[int]] = []
    for i, p in enumerate(inst.parts):
        p4 = find_p4(g, p)
        if p4 is not None:
            dom = centers[next(bits(inst.bip[i]))]
            raise PatternViolationError("gem", p4 + (dom,), "path of four inside a dominated part")
        alpha, wit = cograph_alpha(g, p)
        if alpha >= k:
            return _verify_found(g, tuple(bits(wit)), k)
        covers.append(cograph_clique_cover(g, p))

    for _ in range(rounds):
        for combo in product(*covers):
            res = _gem_branching(g, k, list(combo), inst, centers, rng)
            if res.found:
                return res
    return FaugResult(False, (), "no transversal found (one-sided)")


def _adjacent_pairs(g: Graph, parts: list[int]) -> list[tuple[int, int]]:
    out = []
    for i in range(len(parts)):
        ni = 0
        for v in bits(parts[i]):
            ni |= g.adj[v]
        for j in range(i + 1, len(parts)):
            if ni & parts[j]:
                out.append((i, j))
    return out


def _find_balanced_diamond(g: Graph, pi: int, pj: int) -> tuple[int, int, int, int] | None:
    """(a, b, c, d) with a,b in the first clique, c,d in the second, all
    edges present except b-d."""
    for a in bits(pi):
        na = g.adj[a] & pj
        for b in bits(pi & ~(1 << a)):
            nb = g.adj[b] & pj
            common = na & nb
            only_a = na & ~nb
            if common and only_a:
                return (a, b, next(bits(common)), next(bits(only_a)))
    return None


def _gem_branching(g: Graph, k: int, parts: list[int], inst: FaugInstance,
                   centers: tuple[int, ...], rng: random.Random) -> FaugResult:
    if any(p == 0 for p in parts):
        return FaugResult(False, (), "emptied part")
    pairs = _adjacent_pairs(g, parts)
    target = next(((i, j) for i, j in pairs if _find_balanced_diamond(g, parts[i], parts[j]) is None), None)
    if target is None:
        return _gem_finish(g, k, parts, inst, centers)
    i, j = target
    # matched sub-clique structure: cross neighborhoods are equal or disjoint
    classes: dict[int, int] = {}
    zero_i = 0
    for a in bits(parts[i]):
        na = g.adj[a] & parts[j]
        if na == 0:
            zero_i |= 1 << a
        else:
            classes[na] = classes.get(na, 0) | (1 << a)
    matched = sorted(classes.items())
    zero_j = parts[j] & ~mask_of(v for na, _ in matched for v in bits(na))

    branches = []
    branches.append([parts[x] if x != i else zero_i for x in range(k)])
    branches.append([parts[x] if x != j else zero_j for x in range(k)])
    pick = [rng.random() < 0.5 for _ in matched]
    side_i = 0
    side_j = 0
    for take, (na, cls) in zip(pick, matched):
        if take:
            side_i |= cls
        else:
            side_j |= na
    third = [parts[x] for x in range(k)]
    third[i] = side_i
    third[j] = side_j
    branches.append(third)

    before = len(pairs)
    for br in branches:
        if any(p == 0 for p in br):
            continue
        after = len(_adjacent_pairs(g, br))
        assert after < before, "branching must remove a part adjacency"
        res = _gem_branching(g, k, br, inst, centers, rng)
        if res.found:
            return res
    return FaugResult(False, (), "all branches failed")


def _gem_finish(g: Graph, k: int, parts: list[int], inst: FaugInstance,
                centers: tuple[int, ...]) -> FaugResult:
    union = 0
    for p in parts:
        union |= p
    total = 0
    witness = 0
    comp_rest = union
    while comp_rest:
        v = comp_rest & -comp_rest
        comp = v
        frontier = g.adj[v.bit_length() - 1] & union & ~comp
        while frontier:
            comp |= frontier
            nxt = 0
            for w in bits(frontier):
                nxt |= g.adj[w]
            frontier = nxt & union & ~comp
        comp_rest &= ~comp
        p4 = find_p4(g, comp)
        if p4 is not None:
            dom = _component_dominator(g, comp, centers)
            raise PatternViolationError("gem", p4 + (dom,), "path of four in a cleaned component")
        a, w = cograph_alpha(g, comp)
        total += a
        witness |= w
    if total >= k:
        return _verify_found(g, tuple(bits(witness)), k)
    return FaugResult(False, (), "cleaned components too small")


def _component_dominator(g: Graph, comp: int, centers: tuple[int, ...]) -> int:
    for c in centers:
        if comp & ~g.adj[c] == 0:
            return c
    # fall back to any center seeing part of the component
    for c in centers:
        if comp & g.adj[c]:
            return c
    return centers[0]
