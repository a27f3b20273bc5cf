"""Iterative expansion and the Ramsey extraction stage.

The driver turns a solver for the structured rainbow problem into a full
independent-set solver: it greedily accumulates vertex-disjoint independent
sets of size k-1, branching into k-1 subproblems when it gets stuck, and
hands a complete batch to the expansion solver.

The extraction stage converts such a batch into structured instances: it
types every ordered pair of seed sets by its bipartite adjacency matrix,
finds a monochromatic clique in the type-colored auxiliary graph, turns its
columns into the extracted cliques, branches over index subsets and
color-coding outcomes, and emits every branch whose part/clique bipartite
graph is connected.

Faithful thresholds (the multicolor Ramsey bounds) are astronomically
large, so the stage also runs in a desk mode where the batch size, index
subsets and repetition counts are caller-supplied; sub-procedures stay
individually testable on planted instances.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import combinations, product

from .graph import Graph, bits, mask_of
from .ramsey import ramsey_multicolor_bound

RELATIONS = ("empty", "full", "semi_asc", "semi_desc")


def classify_relation(g: Graph, ca: tuple[int, ...], cb: tuple[int, ...]) -> str | None:
    """Match the adjacency between two ordered cliques against the four
    allowed shapes, edge by edge."""
    qlen = len(ca)
    empty = full = asc = desc = True
    for i in range(qlen):
        for j in range(qlen):
            e = g.has_edge(ca[i], cb[j])
            if e:
                empty = False
            if e != (i != j):
                full = False
            if e != (i < j):
                asc = False
            if e != (i > j):
                desc = False
    if empty:
        return "empty"
    if full:
        return "full"
    if asc:
        return "semi_asc"
    if desc:
        return "semi_desc"
    return None


@dataclass(frozen=True)
class RamseyCliques:
    """k-1 ordered vertex-disjoint cliques of equal size whose columns are
    independent sets and whose pairwise relations are empty, full or
    semi-full."""

    cliques: tuple[tuple[int, ...], ...]
    relations: tuple[tuple[str | None, ...], ...]

    @property
    def count(self) -> int:
        return len(self.cliques)

    @property
    def size(self) -> int:
        return len(self.cliques[0]) if self.cliques else 0

    @classmethod
    def build(cls, g: Graph, cliques: tuple[tuple[int, ...], ...]) -> "RamseyCliques":
        """Validate the definition and classify every pair relation."""
        qlen = len(cliques[0]) if cliques else 0
        for cl in cliques:
            if len(cl) != qlen:
                raise ValueError("cliques must share one size")
            if not g.is_clique(cl):
                raise ValueError(f"not a clique: {cl}")
        for j in range(qlen):
            col = [cl[j] for cl in cliques]
            if not g.is_independent_set(col):
                raise ValueError(f"column {j} is not independent")
        m = len(cliques)
        rel = [[None] * m for _ in range(m)]
        for a in range(m):
            for b in range(m):
                if a == b:
                    continue
                rel[a][b] = classify_relation(g, cliques[a], cliques[b])
                if rel[a][b] is None:
                    raise ValueError(f"relation between cliques {a} and {b} matches no allowed shape")
        return cls(tuple(cliques), tuple(tuple(row) for row in rel))


@dataclass(frozen=True)
class FaugInstance:
    """A structured rainbow instance: graph partitioned into candidate parts
    X_1..X_k and extracted cliques C_1..C_{k-1}.

    Every part sees every clique completely or not at all, and the bipartite
    part/clique adjacency graph is connected.  The instance promises that
    any independent set of size k lies inside the union of the parts.  The
    goal is an independent set of size >= k, or a certificate that no
    independent set meets every part.
    """

    graph: Graph
    k: int
    parts: tuple[int, ...]            # vertex masks, one per part
    cliques: RamseyCliques
    bip: tuple[int, ...]              # per part: bitmask over clique indices
    host_map: tuple[int, ...] | None = None  # instance vertex -> host vertex

    @classmethod
    def build(cls, g: Graph, k: int, parts: tuple[int, ...],
              cliques: RamseyCliques,
              host_map: tuple[int, ...] | None = None) -> "FaugInstance":
        if len(parts) != k:
            raise ValueError("need exactly k parts")
        if cliques.count != k - 1:
            raise ValueError("need exactly k-1 cliques")
        if any(p == 0 for p in parts):
            raise ValueError("parts must be non-empty")
        clique_masks = [mask_of(cl) for cl in cliques.cliques]
        bip = []
        for p in parts:
            row = 0
            for ci, cm in enumerate(clique_masks):
                links = _part_clique_adjacency(g, p, cm)
                if links == "partial":
                    raise ValueError(f"part sees clique {ci} partially")
                if links == "all":
                    row |= 1 << ci
            bip.append(row)
        if not _bip_connected(k, tuple(bip)):
            raise ValueError("part/clique bipartite graph is disconnected")
        return cls(g, k, tuple(parts), cliques, tuple(bip), host_map)

    def all_parts_mask(self) -> int:
        m = 0
        for p in self.parts:
            m |= p
        return m

    def to_host(self, vertices: tuple[int, ...]) -> tuple[int, ...]:
        if self.host_map is None:
            return vertices
        return tuple(sorted(self.host_map[v] for v in vertices))


def _part_clique_adjacency(g: Graph, part: int, clique_mask: int) -> str:
    seen_all = seen_none = False
    for v in bits(part):
        row = g.adj[v] & clique_mask
        if row == clique_mask:
            seen_all = True
        elif row == 0:
            seen_none = True
        else:
            return "partial"
    if seen_all and seen_none:
        return "partial"
    return "all" if seen_all else "none"


def _bip_connected(k: int, bip: tuple[int, ...]) -> bool:
    if k == 1:
        return True
    total = 2 * k - 1  # parts then cliques
    seen = 1
    frontier = [0]
    while frontier:
        node = frontier.pop()
        if node < k:
            for ci in bits(bip[node]):
                nxt = k + ci
                if not (seen >> nxt & 1):
                    seen |= 1 << nxt
                    frontier.append(nxt)
        else:
            ci = node - k
            for pi in range(k):
                if bip[pi] >> ci & 1 and not (seen >> pi & 1):
                    seen |= 1 << pi
                    frontier.append(pi)
    return seen == (1 << total) - 1


# -- the expansion driver ------------------------------------------------------

def iterexp_driver(g: Graph, k: int, batch_size, expansion_solver):
    """Decide an independent set of size k through iterative expansion.

    Accumulates ``batch_size(k)`` vertex-disjoint independent sets of size
    k-1 (built by recursive self-calls); when building stalls, every
    independent set of size k meets the accumulated vertices, so the driver
    branches on each of them into a k-1 subproblem.  A complete batch is
    handed to ``expansion_solver(graph, k, sets, solve)`` which must return
    a witness of size >= k or None meaning no independent set of size k
    exists; ``solve`` re-enters the driver for recursive branching.

    Returns a sorted witness tuple, or None.  Complete whenever the
    expansion solver is.
    """
    memo: dict[tuple[Graph, int], tuple[int, ...] | None] = {}

    def solve(gg: Graph, kk: int) -> tuple[int, ...] | None:
        if kk <= 0:
            return ()
        if gg.n < kk:
            return None
        if kk == 1:
            return (0,)
        key = (gg, kk)
        if key in memo:
            return memo[key]
        wit = _inner(gg, kk)
        if wit is not None:
            wit = tuple(sorted(wit))
            assert len(wit) >= kk and gg.is_independent_set(wit)
        memo[key] = wit
        return wit

    def _inner(gg: Graph, kk: int) -> tuple[int, ...] | None:
        from .oracle import greedy_independent_set

        gi = greedy_independent_set(gg)
        if gi.bit_count() >= kk:
            return tuple(bits(gi))[:kk]
        sets: list[tuple[int, ...]] = []
        used = 0
        target = batch_size(kk)
        while len(sets) < target:
            sub, kept = gg.induced(gg.full_mask & ~used)
            wit = solve(sub, kk - 1)
            if wit is None:
                # every independent set of size kk meets the accumulated sets
                for v in bits(used):
                    keep = gg.full_mask & ~gg.closed_neighborhood(v)
                    sub2, kept2 = gg.induced(keep)
                    wit2 = solve(sub2, kk - 1)
                    if wit2 is not None:
                        return tuple(kept2[w] for w in wit2) + (v,)
                return None
            s = tuple(kept[w] for w in wit)[: kk - 1]
            sets.append(s)
            for v in s:
                used |= 1 << v
        return expansion_solver(gg, kk, sets, solve)

    return solve(g, k)


# -- pair types and the auxiliary monochromatic clique ------------------------

def pair_type(g: Graph, sa: tuple[int, ...], sb: tuple[int, ...]) -> int:
    """Bit matrix of the adjacency between two ordered (k-1)-sets."""
    t = 0
    idx = 0
    for a in sa:
        for b in sb:
            if g.has_edge(a, b):
                t |= 1 << idx
            idx += 1
    return t


def _max_monochromatic_clique(m: int, color: dict[tuple[int, int], int]) -> list[int]:
    """Largest vertex set of the complete graph on [m] whose pairs all share
    one color.  Exhaustive with pruning; m stays tiny in desk mode."""
    best: list[int] = [0] if m else []
    by_color: dict[int, list[int]] = {}
    for (i, j), c in color.items():
        by_color.setdefault(c, []).append((i, j))
    for c, pairs in by_color.items():
        adj = [0] * m
        for i, j in pairs:
            adj[i] |= 1 << j
            adj[j] |= 1 << i

        def grow(cur: list[int], cands: int):
            nonlocal best
            if len(cur) > len(best):
                best = cur[:]
            for v in bits(cands):
                grow(cur + [v], cands & adj[v] & ~((1 << (v + 1)) - 1))

        grow([], (1 << m) - 1)
    return best


# -- thresholds ---------------------------------------------------------------

def h_faithful(k: int, f_k: int) -> int:
    return f_k * (1 << (k * (k - 1)))


def g_faithful(k: int, f_k: int) -> int:
    """Seed-batch size making the monochromatic clique unconditional."""
    colors = 1 << ((k - 1) * (k - 1))
    return ramsey_multicolor_bound(colors, h_faithful(k, f_k))


@dataclass
class StageConfig:
    """Caps for the extraction stage.  ``faithful=True`` removes them (only
    viable for k <= 2)."""

    faithful: bool = False
    max_index_subsets: int = 64
    max_signature_tuples: int = 256
    color_rounds: int = 4


@dataclass
class StageOutcome:
    instances: list[FaugInstance]
    early_set: tuple[int, ...] | None
    mono_clique_size: int
    exhausted: bool   # True when no cap truncated the branch enumeration


def ramsey_extraction_stage(g: Graph, k: int, seed_sets: list[tuple[int, ...]],
                            f_k: int, rng: random.Random,
                            config: StageConfig | None = None) -> StageOutcome:
    """Turn disjoint (k-1)-sized independent sets into structured instances.

    Emits one instance per surviving (index subset, coloring, signature
    tuple) branch; may instead return an early independent set when an
    extracted column set turns out independent.
    """
    config = config or StageConfig()
    if k == 1:
        # no cliques needed; a single all-vertex part per coloring
        inst = FaugInstance.build(g, 1, (g.full_mask,), RamseyCliques((), ()))
        return StageOutcome([inst], None, 0, True)
    for s in seed_sets:
        if len(s) != k - 1:
            raise ValueError("seed sets must have size k-1")

    m = len(seed_sets)
    colors = {(i, j): pair_type(g, seed_sets[i], seed_sets[j])
              for i in range(m) for j in range(i + 1, m)}
    mono = sorted(_max_monochromatic_clique(m, colors)) if m > 1 else list(range(m))
    h_req = h_faithful(k, f_k) if config.faithful else f_k
    if len(mono) < max(h_req, f_k):
        return StageOutcome([], None, len(mono), False)

    # columns of the monochromatic batch form the candidate cliques
    full_cliques = tuple(tuple(seed_sets[i][p] for i in mono) for p in range(k - 1))
    for col in full_cliques:
        if g.is_independent_set(col):
            if len(col) >= k:
                return StageOutcome([], tuple(col[:k]), len(mono), True)

    exhausted = True
    subsets = list(combinations(range(len(mono)), f_k))
    if not config.faithful and len(subsets) > config.max_index_subsets:
        subsets = subsets[: config.max_index_subsets]
        exhausted = False

    clique_vertices = mask_of(v for cl in full_cliques for v in cl)
    instances: list[FaugInstance] = []
    rounds = 1 if config.faithful else config.color_rounds
    for sel in subsets:
        cliques = tuple(tuple(cl[i] for i in sel) for cl in full_cliques)
        try:
            rc = RamseyCliques.build(g, cliques)
        except ValueError:
            continue  # a restricted column went non-clique: not a usable branch
        cmasks = [mask_of(cl) for cl in cliques]
        used = mask_of(v for cl in cliques for v in cl)
        survivors = 0
        for v in bits(g.full_mask & ~clique_vertices | (clique_vertices & ~used)):
            sig_ok = True
            for cm in cmasks:
                row = g.adj[v] & cm
                if row != 0 and row != cm:
                    sig_ok = False
                    break
            if sig_ok:
                survivors |= 1 << v
        for _ in range(rounds):
            coloring = [rng.randrange(k) for _ in range(g.n)]
            classes: list[dict[int, int]] = [dict() for _ in range(k)]
            for v in bits(survivors):
                sig = 0
                for ci, cm in enumerate(cmasks):
                    if g.adj[v] & cm:
                        sig |= 1 << ci
                cls = classes[coloring[v]]
                cls[sig] = cls.get(sig, 0) | (1 << v)
            if any(not c for c in classes):
                continue
            tuples = list(product(*[sorted(c.items()) for c in classes]))
            if not config.faithful and len(tuples) > config.max_signature_tuples:
                tuples = tuples[: config.max_signature_tuples]
                exhausted = False
            for combo in tuples:
                parts = tuple(mask for _sig, mask in combo)
                inst = _induced_instance(g, k, parts, cliques)
                if inst is not None:
                    instances.append(inst)
    return StageOutcome(instances, None, len(mono), exhausted)


def _induced_instance(g: Graph, k: int, parts: tuple[int, ...],
                      cliques: tuple[tuple[int, ...], ...]) -> FaugInstance | None:
    """Instance induced on the parts and cliques, or None if the branch is
    degenerate (disconnected bipartite graph, bad relation)."""
    all_mask = 0
    for p in parts:
        all_mask |= p
    for cl in cliques:
        all_mask |= mask_of(cl)
    sub, kept = g.induced(all_mask)
    pos = {v: i for i, v in enumerate(kept)}
    parts_sub = tuple(mask_of(pos[v] for v in bits(p)) for p in parts)
    cliques_sub = tuple(tuple(pos[v] for v in cl) for cl in cliques)
    try:
        rc = RamseyCliques.build(sub, cliques_sub)
        return FaugInstance.build(sub, k, parts_sub, rc, host_map=tuple(kept))
    except ValueError:
        return None
