"""Generators for the parameterized-hardness constructions and the
join-composition lower-bound generator, with verifiable solution
correspondence.

A grid tiling instance is a k x k toroidal array of tiles, each a set of
pairs over {0..m-1}^2; it is feasible when one pair per tile can be chosen
agreeing in the first coordinate along rows and the second along columns.
The reduction encodes each tile as a gadget of 8(p+1) cliques of size n_t
(a cycle of 4p+4 plus four attached paths of p+1), wired by three edge
types, and connects neighboring gadgets toroidally so that independent
sets of size 8(p+1)k^2 correspond exactly to feasible tilings.

Edge types between consecutive cliques:

* half graph: a-th vertex adjacent to b-th iff a > b;
* row type: a-th adjacent to b-th iff the a-th element's first coordinate
  is smaller than the b-th element's (the complement of row-compatibility);
* column type: same with second coordinates;
* anti-matching: all pairs except equal indices.

The first variant uses half graphs on the cycle and row/column types on the
paths; the second replaces every within-gadget interaction by an
anti-matching, leaving the compatibility content on the single inter-gadget
interaction in the middle of each path of cliques; the third adds an
anti-matching between the two cycle neighbors of each branching clique.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product

from .graph import Graph, bits, join
from .induced import find_induced
from .oracle import alpha_exact
from .patterns import HPattern, cycle as cycle_graph, star

VARIANTS = ("first", "second", "third")


@dataclass(frozen=True)
class GridTiling:
    k: int
    m: int
    tiles: tuple[tuple[tuple[tuple[int, int], ...], ...], ...]  # tiles[i][j] = pairs

    def tile(self, i: int, j: int) -> tuple[tuple[int, int], ...]:
        return self.tiles[i][j]

    @property
    def tile_size(self) -> int:
        return len(self.tiles[0][0])


def gen_grid_tiling(k: int, m: int, n_t: int, planted: bool, rng: random.Random):
    """Random grid tiling instance; with ``planted`` a feasible solution is
    embedded and returned, else the second value is None."""
    if n_t > m * m:
        raise ValueError("tiles cannot exceed m*m distinct pairs")
    universe = [(a, b) for a in range(m) for b in range(m)]
    solution = None
    tiles = []
    if planted:
        row_vals = [rng.randrange(m) for _ in range(k)]
        col_vals = [rng.randrange(m) for _ in range(k)]
        solution = tuple(tuple((row_vals[i], col_vals[j]) for j in range(k)) for i in range(k))
    for i in range(k):
        row = []
        for j in range(k):
            forced = {solution[i][j]} if planted else set()
            pool = [p for p in universe if p not in forced]
            rng.shuffle(pool)
            chosen = sorted(forced | set(pool[: n_t - len(forced)]))
            row.append(tuple(chosen))
        tiles.append(tuple(row))
    return GridTiling(k, m, tuple(tiles)), solution


def is_feasible(gt: GridTiling, chosen: tuple[tuple[tuple[int, int], ...], ...]) -> bool:
    k = gt.k
    for i in range(k):
        for j in range(k):
            if chosen[i][j] not in gt.tiles[i][j]:
                return False
            if chosen[i][j][0] != chosen[i][(j + 1) % k][0]:
                return False
            if chosen[i][j][1] != chosen[(i + 1) % k][j][1]:
                return False
    return True


def brute_force_feasible(gt: GridTiling):
    """Exhaustive feasibility check; None when infeasible."""
    k = gt.k
    cells = [(i, j) for i in range(k) for j in range(k)]
    for combo in product(*[gt.tiles[i][j] for i, j in cells]):
        grid = [[None] * k for _ in range(k)]
        for (i, j), val in zip(cells, combo):
            grid[i][j] = val
        cand = tuple(tuple(row) for row in grid)
        if is_feasible(gt, cand):
            return cand
    return None


# -- gadget layout ------------------------------------------------------------

@dataclass(frozen=True)
class _Arc:
    src: tuple          # clique key within the gadget
    dst: tuple
    kind: str           # "half" | "row" | "col"


def _gadget_layout(p: int):
    """Clique keys and typed arcs of one tile gadget.

    Cycle keys ("cycle", t) for t in 0..4p+3 carry half-graph arcs; path
    keys ("path", d, s) for direction d in top/right/bottom/left and
    s in 0..p carry row or column arcs, attached to the four branching
    cliques."""
    cyc = 4 * p + 4
    keys = [("cycle", t) for t in range(cyc)]
    arcs = [_Arc(("cycle", t), ("cycle", (t + 1) % cyc), "half") for t in range(cyc)]
    for d, (kind, attach) in {
        "top": ("col", 0),            # path flows into cycle clique 0
        "right": ("row", p + 1),      # cycle clique p+1 flows outward
        "bottom": ("col", 2 * p + 2),
        "left": ("row", 3 * p + 3),
    }.items():
        pk = [("path", d, s) for s in range(p + 1)]
        keys.extend(pk)
        for s in range(p):
            arcs.append(_Arc(pk[s], pk[s + 1], kind))
        if d in ("top", "left"):
            arcs.append(_Arc(pk[-1], ("cycle", attach), kind))
        else:
            arcs.append(_Arc(("cycle", attach), pk[0], kind))
    return keys, arcs


_PORT = {"top": ("path", "top", 0), "right": ("path", "right", None),
         "bottom": ("path", "bottom", None), "left": ("path", "left", 0)}


def _port_key(d: str, p: int):
    if d in ("top", "left"):
        return ("path", d, 0)
    return ("path", d, p)


@dataclass
class ConstructionOutput:
    graph: Graph
    k_prime: int
    variant: str
    p: int
    gt: GridTiling
    main_cliques: tuple[tuple[int, ...], ...]   # every clique, as vertex tuples
    cycle_cliques: dict                          # (i, j, t) -> vertex tuple
    clique_at: dict                              # (i, j, key) -> vertex tuple


def _edge_block(kind: str, src_elems, dst_elems):
    """Cross edges between two cliques of the construction, as index pairs."""
    n = len(src_elems)
    out = []
    for a in range(n):
        for b in range(n):
            if kind == "half":
                connect = a > b
            elif kind == "row":
                connect = src_elems[a][0] < dst_elems[b][0]
            elif kind == "col":
                connect = src_elems[a][1] < dst_elems[b][1]
            elif kind == "anti":
                connect = a != b
            else:
                raise ValueError(kind)
            if connect:
                out.append((a, b))
    return out


def build_tile_gadget(tile: tuple[tuple[int, int], ...], p: int, variant: str) -> ConstructionOutput:
    """A single standalone tile gadget (no inter-gadget connections)."""
    gt = GridTiling(1, max(max(a, b) for a, b in tile) + 1, ((tile,),))
    return _build(gt, variant, p, connect_gadgets=False)


def build_construction(gt: GridTiling, variant: str, p: int) -> ConstructionOutput:
    """The full hardness instance for a grid tiling input."""
    return _build(gt, variant, p, connect_gadgets=True)


def _build(gt: GridTiling, variant: str, p: int, connect_gadgets: bool) -> ConstructionOutput:
    if variant not in VARIANTS:
        raise ValueError(f"variant must be one of {VARIANTS}")
    if p < 1:
        raise ValueError("need p >= 1")
    k, n_t = gt.k, gt.tile_size
    keys, arcs = _gadget_layout(p)
    per_gadget = len(keys)
    assert per_gadget == 8 * (p + 1)

    vertex_of = {}
    labels = []
    n = 0
    for i in range(k):
        for j in range(k):
            for key in keys:
                for a in range(n_t):
                    vertex_of[(i, j, key, a)] = n
                    labels.append((i, j, key, a))
                    n += 1

    edges = []

    def clique_vertices(i, j, key):
        return [vertex_of[(i, j, key, a)] for a in range(n_t)]

    for i in range(k):
        for j in range(k):
            elems = gt.tiles[i][j]
            for key in keys:
                vs = clique_vertices(i, j, key)
                edges.extend((vs[a], vs[b]) for a in range(n_t) for b in range(a + 1, n_t))
            for arc in arcs:
                kind = arc.kind if variant == "first" else "anti"
                src = clique_vertices(i, j, arc.src)
                dst = clique_vertices(i, j, arc.dst)
                for a, b in _edge_block(kind, elems, elems):
                    edges.append((src[a], dst[b]))
            if variant == "third":
                cyc = 4 * p + 4
                for attach in (0, p + 1, 2 * p + 2, 3 * p + 3):
                    left = clique_vertices(i, j, ("cycle", (attach - 1) % cyc))
                    right = clique_vertices(i, j, ("cycle", (attach + 1) % cyc))
                    for a, b in _edge_block("anti", elems, elems):
                        edges.append((left[a], right[b]))

    if connect_gadgets:
        for i in range(k):
            for j in range(k):
                right = clique_vertices(i, j, _port_key("right", p))
                nleft = clique_vertices(i, (j + 1) % k, _port_key("left", p))
                for a, b in _edge_block("row", gt.tiles[i][j], gt.tiles[i][(j + 1) % k]):
                    edges.append((right[a], nleft[b]))
                bottom = clique_vertices(i, j, _port_key("bottom", p))
                ntop = clique_vertices((i + 1) % k, j, _port_key("top", p))
                for a, b in _edge_block("col", gt.tiles[i][j], gt.tiles[(i + 1) % k][j]):
                    edges.append((bottom[a], ntop[b]))

    dedup = set()
    for u, v in edges:
        if u != v:
            dedup.add((min(u, v), max(u, v)))
    graph = Graph(n, sorted(dedup), labels=labels)

    main = []
    clique_at = {}
    cycle_cliques = {}
    for i in range(k):
        for j in range(k):
            for key in keys:
                vs = tuple(clique_vertices(i, j, key))
                main.append(vs)
                clique_at[(i, j, key)] = vs
                if key[0] == "cycle":
                    cycle_cliques[(i, j, key[1])] = vs
    out = ConstructionOutput(graph, 8 * (p + 1) * k * k, variant, p, gt,
                             tuple(main), cycle_cliques, clique_at)
    for vs in out.main_cliques:
        assert graph.is_clique(vs)
    return out


# -- solution correspondence ---------------------------------------------------

def lift_solution(solution, out: ConstructionOutput) -> tuple[int, ...]:
    """Feasible tiling -> independent set of size k_prime, one vertex per
    main clique at the index of the chosen tile element."""
    gt = out.gt
    if not is_feasible(gt, solution):
        raise ValueError("solution is not feasible")
    chosen = []
    for (i, j, key), vs in out.clique_at.items():
        idx = gt.tiles[i][j].index(solution[i][j])
        chosen.append(vs[idx])
    witness = tuple(sorted(chosen))
    assert len(witness) == out.k_prime
    assert out.graph.is_independent_set(witness)
    return witness


def project_solution(independent: tuple[int, ...], out: ConstructionOutput):
    """Independent set of full size -> the tiling it encodes."""
    if len(independent) != out.k_prime:
        raise ValueError("need an independent set of size exactly k_prime")
    if not out.graph.is_independent_set(independent):
        raise ValueError("vertex set is not independent")
    picked = set(independent)
    gt = out.gt
    grid = [[None] * gt.k for _ in range(gt.k)]
    for (i, j, t), vs in out.cycle_cliques.items():
        hit = [a for a, v in enumerate(vs) if v in picked]
        if len(hit) != 1:
            raise ValueError(f"cycle clique ({i},{j},{t}) not hit exactly once")
        if grid[i][j] is None:
            grid[i][j] = hit[0]
        elif grid[i][j] != hit[0]:
            raise ValueError(f"gadget ({i},{j}) hits cycle cliques at different indices")
    solution = tuple(tuple(gt.tiles[i][j][grid[i][j]] for j in range(gt.k)) for i in range(gt.k))
    if not is_feasible(gt, solution):
        raise ValueError("projected tiling is infeasible")
    return solution


def construction_alpha_reaches(out: ConstructionOutput, budget: int = 10_000_000) -> bool:
    """Does the construction have an independent set of size k_prime?
    Uses the main cliques as the pruning cover."""
    cover = [0] * len(out.main_cliques)
    for idx, vs in enumerate(out.main_cliques):
        for v in vs:
            cover[idx] |= 1 << v
    return alpha_exact(out.graph, budget, cover).alpha >= out.k_prime


# -- exclusion verification -----------------------------------------------------

@dataclass(frozen=True)
class ExclusionReport:
    entries: tuple[tuple[str, tuple[int, ...] | None], ...]

    @property
    def clean(self) -> bool:
        return all(emb is None for _name, emb in self.entries)

    def found(self) -> list[str]:
        return [name for name, emb in self.entries if emb is not None]


def verify_exclusions(out: ConstructionOutput, p1: int, p2: int,
                      trees: tuple[HPattern, ...] = ()) -> ExclusionReport:
    """Search the construction for the patterns its first variant excludes:
    the four-leaf star, cycles of length 4..p1, and caller-supplied trees
    with two branching vertices at distance <= p2."""
    entries = []
    hit = find_induced(out.graph, star(4))
    entries.append(("K1,4", tuple(sorted(hit.values())) if hit else None))
    for ell in range(4, p1 + 1):
        hit = find_induced(out.graph, cycle_graph(ell))
        entries.append((f"C{ell}", tuple(sorted(hit.values())) if hit else None))
    for t in trees:
        hit = find_induced(out.graph, t)
        name = t.name or f"tree{t.n}"
        entries.append((name, tuple(sorted(hit.values())) if hit else None))
    return ExclusionReport(tuple(entries))


def or_compose(graphs: list[Graph]) -> Graph:
    """Iterated join; alpha of the result is the maximum of the alphas."""
    if not graphs:
        raise ValueError("need at least one graph")
    out = graphs[0]
    for g in graphs[1:]:
        out = join(out, g)
    return out
