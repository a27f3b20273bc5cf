"""Simple undirected graphs over vertex indices with bitmask adjacency rows.

A vertex set is an int whose bit i is vertex i.  All operations treat graphs
as immutable: mutators return new graphs, so instances are safe to share
across threads.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


class Graph:
    """Undirected graph on vertices 0..n-1, no self-loops.

    ``adj[v]`` is the neighbor bitmask of v.  ``labels``, when present, is a
    per-vertex tuple of opaque tags; labels never affect any algorithm.
    """

    __slots__ = ("n", "adj", "labels")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = (), labels=None):
        adj = [0] * n
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = adj
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_adj(cls, adj: list[int], labels=None) -> "Graph":
        """Trusted constructor from prebuilt adjacency rows (symmetric, loop-free)."""
        g = object.__new__(cls)
        g.n = len(adj)
        g.adj = list(adj)
        g.labels = tuple(labels) if labels is not None else None
        return g

    # -- basic queries ------------------------------------------------------

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def closed_neighborhood(self, v: int) -> int:
        return self.adj[v] | (1 << v)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for u in range(self.n):
            row = self.adj[u] >> (u + 1)
            v = u + 1
            while row:
                if row & 1:
                    out.append((u, v))
                row >>= 1
                v += 1
        return out

    def edge_count(self) -> int:
        return sum(self.adj[v].bit_count() for v in range(self.n)) // 2

    def is_clique_mask(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & ~self.adj[v] & ~(1 << v):
                return False
        return True

    def is_independent_mask(self, mask: int) -> bool:
        for v in bits(mask):
            if mask & self.adj[v]:
                return False
        return True

    def is_clique(self, vertices: Iterable[int]) -> bool:
        return self.is_clique_mask(mask_of(vertices))

    def is_independent_set(self, vertices: Iterable[int]) -> bool:
        return self.is_independent_mask(mask_of(vertices))

    # -- derived graphs -----------------------------------------------------

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on the vertices of ``mask``.

        Returns (subgraph, mapping) where mapping[i] is the original index of
        the subgraph's vertex i.
        """
        keep = list(bits(mask))
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for i, v in enumerate(keep):
            row = self.adj[v] & mask
            for w in bits(row):
                adj[i] |= 1 << pos[w]
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[v] for v in keep)
        return Graph.from_adj(adj, labels), keep

    def relabel(self, perm: list[int]) -> "Graph":
        """Graph with vertex v renamed to perm[v]."""
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for w in bits(self.adj[v]):
                row |= 1 << perm[w]
            adj[perm[v]] = row
        labels = None
        if self.labels is not None:
            lab = [None] * self.n
            for v in range(self.n):
                lab[perm[v]] = self.labels[v]
            labels = tuple(lab)
        return Graph.from_adj(adj, labels)

    def connected_components(self) -> list[int]:
        """Vertex masks of the connected components, by smallest member."""
        seen = 0
        comps = []
        for v in range(self.n):
            if seen >> v & 1:
                continue
            comp = 1 << v
            frontier = self.adj[v] & ~comp
            while frontier:
                comp |= frontier
                nxt = 0
                for w in bits(frontier):
                    nxt |= self.adj[w]
                frontier = nxt & ~comp
            comps.append(comp)
            seen |= comp
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    # -- dunder -------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, tuple(self.adj)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


# -- graph algebra ----------------------------------------------------------

def complement(g: Graph) -> Graph:
    full = g.full_mask
    adj = [full & ~g.adj[v] & ~(1 << v) for v in range(g.n)]
    return Graph.from_adj(adj, g.labels)


def disjoint_union(g1: Graph, g2: Graph) -> Graph:
    adj = list(g1.adj) + [row << g1.n for row in g2.adj]
    labels = None
    if g1.labels is not None or g2.labels is not None:
        l1 = g1.labels if g1.labels is not None else (None,) * g1.n
        l2 = g2.labels if g2.labels is not None else (None,) * g2.n
        labels = l1 + l2
    return Graph.from_adj(adj, labels)


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union plus every edge between the two sides."""
    out = disjoint_union(g1, g2)
    left = (1 << g1.n) - 1
    right = out.full_mask & ~left
    for v in range(g1.n):
        out.adj[v] |= right
    for v in range(g1.n, out.n):
        out.adj[v] |= left
    return out


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph(n, edges)
