"""Brute-force Kempe classes: enumerate colorings, connect them by single switchings.

Nothing here touches polynomials; it is the ground truth the algebraic
routines are checked against.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .errors import DomainError, ResourceLimitError
from .graph import Coloring, Graph, all_kempe_neighbors, kempe_steps, kempe_switch

MAX_VERTICES = 9
MAX_COLORS = 6


def all_colorings(G: Graph, k: int, support=None, *,
                  max_vertices: int = MAX_VERTICES, max_colors: int = MAX_COLORS) -> list:
    """Every k-coloring of G[support] up to color permutation, as canonical colorings."""
    W = sorted(G.vertices if support is None else set(support))
    if len(W) > max_vertices or k > max_colors:
        raise ResourceLimitError(
            f"oracle capped at {max_vertices} vertices and {max_colors} colors "
            f"(asked for {len(W)} and {k})")
    if k < 0:
        raise DomainError("k must be non-negative")
    adj = G.adjacency
    blocks: list = []
    out = []

    def place(pos: int) -> None:
        if pos == len(W):
            out.append(Coloring(tuple(tuple(b) for b in blocks)
                                + ((),) * (k - len(blocks))))
            return
        v = W[pos]
        for b in blocks:
            if not adj[v].intersection(b):
                b.append(v)
                place(pos + 1)
                b.pop()
        if len(blocks) < k:
            blocks.append([v])
            place(pos + 1)
            blocks.pop()

    place(0)
    return sorted(out, key=lambda c: c.classes)


class UnionFind:
    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[max(ra, rb)] = min(ra, rb)


@dataclass
class KempeGraph:
    nodes: list
    adjacency: list
    components: list = field(default_factory=list)

    def __post_init__(self):
        self.index = {c: i for i, c in enumerate(self.nodes)}
        self._component_of = {}
        for ci, comp in enumerate(self.components):
            for c in comp:
                self._component_of[c] = ci

    def component_of(self, f: Coloring) -> int:
        return self._component_of[f]

    def __len__(self):
        return len(self.components)


def classes_bruteforce(G: Graph, k: int, support=None, **caps) -> KempeGraph:
    nodes = all_colorings(G, k, support, **caps)
    index = {c: i for i, c in enumerate(nodes)}
    uf = UnionFind(len(nodes))
    adjacency = []
    for i, f in enumerate(nodes):
        nbrs = {index[h] for h in all_kempe_neighbors(G, f)} - {i}
        adjacency.append(nbrs)
        for j in nbrs:
            uf.union(i, j)
    groups: dict = {}
    for i in range(len(nodes)):
        groups.setdefault(uf.find(i), []).append(nodes[i])
    return KempeGraph(nodes, adjacency, [groups[r] for r in sorted(groups)])


def _same_shape(f: Coloring, g: Coloring) -> None:
    if f.k != g.k:
        raise DomainError(f"colorings use different numbers of colors ({f.k} vs {g.k})")
    if f.support != g.support:
        raise DomainError("colorings have different supports")


def kempe_class_bruteforce(G: Graph, f: Coloring, node_cap: int = 10 ** 6) -> set:
    f.validate(G)
    seen = {f}
    queue = deque([f])
    while queue:
        h = queue.popleft()
        for nb in all_kempe_neighbors(G, h):
            if nb not in seen:
                seen.add(nb)
                if len(seen) > node_cap:
                    raise ResourceLimitError(f"Kempe class exceeds {node_cap} colorings")
                queue.append(nb)
    return seen


def are_equivalent_bruteforce(G: Graph, f: Coloring, g: Coloring, k: int | None = None) -> bool:
    _same_shape(f, g)
    if k is not None and k != f.k:
        raise DomainError(f"colorings have {f.k} colors, not {k}")
    g.validate(G)
    return g in kempe_class_bruteforce(G, f)


def switch_witness(G: Graph, f: Coloring, g: Coloring):
    """A :class:`KempeStep` turning f into g, or None."""
    if f.k != g.k or f.support != g.support:
        return None
    for step in kempe_steps(G, f):
        if kempe_switch(G, f, step) == g:
            return step
    return None


def verify_sequence(G: Graph, seq) -> tuple:
    """``(True, None)`` if consecutive colorings differ by at most one switching.

    Otherwise ``(False, i)`` with i the first position whose coloring is
    improper or whose step to position i+1 has no witness.
    """
    seq = list(seq)
    for i, f in enumerate(seq):
        if not f.is_proper(G):
            return False, i
        if i + 1 < len(seq):
            g = seq[i + 1]
            if f != g and switch_witness(G, f, g) is None:
                return False, i
    return True, None
