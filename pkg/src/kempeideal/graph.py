"""Simple graphs on vertices 1..d, stable sets, colorings and Kempe switchings.

Colorings are stored up to permutation of colors: a :class:`Coloring` is the
multiset of its color classes, kept in a canonical order so that equality of
objects is equality of colorings in that sense.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Iterator

from .errors import DomainError

StableSet = tuple  # strictly increasing tuple of vertex ids


@dataclass(frozen=True)
class Graph:
    d: int
    edges: frozenset = frozenset()

    def __post_init__(self):
        if self.d < 0:
            raise DomainError(f"vertex count must be >= 0, got {self.d}")
        norm = set()
        for e in self.edges:
            u, v = e
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            for x in (u, v):
                if not 1 <= x <= self.d:
                    raise DomainError(f"edge {tuple(e)} has vertex outside 1..{self.d}")
            norm.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(norm))

    @classmethod
    def from_edges(cls, d: int, edges: Iterable) -> "Graph":
        edges = list(edges)
        keys = [(min(u, v), max(u, v)) for u, v in edges]
        if len(set(keys)) != len(keys):
            raise DomainError("duplicate edge")
        return cls(d, frozenset(keys))

    @property
    def vertices(self) -> range:
        return range(1, self.d + 1)

    @cached_property
    def adjacency(self) -> tuple:
        """``adjacency[v]`` is the neighbour set of v; index 0 is unused."""
        adj = [set() for _ in range(self.d + 1)]
        for u, v in self.edges:
            adj[u].add(v)
            adj[v].add(u)
        return tuple(frozenset(a) for a in adj)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def complement(self) -> "Graph":
        return Graph(self.d, frozenset(
            p for p in combinations(self.vertices, 2) if p not in self.edges))

    def key(self) -> tuple:
        return (self.d, tuple(sorted(self.edges)))

    def __str__(self):
        es = ", ".join(f"{u}-{v}" for u, v in sorted(self.edges))
        return f"Graph(d={self.d}; {es})"


# small named graphs used across the package and its tests

def complete_graph(d: int) -> Graph:
    return Graph(d, frozenset(combinations(range(1, d + 1), 2)))


def empty_graph(d: int) -> Graph:
    return Graph(d)


def path_graph(d: int) -> Graph:
    return Graph(d, frozenset((i, i + 1) for i in range(1, d)))


def cycle_graph(d: int) -> Graph:
    es = {(i, i + 1) for i in range(1, d)}
    if d >= 3:
        es.add((1, d))
    return Graph(d, frozenset(es))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, frozenset(
        (i, j) for i in range(1, a + 1) for j in range(a + 1, a + b + 1)))


def _check_vertices(G: Graph, W) -> None:
    for v in W:
        if not (isinstance(v, int) and 1 <= v <= G.d):
            raise DomainError(f"vertex {v!r} outside 1..{G.d}")


def is_stable(G: Graph, S) -> bool:
    S = list(S)
    _check_vertices(G, S)
    adj = G.adjacency
    return all(v not in adj[u] for u, v in combinations(S, 2))


class VariableTable:
    """The ordered list of all stable sets of a graph; position i names variable x_i.

    The default order is by size, then lexicographic, so ``x_{}`` is index 0.
    """

    def __init__(self, graph: Graph, stable_sets: Iterable):
        self.graph = graph
        self.stable_sets = tuple(tuple(s) for s in stable_sets)
        self.index_of = {s: i for i, s in enumerate(self.stable_sets)}
        if len(self.index_of) != len(self.stable_sets):
            raise DomainError("duplicate stable set in variable table")

    def __len__(self):
        return len(self.stable_sets)

    def __getitem__(self, i: int) -> StableSet:
        return self.stable_sets[i]

    def __iter__(self) -> Iterator[StableSet]:
        return iter(self.stable_sets)

    def index(self, S) -> int:
        key = tuple(sorted(S))
        try:
            return self.index_of[key]
        except KeyError:
            raise DomainError(f"{set(key) or '{}'} is not a stable set of the graph") from None

    def label(self, i: int) -> str:
        return "{" + ",".join(map(str, self.stable_sets[i])) + "}"

    @cached_property
    def masks(self) -> tuple:
        """Bitmask (bit v set for vertex v) of every stable set."""
        return tuple(sum(1 << v for v in s) for s in self.stable_sets)


def enumerate_stable_sets(G: Graph) -> VariableTable:
    adj = G.adjacency
    found = []

    def grow(v: int, chosen: list, blocked: frozenset):
        if v > G.d:
            found.append(tuple(chosen))
            return
        grow(v + 1, chosen, blocked)
        if v not in blocked:
            chosen.append(v)
            grow(v + 1, chosen, blocked | adj[v])
            chosen.pop()

    grow(1, [], frozenset())
    found.sort(key=lambda s: (len(s), s))
    return VariableTable(G, found)


def induced_subgraph(G: Graph, W) -> tuple[Graph, dict]:
    """Return ``(H, relabel)`` where H lives on 1..|W| and ``relabel`` maps old ids to new ones."""
    W = sorted(set(W))
    _check_vertices(G, W)
    relabel = {v: i for i, v in enumerate(W, start=1)}
    edges = frozenset((relabel[u], relabel[v]) for u, v in G.edges
                      if u in relabel and v in relabel)
    return Graph(len(W), edges), relabel


def connected_components(G: Graph, W) -> list[frozenset]:
    W = set(W)
    _check_vertices(G, W)
    adj = G.adjacency
    seen = set()
    comps = []
    for start in sorted(W):
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v in W and v not in comp:
                    comp.add(v)
                    queue.append(v)
        seen |= comp
        comps.append(frozenset(comp))
    return comps


def _canonical_classes(classes) -> tuple:
    cls = [tuple(sorted(c)) for c in classes]
    return tuple(sorted(cls, key=lambda c: (len(c) == 0, len(c), c)))


@dataclass(frozen=True)
class Coloring:
    """A coloring of an induced subgraph, as a multiset of k disjoint color classes.

    Empty classes are allowed. Two colorings differing by a permutation of
    colors compare equal.
    """

    classes: tuple

    def __post_init__(self):
        cls = _canonical_classes(self.classes)
        seen = set()
        for c in cls:
            if len(set(c)) != len(c):
                raise DomainError(f"class {c} repeats a vertex")
            if seen.intersection(c):
                raise DomainError(f"color classes overlap in {sorted(seen.intersection(c))}")
            seen.update(c)
        object.__setattr__(self, "classes", cls)

    @classmethod
    def of(cls, *classes) -> "Coloring":
        return cls(tuple(tuple(c) for c in classes))

    @classmethod
    def from_map(cls, colors: dict, k: int) -> "Coloring":
        """Build from a vertex -> color map with colors in 0..k-1."""
        buckets = [[] for _ in range(k)]
        for v, c in colors.items():
            if not 0 <= c < k:
                raise DomainError(f"color {c} outside 0..{k - 1}")
            buckets[c].append(v)
        return cls(tuple(tuple(b) for b in buckets))

    @property
    def k(self) -> int:
        return len(self.classes)

    @cached_property
    def support(self) -> frozenset:
        return frozenset(v for c in self.classes for v in c)

    def is_proper(self, G: Graph) -> bool:
        return all(is_stable(G, c) for c in self.classes)

    def validate(self, G: Graph) -> "Coloring":
        for c in self.classes:
            if not is_stable(G, c):
                raise DomainError(f"class {set(c)} is not stable")
        return self

    def to_json(self) -> dict:
        return {"classes": [list(c) for c in self.classes]}

    def __str__(self):
        return "[" + ", ".join("{" + ",".join(map(str, c)) + "}" for c in self.classes) + "]"


@dataclass(frozen=True)
class KempeStep:
    color_a: int
    color_b: int
    component: frozenset


def kempe_switch(G: Graph, f: Coloring, step: KempeStep) -> Coloring:
    a, b = step.color_a, step.color_b
    if a == b or not (0 <= a < f.k and 0 <= b < f.k):
        raise DomainError(f"invalid color pair ({a}, {b}) for a {f.k}-coloring")
    A, B = set(f.classes[a]), set(f.classes[b])
    comp = frozenset(step.component)
    if not comp or comp not in connected_components(G, A | B):
        raise DomainError(f"{sorted(comp)} is not a component of G[{sorted(A | B)}]")
    return _swap(f, a, b, comp)


def _swap(f: Coloring, a: int, b: int, comp: frozenset) -> Coloring:
    A, B = f.classes[a], f.classes[b]
    new = list(f.classes)
    new[a] = tuple(v for v in A if v not in comp) + tuple(v for v in B if v in comp)
    new[b] = tuple(v for v in B if v not in comp) + tuple(v for v in A if v in comp)
    return Coloring(tuple(new))


def kempe_steps(G: Graph, f: Coloring) -> Iterator[KempeStep]:
    """Every (class pair, component) switching available at f."""
    for a, b in combinations(range(f.k), 2):
        union = set(f.classes[a]) | set(f.classes[b])
        for comp in connected_components(G, union):
            yield KempeStep(a, b, comp)


def all_kempe_neighbors(G: Graph, f: Coloring) -> set:
    # steps from kempe_steps are components by construction, so skip revalidation
    return {_swap(f, s.color_a, s.color_b, s.component) for s in kempe_steps(G, f)}


def max_degree(G: Graph) -> int:
    return max((len(a) for a in G.adjacency[1:]), default=0)


def chromatic_number(G: Graph) -> int:
    adj = G.adjacency

    def colorable(k: int) -> bool:
        color = {}

        def place(v: int) -> bool:
            if v > G.d:
                return True
            used = {color[u] for u in adj[v] if u in color}
            # new colors are interchangeable: only try the first unused one
            top = max(color.values(), default=-1)
            for c in range(min(top + 2, k)):
                if c not in used:
                    color[v] = c
                    if place(v + 1):
                        return True
                    del color[v]
            return False

        return place(1)

    if G.d == 0:
        return 0
    k = 1
    while not colorable(k):
        k += 1
    return k
