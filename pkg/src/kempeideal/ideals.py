"""Generators of the graph ideals L, J, M, K, Q2 and I, and their Gröbner bases.

All ideals live in the polynomial ring with one variable x_S per stable set
S of the graph, indexed by the graph's :class:`VariableTable`. Index 0 is
always x_{} (the empty stable set).

    L   x_{S-i} x_{i} - x_S x_{}              (i in S, |S| >= 2)
    J   x_A x_B - x_C x_D                      (2-colorings A,B and C,D of one induced subgraph)
    M   x_S x_T                                (S and T intersect)
    K   J + M
    Q2  all quadratic binomials of I
    I   the toric ideal of the stable sets (kernel of x_S -> t^S s)
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement

from .errors import DomainError, InconsistencyError
from .graph import Graph, VariableTable, enumerate_stable_sets
from .polyring import (GroebnerBasis, Monomial, MonomialOrder, Polynomial,
                       buchberger, reduce_basis)

IDEAL_NAMES = ("L", "J", "M", "K", "Q2", "I")
EMPTY = 0  # index of x_{} in every variable table


@lru_cache(maxsize=4096)
def stable_table(G: Graph) -> VariableTable:
    return enumerate_stable_sets(G)


def default_order(table: VariableTable) -> MonomialOrder:
    return MonomialOrder.default(len(table))


def order_from_spec(table: VariableTable, spec="bysize") -> MonomialOrder:
    """``"bysize"`` or an explicit list of stable sets from smallest to largest variable."""
    if spec is None or spec == "bysize":
        return default_order(table)
    idx = [table.index(S) for S in spec]
    if sorted(idx) != list(range(len(table))):
        raise DomainError("explicit order must list every stable set exactly once")
    return MonomialOrder(list(reversed(idx)))


def monomial_of(table: VariableTable, sets) -> Monomial:
    m = [0] * len(table)
    for S in sets:
        m[table.index(S)] += 1
    return tuple(m)


def monomial_sets(table: VariableTable, m: Monomial) -> list:
    """The stable-set factors of m, with repetition, in table order."""
    out = []
    for i, e in enumerate(m):
        out.extend([table[i]] * e)
    return out


def pi_image(m: Monomial, table: VariableTable) -> tuple:
    """``(multiplicities, degree)``: how often each vertex 1..d occurs across the factors of m."""
    mult = [0] * table.graph.d
    for i, e in enumerate(m):
        if e:
            for v in table[i]:
                mult[v - 1] += e
    return tuple(mult), sum(m)


def canonical_binomial(a: Monomial, b: Monomial, order: MonomialOrder) -> Polynomial:
    if order.compare(a, b) < 0:
        a, b = b, a
    return Polynomial.binomial(a, b)


@dataclass(frozen=True)
class IdealSpec:
    graph: Graph
    table: VariableTable
    which: str
    generators: tuple

    def names(self, i: int) -> str:
        return self.table.label(i)


def _prod(n: int, *idx: int) -> Monomial:
    m = [0] * n
    for i in idx:
        m[i] += 1
    return tuple(m)


def _star(groups, n: int, order: MonomialOrder) -> list:
    """Differences between the first member of each group and every other member."""
    out = []
    seen = set()
    for key in sorted(groups):
        members = groups[key]
        anchor = _prod(n, *members[0])
        for other in members[1:]:
            p = canonical_binomial(anchor, _prod(n, *other), order)
            if p and p not in seen:
                seen.add(p)
                out.append(p)
    return out


def gens_L(G: Graph, table: VariableTable | None = None) -> IdealSpec:
    table = table or stable_table(G)
    n = len(table)
    order = default_order(table)
    seen, gens = set(), []
    for S in table:
        if len(S) < 2:
            continue
        for i in S:
            rest = tuple(v for v in S if v != i)
            p = canonical_binomial(_prod(n, table.index(rest), table.index((i,))),
                                   _prod(n, table.index(S), EMPTY), order)
            if p not in seen:
                seen.add(p)
                gens.append(p)
    return IdealSpec(G, table, "L", tuple(gens))


def gens_J(G: Graph, table: VariableTable | None = None) -> IdealSpec:
    table = table or stable_table(G)
    masks = table.masks
    groups = defaultdict(list)
    n = len(table)
    for a in range(n):
        for b in range(a, n):
            if not (masks[a] & masks[b]) and (a != b or a == EMPTY):
                groups[masks[a] | masks[b]].append((a, b))
    gens = _star(groups, n, default_order(table))
    return IdealSpec(G, table, "J", tuple(gens))


def gens_M(G: Graph, table: VariableTable | None = None) -> IdealSpec:
    table = table or stable_table(G)
    masks = table.masks
    n = len(table)
    gens = [Polynomial.monomial(_prod(n, a, b))
            for a, b in combinations_with_replacement(range(n), 2)
            if masks[a] & masks[b]]
    return IdealSpec(G, table, "M", tuple(gens))


def gens_K(G: Graph, table: VariableTable | None = None) -> IdealSpec:
    table = table or stable_table(G)
    gens = gens_J(G, table).generators + gens_M(G, table).generators
    return IdealSpec(G, table, "K", gens)


def gens_Q2(G: Graph, table: VariableTable | None = None) -> IdealSpec:
    table = table or stable_table(G)
    n = len(table)
    groups = defaultdict(list)
    for a, b in combinations_with_replacement(range(n), 2):
        groups[pi_image(_prod(n, a, b), table)].append((a, b))
    gens = _star(groups, n, default_order(table))
    return IdealSpec(G, table, "Q2", tuple(gens))


def saturate_by_smallest_var(basis: GroebnerBasis) -> list:
    """Divide every element by the largest power of x_{} dividing it.

    The order must be reverse lexicographic with x_{} as its smallest
    variable; the output is then a Gröbner basis of the saturation.
    """
    if basis.order.smallest != EMPTY:
        raise DomainError("saturation needs x_{} to be the smallest variable")
    out = []
    for g in basis:
        power = min(m[EMPTY] for m in g.terms)
        if power:
            g = Polynomial({_drop_empty(m, power): c for m, c in g.terms.items()})
        out.append(g)
    return out


def _drop_empty(m: Monomial, power: int) -> Monomial:
    return (m[EMPTY] - power,) + m[1:]


@lru_cache(maxsize=4096)
def groebner_I(G: Graph) -> GroebnerBasis:
    """Reduced Gröbner basis of the toric ideal I_G under the default order.

    Computed as the saturation of L_G by x_{}; colorings of replication
    graphs are never enumerated.
    """
    table = stable_table(G)
    order = default_order(table)
    gl = buchberger(gens_L(G, table).generators, order)
    return reduce_basis(saturate_by_smallest_var(gl), order)


def _is_two_coloring_monomial(m: Monomial, masks) -> bool:
    used = 0
    for i, e in enumerate(m):
        if not e:
            continue
        if i != EMPTY and e > 1:
            return False
        if masks[i] & used:
            return False
        used |= masks[i]
    return True


def algorithm1_K(G: Graph, order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of K_G via L_G, saturation and the quadratic J-part filter."""
    table = stable_table(G)
    masks = table.masks
    g2 = groebner_I(G)
    g3 = [p for p in g2 if len(p) == 2 and p.degrees() == {2}
          and all(_is_two_coloring_monomial(m, masks) for m in p.terms)]
    order = order or default_order(table)
    return buchberger(g3 + list(gens_M(G, table).generators), order)


@lru_cache(maxsize=8192)
def _groebner_cached(G: Graph, which: str, ranking: tuple) -> GroebnerBasis:
    order = MonomialOrder(ranking)
    if which == "I":
        if order != default_order(stable_table(G)):
            return buchberger(groebner_I(G).elements, order)
        return groebner_I(G)
    return buchberger(ideal_spec(G, which).generators, order)


def groebner(G: Graph, which: str = "K", order: MonomialOrder | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of one of the named ideals (memoized per graph and order)."""
    if which not in IDEAL_NAMES:
        raise DomainError(f"unknown ideal {which!r}; expected one of {IDEAL_NAMES}")
    order = order or default_order(stable_table(G))
    return _groebner_cached(G, which, order.ranking)


def ideal_spec(G: Graph, which: str) -> IdealSpec:
    table = stable_table(G)
    if which == "I":
        return IdealSpec(G, table, "I", groebner_I(G).elements)
    try:
        build = {"L": gens_L, "J": gens_J, "M": gens_M, "K": gens_K, "Q2": gens_Q2}[which]
    except KeyError:
        raise DomainError(f"unknown ideal {which!r}; expected one of {IDEAL_NAMES}") from None
    return build(G, table)


def ideal_equal(A: IdealSpec, B: IdealSpec) -> bool:
    if A.graph != B.graph:
        raise DomainError("ideals belong to different graphs")
    order = default_order(A.table)
    ga = groebner(A.graph, A.which, order) if A.which in IDEAL_NAMES else buchberger(A.generators, order)
    gb = groebner(B.graph, B.which, order) if B.which in IDEAL_NAMES else buchberger(B.generators, order)
    return all(gb.contains(p) for p in A.generators) and all(ga.contains(p) for p in B.generators)


CHAIN_CASES = {
    (True, True, True): "(i)",
    (True, False, True): "(ii)",
    (False, True, True): "(iii)",
    (False, True, False): "(iv)",
    (False, False, True): "(v)",
    (False, False, False): "(vi)",
}


def chain_equalities(G: Graph) -> tuple:
    """``(L == J, J == Q2, Q2 == I)``."""
    specs = {w: ideal_spec(G, w) for w in ("L", "J", "Q2", "I")}
    return (ideal_equal(specs["L"], specs["J"]),
            ideal_equal(specs["J"], specs["Q2"]),
            ideal_equal(specs["Q2"], specs["I"]))


def classify_chain(G: Graph) -> str:
    eq = chain_equalities(G)
    try:
        return CHAIN_CASES[eq]
    except KeyError:
        raise InconsistencyError(f"impossible equality pattern {eq} for the ideal chain") from None


def clear_caches() -> None:
    """Forget memoized variable tables and Gröbner bases."""
    stable_table.cache_clear()
    groebner_I.cache_clear()
    _groebner_cached.cache_clear()
