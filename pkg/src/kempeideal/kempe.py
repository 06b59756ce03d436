"""Kempe equivalence through the Kempe ideal K = J + M.

A k-coloring f of an induced subgraph is identified with the degree-k
monomial ``x_f``, the product of x_S over its color classes (empty classes
contribute x_{}). With the reduced Gröbner basis of K:

* f ~ g  iff  x_f - x_g reduces to zero;
* degree-k standard monomials are one coloring per Kempe class, over all
  induced subgraphs at once;
* binomial basis elements, each expanded into an explicit switching
  sequence (a Kempe basis), turn any reduction into a switching sequence.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations

from .errors import DomainError, InconsistencyError, ResourceLimitError
from .graph import Coloring, Graph, connected_components, induced_subgraph
from .ideals import gens_J, groebner, pi_image, stable_table
from .polyring import (GroebnerBasis, Monomial, MonomialOrder, Polynomial,
                       mono_div, mono_divides, mono_mask, mono_mul, standard_monomials)

FIBER_NODE_CAP = 10 ** 6


def kempe_groebner(G: Graph, order: MonomialOrder | None = None) -> GroebnerBasis:
    return groebner(G, "K", order)


def coloring_to_monomial(f: Coloring, table) -> Monomial:
    m = [0] * len(table)
    for c in f.classes:
        m[table.index(c)] += 1
    return tuple(m)


def monomial_to_coloring(m: Monomial, table) -> Coloring:
    classes = []
    for i, e in enumerate(m):
        classes.extend([table[i]] * e)
    seen = set()
    for c in classes:
        if seen.intersection(c):
            raise DomainError(f"monomial lies in M: vertex {min(seen.intersection(c))} repeats")
        seen.update(c)
    return Coloring(tuple(classes))


def _check_pair(G: Graph, f: Coloring, g: Coloring) -> None:
    f.validate(G)
    g.validate(G)
    if f.k != g.k:
        raise DomainError(f"colorings use different numbers of colors ({f.k} vs {g.k})")
    if f.support != g.support:
        raise DomainError("colorings color different vertex sets")


def are_equivalent(G: Graph, f: Coloring, g: Coloring, basis: GroebnerBasis | None = None) -> bool:
    _check_pair(G, f, g)
    basis = basis or kempe_groebner(G)
    table = stable_table(G)
    diff = Polynomial.binomial(coloring_to_monomial(f, table), coloring_to_monomial(g, table))
    return not basis.normal_form(diff)


def standard_colorings(G: Graph, k: int, basis: GroebnerBasis | None = None) -> list:
    basis = basis or kempe_groebner(G)
    table = stable_table(G)
    return [monomial_to_coloring(m, table)
            for m in standard_monomials(basis.initials, len(table), k, basis.order)]


def representative_system(G: Graph, k: int, basis: GroebnerBasis | None = None) -> tuple:
    """``(all_reps, full_reps)``: one coloring per Kempe class of every induced subgraph, and of G itself."""
    all_reps = standard_colorings(G, k, basis)
    full = frozenset(G.vertices)
    return all_reps, [f for f in all_reps if f.support == full]


def hilbert(G: Graph, k: int, basis: GroebnerBasis | None = None) -> int:
    basis = basis or kempe_groebner(G)
    return len(standard_monomials(basis.initials, len(stable_table(G)), k, basis.order))


def hilbert_series(G: Graph, k_max: int, basis: GroebnerBasis | None = None) -> list:
    basis = basis or kempe_groebner(G)
    return [hilbert(G, k, basis) for k in range(k_max + 1)]


def class_count(G: Graph, k: int, basis: GroebnerBasis | None = None, method: str = "a") -> int:
    """Number of k-Kempe classes of G.

    Method ``"a"`` counts representatives covering every vertex. Method
    ``"b"`` is inclusion-exclusion of Hilbert values over induced subgraphs
    (each with its own Kempe ideal); it falls back to ``"a"`` above six
    vertices.
    """
    if method not in ("a", "b"):
        raise DomainError(f"unknown method {method!r}")
    if method == "a" or G.d > 6:
        return len(representative_system(G, k, basis)[1])
    total = 0
    for m in range(G.d + 1):
        sign = -1 if (G.d - m) % 2 else 1
        for W in combinations(G.vertices, m):
            H, _ = induced_subgraph(G, W)
            total += sign * hilbert(H, k)
    return total


def enumerate_class(G: Graph, f: Coloring, basis: GroebnerBasis | None = None) -> set:
    """All colorings Kempe equivalent to f, walking upward from the normal form of x_f."""
    f.validate(G)
    basis = basis or kempe_groebner(G)
    table = stable_table(G)
    start = basis.normal_form(Polynomial.monomial(coloring_to_monomial(f, table)))
    (m0,) = start.terms
    moves = []
    for g in basis.binomials():
        lead = g.lead(basis.order)
        (tail,) = [m for m in g.terms if m != lead]
        moves.append((tail, lead))
    seen = {m0}
    queue = deque([m0])
    while queue:
        u = queue.popleft()
        for tail, lead in moves:
            if mono_divides(tail, u):
                v = mono_mul(mono_div(u, tail), lead)
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
    return {monomial_to_coloring(m, table) for m in seen}


def _two_classes(f: Coloring) -> tuple:
    if f.k != 2:
        raise DomainError(f"expected a 2-coloring, got {f.k} classes")
    return set(f.classes[0]), set(f.classes[1])


def procedure1(G: Graph, f: Coloring, g: Coloring) -> list:
    """Switching sequence between two 2-colorings of the same induced subgraph.

    The vertices changing class form a union of components of the subgraph;
    they are switched one component at a time.
    """
    f.validate(G)
    g.validate(G)
    s1, s2 = _two_classes(f)
    s3, s4 = _two_classes(g)
    if s1 | s2 != s3 | s4:
        raise DomainError("2-colorings color different vertex sets")
    moved = min((s1 - s3) | (s2 - s4), (s1 - s4) | (s2 - s3), key=len)
    seq = [f]
    cur1, cur2 = set(s1), set(s2)
    for comp in connected_components(G, moved):
        cur1, cur2 = (cur1 - comp) | (cur2 & comp), (cur2 - comp) | (cur1 & comp)
        seq.append(Coloring((tuple(cur1), tuple(cur2))))
    if seq[-1] != g:
        raise DomainError(f"{g} is not reachable from {f} by switching within one induced subgraph")
    return seq


def procedure2_lift(w: Coloring, seq) -> list:
    """Add the classes of w to every coloring of seq."""
    seq = list(seq)
    if not seq:
        return []
    if w.support & seq[0].support:
        raise DomainError("lifting coloring overlaps the sequence's vertices")
    return [Coloring(f.classes + w.classes) for f in seq]


@dataclass(frozen=True)
class ChainStep:
    """``after = cofactor * target`` where ``before = cofactor * source`` and source - target is a generator (either sign)."""

    before: Monomial
    after: Monomial
    cofactor: Monomial
    source: Monomial
    target: Monomial


def _move_index(gens) -> dict:
    index: dict = {}
    for g in gens:
        a, b = list(g.terms)
        index.setdefault(mono_mask(a), []).append((a, b))
        index.setdefault(mono_mask(b), []).append((b, a))
    return index


def procedure3_chain(G: Graph, p: Monomial, q: Monomial, gens=None,
                     node_cap: int = FIBER_NODE_CAP) -> list:
    """Shortest chain of generator moves from x_p to x_q inside their fiber.

    ``gens`` defaults to the quadratic generators of J. Breadth-first
    search; the fiber is explored lazily and never materialized.
    """
    table = stable_table(G)
    if pi_image(p, table) != pi_image(q, table):
        raise DomainError("monomials lie in different fibers")
    if p == q:
        return []
    gens = gens_J(G, table).generators if gens is None else gens
    index = _move_index(gens)
    parent = {p: None}
    queue = deque([p])
    while queue:
        u = queue.popleft()
        um = mono_mask(u)
        sub = um
        while True:
            for src, dst in index.get(sub, ()):
                if mono_divides(src, u):
                    w = mono_div(u, src)
                    v = mono_mul(w, dst)
                    if v not in parent:
                        parent[v] = ChainStep(u, v, w, src, dst)
                        if v == q:
                            return _unwind(parent, q)
                        if len(parent) > node_cap:
                            raise ResourceLimitError(f"fiber search exceeded {node_cap} monomials")
                        queue.append(v)
            if not sub:
                break
            sub = (sub - 1) & um
    raise InconsistencyError("generator moves do not connect the two monomials")


def _unwind(parent: dict, q: Monomial) -> list:
    steps = []
    cur = q
    while parent[cur] is not None:
        step = parent[cur]
        steps.append(step)
        cur = step.before
    return steps[::-1]


def _chain_to_sequence(G: Graph, chain, start: Monomial) -> list:
    table = stable_table(G)
    seq = [monomial_to_coloring(start, table)]
    for step in chain:
        two = procedure1(G, monomial_to_coloring(step.source, table),
                         monomial_to_coloring(step.target, table))
        lifted = procedure2_lift(monomial_to_coloring(step.cofactor, table), two)
        seq.extend(lifted[1:])
    return _collapse(seq)


def _collapse(seq) -> list:
    out = []
    for f in seq:
        if not out or out[-1] != f:
            out.append(f)
    return out


@dataclass(frozen=True)
class KempeBasisEntry:
    binomial: Polynomial
    sequence: tuple


class KempeBasis:
    """One switching sequence per binomial of a reduced Gröbner basis of K, keyed by element index."""

    def __init__(self, basis: GroebnerBasis, entries: dict):
        self.basis = basis
        self.entries = entries

    def __getitem__(self, i: int) -> KempeBasisEntry:
        return self.entries[i]

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries[i] for i in sorted(self.entries))


def kempe_basis(G: Graph, basis: GroebnerBasis | None = None,
                node_cap: int = FIBER_NODE_CAP) -> KempeBasis:
    basis = basis or kempe_groebner(G)
    table = stable_table(G)
    gens = gens_J(G, table).generators
    entries = {}
    for i, g in enumerate(basis.elements):
        if len(g) != 2:
            continue
        p = basis.lead(i)
        (q,) = [m for m in g.terms if m != p]
        chain = procedure3_chain(G, p, q, gens, node_cap)
        seq = _chain_to_sequence(G, chain, p)
        if seq[-1] != monomial_to_coloring(q, table):
            raise InconsistencyError(f"Kempe basis sequence for element {i} ends at the wrong coloring")
        entries[i] = KempeBasisEntry(g, tuple(seq))
    return KempeBasis(basis, entries)


@dataclass(frozen=True)
class ReductionStep:
    """``before = cofactor * lead(element)`` and ``after = cofactor * tail(element)``."""

    before: Monomial
    element: int
    cofactor: Monomial
    after: Monomial


def reduction_trace(m: Monomial, basis: GroebnerBasis) -> list:
    """Division steps taking the monomial x^m to its normal form."""
    steps = []
    while True:
        i = basis.find_reducer(m)
        if i < 0:
            return steps
        g = basis.elements[i]
        if len(g) != 2:
            raise InconsistencyError("a coloring monomial reduced by a monomial of M")
        lead = basis.lead(i)
        (tail,) = [t for t in g.terms if t != lead]
        w = mono_div(m, lead)
        after = mono_mul(w, tail)
        steps.append(ReductionStep(m, i, w, after))
        m = after


def _expand_trace(G: Graph, trace, kbasis: KempeBasis, start: Monomial) -> list:
    table = stable_table(G)
    seq = [monomial_to_coloring(start, table)]
    for step in trace:
        entry = kbasis[step.element]
        lifted = procedure2_lift(monomial_to_coloring(step.cofactor, table), entry.sequence)
        if lifted[0] != seq[-1] or lifted[-1] != monomial_to_coloring(step.after, table):
            raise InconsistencyError("lifted Kempe basis sequence does not match the reduction step")
        seq.extend(lifted[1:])
    return seq


def switching_sequence(G: Graph, f: Coloring, g: Coloring, basis: GroebnerBasis | None = None,
                       kbasis: KempeBasis | None = None):
    """Kempe switchings from f to g, or None when f and g are not Kempe equivalent."""
    _check_pair(G, f, g)
    if f == g:
        return [f]
    basis = basis or kempe_groebner(G)
    table = stable_table(G)
    mf, mg = coloring_to_monomial(f, table), coloring_to_monomial(g, table)
    tf, tg = reduction_trace(mf, basis), reduction_trace(mg, basis)
    nf_f = tf[-1].after if tf else mf
    nf_g = tg[-1].after if tg else mg
    if nf_f != nf_g:
        return None
    kbasis = kbasis or kempe_basis(G, basis)
    forward = _expand_trace(G, tf, kbasis, mf)
    backward = _expand_trace(G, tg, kbasis, mg)
    return _collapse(forward + backward[::-1][1:])
