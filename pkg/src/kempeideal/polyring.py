"""Exact sparse polynomials over indexed variables, grevlex orders and Gröbner bases.

A monomial is a dense exponent tuple ``m`` with ``m[i]`` the exponent of
variable i. Polynomials map monomials to exact (integer, occasionally
Fraction) coefficients.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from operator import add, le, neg, sub
from typing import Callable, Iterable, Sequence

from .errors import DomainError, InconsistencyError

Monomial = tuple

LT, EQ, GT = -1, 0, 1


def unit(n: int) -> Monomial:
    return (0,) * n


def variable(n: int, i: int, power: int = 1) -> Monomial:
    m = [0] * n
    m[i] = power
    return tuple(m)


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(add, a, b))


def mono_div(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(sub, a, b))


def mono_divides(a: Monomial, b: Monomial) -> bool:
    """True iff a divides b."""
    return all(map(le, a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(max, a, b))


def mono_gcd(a: Monomial, b: Monomial) -> Monomial:
    return tuple(map(min, a, b))


@lru_cache(maxsize=1 << 18)
def mono_mask(m: Monomial) -> int:
    return sum(1 << i for i, e in enumerate(m) if e)


def mono_coprime(a: Monomial, b: Monomial) -> bool:
    return not (mono_mask(a) & mono_mask(b))


class MonomialOrder:
    """Graded reverse lexicographic order.

    ``ranking`` lists the variable indices from largest to smallest. Two
    monomials of equal degree are compared at the smallest variable where
    their exponents differ: less of that variable means larger.
    """

    kind = "grevlex"

    def __init__(self, ranking: Sequence[int]):
        ranking = tuple(ranking)
        if sorted(ranking) != list(range(len(ranking))):
            raise DomainError("variable ranking must be a permutation of 0..n-1")
        self.ranking = ranking
        self.n = len(ranking)
        self._ascending = tuple(reversed(ranking))
        self._identity = self._ascending == tuple(range(self.n))
        self._keys: dict = {}

    @classmethod
    def default(cls, n: int) -> "MonomialOrder":
        """Variable 0 smallest, variable n-1 largest."""
        return cls(range(n - 1, -1, -1))

    @property
    def smallest(self) -> int:
        return self.ranking[-1]

    def key(self, m: Monomial) -> tuple:
        k = self._keys.get(m)
        if k is None:
            if self._identity:
                k = (sum(m), tuple(map(neg, m)))
            else:
                k = (sum(m), tuple(-m[i] for i in self._ascending))
            self._keys[m] = k
        return k

    def compare(self, a: Monomial, b: Monomial) -> int:
        ka, kb = self.key(a), self.key(b)
        return (ka > kb) - (ka < kb)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.ranking == other.ranking

    def __hash__(self):
        return hash(self.ranking)

    def __repr__(self):
        return f"MonomialOrder({list(self.ranking)})"


def compare(order: MonomialOrder, m1: Monomial, m2: Monomial) -> int:
    return order.compare(m1, m2)


class Polynomial:
    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        if terms is None:
            terms = {}
        elif not isinstance(terms, dict):
            acc: dict = {}
            for m, c in terms:
                acc[m] = acc.get(m, 0) + c
            terms = acc
        self.terms = {m: c for m, c in terms.items() if c}
        self._hash = None

    @classmethod
    def monomial(cls, m: Monomial, c=1) -> "Polynomial":
        return cls({m: c})

    @classmethod
    def binomial(cls, a: Monomial, b: Monomial) -> "Polynomial":
        """The pure difference x^a - x^b."""
        return cls([(a, 1), (b, -1)])

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, Polynomial) and self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __add__(self, other: "Polynomial") -> "Polynomial":
        t = dict(self.terms)
        for m, c in other.terms.items():
            t[m] = t.get(m, 0) + c
        return Polynomial(t)

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def scale(self, c) -> "Polynomial":
        return Polynomial({m: c * v for m, v in self.terms.items()})

    def mul_monomial(self, w: Monomial, c=1) -> "Polynomial":
        return Polynomial({mono_mul(w, m): c * v for m, v in self.terms.items()})

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        acc: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Polynomial(acc)

    @property
    def nvars(self) -> int:
        return len(next(iter(self.terms))) if self.terms else 0

    def monomials(self) -> list:
        return list(self.terms)

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def degrees(self) -> set:
        return {sum(m) for m in self.terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def lead(self, order: MonomialOrder) -> Monomial:
        if not self.terms:
            raise DomainError("zero polynomial has no initial monomial")
        return max(self.terms, key=order.key)

    def lead_coefficient(self, order: MonomialOrder):
        return self.terms[self.lead(order)]

    def sorted_terms(self, order: MonomialOrder) -> list:
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def monic(self, order: MonomialOrder) -> "Polynomial":
        c = self.lead_coefficient(order)
        if c == 1:
            return self
        if all(v % c == 0 for v in self.terms.values()) and not isinstance(c, Fraction):
            return Polynomial({m: v // c for m, v in self.terms.items()})
        return Polynomial({m: Fraction(v) / c for m, v in self.terms.items()})

    def to_text(self, order: MonomialOrder, names: Callable[[int], str]) -> str:
        if not self.terms:
            return "0"
        out = []
        for idx, (m, c) in enumerate(self.sorted_terms(order)):
            body = monomial_text(m, names)
            mag = abs(c)
            if body == "1":
                piece = str(mag)
            elif mag == 1:
                piece = body
            else:
                piece = f"{mag}*{body}"
            if idx == 0:
                out.append(piece if c > 0 else "-" + piece)
            else:
                out.append(("+ " if c > 0 else "- ") + piece)
        return " ".join(out)

    def to_json(self, order: MonomialOrder, names: Callable[[int], object]) -> list:
        return [{"coeff": int(c) if c == int(c) else str(c),
                 "exponents": [{"var": names(i), "exp": e} for i, e in enumerate(m) if e]}
                for m, c in self.sorted_terms(order)]

    def __repr__(self):
        return f"Polynomial({self.terms!r})"


def monomial_text(m: Monomial, names: Callable[[int], str]) -> str:
    parts = []
    for i in sorted(range(len(m)), key=lambda i: names(i)):
        e = m[i]
        if e == 1:
            parts.append(f"x{names(i)}")
        elif e > 1:
            parts.append(f"x{names(i)}^{e}")
    return "*".join(parts) if parts else "1"


def s_polynomial(f: Polynomial, g: Polynomial, order: MonomialOrder) -> Polynomial:
    if not f or not g:
        raise DomainError("S-polynomial of a zero polynomial")
    lf, lg = f.lead(order), g.lead(order)
    m = mono_lcm(lf, lg)
    a = f.mul_monomial(mono_div(m, lf)).monic(order)
    b = g.mul_monomial(mono_div(m, lg)).monic(order)
    return a - b


class _Reducer:
    """Division by an ordered list of monic polynomials (first divisor wins)."""

    def __init__(self, order: MonomialOrder, polys: Iterable[Polynomial] = ()):
        self.order = order
        self.polys: list = []
        self.leads: list = []
        self.masks: list = []
        self.by_support: dict = {}  # support mask of a lead -> indices, ascending
        for p in polys:
            self.append(p)

    def append(self, p: Polynomial) -> None:
        lead = p.lead(self.order)
        if p.terms[lead] != 1:
            raise InconsistencyError("reducer polynomials must be monic")
        mask = mono_mask(lead)
        self.by_support.setdefault(mask, []).append(len(self.polys))
        self.polys.append(p)
        self.leads.append(lead)
        self.masks.append(mask)

    def _submask_scan(self, m: Monomial, mm: int, skip: int, first: bool) -> list:
        found = []
        table = self.by_support
        leads = self.leads
        sub = mm
        while True:
            for i in table.get(sub, ()):
                if i != skip and mono_divides(leads[i], m):
                    found.append(i)
                    if first:
                        break
            if not sub:
                break
            sub = (sub - 1) & mm
        return found

    def divisors(self, m: Monomial, skip: int = -1) -> list:
        """Indices of all elements whose lead divides m, ascending."""
        mm = mono_mask(m)
        if 1 << bin(mm).count("1") > 2 * len(self.polys):
            leads = self.leads
            return [i for i, lm in enumerate(self.masks)
                    if not (lm & ~mm) and i != skip and mono_divides(leads[i], m)]
        return sorted(self._submask_scan(m, mm, skip, first=False))

    def find(self, m: Monomial, skip: int = -1) -> int:
        """Index of the first element (in insertion order) whose lead divides m, or -1."""
        mm = mono_mask(m)
        if 1 << bin(mm).count("1") > 2 * len(self.polys):
            leads = self.leads
            for i, lm in enumerate(self.masks):
                if not (lm & ~mm) and i != skip and mono_divides(leads[i], m):
                    return i
            return -1
        return min(self._submask_scan(m, mm, skip, first=True), default=-1)

    def reduce(self, p: Polynomial, skip: int = -1) -> Polynomial:
        key = self.order.key
        work = dict(p.terms)
        rem: dict = {}
        while work:
            m = max(work, key=key)
            c = work.pop(m)
            i = self.find(m, skip)
            if i < 0:
                rem[m] = c
                continue
            lead = self.leads[i]
            w = mono_div(m, lead)
            for mb, cb in self.polys[i].terms.items():
                if mb == lead:
                    continue
                t = mono_mul(w, mb)
                v = work.get(t, 0) - c * cb
                if v:
                    work[t] = v
                else:
                    work.pop(t, None)
        return Polynomial(rem)


def normal_form(p: Polynomial, basis: Sequence[Polynomial], order: MonomialOrder) -> Polynomial:
    """Remainder of p on division by ``basis`` (monic-normalized, first divisor in list order)."""
    if any(not b for b in basis):
        raise DomainError("basis contains the zero polynomial")
    return _Reducer(order, [b.monic(order) for b in basis]).reduce(p)


def _check_closure(p: Polynomial) -> None:
    if len(p.terms) > 2 or any(c not in (1, -1) for c in p.terms.values()) or (
            len(p.terms) == 2 and sum(p.terms.values()) != 0):
        raise InconsistencyError(f"binomial closure violated by {p!r}")


@dataclass(frozen=True)
class GroebnerBasis:
    """A reduced Gröbner basis: monic elements sorted by ascending initial monomial."""

    order: MonomialOrder
    elements: tuple

    def __post_init__(self):
        object.__setattr__(self, "_reducer", _Reducer(self.order, self.elements))

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @property
    def initials(self) -> list:
        return list(self._reducer.leads)

    def lead(self, i: int) -> Monomial:
        return self._reducer.leads[i]

    def normal_form(self, p: Polynomial) -> Polynomial:
        return self._reducer.reduce(p)

    def contains(self, p: Polynomial) -> bool:
        return not self.normal_form(p)

    def find_reducer(self, m: Monomial) -> int:
        """Index of the first element whose initial monomial divides m, or -1."""
        return self._reducer.find(m)

    def element_set(self) -> frozenset:
        return frozenset(self.elements)

    def binomials(self) -> list:
        return [g for g in self.elements if len(g) == 2]

    def monomials(self) -> list:
        return [g for g in self.elements if len(g) == 1]


def reduce_basis(B: Iterable[Polynomial], order: MonomialOrder) -> GroebnerBasis:
    polys = [p.monic(order) for p in B if p]
    polys.sort(key=lambda p: order.key(p.lead(order)))
    # a lead can only be divisible by leads that are not larger
    minimal = _Reducer(order)
    for p in polys:
        if minimal.find(p.lead(order)) < 0:
            minimal.append(p)
    reduced = []
    for i, p in enumerate(minimal.polys):
        reduced.append(minimal.reduce(p, skip=i))
    reduced = [p.monic(order) for p in reduced]
    reduced.sort(key=lambda p: order.key(p.lead(order)))
    return GroebnerBasis(order, tuple(reduced))


def buchberger(gens: Iterable[Polynomial], order: MonomialOrder,
               check_closure: bool = True) -> GroebnerBasis:
    """Reduced Gröbner basis of the ideal generated by ``gens``.

    Pairs are processed by ascending lcm (degree first, then ``order``);
    pairs with coprime initial monomials and pairs made redundant by the
    chain criterion are skipped.
    """
    key = order.key
    red = _Reducer(order)
    queue: list = []
    pending: set = set()

    def add(p: Polynomial) -> None:
        j = len(red.polys)
        red.append(p)
        lj, mj = red.leads[j], red.masks[j]
        mono_j = len(p) == 1
        for i in range(j):
            # coprime leads and monomial pairs have S-polynomials reducing to zero
            if not (red.masks[i] & mj) or (mono_j and len(red.polys[i]) == 1):
                continue
            lcm = mono_lcm(red.leads[i], lj)
            heapq.heappush(queue, (key(lcm), i, j, lcm))
            pending.add((i, j))

    for g in gens:
        if check_closure:
            _check_closure(g)
        if g:
            r = red.reduce(g)
            if r:
                add(r.monic(order))

    while queue:
        _, i, j, lcm = heapq.heappop(queue)
        pending.discard((i, j))
        if _chain_redundant(red, i, j, lcm, pending):
            continue
        s = s_polynomial(red.polys[i], red.polys[j], order)
        if check_closure:
            _check_closure(s)
        r = red.reduce(s)
        if r:
            if check_closure:
                _check_closure(r)
            add(r.monic(order))
    return reduce_basis(red.polys, order)


def _chain_redundant(red: _Reducer, i: int, j: int, lcm: Monomial, pending: set) -> bool:
    for k in red.divisors(lcm):
        if k == i or k == j:
            continue
        if (min(i, k), max(i, k)) not in pending and (min(j, k), max(j, k)) not in pending:
            return True
    return False


def standard_monomials(initials: Sequence[Monomial], n: int, k: int,
                       order: MonomialOrder | None = None) -> list:
    """All degree-k monomials in n variables divisible by none of ``initials``.

    Depth-first over variables from largest to smallest; a partial product
    that is already non-standard is pruned.
    """
    order = order or MonomialOrder.default(n)
    if k < 0:
        return []
    by_var: list = [[] for _ in range(n)]
    for m in initials:
        if not any(m):
            return []  # the ideal is the whole ring
        for i, e in enumerate(m):
            if e:
                by_var[i].append(m)
    ranking = order.ranking
    out: list = []
    cur = [0] * n

    def dfs(pos: int, left: int) -> None:
        if left == 0:
            out.append(tuple(cur))
            return
        for p in range(pos, n):
            v = ranking[p]
            cur[v] += 1
            if not any(all(map(le, m, cur)) for m in by_var[v]):
                dfs(p, left - 1)
            cur[v] -= 1

    dfs(0, k)
    return out
