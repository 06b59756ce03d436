import pytest
import sympy
from hypothesis import given, strategies as st

from kempeideal.errors import DomainError, InconsistencyError
from kempeideal.polyring import (EQ, GT, LT, MonomialOrder, Polynomial, buchberger, mono_divides,
                                 mono_lcm, normal_form, reduce_basis, s_polynomial,
                                 standard_monomials, variable)

N = 4


def monomials(n=N, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * n)


def binomial_ideals(n=N):
    gen = st.one_of(
        st.builds(Polynomial.binomial, monomials(n), monomials(n)),
        st.builds(Polynomial.monomial, monomials(n, 2)),
    )
    return st.lists(gen, min_size=1, max_size=5)


def orders(n=N):
    return st.permutations(list(range(n))).map(MonomialOrder)


def to_sympy(p: Polynomial, syms):
    return sum(c * sympy.prod(s ** e for s, e in zip(syms, m)) for m, c in p.terms.items())


def sympy_basis(gens, order: MonomialOrder):
    syms = sympy.symbols(f"x0:{order.n}")
    # sympy's grevlex treats its last generator as the smallest variable
    ranked = [syms[i] for i in order.ranking]
    exprs = [to_sympy(g, syms) for g in gens if g]
    if not exprs:
        return set()
    G = sympy.groebner(exprs, *ranked, order="grevlex")
    out = set()
    for expr in G.exprs:
        poly = sympy.Poly(expr, *syms)
        out.add(frozenset((m, int(c)) for m, c in poly.terms()))
    return out


def as_set(basis):
    return {frozenset(p.terms.items()) for p in basis}


def test_default_order_compares_smallest_variable_first():
    order = MonomialOrder.default(3)
    assert order.smallest == 0
    # equal degree: fewer copies of the smallest variable wins
    assert order.compare((0, 1, 1), (1, 0, 1)) == GT
    assert order.compare((0, 2, 0), (1, 0, 1)) == GT
    assert order.compare((0, 0, 1), (2, 0, 0)) == LT
    assert order.compare((1, 1, 0), (1, 1, 0)) == EQ
    assert order.compare((0, 0, 1), (1, 1, 1)) == LT


def test_order_must_be_a_permutation():
    with pytest.raises(DomainError):
        MonomialOrder([0, 0, 1])


@given(monomials(), monomials(), orders())
def test_order_agrees_with_sympy_grevlex(a, b, order):
    sym = sympy.polys.orderings.grevlex
    ra = tuple(a[i] for i in order.ranking)
    rb = tuple(b[i] for i in order.ranking)
    expected = (sym(ra) > sym(rb)) - (sym(ra) < sym(rb))
    assert order.compare(a, b) == expected


@given(monomials(), monomials(), monomials(), orders())
def test_order_is_multiplicative(a, b, c, order):
    ac = tuple(x + y for x, y in zip(a, c))
    bc = tuple(x + y for x, y in zip(b, c))
    assert order.compare(a, b) == order.compare(ac, bc)


def test_polynomial_arithmetic_and_text():
    order = MonomialOrder.default(3)
    p = Polynomial.binomial((1, 1, 0), (2, 0, 0))
    assert p.lead(order) == (1, 1, 0)
    assert (p - p).terms == {}
    assert (p * p).terms == {(2, 2, 0): 1, (3, 1, 0): -2, (4, 0, 0): 1}
    names = "abc".__getitem__
    assert p.to_text(order, names) == "xa*xb - xa^2"
    assert p.to_json(order, names)[0] == {"coeff": 1, "exponents": [{"var": "a", "exp": 1},
                                                                    {"var": "b", "exp": 1}]}


def test_s_polynomial_cancels_leads():
    order = MonomialOrder.default(3)
    f = Polynomial.binomial((0, 1, 1), (1, 1, 0))
    g = Polynomial.binomial((0, 0, 2), (1, 0, 1))
    s = s_polynomial(f, g, order)
    assert mono_lcm(f.lead(order), g.lead(order)) not in s.terms
    with pytest.raises(DomainError):
        s_polynomial(f, Polynomial(), order)


def test_closure_check_rejects_non_binomials():
    order = MonomialOrder.default(2)
    bad = Polynomial({(1, 0): 1, (0, 1): 1})
    with pytest.raises(InconsistencyError):
        buchberger([bad], order)
    assert buchberger([bad], order, check_closure=False).elements


def test_twisted_cubic():
    # x0..x3 with x3 largest: the 2x2 minors of [[x3, x2, x1], [x2, x1, x0]]
    order = MonomialOrder.default(4)
    v = lambda i: variable(4, i)
    mul = lambda a, b: tuple(x + y for x, y in zip(a, b))
    gens = [Polynomial.binomial(mul(v(3), v(1)), mul(v(2), v(2))),
            Polynomial.binomial(mul(v(3), v(0)), mul(v(2), v(1))),
            Polynomial.binomial(mul(v(2), v(0)), mul(v(1), v(1)))]
    G = buchberger(gens, order)
    assert len(G) == 3
    assert as_set(G) == sympy_basis(gens, order)


@given(binomial_ideals(), orders())
def test_groebner_matches_sympy(gens, order):
    assert as_set(buchberger(gens, order)) == sympy_basis(gens, order)


@given(binomial_ideals(), orders(), st.randoms(use_true_random=False))
def test_reduced_basis_ignores_generator_order(gens, order, rnd):
    shuffled = list(gens)
    rnd.shuffle(shuffled)
    assert buchberger(gens, order).elements == buchberger(shuffled, order).elements


@given(binomial_ideals(), orders(), monomials(max_exp=2))
def test_multiples_of_generators_are_members(gens, order, w):
    G = buchberger(gens, order)
    for g in gens:
        assert G.contains(g.mul_monomial(w))
    assert reduce_basis(G.elements, order).elements == G.elements


@given(binomial_ideals(), orders(), monomials(max_exp=4))
def test_normal_form_is_irreducible(gens, order, m):
    G = buchberger(gens, order)
    r = G.normal_form(Polynomial.monomial(m))
    assert r == normal_form(Polynomial.monomial(m), list(G.elements), order)
    for t in r.terms:
        assert not any(mono_divides(lead, t) for lead in G.initials)


@given(binomial_ideals(), orders(), st.integers(0, 4))
def test_standard_monomials_by_filter(gens, order, k):
    G = buchberger(gens, order)
    got = standard_monomials(G.initials, N, k, order)
    assert len(got) == len(set(got))
    expected = [m for m in _all_monomials(N, k) if not any(mono_divides(l, m) for l in G.initials)]
    assert sorted(got) == sorted(expected)


def _all_monomials(n, k):
    if n == 1:
        yield (k,)
        return
    for e in range(k + 1):
        for rest in _all_monomials(n - 1, k - e):
            yield (e,) + rest


def test_standard_monomials_of_unit_ideal():
    assert standard_monomials([(0, 0)], 2, 3) == []
    assert len(standard_monomials([], 3, 2)) == 6
