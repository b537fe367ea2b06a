import json

import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from milnor_motive.polyring import (
    LinearForm,
    Polynomial,
    RationalFunction,
    compose_permutations,
    divides,
    invert_permutation,
    permute,
    product,
    rational,
    root,
)


@st.composite
def polys(draw, n=None, max_deg=6, homogeneous=None):
    n = draw(st.integers(1, 8)) if n is None else n
    k = draw(st.integers(0, 6))
    terms = {}
    for _ in range(k):
        if homogeneous is None:
            d = draw(st.integers(0, max_deg))
        else:
            d = homogeneous
        exps = [0] * n
        for _ in range(d):
            exps[draw(st.integers(0, n - 1))] += 1
        terms[tuple(exps)] = draw(st.integers(-50, 50))
    return Polynomial(n, terms)


@st.composite
def same_ring(draw, count=3):
    n = draw(st.integers(1, 8))
    return [draw(polys(n=n)) for _ in range(count)]


def to_sympy(p: Polynomial):
    ts = sympy.symbols(f"t1:{p.n + 1}")
    return sympy.Add(*[c * sympy.Mul(*[t**e for t, e in zip(ts, exps)]) for exps, c in p.terms.items()])


@given(same_ring())
def test_ring_axioms(ps):
    a, b, c = ps
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == Polynomial.zero(a.n)
    assert a * Polynomial.one(a.n) == a


@given(same_ring(2))
def test_multiplication_matches_sympy(ps):
    a, b = ps
    assert sympy.expand(to_sympy(a * b) - to_sympy(a) * to_sympy(b)) == 0


@given(polys())
def test_string_and_json_round_trip(p):
    assert Polynomial.parse(p.n, str(p)) == p
    assert Polynomial.from_json(json.dumps(p.to_json())) == p


@st.composite
def root_and_poly(draw):
    n = draw(st.integers(2, 8))
    i, j = draw(st.permutations(range(1, n + 1)))[:2]
    return root(n, i, j), draw(polys(n=n, max_deg=5))


@given(root_and_poly())
def test_multiples_of_a_root_are_divisible(data):
    alpha, p = data
    prod = p * alpha.to_polynomial()
    assert divides(alpha, prod)
    if p:
        assert prod.divide_linear(alpha) == p


@given(root_and_poly())
def test_divides_agrees_with_sympy(data):
    alpha, p = data
    t = sympy.symbols(f"t1:{p.n + 1}")
    a = to_sympy(alpha.to_polynomial())
    _, r = sympy.div(to_sympy(p), a, *t)
    assert divides(alpha, p) == (sympy.expand(r) == 0)


def test_general_linear_form_division():
    n = 3
    alpha = LinearForm((2, -3, 1))
    p = Polynomial.parse(n, "t1^2 + t2*t3 - 7")
    assert divides(alpha, p * alpha.to_polynomial())
    assert not divides(alpha, p)
    assert not divides(LinearForm((2, 0, 0)), Polynomial.parse(n, "t1 + 1"))


@st.composite
def perm_pair(draw):
    n = draw(st.integers(1, 8))
    sigma = tuple(draw(st.permutations(range(1, n + 1))))
    tau = tuple(draw(st.permutations(range(1, n + 1))))
    return sigma, tau, draw(polys(n=n)), draw(polys(n=n))


@given(perm_pair())
def test_permute_is_a_ring_automorphism(data):
    sigma, tau, p, q = data
    assert permute(sigma, p * q) == permute(sigma, p) * permute(sigma, q)
    assert permute(sigma, p + q) == permute(sigma, p) + permute(sigma, q)
    assert permute(invert_permutation(sigma), permute(sigma, p)) == p
    assert permute(sigma, permute(tau, p)) == permute(compose_permutations(sigma, tau), p)


def test_permute_moves_roots():
    assert permute((2, 3, 1), root(3, 1, 2).to_polynomial()) == root(3, 2, 3).to_polynomial()


def test_substitute_and_evaluate():
    p = Polynomial.parse(3, "t1^2*t2 - 3*t3")
    assert p.substitute(1, 2) == Polynomial.parse(3, "t2^3 - 3*t3")
    assert p.substitute(3, None) == Polynomial.parse(3, "t1^2*t2")
    assert p.evaluate((2, 5, 1)) == 17


def test_rational_functions_reduce():
    a13, a32 = root(3, 1, 3).to_polynomial(), root(3, 3, 2).to_polynomial()
    r = rational(a13 * a13, a13 * a32)
    assert r == rational(a13, a32)
    assert r.denominator.leading_term()[1] > 0
    s = rational(a13, a32) + rational(-a13, a32)
    assert s.is_polynomial() and s.numerator.is_zero()
    assert (rational(a13 * a32, a32)).to_polynomial() == a13


def test_rational_sum_against_sympy():
    n = 4
    terms = [rational(product([root(n, 1, s) for s in (2, 3)], n), product([root(n, s, 4) for s in (2, 3)], n))]
    terms.append(rational(root(n, 2, 3).to_polynomial(), root(n, 1, 4).to_polynomial()))
    total = terms[0] + terms[1]
    expect = sympy.cancel(
        to_sympy(terms[0].numerator) / to_sympy(terms[0].denominator)
        + to_sympy(terms[1].numerator) / to_sympy(terms[1].denominator)
    )
    got = to_sympy(total.numerator) / to_sympy(total.denominator)
    assert sympy.simplify(got - expect) == 0


def test_invalid_inputs():
    with pytest.raises(ValueError):
        LinearForm((0, 0))
    with pytest.raises(ZeroDivisionError):
        RationalFunction(Polynomial.one(2), Polynomial.zero(2))
    with pytest.raises(ArithmeticError):
        Polynomial.parse(2, "t1 + 1").divide_linear(root(2, 1, 2))
