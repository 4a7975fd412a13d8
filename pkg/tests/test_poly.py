from fractions import Fraction

import pytest
import sympy
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from indroots.poly import (
    Poly,
    PolyError,
    corona_transform,
    count_roots,
    derivative,
    eval_rational,
    format_poly,
    parse_poly,
    poly_gcd,
    pseudo_remainder,
    sign_at,
    squarefree_decomposition,
    squarefree_part,
    sturm_chain,
)

big = st.integers(-(2**64), 2**64)
polys = st.lists(big, max_size=7).map(Poly)
small_polys = st.lists(st.integers(-20, 20), min_size=2, max_size=8).map(Poly)
rationals = st.fractions(min_value=-50, max_value=50, max_denominator=50)


def test_arithmetic_examples():
    one_x = Poly((1, 1))
    assert one_x * one_x == Poly((1, 2, 1))
    assert (Poly((1, 3)) - Poly((1, 3))).is_zero()
    assert Poly(()).coeffs == ()
    assert Poly((1, 2)) * one_x**2 + Poly((0, 1)) == Poly((1, 5, 5, 2))


def test_no_trailing_zeros():
    assert Poly((1, 2, 0, 0)).coeffs == (1, 2)
    assert Poly((0, 0)).is_zero()
    assert Poly((3, 0, 5)).degree == 2


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * Poly((1,)) == a
    assert a + Poly() == a
    assert (a - a).is_zero()


@given(polys, st.integers(0, 4))
def test_pow_is_repeated_product(a, k):
    acc = Poly((1,))
    for _ in range(k):
        acc = acc * a
    assert a**k == acc


def test_eval_examples():
    assert eval_rational(Poly((1, 1)), -1) == 0
    assert eval_rational(Poly((1, 4, 2)), Fraction(-1, 2)) == Fraction(-1, 2)
    t1 = Poly((1, 8, 21, 24, 16, 6, 1))
    t2 = Poly((1, 8, 21, 23, 9))
    q = Fraction(-1, 10)
    assert eval_rational(t2, q) > eval_rational(t1, q)


@given(small_polys, rationals)
def test_sign_at_matches_exact_value(P, q):
    v = eval_rational(P, q)
    assert sign_at(P, q) == (v > 0) - (v < 0)
    assert P(q) == v


def test_corona_transform_examples():
    assert corona_transform(Poly((1, 1)), 1) == Poly((1, 2))
    assert corona_transform(Poly((1, 2)), 2) == Poly((1, 4, 3))
    # C_3 corona: 6 vertices, brute-force count 1 + 6x + 9x^2 + 4x^3
    assert corona_transform(Poly((1, 3)), 3) == Poly((1, 6, 9, 4))
    with pytest.raises(PolyError):
        corona_transform(Poly((1, 2, 1)), 1)


@given(st.lists(st.integers(-30, 30), min_size=1, max_size=6).map(Poly), st.integers(0, 3), rationals)
def test_corona_transform_identity_at_rationals(P, extra, q):
    assume(q != -1)
    n = max(P.degree, 0) + extra
    lhs = eval_rational(corona_transform(P, n), q)
    rhs = (1 + q) ** n * eval_rational(P, q / (1 + q))
    assert lhs == rhs


def test_gcd_examples():
    assert poly_gcd(Poly((1, 3, 2)), Poly((1, 1))) == Poly((1, 1))
    c4 = Poly((1, 4, 2))
    p4 = Poly((1, 4, 3))
    assert poly_gcd(c4, p4).degree == 0


@given(small_polys, small_polys, small_polys)
def test_gcd_divides_and_is_primitive(a, b, c):
    assume(not c.is_zero() and not (a.is_zero() and b.is_zero()))
    g = poly_gcd(a * c, b * c)
    assert g.lc > 0 and g.content() == 1
    assert pseudo_remainder(a * c, g).is_zero()
    assert pseudo_remainder(b * c, g).is_zero()
    assert pseudo_remainder(g, c.primitive()).is_zero()


def test_squarefree_decomposition_example():
    P = Poly((1, 1)) ** 2 * Poly((1, 2))
    parts = squarefree_decomposition(P)
    assert parts == [(Poly((1, 2)), 1), (Poly((1, 1)), 2)]


@given(st.lists(st.tuples(small_polys, st.integers(1, 3)), min_size=1, max_size=3))
def test_squarefree_decomposition_reassembles(factors):
    P = Poly((1,))
    for f, k in factors:
        assume(not f.is_zero())
        P = P * f**k
    assume(P.degree > 0)
    Q = Poly((1,))
    for f, k in squarefree_decomposition(P):
        Q = Q * f**k
    assert Q.degree == P.degree
    # equal up to a rational constant
    assert (P * Poly((Q.lc,)) - Q * Poly((P.lc,))).is_zero()
    S = squarefree_part(P)
    assert poly_gcd(S, derivative(S)).degree == 0


def test_sturm_examples():
    chain = sturm_chain(Poly((-1, 0, 1)))
    assert count_roots(chain, -2, 2) == 2
    assert count_roots(sturm_chain(Poly((1, 4, 2))), -2, 0) == 2
    assert count_roots(sturm_chain(Poly((1, 1, 1))), -100, 100) == 0
    with pytest.raises(PolyError):
        sturm_chain(Poly())


@settings(max_examples=1000)
@given(st.lists(st.integers(-9, 9), min_size=2, max_size=7).map(Poly), rationals, rationals)
def test_sturm_counts_match_independent_counter(P, a, b):
    assume(P.degree >= 1 and a < b)
    S = squarefree_part(P)
    assume(sign_at(S, a) != 0 and sign_at(S, b) != 0)
    x = sympy.Symbol("x")
    oracle = sympy.Poly(list(reversed(S.coeffs)), x).count_roots(sympy.Rational(a.numerator, a.denominator),
                                                                   sympy.Rational(b.numerator, b.denominator))
    assert count_roots(sturm_chain(S), a, b) == oracle


@pytest.mark.parametrize(
    "text, coeffs",
    [("1 + 10x + 36x^2", (1, 10, 36)), ("1 - x^3", (1, 0, 0, -1)), ("0", ()), ("-2x", (0, -2)),
     ("3*x^2 + 1", (1, 0, 3))],
)
def test_parse_examples(text, coeffs):
    assert parse_poly(text) == Poly(coeffs)


@given(polys)
def test_text_round_trip(P):
    assert parse_poly(format_poly(P)) == P


def test_parse_rejects_garbage():
    for bad in ("", "x^", "1 + + 2", "y"):
        with pytest.raises(PolyError):
            parse_poly(bad)
