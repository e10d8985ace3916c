from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from galsca.scalars import (DivergenceError, GaussianRational, I, LaurentPoly, NonMonomialDivision, ONE,
                            ZERO, gq, laurent_limit, parse_gaussian, parse_laurent, parse_scalar,
                            render_gaussian, render_laurent, render_scalar, scalar_arith, u_power)

rationals = st.fractions(max_denominator=50).filter(lambda f: abs(f) < 1000)
gaussians = st.builds(GaussianRational, rationals, rationals)
laurents = st.dictionaries(st.integers(-5, 5), gaussians, max_size=4).map(LaurentPoly)
nonpositive = st.dictionaries(st.integers(-5, 0), gaussians, max_size=4).map(LaurentPoly)


def test_examples():
    assert scalar_arith(gq(Fraction(1, 2)), gq(Fraction(1, 3)), "+") == gq(Fraction(5, 6))
    assert scalar_arith(I, I, "×") == -ONE
    assert scalar_arith(u_power(2), u_power(-2), "*") == LaurentPoly({0: 1})
    assert laurent_limit(LaurentPoly({-2: 3, 0: 5})) == gq(5)
    with pytest.raises(DivergenceError):
        laurent_limit(LaurentPoly({1: 2}))
    assert laurent_limit(LaurentPoly()) == ZERO


def test_canonical_strings():
    assert render_gaussian(gq(Fraction(-3, 6))) == "-1/2"
    assert render_gaussian(GaussianRational(0, Fraction(-2, 4))) == "0/1-1/2*i"
    assert render_gaussian(GaussianRational(1, 3)) == "1/1+3/1*i"
    assert render_laurent(LaurentPoly({-2: 3, 0: 5})) == "(5/1)*u^0 + (3/1)*u^-2"
    assert render_laurent(LaurentPoly()) == "0"
    assert parse_scalar("7/3", "constant") == gq(Fraction(7, 3))


def test_parse_rejects_noncanonical():
    for bad in ("0.5", "1/2i", "i", "1 / 2"):
        with pytest.raises(ValueError):
            parse_gaussian(bad)
    with pytest.raises(ValueError):
        parse_laurent("5*u^2")


def test_division_errors():
    with pytest.raises(ZeroDivisionError):
        ONE / ZERO
    with pytest.raises(NonMonomialDivision):
        LaurentPoly({0: 1}) / LaurentPoly({0: 1, 1: 1})
    assert LaurentPoly({3: 4, 1: 2}) / LaurentPoly.monomial(2, 1) == LaurentPoly({2: 2, 0: 1})


def test_no_zero_terms_stored():
    p = LaurentPoly({1: 1}) + LaurentPoly({1: -1, 0: 2})
    assert p.terms == {0: gq(2)}


@given(gaussians, gaussians, gaussians)
def test_field_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    if b:
        assert (a / b) * b == a


@given(gaussians)
def test_lowest_terms(a):
    for part in (a.re, a.im):
        assert isinstance(part, Fraction)
        assert part.denominator > 0


@given(laurents, laurents, laurents)
def test_ring_axioms(p, q, r):
    assert (p + q) + r == p + (q + r)
    assert p * (q + r) == p * q + p * r
    assert p * q == q * p


@given(nonpositive, nonpositive)
def test_limit_multiplicative(p, q):
    assert laurent_limit(p * q) == laurent_limit(p) * laurent_limit(q)


@given(gaussians)
def test_roundtrip_gaussian(x):
    assert parse_gaussian(render_gaussian(x)) == x
    assert parse_scalar(render_scalar(x)) == x


@given(laurents)
def test_roundtrip_laurent(p):
    assert parse_laurent(render_laurent(p)) == p
    assert parse_scalar(render_scalar(p), "laurent") == p


@given(laurents)
def test_limit_matches_degrees(p):
    top = p.max_degree()
    if top is not None and top > 0:
        with pytest.raises(DivergenceError):
            laurent_limit(p)
    else:
        assert laurent_limit(p) == p.coefficient(0)


@given(gaussians)
def test_immutable(x):
    with pytest.raises(AttributeError):
        x.re = Fraction(1)
