from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qhv.arith import (DegreeBound, Monomial, make_sample_point, mono, monomial_eval,
                       rat_pow, rat_str)
from qhv.errors import DegeneratePoint, ZeroToNegativePower

from conftest import monomials, points, small_rationals


def test_sample_point_squares():
    pt = make_sample_point(Fraction(1, 2), Fraction(1, 3))
    assert (pt.q, pt.a, pt.b) == (Fraction(1, 4), Fraction(1, 9), Fraction(1, 9))
    pt = make_sample_point(Fraction(-2, 3), 5)
    assert (pt.q, pt.a) == (Fraction(4, 9), 25)


@pytest.mark.parametrize("t, c", [(1, Fraction(1, 3)), (-1, 2), (0, 2), (Fraction(1, 2), 0)])
def test_degenerate_points(t, c):
    with pytest.raises(DegeneratePoint):
        make_sample_point(t, c)


def test_monomial_eval(pt):
    assert monomial_eval(Monomial(), pt) == 1
    assert monomial_eval(mono(t=1, c=1), pt) == Fraction(1, 6)
    assert monomial_eval(mono(t=-2, sign=-1), pt) == -4


def test_rat_pow():
    assert rat_pow(Fraction(2, 3), 0) == 1
    assert rat_pow(Fraction(2, 3), -2) == Fraction(9, 4)
    with pytest.raises(ZeroToNegativePower):
        rat_pow(Fraction(0), -1)


def test_rat_str():
    assert rat_str(Fraction(-6, 4)) == "-3/2"
    assert rat_str(3) == "3/1"


@given(monomials(), monomials(), points())
def test_monomial_eval_multiplicative(m1, m2, pt):
    assert monomial_eval(m1 * m2, pt) == monomial_eval(m1, pt) * monomial_eval(m2, pt)
    assert monomial_eval(m1 / m2, pt) == monomial_eval(m1, pt) / monomial_eval(m2, pt)


@given(monomials(), st.integers(-3, 3), points())
def test_monomial_pow(m, e, pt):
    assert monomial_eval(m ** e, pt) == monomial_eval(m, pt) ** e


@given(small_rationals(nonzero=True), st.integers(-8, 8), st.integers(-8, 8))
def test_rat_pow_adds_exponents(x, e1, e2):
    assert rat_pow(x, e1 + e2) == rat_pow(x, e1) * rat_pow(x, e2)


@given(st.integers(-10**30, 10**30), st.integers(1, 10**30),
       st.integers(-10**30, 10**30), st.integers(1, 10**30))
def test_fraction_sum_is_exact(a, b, c, d):
    assert (Fraction(a, b) + Fraction(c, d)) * b * d == a * d + c * b


def test_sqrt_requires_even_exponents():
    assert mono(t=4, c=-2).sqrt() == mono(t=2, c=-1)
    with pytest.raises(ValueError):
        mono(t=1).sqrt()
    with pytest.raises(ValueError):
        Monomial(sign=0)


def test_degree_bound_arithmetic():
    x = DegreeBound.var()
    v = (1 - x * x) / (x + 3)
    assert (v.num, v.den) == (2, 1)
    assert ((x ** -2) * x).den == 2
    assert (x != 0) and not (x == 0)
