from fractions import Fraction

import pytest

from qhv.arith import DegreeBound, SamplePoint, make_sample_point
from qhv.catalog import (THEOREMS, catalog_ids, catalog_list, chi, example_rhs, get, lhs_sum,
                         rhs_closed_form)
from qhv.errors import PoleError
from qhv.verify import Prng, pole_free_values


def test_catalog_shape():
    cat = catalog_list()
    assert len(cat) == 29
    assert len(set(catalog_ids())) == 29
    assert get("thm-e").family == "q-side"
    assert get("eq-andrews").takes_ell is False
    assert sum(d.fixed_ell is not None for d in cat) == 16
    with pytest.raises(KeyError):
        get("thm-z")


@pytest.mark.parametrize("n, expected", [(0, 1), (4, 0), (6, 1), (-3, 0), (2, 0)])
def test_chi(n, expected):
    assert chi(n) == expected


def test_theorem_a_example_values(pt):
    # ell = 1, n = 1: a(1-q)/(1-aq) at q = 1/4, a = 1/9
    assert rhs_closed_form("thm-a", 1, 1, pt) == Fraction(3, 35)
    assert lhs_sum("thm-a", 1, 1, pt) == Fraction(3, 35)


def test_theorem_b_vanishing_case():
    assert rhs_closed_form("thm-b", 2, 1, Fraction(1, 5)) == 0


def test_lhs_trivial_cases(pt):
    for d in catalog_list():
        point = pt if d.is_q_side else Fraction(2, 7)
        assert lhs_sum(d, 0, 1, point) == 1
    assert lhs_sum("eq-q-andrews", 2, 0, make_sample_point(Fraction(-3, 5), Fraction(7, 2))) == 0


def test_theorem_c_at_fixed_point(pt):
    assert lhs_sum("thm-c", 3, 1, pt) == rhs_closed_form("thm-c", 3, 1, pt)


def test_printed_examples(pt):
    q, a = pt.q, pt.a
    expected = (a * (1 - a / q) / (1 - a * q ** 5) * (1 - q) * (1 - q * q)
                / ((1 - q * a) * (1 - a / q)))
    assert example_rhs("thm-a", 1, 3, pt) == expected
    assert example_rhs("thm-d", 1, 0, Fraction(3, 11)) == 1
    # -2/(3b+2) at b = 1/7
    assert example_rhs("thm-h", 2, 1, Fraction(1, 7)) == Fraction(-14, 17)


def _cells(idn, n_max, ell_max):
    for n in range(n_max + 1):
        for ell in idn.ells(ell_max):
            yield n, ell


@pytest.mark.parametrize("identity_id", catalog_ids())
def test_identity_holds_on_small_grid(identity_id):
    idn = get(identity_id)
    for n, ell in _cells(idn, 7, 3):
        prng = Prng.fork(11, identity_id, n, ell)
        fn = lambda p: (lhs_sum(idn, n, ell, p), rhs_closed_form(idn, n, ell, p))  # noqa: E731
        for _, (lhs, rhs) in pole_free_values(fn, 3, prng, q_side=idn.is_q_side):
            assert lhs == rhs, (n, ell)


@pytest.mark.parametrize("theorem", THEOREMS)
def test_exponents_integral_on_support(theorem):
    # Degree surrogates never hit poles, so every branch of every i-sum runs;
    # a fractional exponent would raise NonintegralExponent here.
    idn = get(theorem)
    x = SamplePoint(DegreeBound.var(), DegreeBound.var()) if idn.is_q_side else DegreeBound.var()
    for n in range(25):
        for ell in range(7):
            rhs_closed_form(idn, n, ell, x)


@pytest.mark.parametrize("q_thm, cl_thm, n, ell, c_exp", [("thm-a", "thm-b", 4, 1, 1),
                                                          ("thm-a", "thm-b", 6, 2, 2),
                                                          ("thm-c", "thm-d", 4, 1, 2),
                                                          ("thm-c", "thm-d", 6, 2, 2)])
def test_q_to_one_trend(q_thm, cl_thm, n, ell, c_exp):
    # a -> q^(3 alpha) with 3 alpha = c_exp gives sqrt(a) = t^c_exp; the
    # q-side sum should approach the classical one at rate O(1 - t).
    target = lhs_sum(cl_thm, n, ell, Fraction(c_exp, 3))
    gaps = [abs(float(lhs_sum(q_thm, n, ell, SamplePoint(1 - eps, (1 - eps) ** c_exp)) - target))
            for eps in (Fraction(1, 10), Fraction(1, 100), Fraction(1, 1000))]
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 5e-3


def test_pole_errors_surface(pt):
    # sqrt(a) = 1 makes (sqrt(a); q)_1 vanish in the denominator
    with pytest.raises(PoleError):
        lhs_sum("eq-q-andrews", 2, 0, make_sample_point(Fraction(1, 2), 1))
