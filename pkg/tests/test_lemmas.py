import pytest
from hypothesis import assume, given, settings, strategies as st

from qhv.arith import A, mono, q_pow
from qhv.catalog import (phi65_pair, proof_unit_sum_a, proof_unit_sum_c, reversal_check,
                         reversed_point)
from qhv.catalog.lemmas import REVERSAL_PAIRS
from qhv.errors import PoleError
from qhv.series import incremental_term_ratio

from conftest import points

B = mono(t=3, c=-1, sign=-1)
C = mono(t=-1, c=3)


def test_phi65_trivial(pt):
    assert phi65_pair(A, B, C, 0, pt) == (1, 1)
    assert phi65_pair(A, B, None, 0, pt) == (1, 1)


def test_phi65_ell_one(pt):
    q, a = pt.q, pt.a
    b, c = -pt.t ** 3 / pt.c, pt.c ** 3 / pt.t
    expected = (1 - q * a) * (1 - q * a / (b * c)) / ((1 - q * a / b) * (1 - q * a / c))
    assert phi65_pair(A, B, C, 1, pt) == (expected, expected)


@settings(max_examples=40)
@given(st.integers(0, 5), points())
def test_phi65_random(ell, pt):
    try:
        lhs, rhs = phi65_pair(A, B, C, ell, pt)
    except PoleError:
        assume(False)
    assert lhs == rhs


@settings(max_examples=40)
@given(st.integers(0, 4), st.integers(0, 4), st.integers(0, 4), points())
def test_phi65_zero_c_limit(n, k, ell, pt):
    assume(k <= n)
    try:
        lhs, rhs = phi65_pair(mono(t=-4 * n, c=-2), q_pow(k - n), None, ell, pt)
    except PoleError:
        assume(False)
    assert lhs == rhs


@pytest.mark.parametrize("fn", [proof_unit_sum_a, proof_unit_sum_c])
def test_unit_sum_ell_zero(fn, pt):
    assert fn(5, 2, 0, pt) == 1


@pytest.mark.parametrize("fn, n, k, ell", [(proof_unit_sum_a, 4, 1, 2),
                                           (proof_unit_sum_a, 0, 0, 1),
                                           (proof_unit_sum_c, 3, 2, 2),
                                           (proof_unit_sum_c, 1, 0, 1)])
@settings(max_examples=20)
@given(pt=points())
def test_unit_sums(fn, n, k, ell, pt):
    try:
        v = fn(n, k, ell, pt)
    except (PoleError, ZeroDivisionError):
        assume(False)
    assert v == 1


@pytest.mark.parametrize("pair", list(REVERSAL_PAIRS))
@pytest.mark.parametrize("n, ell", [(0, 0), (0, 3), (3, 1), (5, 2)])
@settings(max_examples=10)
@given(pt=points())
def test_reversal(pair, n, ell, pt):
    try:
        ok = reversal_check(n, ell, pt, pair)
    except PoleError:
        assume(False)
    assert ok


def test_reversal_is_not_plain_equality(pt):
    # The reversed sum carries the last term of the original as a factor.
    first, second = REVERSAL_PAIRS[("thm-a", "thm-e")]
    terms = list(incremental_term_ratio(first(3, 1), reversed_point(3, pt)))
    assert terms[-1] != 1
    assert reversal_check(3, 1, pt)


def test_reversal_detects_wrong_sign_of_root(pt):
    # With sqrt(a) = -q^(1/2-n)/sqrt(b) the second pair no longer matches.
    first, second = REVERSAL_PAIRS[("thm-c", "thm-g")]
    n, ell = 4, 2
    flipped = type(pt)(pt.t, -reversed_point(n, pt).c)
    terms = list(incremental_term_ratio(first(n, ell), flipped))
    rev = list(incremental_term_ratio(second(n, ell), pt))
    assert any(terms[n - k] != terms[n] * rev[k] for k in range(n + 1))
