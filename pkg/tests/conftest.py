from fractions import Fraction

import pytest
from hypothesis import strategies as st

from qhv.arith import Monomial, SamplePoint, make_sample_point


def small_rationals(bound=9, nonzero=False):
    s = st.builds(Fraction, st.integers(-bound, bound), st.integers(1, bound))
    if nonzero:
        s = s.filter(lambda x: x != 0)
    return s


def points(bound=9):
    return st.builds(
        SamplePoint,
        small_rationals(bound).filter(lambda x: x not in (0, 1, -1)),
        small_rationals(bound, nonzero=True),
    )


def monomials(exp=4):
    return st.builds(Monomial, st.sampled_from([1, -1]), st.integers(-exp, exp),
                     st.integers(-exp, exp))


@pytest.fixture
def pt():
    return make_sample_point(Fraction(1, 2), Fraction(1, 3))
