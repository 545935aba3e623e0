"""The 6phi5 building block and the lemmas used to rearrange series.

``phi65_pair`` evaluates both sides of the terminating very-well-poised
6phi5 summation.  ``proof_unit_sum_a`` and ``proof_unit_sum_c`` are two
specialisations of it, written out the way they are inserted into the
Andrews-type sums: each equals 1 identically.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Optional

from ..arith import Q, Monomial, SamplePoint, mono, monomial_eval, q_pow
from ..pochhammer import q_pochhammer as qp, q_pochhammers as qps
from ..series import QSeriesSpec, incremental_term_ratio, sum_q_series, symbols
from . import qside
from .base import Q_SIDE, IdentityDescriptor


def phi65_spec(a_base: Monomial, b_base: Monomial, c_base: Optional[Monomial],
               ell: int) -> QSeriesSpec:
    """Left side as a QSeriesSpec; ``c_base=None`` is the c -> 0 limit.

    In that limit ``(c;q)_k z**k / (qa/c;q)_k`` tends to
    ``(-q**ell / b)**k * q**(-k(k-1)/2)``.
    """
    root = a_base.sqrt()
    qa = Q * a_base
    num = [a_base, Q * root, -(Q * root), b_base, q_pow(-ell)]
    den = [Q, root, -root, qa / b_base, q_pow(1 + ell) * a_base]
    if c_base is None:
        arg = -(q_pow(ell) / b_base)
        return QSeriesSpec(symbols(num), symbols(den), argument=arg, upper=ell,
                           quadratic=-1)
    num.append(c_base)
    den.append(qa / c_base)
    arg = q_pow(1 + ell) * a_base / (b_base * c_base)
    return QSeriesSpec(symbols(num), symbols(den), argument=arg, upper=ell)


def phi65_rhs(a_base, b_base, c_base, ell, pt):
    a = monomial_eval(a_base, pt)
    b = monomial_eval(b_base, pt)
    q = pt.q
    if c_base is None:
        return qp(q * a, q, ell) / qp(q * a / b, q, ell) / b ** ell
    c = monomial_eval(c_base, pt)
    return qps([q * a, q * a / (b * c)], q, ell) / qps([q * a / b, q * a / c], q, ell)


def phi65_pair(a_base: Monomial, b_base: Monomial, c_base: Optional[Monomial],
               ell: int, pt: SamplePoint):
    """Return ``(lhs, rhs)`` of the terminating 6phi5 sum at ``pt``."""
    lhs = sum_q_series(phi65_spec(a_base, b_base, c_base, ell), pt)
    return lhs, phi65_rhs(a_base, b_base, c_base, ell, pt)


# Two-variable embedding of the three free parameters for grid runs.
PHI65_A = mono(c=2)
PHI65_B = mono(t=3, c=-1, sign=-1)
PHI65_C = mono(t=-1, c=3)

PHI65_DESCRIPTOR = IdentityDescriptor(
    "eq-phi65", Q_SIDE, False,
    lambda n, ell, pt: phi65_spec(PHI65_A, PHI65_B, PHI65_C, n),
    lambda n, ell, pt: phi65_rhs(PHI65_A, PHI65_B, PHI65_C, n, pt),
)


def proof_unit_sum_a(n: int, k: int, ell: int, pt: SamplePoint):
    """The 6phi5 sum at a -> q^-2n/a, b -> q^(k-n), c -> 0, normalised to 1."""
    q, a = pt.q, pt.a
    total = Fraction(0)
    for i in range(ell + 1):
        total += (a ** i * q ** ((ell + 2 * n - i) * i)
                  * (a - q ** (2 * i - 2 * n)) / (a - q ** (-2 * n))
                  * qps([q ** -ell, q ** (k - n), q ** (-2 * n) / a], q, i)
                  / qps([q, q ** (1 + ell - 2 * n) / a, q ** (n + k - i) * a], q, i))
    return qp(q ** (n - ell + k) * a, q, ell) / qp(q ** (2 * n - ell) * a, q, ell) * total


def proof_unit_sum_c(n: int, k: int, ell: int, pt: SamplePoint):
    """The 6phi5 sum at a -> q^-2n/a, b -> q^(k-n), c -> q^(1/2-n)/sqrt(a)."""
    t, c = pt.t, pt.c
    q, a = pt.q, pt.a
    total = Fraction(0)
    for i in range(ell + 1):
        total += (t ** ((5 + 2 * ell) * i) / c ** i
                  * (1 - q ** (2 * n - 2 * i) * a) / (1 - q ** (2 * n) * a)
                  * qps([q ** -ell, q ** (k - n), q ** (-2 * n) / a], q, i)
                  / qps([q, q ** (1 + ell - 2 * n) / a, q ** (1 - n) / a], q, i)
                  * qp(q ** (n - ell + k) * a, q, ell - i) / qp(q ** (n - ell) * a, q, ell - i))
    pre = (qps([q ** (n - ell) * a, t ** (1 + 2 * n - 2 * ell) * c], q, ell)
           / qps([q ** (2 * n - ell) * a, t ** (1 + 2 * k - 2 * ell) * c], q, ell))
    return pre * total


REVERSAL_PAIRS = {
    ("thm-a", "thm-e"): (lambda n, ell: qside.andrews_lhs(n, ell),
                         lambda n, ell: qside.reversal_lhs(n, ell)),
    ("thm-c", "thm-g"): (lambda n, ell: qside.andrews_lhs(n, ell, shifted_root=True),
                         lambda n, ell: qside.reversal_lhs(n, ell, lifted_root=True)),
}


def reversed_point(n: int, pt: SamplePoint) -> SamplePoint:
    """The point with sqrt(a) = q^(1/2-n)/sqrt(b), i.e. a = q^(1-2n)/b."""
    return SamplePoint(pt.t, monomial_eval(mono(t=1 - 2 * n, c=-1), pt))


def reversal_check(n: int, ell: int, pt: SamplePoint, pair=("thm-a", "thm-e")) -> bool:
    """Check that k -> n-k maps the first sum onto the second.

    With ``T_k`` the terms of the first sum at a = q^(1-2n)/b and ``U_k``
    those of the second at b, the reversal says ``T_(n-k) = T_n * U_k`` for
    every k; summing gives ``lhs_first = T_n * lhs_second``.
    """
    first, second = REVERSAL_PAIRS[tuple(pair)]
    terms = list(incremental_term_ratio(first(n, ell), reversed_point(n, pt)))
    rev = list(incremental_term_ratio(second(n, ell), pt))
    lead = terms[n]
    if any(terms[n - k] != lead * rev[k] for k in range(n + 1)):
        return False
    return sum(terms) == lead * sum(rev)
