"""q-side identities in the (t, c) representation.

Throughout, ``q = t**2`` and ``a = c**2`` (``b = c**2`` for the reversed
family), with ``sqrt(a) = c`` and ``sqrt(q) = t``.  Fractional powers such
as ``a**((n + 2i)/3)`` are only formed on the support of ``chi(n - i)``,
where they become integer powers of c.
"""

from __future__ import annotations

from fractions import Fraction

from ..arith import Q, SQRT_A, SamplePoint, mono, q_pow
from ..pochhammer import PochSpec, q_pochhammer as qp, q_pochhammers as qps
from ..series import QSeriesSpec, symbols
from .base import Q_SIDE, IdentityDescriptor, chi, exact_div

A3 = PochSpec(mono(c=2), 3)


def _andrews_factor(q, a, m):
    return qps([q, q * q], q ** 3, m) / qps([q * a, q * q * a], q ** 3, m)


def _reversal_factor(q, b, n, m):
    return (qps([q, q * q], q ** 3, m)
            / qps([q ** (2 - 2 * n) / b, q ** (3 - 2 * n) / b], q ** 3, m))


# -- left-hand sums ---------------------------------------------------------

def andrews_lhs(n: int, ell: int, pt=None, *, shifted_root: bool = False) -> QSeriesSpec:
    """sum_k (a;q^3)_k (q^-n, q^(n-ell) a; q)_k / (q, +-sqrt(a), +-sqrt(qa); q)_k q^k.

    With ``shifted_root`` the ``+sqrt(qa)`` symbol becomes
    ``sqrt(q^(1-2 ell) a)``, giving the left side of the second
    generalisation (``thm-c``).
    """
    root = mono(t=1 - 2 * ell, c=1) if shifted_root else mono(t=1, c=1)
    num = (A3,) + symbols([q_pow(-n), mono(t=2 * (n - ell), c=2)])
    den = symbols([Q, SQRT_A, -SQRT_A, root, -mono(t=1, c=1)])
    return QSeriesSpec(num, den, argument=Q, upper=n)


def reversal_lhs(n: int, ell: int, pt=None, *, lifted_root: bool = False) -> QSeriesSpec:
    """sum_k (q^-n, +-sqrt(b), +-sqrt(qb); q)_k / ((q, q^ell b; q)_k (q^(2-n) b; q^3)_k) q^((1+ell)k).

    With ``lifted_root`` the first ``sqrt(b)`` becomes ``q^ell sqrt(b)`` and
    the power is plain ``q^k`` (``thm-g``).
    """
    first = mono(t=2 * ell, c=1) if lifted_root else SQRT_A
    num = symbols([q_pow(-n), first, -SQRT_A, mono(t=1, c=1), -mono(t=1, c=1)])
    den = symbols([Q, mono(t=2 * ell, c=2)]) + (PochSpec(mono(t=2 * (2 - n), c=2), 3),)
    extra = 0 if lifted_root else 2 * ell
    return QSeriesSpec(num, den, argument=Q, extra_q_power=extra, upper=n)


# -- closed forms -----------------------------------------------------------

def q_andrews_rhs(n: int, ell: int, pt: SamplePoint):
    if not chi(n):
        return Fraction(0)
    q, a, m = pt.q, pt.a, n // 3
    return a ** m * _andrews_factor(q, a, m)


def q_andrews_rev_rhs(n: int, ell: int, pt: SamplePoint):
    if not chi(n):
        return Fraction(0)
    q, b, m = pt.q, pt.b, n // 3
    return qps([q, q * q], q ** 3, m) / qps([q / b, q * q * b], q ** 3, m)


def thm_a_rhs(n: int, ell: int, pt: SamplePoint):
    q, a = pt.q, pt.a
    total = Fraction(0)
    for i in range(ell + 1):
        if not chi(n - i):
            continue
        a_exp = exact_div(n + 2 * i, 3)
        total += (a ** a_exp * q ** ((ell + 2 * n - i) * i)
                  * (a - q ** (2 * i - 2 * n)) / (a - q ** (-2 * n))
                  * qps([q ** -ell, q ** -n, q ** (-2 * n) / a], q, i)
                  / qps([q, q ** (1 + ell - 2 * n) / a, q ** (n - i) * a], q, i)
                  * _andrews_factor(q, a, (n - i) // 3))
    return qp(q ** (n - ell) * a, q, ell) / qp(q ** (2 * n - ell) * a, q, ell) * total


def thm_c_rhs(n: int, ell: int, pt: SamplePoint):
    t, c = pt.t, pt.c
    q, a = pt.q, pt.a
    total = Fraction(0)
    for i in range(ell + 1):
        if not chi(n - i):
            continue
        # a^((2n-5i)/6) = c^((2n-5i)/3); q^((5/2+ell) i) = t^((5+2ell) i)
        c_exp = exact_div(2 * n - 5 * i, 3)
        total += (c ** c_exp * t ** ((5 + 2 * ell) * i)
                  * (1 - q ** (2 * n - 2 * i) * a) / (1 - q ** (2 * n) * a)
                  * qps([q ** -ell, q ** -n, q ** (-2 * n) / a], q, i)
                  / qps([q, q ** (1 + ell - 2 * n) / a, q ** (1 - n) / a], q, i)
                  * _andrews_factor(q, a, (n - i) // 3))
    pre = (qps([q ** (n - ell) * a, t ** (1 + 2 * n - 2 * ell) * c], q, ell)
           / qps([q ** (2 * n - ell) * a, t ** (1 - 2 * ell) * c], q, ell))
    return pre * total


def _reversal_prefactor(q, b, n):
    x = q ** (1 - 2 * n) / b
    return qp(x, q, n) / qp(x, q ** 3, n)


def thm_e_rhs(n: int, ell: int, pt: SamplePoint):
    t, c = pt.t, pt.c
    q, b = pt.q, pt.b
    total = Fraction(0)
    for i in range(ell + 1):
        if not chi(n - i):
            continue
        # q^{((4+4n+6ell-6i)i - n - n^2)/6} = t^{(...)/3}
        t_exp = exact_div((4 + 4 * n + 6 * ell - 6 * i) * i - n - n * n, 3)
        c_exp = 2 * exact_div(n + 2 * i, 3)
        total += ((-1) ** n * t ** t_exp / c ** c_exp
                  * (q - q ** (2 * i) * b) / (q - b)
                  * qps([q ** -ell, q ** -n, b / q], q, i)
                  / qps([q, q ** ell * b, q ** (1 - n - i) / b], q, i)
                  * _reversal_factor(q, b, n, (n - i) // 3))
    return _reversal_prefactor(q, b, n) * total


def thm_g_rhs(n: int, ell: int, pt: SamplePoint):
    t, c = pt.t, pt.c
    q, b = pt.q, pt.b
    total = Fraction(0)
    for i in range(ell + 1):
        if not chi(n - i):
            continue
        t_exp = exact_div((10 * n + 6 * ell - 2) * i - n - n * n, 3)
        # b^((2n-5i)/6) = c^((2n-5i)/3)
        c_exp = exact_div(2 * n - 5 * i, 3)
        total += ((-1) ** n * t ** t_exp / c ** c_exp
                  * (q - q ** (2 * i) * b) / (q - b)
                  * qps([q ** -ell, q ** -n, b / q], q, i)
                  / qps([q, q ** ell * b, q ** n * b], q, i)
                  * _reversal_factor(q, b, n, (n - i) // 3))
    return _reversal_prefactor(q, b, n) * total


DESCRIPTORS = (
    IdentityDescriptor("eq-q-andrews", Q_SIDE, False,
                       lambda n, ell, pt: andrews_lhs(n, 0), q_andrews_rhs),
    IdentityDescriptor("eq-q-andrews-rev", Q_SIDE, False,
                       lambda n, ell, pt: reversal_lhs(n, 0), q_andrews_rev_rhs,
                       parameter="b"),
    IdentityDescriptor("thm-a", Q_SIDE, True, andrews_lhs, thm_a_rhs,
                       base="eq-q-andrews"),
    IdentityDescriptor("thm-c", Q_SIDE, True,
                       lambda n, ell, pt: andrews_lhs(n, ell, shifted_root=True),
                       thm_c_rhs, base="eq-q-andrews"),
    IdentityDescriptor("thm-e", Q_SIDE, True, reversal_lhs, thm_e_rhs,
                       base="eq-q-andrews-rev", parameter="b"),
    IdentityDescriptor("thm-g", Q_SIDE, True,
                       lambda n, ell, pt: reversal_lhs(n, ell, lifted_root=True),
                       thm_g_rhs, base="eq-q-andrews-rev", parameter="b"),
)
