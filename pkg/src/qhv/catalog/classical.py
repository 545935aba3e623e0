"""Classical (q -> 1) identities, checked directly over rational parameters.

``thm-b`` and ``thm-d`` have the free parameter a; the reversed family
(``eq-andrews-rev``, ``thm-f``, ``thm-h``) has b.
"""

from __future__ import annotations

from fractions import Fraction

from ..pochhammer import shifted_factorial as sf, shifted_factorials as sfs
from ..series import ClassicalSeriesSpec
from .base import CLASSICAL, IdentityDescriptor, chi

THIRD = Fraction(1, 3)
TWO_THIRDS = Fraction(2, 3)
THREE_QUARTERS = Fraction(3, 4)
FOUR_THIRDS = Fraction(4, 3)


def _param(x):
    return Fraction(x) if isinstance(x, (int, str)) else x


def andrews_factor(a, m):
    return sfs([THIRD, TWO_THIRDS], m) / sfs([THIRD + a, TWO_THIRDS + a], m)


def andrews_lhs(n: int, ell: int, a, *, lowered: bool = False) -> ClassicalSeriesSpec:
    """3F2(-n, a, 3a+n-ell; 3a/2, (1+3a)/2 [- ell]; 3/4)."""
    a = _param(a)
    second = (1 + 3 * a) / 2 - (ell if lowered else 0)
    return ClassicalSeriesSpec((-n, a, 3 * a + n - ell), (3 * a / 2, second),
                               THREE_QUARTERS, n)


def reversal_lhs(n: int, ell: int, b, *, raised: bool = False) -> ClassicalSeriesSpec:
    """3F2(-n, 3b/2 [+ ell], (1+3b)/2; 3b+ell, b-(n-2)/3; 4/3)."""
    b = _param(b)
    first = 3 * b / 2 + (ell if raised else 0)
    return ClassicalSeriesSpec((-n, first, (1 + 3 * b) / 2),
                               (3 * b + ell, b - Fraction(n - 2, 3)),
                               FOUR_THIRDS, n)


def andrews_rhs(n: int, ell: int, a):
    if not chi(n):
        return Fraction(0)
    return andrews_factor(a, n // 3)


def andrews_rev_rhs(n: int, ell: int, b):
    if not chi(n):
        return Fraction(0)
    m = n // 3
    return sfs([THIRD, TWO_THIRDS], m) / sfs([THIRD - b, TWO_THIRDS + b], m)


def _andrews_ext(n, ell, a, lowered):
    total = Fraction(0)
    for i in range(ell + 1):
        if not chi(n - i):
            continue
        sign = 1 if lowered else (-1) ** i
        total += (sign * (3 * a + 2 * n - 2 * i) / (3 * a + 2 * n)
                  * sfs([-ell, -n, -2 * n - 3 * a], i)
                  / sfs([1, 1 - n - 3 * a, 1 + ell - 2 * n - 3 * a], i)
                  * andrews_factor(a, (n - i) // 3))
    if lowered:
        pre = (sfs([1 - 3 * a - n, (1 - 3 * a) / 2 - n], ell)
               / sfs([1 - 3 * a - 2 * n, (1 - 3 * a) / 2], ell))
    else:
        pre = sf(1 - n - 3 * a, ell) / sf(1 - 2 * n - 3 * a, ell)
    return pre * total


def thm_b_rhs(n: int, ell: int, a):
    return _andrews_ext(n, ell, a, lowered=False)


def thm_d_rhs(n: int, ell: int, a):
    return _andrews_ext(n, ell, a, lowered=True)


def _reversal_ext(n, ell, b, raised):
    total = Fraction(0)
    for i in range(ell + 1):
        if not chi(n - i):
            continue
        m = (n - i) // 3
        sign = 1 if raised else (-1) ** i
        total += (sign * (3 * b - 1 + 2 * i) / (3 * b - 1)
                  * sfs([-ell, -n, 3 * b - 1], i) / sfs([1, 3 * b + n, 3 * b + ell], i)
                  * sfs([THIRD, TWO_THIRDS], m)
                  / sfs([(2 - 2 * n - 3 * b) / 3, (3 - 2 * n - 3 * b) / 3], m))
    # 1/3^n is a constant factor, so where it sits relative to the i-sum
    # has no effect on the value.
    pre = sf(3 * b + n, n) / sf(Fraction(1 - 2 * n, 3) - b, n) / Fraction(3) ** n
    return pre * total


def thm_f_rhs(n: int, ell: int, b):
    return _reversal_ext(n, ell, b, raised=False)


def thm_h_rhs(n: int, ell: int, b):
    return _reversal_ext(n, ell, b, raised=True)


DESCRIPTORS = (
    IdentityDescriptor("eq-andrews", CLASSICAL, False,
                       lambda n, ell, a: andrews_lhs(n, 0, a), andrews_rhs),
    IdentityDescriptor("eq-andrews-rev", CLASSICAL, False,
                       lambda n, ell, b: reversal_lhs(n, 0, b), andrews_rev_rhs,
                       parameter="b"),
    IdentityDescriptor("thm-b", CLASSICAL, True, andrews_lhs, thm_b_rhs,
                       base="eq-andrews"),
    IdentityDescriptor("thm-d", CLASSICAL, True,
                       lambda n, ell, a: andrews_lhs(n, ell, a, lowered=True),
                       thm_d_rhs, base="eq-andrews"),
    IdentityDescriptor("thm-f", CLASSICAL, True, reversal_lhs, thm_f_rhs,
                       base="eq-andrews-rev", parameter="b"),
    IdentityDescriptor("thm-h", CLASSICAL, True,
                       lambda n, ell, b: reversal_lhs(n, ell, b, raised=True),
                       thm_h_rhs, base="eq-andrews-rev", parameter="b"),
)
