"""Exact scalars, signed monomials in (t, c), and sample points.

All radicals are removed by the substitution q = t**2, a = c**2 (b = c**2 on
the reversal side), so every parameter is a signed power product
``sign * t**t_exp * c**c_exp`` with integer exponents.  The substitution is
fixed: sqrt(a) means ``c`` itself, not ``abs(c)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DegeneratePoint, ZeroToNegativePower

Rat = Fraction


def as_rat(x) -> Fraction:
    """Coerce ints, Fractions and ``"num/den"`` strings to a Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def rat_pow(x, e: int):
    """Exact integer power ``x**e``; refuses ``0**negative``."""
    if e < 0 and x == 0:
        raise ZeroToNegativePower(f"0 ** {e}")
    if e == 0:
        return Fraction(1)
    if isinstance(x, int):
        x = Fraction(x)
    return x ** e


def rat_str(x: Fraction) -> str:
    x = as_rat(x)
    return f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True, order=True)
class Monomial:
    """The nonzero value ``sign * t**t_exp * c**c_exp``."""

    sign: int = 1
    t_exp: int = 0
    c_exp: int = 0

    def __post_init__(self):
        if self.sign not in (1, -1):
            raise ValueError(f"sign must be +1 or -1, got {self.sign}")

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self.sign * other.sign, self.t_exp + other.t_exp,
                        self.c_exp + other.c_exp)

    def __truediv__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        return self * other.inverse()

    def __neg__(self) -> Monomial:
        return Monomial(-self.sign, self.t_exp, self.c_exp)

    def __pow__(self, e: int) -> Monomial:
        return Monomial(self.sign ** (e % 2), self.t_exp * e, self.c_exp * e)

    def inverse(self) -> Monomial:
        return Monomial(self.sign, -self.t_exp, -self.c_exp)

    def sqrt(self) -> Monomial:
        """Positive-sign square root; exponents must be even."""
        if self.sign != 1 or self.t_exp % 2 or self.c_exp % 2:
            raise ValueError(f"{self} has no monomial square root")
        return Monomial(1, self.t_exp // 2, self.c_exp // 2)

    def __str__(self) -> str:
        s = "-" if self.sign < 0 else ""
        return f"{s}t^{self.t_exp}c^{self.c_exp}"


def mono(t: int = 0, c: int = 0, sign: int = 1) -> Monomial:
    return Monomial(sign, t, c)


def q_pow(e: int) -> Monomial:
    """q**e, i.e. t**(2e)."""
    return Monomial(1, 2 * e, 0)


ONE = Monomial()
Q = q_pow(1)
A = mono(c=2)
SQRT_A = mono(c=1)
SQRT_Q = mono(t=1)


@dataclass(frozen=True)
class SamplePoint:
    t: Fraction
    c: Fraction

    @property
    def q(self):
        return self.t * self.t

    @property
    def a(self):
        return self.c * self.c

    b = a

    def __str__(self) -> str:
        return f"(t={self.t}, c={self.c})"


def make_sample_point(t, c) -> SamplePoint:
    """Validate and build a point; raises DegeneratePoint on t in {0, +-1} or c = 0."""
    if not isinstance(t, DegreeBound):
        t = as_rat(t)
        if t in (0, 1, -1):
            raise DegeneratePoint(f"t={t} is excluded (q would be 0 or 1)")
    if not isinstance(c, DegreeBound):
        c = as_rat(c)
        if c == 0:
            raise DegeneratePoint("c=0 is excluded")
    return SamplePoint(t, c)


def monomial_eval(m: Monomial, pt: SamplePoint):
    return m.sign * rat_pow(pt.t, m.t_exp) * rat_pow(pt.c, m.c_exp)


class DegreeBound:
    """Surrogate scalar tracking degree bounds of a rational function.

    Feeding ``DegreeBound.var()`` through an evaluator in place of t and c
    yields upper bounds on the total degree of a numerator and denominator
    representing the computed value.  No cancellation is ever assumed, so
    the bounds are crude but sound.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int = 0, den: int = 0):
        self.num = num
        self.den = den

    @classmethod
    def var(cls) -> DegreeBound:
        return cls(1, 0)

    @staticmethod
    def _lift(x) -> DegreeBound:
        if isinstance(x, DegreeBound):
            return x
        if isinstance(x, (int, Fraction)):
            return DegreeBound(0, 0)
        raise TypeError(f"cannot lift {type(x).__name__} to DegreeBound")

    def __add__(self, other):
        o = self._lift(other)
        return DegreeBound(max(self.num + o.den, o.num + self.den), self.den + o.den)

    __radd__ = __add__
    __sub__ = __add__
    __rsub__ = __add__

    def __mul__(self, other):
        o = self._lift(other)
        return DegreeBound(self.num + o.num, self.den + o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        return DegreeBound(self.num + o.den, self.den + o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __neg__(self):
        return self

    def __pos__(self):
        return self

    def __pow__(self, e: int):
        if e >= 0:
            return DegreeBound(self.num * e, self.den * e)
        return DegreeBound(self.den * -e, self.num * -e)

    def __eq__(self, other):
        # A symbolic value never compares equal to a concrete number, so
        # pole checks in the evaluators pass straight through.
        if isinstance(other, DegreeBound):
            return self.num == other.num and self.den == other.den
        return False

    def __ne__(self, other):
        return not self.__eq__(other)

    __hash__ = None

    @property
    def total(self) -> int:
        return max(self.num, self.den)

    def __repr__(self) -> str:
        return f"DegreeBound(num={self.num}, den={self.den})"
