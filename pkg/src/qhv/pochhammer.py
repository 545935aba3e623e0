"""Shifted factorials and q-shifted factorials for every integer index."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .arith import Monomial, SamplePoint, monomial_eval, rat_pow
from .errors import PoleInFactorial, PoleInFraction


def shifted_factorial(x, n: int):
    """Rising factorial ``(x)_n``.

    For ``n < 0`` this is ``(-1)**n / prod_{k=1}^{-n} (k - x)``, which agrees
    with ``Gamma(x + n) / Gamma(x)`` wherever both sides are finite.
    """
    if n >= 0:
        r = Fraction(1)
        for k in range(n):
            r *= x + k
        return r
    d = Fraction(1)
    for k in range(1, -n + 1):
        f = k - x
        if f == 0:
            raise PoleInFactorial(f"({x})_{n}: factor {k} - x vanishes")
        d *= f
    return (-1) ** (-n) / d


def q_pochhammer(x, q, n: int):
    """q-shifted factorial ``(x; q)_n`` for any integer n."""
    r = Fraction(1)
    if n >= 0:
        for i in range(n):
            r *= 1 - x * rat_pow(q, i)
        return r
    for j in range(n, 0):
        f = 1 - x * rat_pow(q, j)
        if f == 0:
            raise PoleInFactorial(f"({x}; {q})_{n}: factor at q^{j} vanishes")
        r /= f
    return r


def shifted_factorials(xs: Sequence, n: int):
    r = Fraction(1)
    for x in xs:
        r *= shifted_factorial(x, n)
    return r


def q_pochhammers(xs: Sequence, q, n: int):
    r = Fraction(1)
    for x in xs:
        r *= q_pochhammer(x, q, n)
    return r


@dataclass(frozen=True)
class PochSpec:
    """The symbol ``(base; q**step)_n`` with a monomial base.

    Consecutive factors differ by ``t**(2*step)``.
    """

    base: Monomial
    step: int = 1

    def __post_init__(self):
        if self.step < 1:
            raise ValueError(f"step must be positive, got {self.step}")

    def __str__(self) -> str:
        return f"({self.base}; q^{self.step})"


@dataclass(frozen=True)
class FractionSpec:
    numerators: tuple[PochSpec, ...] = ()
    denominators: tuple[PochSpec, ...] = ()
    index: int = 0


def poch_eval(spec: PochSpec, n: int, pt: SamplePoint):
    x = monomial_eval(spec.base, pt)
    return q_pochhammer(x, rat_pow(pt.t, 2 * spec.step), n)


def fraction_eval(spec: FractionSpec, pt: SamplePoint):
    """Product of numerator symbols over product of denominator symbols.

    Raises PoleInFraction naming the first denominator symbol that vanishes.
    """
    if spec.index == 0:
        return Fraction(1)
    r = Fraction(1)
    for s in spec.numerators:
        r *= poch_eval(s, spec.index, pt)
    for s in spec.denominators:
        try:
            v = poch_eval(s, spec.index, pt)
        except PoleInFactorial as exc:
            raise PoleInFraction(s, spec.index) from exc
        if v == 0:
            raise PoleInFraction(s, spec.index)
        r /= v
    return r
