"""Terminating q-series and hypergeometric sums.

Two evaluators exist for q-series. ``naive_terms`` recomputes every symbol
from scratch for each k and is the oracle; ``incremental_term_ratio`` builds
term k from term k-1 with one new factor per symbol and is what
``sum_q_series`` uses.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .arith import ONE, Monomial, SamplePoint, monomial_eval, rat_pow
from .errors import PoleError, PoleInSeries
from .pochhammer import FractionSpec, PochSpec, fraction_eval, shifted_factorial


@dataclass(frozen=True)
class QSeriesSpec:
    """A finite sum over k = 0..upper.

    Term k is ``prod (num; q^s)_k / prod (den; q^s)_k * argument**k
    * t**(extra_q_power*k) * t**(quadratic*k*(k-1))``.  The ``(q; q)_k``
    symbol is not implicit; builders list it among the denominators.
    ``quadratic`` carries the Gaussian factor ``q**(-k(k-1)/2)`` left over
    when a parameter of a very-well-poised series is sent to 0.
    """

    numerators: tuple[PochSpec, ...]
    denominators: tuple[PochSpec, ...]
    argument: Monomial = ONE
    extra_q_power: int = 0
    upper: int = 0
    quadratic: int = 0

    def with_upper(self, upper: int) -> QSeriesSpec:
        return QSeriesSpec(self.numerators, self.denominators, self.argument,
                           self.extra_q_power, upper, self.quadratic)


@dataclass(frozen=True)
class ClassicalSeriesSpec:
    """Terminating ``F`` series: term k is ``prod (num)_k / (k! prod (den)_k) z**k``."""

    numerators: tuple
    denominators: tuple
    argument: Fraction
    upper: int


def _power_factor(spec: QSeriesSpec, k: int, pt: SamplePoint):
    return (rat_pow(monomial_eval(spec.argument, pt), k)
            * rat_pow(pt.t, spec.extra_q_power * k + spec.quadratic * k * (k - 1)))


def naive_terms(spec: QSeriesSpec, pt: SamplePoint) -> list:
    """Every term evaluated independently from full Pochhammer products."""
    terms = []
    for k in range(spec.upper + 1):
        frac = FractionSpec(spec.numerators, spec.denominators, k)
        try:
            v = fraction_eval(frac, pt)
        except PoleError as exc:
            raise PoleInSeries(k, getattr(exc, "symbol", None)) from exc
        terms.append(v * _power_factor(spec, k, pt))
    return terms


def sum_q_series_naive(spec: QSeriesSpec, pt: SamplePoint):
    return sum(naive_terms(spec, pt), Fraction(0))


def incremental_term_ratio(spec: QSeriesSpec, pt: SamplePoint) -> Iterator:
    """Yield terms 0..upper, each from its predecessor by a single ratio."""
    num = [(monomial_eval(s.base, pt), rat_pow(pt.t, 2 * s.step)) for s in spec.numerators]
    den = [(monomial_eval(s.base, pt), rat_pow(pt.t, 2 * s.step)) for s in spec.denominators]
    # running powers x*q^(s*(k-1)) for each symbol
    num_cur = [x for x, _ in num]
    den_cur = [x for x, _ in den]
    z = monomial_eval(spec.argument, pt) * rat_pow(pt.t, spec.extra_q_power)
    gauss = rat_pow(pt.t, 2 * spec.quadratic)
    gauss_cur = Fraction(1)
    term = Fraction(1)
    yield term
    for k in range(1, spec.upper + 1):
        ratio = z * gauss_cur
        for i, (_, step) in enumerate(num):
            ratio *= 1 - num_cur[i]
            num_cur[i] *= step
        for i, (_, step) in enumerate(den):
            f = 1 - den_cur[i]
            if f == 0:
                raise PoleInSeries(k, spec.denominators[i])
            ratio /= f
            den_cur[i] *= step
        gauss_cur *= gauss
        term *= ratio
        yield term


def sum_q_series(spec: QSeriesSpec, pt: SamplePoint):
    """Exact value of a terminating q-series at ``pt``."""
    return sum(incremental_term_ratio(spec, pt), Fraction(0))


def classical_terms(spec: ClassicalSeriesSpec) -> Iterator:
    term = Fraction(1)
    yield term
    for k in range(1, spec.upper + 1):
        ratio = spec.argument / k
        for x in spec.numerators:
            ratio *= x + (k - 1)
        for x in spec.denominators:
            f = x + (k - 1)
            if f == 0:
                raise PoleInSeries(k, f"({x})_k")
            ratio /= f
        term *= ratio
        yield term


def sum_classical_series(spec: ClassicalSeriesSpec):
    return sum(classical_terms(spec), Fraction(0))


def sum_classical_series_naive(spec: ClassicalSeriesSpec):
    """Oracle evaluator recomputing each shifted factorial from scratch."""
    total = Fraction(0)
    for k in range(spec.upper + 1):
        d = shifted_factorial(1, k)
        for x in spec.denominators:
            v = shifted_factorial(x, k)
            if v == 0:
                raise PoleInSeries(k, f"({x})_k")
            d *= v
        n = Fraction(1)
        for x in spec.numerators:
            n *= shifted_factorial(x, k)
        total += n / d * rat_pow(spec.argument, k)
    return total


def symbols(bases: Sequence[Monomial], step: int = 1) -> tuple[PochSpec, ...]:
    return tuple(PochSpec(b, step) for b in bases)
