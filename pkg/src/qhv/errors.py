"""Exception hierarchy.

Pole errors are the only ones the verifier recovers from: it resamples the
evaluation point. Everything else is a genuine bug or a usage error.
"""

from __future__ import annotations


class QHVError(Exception):
    """Base class for all errors raised by qhv."""


class DegeneratePoint(QHVError, ValueError):
    """A sample point violates t not in {0, 1, -1} and c != 0."""


class ZeroToNegativePower(QHVError, ZeroDivisionError):
    pass


class NonintegralExponent(QHVError, ArithmeticError):
    """An exponent that must be integral on the chi-support is not."""


class SamplingExhausted(QHVError, RuntimeError):
    pass


class PoleError(QHVError, ArithmeticError):
    """Some denominator factor vanished during evaluation."""


class PoleInFactorial(PoleError):
    pass


class PoleInFraction(PoleError):
    def __init__(self, symbol, index):
        super().__init__(f"denominator symbol {symbol!r} vanishes at index {index}")
        self.symbol = symbol
        self.index = index


class PoleInSeries(PoleError):
    def __init__(self, k, symbol):
        super().__init__(f"denominator factor of {symbol!r} vanishes at term k={k}")
        self.k = k
        self.symbol = symbol


class PoleInClosedForm(PoleError):
    pass
