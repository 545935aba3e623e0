"""Descriptor type and helpers shared by the catalog modules."""

from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Any, Callable, Optional

from ..errors import NonintegralExponent

Q_SIDE = "q-side"
CLASSICAL = "classical"


def chi(n: int) -> int:
    """1 when n is a nonnegative multiple of 3, else 0."""
    return 1 if n >= 0 and n % 3 == 0 else 0


def exact_div(x: int, d: int) -> int:
    q, r = divmod(x, d)
    if r:
        raise NonintegralExponent(f"{x}/{d} is not an integer")
    return q


@dataclass(frozen=True)
class IdentityDescriptor:
    """One identity: how to build its left-hand sum and evaluate its closed form.

    ``lhs_builder(n, ell, point)`` returns a QSeriesSpec (q-side, point is a
    SamplePoint) or a ClassicalSeriesSpec (classical, point is a rational).
    ``rhs(n, ell, point)`` returns the exact closed-form value.  Examples
    carry their fixed ell in ``fixed_ell`` and ignore the ell argument.
    """

    id: str
    family: str
    takes_ell: bool
    lhs_builder: Callable[[int, int, Any], Any]
    rhs: Callable[[int, int, Any], Any]
    base: Optional[str] = None
    theorem: Optional[str] = None
    fixed_ell: Optional[int] = None
    parameter: str = "a"

    @property
    def is_q_side(self) -> bool:
        return self.family == Q_SIDE

    def ells(self, ell_max: int) -> range:
        if self.fixed_ell is not None:
            return range(self.fixed_ell, self.fixed_ell + 1)
        if not self.takes_ell:
            return range(0, 1)
        return range(0, ell_max + 1)

    def effective_ell(self, ell: int) -> int:
        if self.fixed_ell is not None:
            return self.fixed_ell
        return ell if self.takes_ell else 0

    def with_rhs(self, rhs: Callable[[int, int, Any], Any]) -> IdentityDescriptor:
        return replace(self, rhs=rhs)
