"""The catalog of identities: 5 base equations, 8 theorems, 16 examples."""

from __future__ import annotations

from typing import Any

from ..errors import PoleInClosedForm, PoleInSeries
from ..series import QSeriesSpec, sum_classical_series, sum_q_series
from . import classical, qside
from .base import CLASSICAL, Q_SIDE, IdentityDescriptor, chi
from .lemmas import (PHI65_DESCRIPTOR, phi65_pair, phi65_spec, proof_unit_sum_a,
                     proof_unit_sum_c, reversal_check, reversed_point)
from .printed import PRINTED

THEOREMS = ("thm-a", "thm-b", "thm-c", "thm-d", "thm-e", "thm-f", "thm-g", "thm-h")


def example_rhs(thm_id: str, ell: int, n: int, point):
    """Printed closed form of the ell = 1 or 2 example of ``thm_id``."""
    try:
        fn = PRINTED[(thm_id, ell)]
    except KeyError:
        raise KeyError(f"no printed example for {thm_id} with ell={ell}") from None
    try:
        return fn(n, point)
    except ZeroDivisionError as exc:
        raise PoleInClosedForm(f"{thm_id} example ell={ell}, n={n}: {exc}") from exc


def example_id(thm_id: str, ell: int) -> str:
    return f"ex-{thm_id}-l{ell}"


def _example_descriptor(theorem: IdentityDescriptor, ell: int) -> IdentityDescriptor:
    return IdentityDescriptor(
        example_id(theorem.id, ell), theorem.family, False,
        lambda n, _ell, p: theorem.lhs_builder(n, ell, p),
        lambda n, _ell, p: example_rhs(theorem.id, ell, n, p),
        theorem=theorem.id, fixed_ell=ell, parameter=theorem.parameter,
    )


def _build():
    by_id = {d.id: d for d in qside.DESCRIPTORS + classical.DESCRIPTORS}
    by_id[PHI65_DESCRIPTOR.id] = PHI65_DESCRIPTOR
    base_order = ("eq-andrews", "eq-andrews-rev", "eq-phi65", "eq-q-andrews",
                  "eq-q-andrews-rev")
    out = [by_id[i] for i in base_order] + [by_id[i] for i in THEOREMS]
    out += [_example_descriptor(by_id[t], ell) for t in THEOREMS for ell in (1, 2)]
    return tuple(out)


_CATALOG = _build()
_BY_ID = {d.id: d for d in _CATALOG}


def catalog_list() -> list[IdentityDescriptor]:
    return list(_CATALOG)


def catalog_ids() -> list[str]:
    return [d.id for d in _CATALOG]


def get(identity_id: str) -> IdentityDescriptor:
    try:
        return _BY_ID[identity_id]
    except KeyError:
        raise KeyError(f"unknown identity id {identity_id!r}") from None


def _resolve(idn) -> IdentityDescriptor:
    return get(idn) if isinstance(idn, str) else idn


def lhs_sum(idn, n: int, ell: int, point: Any):
    """Direct term-by-term value of the left-hand sum."""
    idn = _resolve(idn)
    spec = idn.lhs_builder(n, idn.effective_ell(ell), point)
    try:
        if isinstance(spec, QSeriesSpec):
            return sum_q_series(spec, point)
        return sum_classical_series(spec)
    except ZeroDivisionError as exc:
        raise PoleInSeries(None, str(exc)) from exc


def rhs_closed_form(idn, n: int, ell: int, point: Any):
    """Closed-form right-hand side; off-support i-terms are never formed."""
    idn = _resolve(idn)
    try:
        return idn.rhs(n, idn.effective_ell(ell), point)
    except ZeroDivisionError as exc:
        raise PoleInClosedForm(f"{idn.id} at n={n}, ell={ell}: {exc}") from exc


__all__ = [
    "CLASSICAL", "Q_SIDE", "THEOREMS", "IdentityDescriptor", "catalog_ids",
    "catalog_list", "chi", "example_id", "example_rhs", "get", "lhs_sum",
    "phi65_pair", "phi65_spec", "proof_unit_sum_a", "proof_unit_sum_c",
    "reversal_check", "reversed_point", "rhs_closed_form",
]
