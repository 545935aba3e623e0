"""Exact verification of terminating hypergeometric and q-hypergeometric identities."""

from .arith import Monomial, Rat, SamplePoint, make_sample_point, monomial_eval, rat_pow
from .catalog import catalog_list, lhs_sum, rhs_closed_form
from .pochhammer import (FractionSpec, PochSpec, fraction_eval, poch_eval, q_pochhammer,
                         shifted_factorial)
from .series import ClassicalSeriesSpec, QSeriesSpec, sum_classical_series, sum_q_series
from .verify import VerificationConfig, emit_report, run_verification

__version__ = "0.1.0"

__all__ = [
    "ClassicalSeriesSpec", "FractionSpec", "Monomial", "PochSpec", "QSeriesSpec", "Rat",
    "SamplePoint", "VerificationConfig", "catalog_list", "emit_report", "fraction_eval",
    "lhs_sum", "make_sample_point", "monomial_eval", "poch_eval", "q_pochhammer", "rat_pow",
    "rhs_closed_form", "run_verification", "shifted_factorial", "sum_classical_series",
    "sum_q_series",
]
