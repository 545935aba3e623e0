"""Acceptance criteria, one test each; every test prints a PASS/FAIL line.

Tolerance is zero throughout: every comparison is exact rational equality.
Run ``pytest tests/test_acceptance.py -s`` or ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import sys
import time

import pytest

from qhv.arith import A, mono, q_pow
from qhv.catalog import (THEOREMS, catalog_ids, example_rhs, get, lhs_sum, phi65_pair,
                         rhs_closed_form)
from qhv.catalog.lemmas import PHI65_B, PHI65_C
from qhv.cli import main as cli_main
from qhv.verify import (Prng, VerificationConfig, corrupted, emit_report, pole_free_values,
                        run_lemma_suite, run_reversal_suite, run_verification)

N_MAX, ELL_MAX, POINTS, SEED = 12, 4, 10, 7


@pytest.fixture
def report_line(capsys):
    def emit(number: int, title: str, ok: bool, detail: str = "") -> None:
        line = f"[{'PASS' if ok else 'FAIL'}] criterion {number}: {title}"
        if detail:
            line += f" ({detail})"
        with capsys.disabled():
            print("\n" + line)
    return emit


def test_1_full_catalog(tmp_path, report_line):
    out = tmp_path / "report.json"
    start = time.perf_counter()
    code = cli_main(["verify", "--ids", "all", "--n-max", str(N_MAX), "--ell-max", str(ELL_MAX),
                     "--points", str(POINTS), "--seed", str(SEED), "--out", str(out)])
    elapsed = time.perf_counter() - start
    data = json.loads(out.read_text())
    points = sum(r["points"] for r in data["results"])
    ok = (code == 0 and data["status"] == "pass" and len(data["results"]) == 29
          and not data["witnesses"] and elapsed < 300)
    report_line(1, "full-catalog verification", ok, f"{points} points, {elapsed:.1f}s")
    assert ok


def test_2_base_identity_reduction(report_line):
    checks, bad = 0, []
    for thm in THEOREMS:
        idn = get(thm)
        base = get(idn.base)
        for n in range(N_MAX + 1):
            prng = Prng.fork(SEED, "reduction", thm, n)
            fn = lambda p: (rhs_closed_form(idn, n, 0, p),  # noqa: E731
                            rhs_closed_form(base, n, 0, p))
            for point, (general, reduced) in pole_free_values(fn, POINTS, prng,
                                                              q_side=idn.is_q_side):
                checks += 1
                if general != reduced:
                    bad.append((thm, n, point))
    report_line(2, "ell = 0 reduces to the base equations", not bad, f"{checks} checks")
    assert not bad


def test_3_chi_vanishing(report_line):
    ids = ("eq-andrews", "eq-andrews-rev", "eq-q-andrews", "eq-q-andrews-rev")
    checks, bad = 0, []
    for identity in ids:
        idn = get(identity)
        for n in (n for n in range(21) if n % 3):
            prng = Prng.fork(SEED, "chi", identity, n)
            for point, v in pole_free_values(lambda p: lhs_sum(idn, n, 0, p), POINTS, prng,
                                             q_side=idn.is_q_side):
                checks += 1
                if v != 0:
                    bad.append((identity, n, point))
    report_line(3, "chi-vanishing of the base sums", not bad, f"{checks} checks")
    assert not bad


def test_4_phi65_building_block(report_line):
    embeddings = [("generic", A, PHI65_B, PHI65_C),
                  ("generic-2", mono(t=2, c=4), mono(t=-1, c=1), mono(t=5, c=-2, sign=-1))]
    # a -> q^-2n/a, b -> q^(k-n), c -> 0 as in the proof of the first generalisation
    embeddings += [(f"c=0 n={n} k={k}", mono(t=-4 * n, c=-2), q_pow(k - n), None)
                   for n in range(4) for k in range(n + 1)]
    checks, bad = 0, []
    for name, a, b, c in embeddings:
        for ell in range(9):
            prng = Prng.fork(SEED, "phi65", name, ell)
            for point, (lhs, rhs) in pole_free_values(lambda p: phi65_pair(a, b, c, ell, p),
                                                      20, prng):
                checks += 1
                if lhs != rhs:
                    bad.append((name, ell, point))
    report_line(4, "terminating 6phi5 sum incl. c -> 0", not bad, f"{checks} checks")
    assert not bad


def test_5_proof_lemmas(report_line):
    results = run_lemma_suite(n_max=8, ell_max=4, points=5, seed=SEED)
    ok = all(r.passed for r in results)
    report_line(5, "unit-sum lemmas equal 1", ok,
                ", ".join(f"{r.name}: {r.checks}" for r in results))
    assert ok


def test_6_reversal_consistency(report_line):
    results = run_reversal_suite(n_max=10, ell_max=3, points=5, seed=SEED)
    ok = all(r.passed for r in results)
    report_line(6, "reversal k -> n-k, a -> q^(1-2n)/b", ok,
                ", ".join(f"{r.name}: {r.checks}" for r in results))
    assert ok


def test_7_example_cross_check(report_line):
    checks, bad = 0, []
    for thm in THEOREMS:
        idn = get(thm)
        for ell in (1, 2):
            for n in range(N_MAX + 1):
                prng = Prng.fork(SEED, "example", thm, ell, n)
                fn = lambda p: (example_rhs(thm, ell, n, p),  # noqa: E731
                                rhs_closed_form(idn, n, ell, p))
                for point, (printed, general) in pole_free_values(fn, POINTS, prng,
                                                                  q_side=idn.is_q_side):
                    checks += 1
                    if printed != general:
                        bad.append((thm, ell, n, point))
    report_line(7, "16 printed examples match the theorems", not bad, f"{checks} checks")
    assert not bad


def test_8_negative_control(report_line):
    config = VerificationConfig(["all"], N_MAX, ELL_MAX, 3, SEED)
    undetected = []
    for identity in catalog_ids():
        report = run_verification(config, descriptors=[corrupted(get(identity))])
        if report.status != "fail" or not report.witnesses:
            undetected.append(identity)
    report_line(8, "corrupted closed forms are caught", not undetected,
                f"{29 - len(undetected)}/29 detected")
    assert not undetected


def test_9_determinism(report_line):
    config = VerificationConfig(["all"], N_MAX, ELL_MAX, POINTS, SEED)
    first = json.loads(emit_report(run_verification(config)))
    second = json.loads(emit_report(run_verification(config)))
    first.pop("elapsed_ms")
    second.pop("elapsed_ms")
    ok = first == second
    report_line(9, "identical configs give identical reports", ok)
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
