"""Seeded grid verification, negative controls and report emission."""

from __future__ import annotations

import hashlib
import json
import logging
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Optional, Sequence

from . import catalog
from .arith import DegreeBound, SamplePoint, make_sample_point, rat_str
from .catalog import IdentityDescriptor
from .errors import DegeneratePoint, PoleError, SamplingExhausted

log = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1
LCG_MUL = 6364136223846793005
LCG_INC = 1442695040888963407


class Prng:
    """64-bit LCG; each draw advances the state and returns its high 32 bits."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u32(self) -> int:
        self.state = (self.state * LCG_MUL + LCG_INC) & MASK64
        return self.state >> 32

    def below(self, n: int) -> int:
        return self.next_u32() % n

    @classmethod
    def fork(cls, seed: int, *key) -> Prng:
        """Independent stream for a work unit, e.g. ``(seed, id, n, ell)``."""
        text = "|".join(str(k) for k in (seed,) + key).encode()
        return cls(int.from_bytes(hashlib.blake2b(text, digest_size=8).digest(), "big"))


def draw_fraction(prng: Prng, bound: int) -> Fraction:
    num = prng.below(2 * bound + 1) - bound
    den = prng.below(bound) + 1
    return Fraction(num, den)


def sample_set_size(bound: int) -> int:
    """Number of distinct values ``draw_fraction`` can produce."""
    return len({Fraction(p, d) for p in range(-bound, bound + 1) for d in range(1, bound + 1)})


def sample_point(prng: Prng, bound: int, constraints: Optional[Callable[[SamplePoint], bool]] = None,
                 max_attempts: int = 100) -> SamplePoint:
    """Draw a valid ``(t, c)`` point, rejecting degenerate or constrained ones."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    for _ in range(max_attempts):
        t = draw_fraction(prng, bound)
        c = draw_fraction(prng, bound)
        try:
            pt = make_sample_point(t, c)
        except DegeneratePoint:
            continue
        if constraints is None or constraints(pt):
            return pt
    raise SamplingExhausted(f"no acceptable point after {max_attempts} attempts")


def sample_parameter(prng: Prng, bound: int, constraints: Optional[Callable[[Fraction], bool]] = None,
                     max_attempts: int = 100) -> Fraction:
    """Draw a rational parameter for a classical identity."""
    if bound < 2:
        raise ValueError("bound must be at least 2")
    for _ in range(max_attempts):
        x = draw_fraction(prng, bound)
        if constraints is None or constraints(x):
            return x
    raise SamplingExhausted(f"no acceptable parameter after {max_attempts} attempts")


@dataclass
class VerificationConfig:
    identity_ids: Sequence[str] = ("all",)
    n_max: int = 12
    ell_max: int = 4
    points_per_cell: int = 10
    seed: int = 7
    numerator_bound: int = 9
    max_resample_attempts: int = 100
    output_format: str = "json"
    record_points: bool = False

    def __post_init__(self):
        if self.n_max < 0 or self.ell_max < 0 or self.points_per_cell < 1:
            raise ValueError("need n_max >= 0, ell_max >= 0, points_per_cell >= 1")
        if self.numerator_bound < 2 or self.max_resample_attempts < 1:
            raise ValueError("need numerator_bound >= 2, max_resample_attempts >= 1")
        if not 0 <= self.seed <= MASK64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.output_format not in ("json", "markdown", "md"):
            raise ValueError(f"unknown output format {self.output_format!r}")
        self.identity_ids = tuple(self.identity_ids)

    def resolved_ids(self) -> list[str]:
        if list(self.identity_ids) in (["all"], []):
            return catalog.catalog_ids()
        known = set(catalog.catalog_ids())
        bad = [i for i in self.identity_ids if i not in known]
        if bad:
            raise ValueError(f"unknown identity ids: {', '.join(bad)}")
        return list(self.identity_ids)

    def echo(self) -> dict:
        d = asdict(self)
        d["identity_ids"] = list(self.identity_ids)
        return d


@dataclass
class IdentityResult:
    id: str
    cells: int = 0
    points: int = 0
    failures: int = 0
    resamples: int = 0
    degree_bound: int = 0
    cell_errors: list = field(default_factory=list)


@dataclass
class VerificationReport:
    config: dict
    results: list
    witnesses: list
    resamples: dict
    degree_note: str
    elapsed_ms: int = 0
    samples: Optional[list] = None

    @property
    def status(self) -> str:
        if self.witnesses or any(r.cell_errors for r in self.results):
            return "fail"
        return "pass"

    def to_dict(self) -> dict:
        d = {
            "config": self.config,
            "status": self.status,
            "results": [asdict(r) for r in self.results],
            "witnesses": self.witnesses,
            "resamples": self.resamples,
            "degree_note": self.degree_note,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.samples is not None:
            d["samples"] = self.samples
        return d


def degree_bound(idn: IdentityDescriptor, n: int, ell: int) -> int:
    """Total-degree bound of ``lhs - rhs`` with denominators cleared.

    Obtained by running both evaluators on DegreeBound surrogates; no
    cancellation is assumed, so the bound is generous.
    """
    if idn.is_q_side:
        x = SamplePoint(DegreeBound.var(), DegreeBound.var())
    else:
        x = DegreeBound.var()
    lhs = catalog.lhs_sum(idn, n, ell, x)
    rhs = catalog.rhs_closed_form(idn, n, ell, x)
    lhs, rhs = DegreeBound._lift(lhs), DegreeBound._lift(rhs)
    return max(lhs.num + rhs.den, rhs.num + lhs.den)


def _point_fields(idn: IdentityDescriptor, point) -> dict:
    if idn.is_q_side:
        return {"t": rat_str(point.t), "c": rat_str(point.c)}
    return {"t": None, "c": None, idn.parameter: rat_str(point)}


def _draw(idn, prng, config):
    if idn.is_q_side:
        return sample_point(prng, config.numerator_bound,
                            max_attempts=config.max_resample_attempts)
    return sample_parameter(prng, config.numerator_bound,
                            max_attempts=config.max_resample_attempts)


def verify_cell(idn: IdentityDescriptor, n: int, ell: int, config: VerificationConfig):
    """Check one (identity, n, ell) cell at ``points_per_cell`` pole-free points.

    Returns ``(witnesses, resamples, samples, error)``; ``error`` is a string
    when the resampling budget ran out.
    """
    prng = Prng.fork(config.seed, idn.id, n, ell)
    witnesses, samples = [], []
    resamples = 0
    done = 0
    while done < config.points_per_cell:
        if resamples >= config.max_resample_attempts:
            return witnesses, resamples, samples, (
                f"resampling cap {config.max_resample_attempts} reached after {done} points")
        try:
            point = _draw(idn, prng, config)
        except SamplingExhausted as exc:
            return witnesses, resamples, samples, str(exc)
        try:
            lhs = catalog.lhs_sum(idn, n, ell, point)
            rhs = catalog.rhs_closed_form(idn, n, ell, point)
        except PoleError:
            resamples += 1
            continue
        done += 1
        if config.record_points:
            samples.append(_point_fields(idn, point))
        if lhs != rhs:
            w = {"id": idn.id, "n": n, "ell": ell, "lhs": rat_str(lhs), "rhs": rat_str(rhs)}
            w.update(_point_fields(idn, point))
            witnesses.append(w)
    return witnesses, resamples, samples, None


def run_verification(config: VerificationConfig,
                     descriptors: Optional[Iterable[IdentityDescriptor]] = None) -> VerificationReport:
    """Run every cell of the grid; ``descriptors`` overrides catalog lookup."""
    start = time.perf_counter()
    if descriptors is None:
        descriptors = [catalog.get(i) for i in config.resolved_ids()]
    results, witnesses, samples = [], [], []
    max_degree = 0
    for idn in descriptors:
        res = IdentityResult(idn.id)
        for n in range(config.n_max + 1):
            for ell in idn.ells(config.ell_max):
                w, r, s, err = verify_cell(idn, n, ell, config)
                res.cells += 1
                res.points += config.points_per_cell if err is None else len(s)
                res.failures += len(w)
                res.resamples += r
                witnesses.extend(w)
                if config.record_points:
                    bound = degree_bound(idn, n, ell)
                    samples.extend(dict(p, id=idn.id, n=n, ell=ell, degree_bound=bound) for p in s)
                if err is not None:
                    res.cell_errors.append({"n": n, "ell": ell, "error": err})
        res.degree_bound = max(degree_bound(idn, config.n_max, ell)
                               for ell in idn.ells(config.ell_max))
        max_degree = max(max_degree, res.degree_bound)
        log.info("%s: %d cells, %d failures", idn.id, res.cells, res.failures)
        results.append(res)
    size = sample_set_size(config.numerator_bound)
    note = (f"cleared-denominator total degree in (t, c) is at most {max_degree} over the grid "
            f"(crude bound, no cancellation assumed); coordinates are drawn from {size} "
            f"rationals with |num|, den <= {config.numerator_bound}; a nonzero discrepancy "
            f"survives one point with probability <= min(1, D/{size}) per Schwartz-Zippel, "
            f"so point agreement is evidence rather than proof whenever D >= {size}")
    resample_stats = {
        "total": sum(r.resamples for r in results),
        "cap_per_cell": config.max_resample_attempts,
        "by_id": {r.id: r.resamples for r in results},
    }
    report = VerificationReport(config.echo(), results, witnesses, resample_stats, note,
                                samples=samples if config.record_points else None)
    report.elapsed_ms = int((time.perf_counter() - start) * 1000)
    return report


def emit_report(report: VerificationReport, fmt: str = "json") -> bytes:
    if fmt == "json":
        return (json.dumps(report.to_dict(), sort_keys=True, indent=2) + "\n").encode()
    if fmt not in ("markdown", "md"):
        raise ValueError(f"unknown format {fmt!r}")
    cfg = report.config
    lines = [
        f"# Verification report: {report.status.upper()}",
        "",
        f"seed {cfg['seed']}, n <= {cfg['n_max']}, ell <= {cfg['ell_max']}, "
        f"{cfg['points_per_cell']} points per cell, bound {cfg['numerator_bound']}",
        "",
        "| identity | cells | points | failures | resamples | degree bound |",
        "|---|---:|---:|---:|---:|---:|",
    ]
    for r in report.results:
        lines.append(f"| {r.id} | {r.cells} | {r.points} | {r.failures} | {r.resamples} "
                     f"| {r.degree_bound} |")
    if report.witnesses:
        lines += ["", "## Witnesses", ""]
        for w in report.witnesses[:50]:
            where = ", ".join(f"{k}={v}" for k, v in w.items()
                              if k not in ("id", "lhs", "rhs") and v is not None)
            lines.append(f"- {w['id']} ({where}): lhs {w['lhs']} != rhs {w['rhs']}")
        if len(report.witnesses) > 50:
            lines.append(f"- ... {len(report.witnesses) - 50} more")
    lines += ["", report.degree_note, "", f"elapsed {report.elapsed_ms} ms", ""]
    return "\n".join(lines).encode()


# -- negative controls ------------------------------------------------------

def corrupted(idn: IdentityDescriptor) -> IdentityDescriptor:
    """Copy of ``idn`` whose closed form is multiplied by q (or by a + 1)."""
    rhs = idn.rhs
    if idn.is_q_side:
        return idn.with_rhs(lambda n, ell, pt: rhs(n, ell, pt) * pt.q)
    return idn.with_rhs(lambda n, ell, x: rhs(n, ell, x) * (x + 1))


# -- auxiliary suites -------------------------------------------------------

@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list = field(default_factory=list)
    resamples: int = 0

    @property
    def passed(self) -> bool:
        return self.checks > 0 and not self.failures

    def to_dict(self) -> dict:
        d = asdict(self)
        d["status"] = "pass" if self.passed else "fail"
        return d


def pole_free_values(fn: Callable, count: int, prng: Prng, q_side: bool = True,
                     bound: int = 9, attempts: int = 100) -> list:
    """``count`` pairs ``(point, fn(point))``, resampling whenever a pole is hit."""
    out = []
    misses = 0
    while len(out) < count:
        if q_side:
            point = sample_point(prng, bound, max_attempts=attempts)
        else:
            point = sample_parameter(prng, bound, max_attempts=attempts)
        try:
            out.append((point, fn(point)))
        except (PoleError, ZeroDivisionError):
            misses += 1
            if misses >= attempts:
                raise SamplingExhausted(f"{misses} pole hits before {count} points") from None
    return out


def run_lemma_suite(n_max: int = 8, ell_max: int = 4, points: int = 5, seed: int = 7,
                    bound: int = 9, attempts: int = 100) -> list[SuiteResult]:
    """Both unit-sum lemmas over 0 <= k <= n <= n_max, ell <= ell_max."""
    out = []
    for name, fn in (("proof_unit_sum_a", catalog.proof_unit_sum_a),
                     ("proof_unit_sum_c", catalog.proof_unit_sum_c)):
        res = SuiteResult(name)
        for n in range(n_max + 1):
            for k in range(n + 1):
                for ell in range(ell_max + 1):
                    prng = Prng.fork(seed, name, n, k, ell)
                    for pt, v in pole_free_values(lambda p: fn(n, k, ell, p), points, prng,
                                                  bound=bound, attempts=attempts):
                        res.checks += 1
                        if v != 1:
                            res.failures.append({"n": n, "k": k, "ell": ell, "t": rat_str(pt.t),
                                                 "c": rat_str(pt.c), "value": rat_str(v)})
        out.append(res)
    return out


def run_reversal_suite(n_max: int = 10, ell_max: int = 3, points: int = 5, seed: int = 7,
                       bound: int = 9, attempts: int = 100) -> list[SuiteResult]:
    out = []
    for pair in catalog.lemmas.REVERSAL_PAIRS:
        res = SuiteResult("reversal " + "/".join(pair))
        for n in range(n_max + 1):
            for ell in range(ell_max + 1):
                prng = Prng.fork(seed, *pair, n, ell)
                check = lambda p: catalog.reversal_check(n, ell, p, pair)  # noqa: E731
                for pt, ok in pole_free_values(check, points, prng, bound=bound,
                                               attempts=attempts):
                    res.checks += 1
                    if not ok:
                        res.failures.append({"n": n, "ell": ell, "t": rat_str(pt.t),
                                             "c": rat_str(pt.c)})
        out.append(res)
    return out
