"""Command-line entry point: ``qhv list | verify | eval | lemmas | reverse``."""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import catalog
from .arith import make_sample_point, rat_str
from .errors import DegeneratePoint, PoleError
from .verify import (VerificationConfig, emit_report, run_lemma_suite, run_reversal_suite,
                     run_verification)

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}") from None


def _seed(args) -> int:
    env = os.environ.get("QHV_SEED")
    return int(env) if env else args.seed


def _write(data: bytes, path) -> None:
    if path in (None, "-"):
        sys.stdout.buffer.write(data)
        sys.stdout.flush()
    else:
        with open(path, "wb") as fh:
            fh.write(data)


def cmd_list(args) -> int:
    for d in catalog.catalog_list():
        ell = "ell" if d.takes_ell else (f"ell={d.fixed_ell}" if d.fixed_ell else "-")
        print(f"{d.id:20s} {d.family:10s} {ell}")
    return EXIT_PASS


def cmd_verify(args) -> int:
    ids = ["all"] if args.ids == "all" else [s.strip() for s in args.ids.split(",") if s.strip()]
    fmt = "markdown" if args.format == "md" else args.format
    config = VerificationConfig(ids, args.n_max, args.ell_max, args.points, _seed(args),
                                args.bound, args.max_resamples, fmt, args.record_points)
    config.resolved_ids()
    report = run_verification(config)
    _write(emit_report(report, fmt), args.out)
    return EXIT_PASS if report.status == "pass" else EXIT_FAIL


def cmd_eval(args) -> int:
    idn = catalog.get(args.id)
    if idn.is_q_side:
        if args.t is None or args.c is None:
            raise ValueError(f"{idn.id} is a q-side identity: --t and --c are required")
        point = make_sample_point(args.t, args.c)
    else:
        value = args.param if args.param is not None else args.c
        if value is None:
            raise ValueError(f"{idn.id} is classical: pass --{idn.parameter}")
        point = value
    try:
        lhs = catalog.lhs_sum(idn, args.n, args.ell, point)
        rhs = catalog.rhs_closed_form(idn, args.n, args.ell, point)
    except PoleError as exc:
        print(f"pole: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"lhs   {rat_str(lhs)}")
    print(f"rhs   {rat_str(rhs)}")
    print(f"equal {lhs == rhs}")
    return EXIT_PASS if lhs == rhs else EXIT_FAIL


def _print_suites(results) -> int:
    print(json.dumps([r.to_dict() for r in results], sort_keys=True, indent=2))
    return EXIT_PASS if all(r.passed for r in results) else EXIT_FAIL


def cmd_lemmas(args) -> int:
    return _print_suites(run_lemma_suite(args.n_max, args.ell_max, args.points, _seed(args),
                                         args.bound))


def cmd_reverse(args) -> int:
    return _print_suites(run_reversal_suite(args.n_max, args.ell_max, args.points, _seed(args),
                                            args.bound))


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="qhv", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="print catalog ids").set_defaults(func=cmd_list)

    v = sub.add_parser("verify", help="verify identities over a seeded grid")
    v.add_argument("--ids", default="all", help="comma-separated ids or 'all'")
    v.add_argument("--n-max", type=int, default=12)
    v.add_argument("--ell-max", type=int, default=4)
    v.add_argument("--points", type=int, default=10)
    v.add_argument("--seed", type=int, default=7)
    v.add_argument("--bound", type=int, default=9)
    v.add_argument("--max-resamples", type=int, default=100)
    v.add_argument("--format", choices=("json", "md", "markdown"), default="json")
    v.add_argument("--out", default=None)
    v.add_argument("--record-points", action="store_true",
                   help="include every sampled point with its degree bound")
    v.set_defaults(func=cmd_verify)

    e = sub.add_parser("eval", help="evaluate both sides at one point")
    e.add_argument("--id", required=True)
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--ell", type=int, default=0)
    e.add_argument("--t", type=_rational)
    e.add_argument("--c", type=_rational)
    e.add_argument("--a", "--b", dest="param", type=_rational,
                   help="parameter of a classical identity")
    e.set_defaults(func=cmd_eval)

    for name, func, n_max, ell_max in (("lemmas", cmd_lemmas, 8, 4),
                                       ("reverse", cmd_reverse, 10, 3)):
        s = sub.add_parser(name)
        s.add_argument("--n-max", type=int, default=n_max)
        s.add_argument("--ell-max", type=int, default=ell_max)
        s.add_argument("--points", type=int, default=5)
        s.add_argument("--seed", type=int, default=7)
        s.add_argument("--bound", type=int, default=9)
        s.set_defaults(func=func)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, KeyError, DegeneratePoint) as exc:
        print(f"qhv: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
