"""Batch command-line front end.

Every subcommand reads JSON, writes one JSON report to stdout and exits
with 0 when all checks pass, 1 when an inequality is violated, and 2 on
degenerate or invalid input (origin hits, bad JSON, precondition
failures).  Output is deterministic: same argv + seed means byte-identical
bytes on stdout.
"""

from __future__ import annotations

import argparse
import os
import sys

from .charge import (
    analytic_angle_from_integrals,
    check_chern_n3,
    check_chern_n4,
    integrated_sigma_chain,
    kt_chain,
    winding_report,
)
from .errors import (
    ConvergenceError,
    DegeneratePathError,
    DomainError,
    InvalidPairError,
    SamplingExhaustedError,
)
from .models import consistency_suite
from .serialize import dumps, load_json, parse_model_spec, parse_profile, trace_csv
from .suites import identity_suite, kt_suite, theorem_suite

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INVALID = 2


def _default_seed() -> int:
    return int(os.environ.get("DHYM_SEED", "0"))


def _print_json(obj) -> None:
    sys.stdout.write(dumps(obj) + "\n")


def _cmd_check(args) -> int:
    profile = parse_profile(load_json(args.profile))
    if profile.n == 4:
        reports = [check_chern_n4(profile)]
    elif profile.n == 3:
        reports = [check_chern_n3(profile)]
    else:
        raise DomainError(f"no Chern checks for n={profile.n}")
    _print_json({"profile": profile.to_dict(), "reports": [r.to_dict() for r in reports]})
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATION


def _cmd_path(args) -> int:
    profile = parse_profile(load_json(args.profile))
    report = winding_report(profile, samples=args.samples)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(trace_csv(report))
    out = {"profile": profile.to_dict(), "winding": report.to_dict()}
    if args.out:
        out["csv"] = args.out
    _print_json(out)
    return EXIT_OK


def _cmd_angle(args) -> int:
    profile = parse_profile(load_json(args.profile))
    analytic = analytic_angle_from_integrals(profile)
    report = winding_report(profile, samples=args.samples)
    _print_json(
        {
            "profile": profile.to_dict(),
            "analytic_angle": analytic,
            "theta_alg": report.theta_alg,
            "t_star": report.t_star,
        }
    )
    return EXIT_OK


def _cmd_sample(args) -> int:
    report = theorem_suite(
        args.count, args.seed, theta_lo=args.theta, theta_hi=args.theta
    )
    _print_json(report.to_dict())
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_identity(args) -> int:
    report = identity_suite(args.count, args.seed)
    _print_json(report.to_dict())
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_kt(args) -> int:
    if args.profile:
        profile = parse_profile(load_json(args.profile))
        reports = [kt_chain(profile), integrated_sigma_chain(profile)]
        _print_json(
            {"profile": profile.to_dict(), "reports": [r.to_dict() for r in reports]}
        )
        return EXIT_OK if all(r.passed for r in reports) else EXIT_VIOLATION
    report = kt_suite(args.count, args.seed)
    _print_json(report.to_dict())
    return EXIT_OK if report.passed else EXIT_VIOLATION


def _cmd_model(args) -> int:
    profile = parse_model_spec(load_json(args.spec))
    text = dumps(profile.to_dict()) + "\n"
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    sys.stdout.write(text)
    return EXIT_OK


def _parse_lambda(text: str):
    try:
        return tuple(float(part) for part in text.split(","))
    except ValueError as exc:
        raise DomainError(f"cannot parse eigenvalues {text!r}: {exc}") from exc


def _cmd_consistency(args) -> int:
    report = consistency_suite(_parse_lambda(args.eigenvalues))
    _print_json(report.to_dict())
    return EXIT_OK if report.passed else EXIT_VIOLATION


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dhym",
        description="Verification toolkit for dHYM Chern-number inequalities.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="dimension-appropriate Chern inequality checks")
    p.add_argument("--profile", required=True, help="intersection profile JSON file")
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("path", help="central-charge trace and winding report")
    p.add_argument("--profile", required=True)
    p.add_argument("--samples", type=int, default=129, help="trace sample count")
    p.add_argument("--out", help="CSV output path (t,re,im,arg_lift)")
    p.set_defaults(func=_cmd_path)

    p = sub.add_parser("angle", help="analytic and algebraic lifted angles")
    p.add_argument("--profile", required=True)
    p.add_argument("--samples", type=int, default=129)
    p.set_defaults(func=_cmd_angle)

    p = sub.add_parser("sample", help="level-set Monte Carlo theorem suite")
    p.add_argument("--theta", type=float, required=True, help="target lifted angle")
    p.add_argument("--count", type=int, default=1000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("identity", help="random-tuple identity suite")
    p.add_argument("--count", type=int, default=100000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.set_defaults(func=_cmd_identity)

    p = sub.add_parser("kt", help="Khovanskii-Teissier chains")
    p.add_argument("--profile", help="profile JSON; omit to run the random suite")
    p.add_argument("--count", type=int, default=10000)
    p.add_argument("--seed", type=int, default=_default_seed())
    p.set_defaults(func=_cmd_kt)

    p = sub.add_parser("model", help="materialise a profile from a model spec")
    p.add_argument("--spec", required=True, help="model spec JSON file")
    p.add_argument("--out", help="also write the profile JSON here")
    p.set_defaults(func=_cmd_model)

    p = sub.add_parser("consistency", help="pointwise vs integrated cross-checks")
    p.add_argument(
        "--lambda",
        dest="eigenvalues",
        required=True,
        metavar="A,B,C,D",
        help="comma-separated eigenvalues of a constant model",
    )
    p.set_defaults(func=_cmd_consistency)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DegeneratePathError as exc:
        _print_json(
            {
                "error": "degenerate-path",
                "message": str(exc),
                "origin_hit": exc.t_origin,
            }
        )
        return EXIT_INVALID
    except (
        DomainError,
        InvalidPairError,
        SamplingExhaustedError,
        ConvergenceError,
        OSError,
    ) as exc:
        _print_json({"error": type(exc).__name__, "message": str(exc)})
        return EXIT_INVALID


if __name__ == "__main__":
    sys.exit(main())
