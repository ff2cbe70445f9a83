"""Command-line front end: coefficient tables, single-object queries, and
the verification suite.

Exit codes: 0 for success (or a passing check), 1 when a verification
check finds a counterexample or a composition fails to build, 2 for
usage errors (bad flags, unparseable literals).
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .dyson import (
    InadmissibleCompositionError,
    build,
    decompose,
    format_composition,
    parse_composition,
    stair_report,
)
from .partitions import WeightKind, boundary_sequence, format_partition, parse_partition, weight
from .series import to_csv, to_json, to_table, weight_series
from .verify import CHECKS


def _nonneg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError("must be >= 0")
    return value


def _positive(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return value


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_text(text)
    else:
        sys.stdout.write(text)


def _weight_kind(args: argparse.Namespace) -> WeightKind:
    return WeightKind(args.weight)


def _cmd_coeffs(args: argparse.Namespace) -> int:
    series = weight_series(_weight_kind(args), args.max_n, jobs=args.jobs)
    render = {"table": to_table, "csv": to_csv, "json": to_json}[args.format]
    _emit(render(series), args.output)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    runner, default_max_n = CHECKS[args.check]
    max_n = default_max_n if args.max_n is None else args.max_n
    report = runner(max_n, jobs=args.jobs)
    _emit(report.to_json() + "\n", args.output)
    return 0 if report.passed else 1


def _cmd_decompose(args: argparse.Namespace) -> int:
    print(format_composition(decompose(parse_partition(args.partition))))
    return 0


def _cmd_build(args: argparse.Namespace) -> int:
    try:
        rows = build(parse_composition(args.composition))
    except InadmissibleCompositionError as exc:
        print(f"inadmissible (fails at step {exc.step})")
        return 1
    print(format_partition(rows))
    return 0


def _cmd_admissible(args: argparse.Namespace) -> int:
    try:
        build(parse_composition(args.composition))
    except InadmissibleCompositionError as exc:
        print(f"inadmissible (fails at step {exc.step})")
    else:
        print("admissible")
    return 0


def _cmd_weight(args: argparse.Namespace) -> int:
    print(weight(parse_partition(args.partition), _weight_kind(args)))
    return 0


def _cmd_boundary(args: argparse.Namespace) -> int:
    labels = boundary_sequence(parse_partition(args.partition))
    print(",".join(str(x) for x in labels) if labels else "-")
    return 0


def _cmd_stairs(args: argparse.Namespace) -> int:
    report = stair_report(parse_partition(args.partition))
    print(f"stair-step (landing {report.landing})" if report.is_stair else "not stair-step")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="z3parts",
        description="Mod-3 box statistics on partitions: coefficient tables, "
        "object queries, and the verification suite.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    coeffs = sub.add_parser("coeffs", help="emit the (t, q) coefficient table of a weight series")
    coeffs.add_argument("--max-n", type=_nonneg, default=10, help="largest q-degree (default 10)")
    coeffs.add_argument("--weight", choices=[k.value for k in WeightKind], default="wt-tilde")
    coeffs.add_argument("--format", choices=["table", "csv", "json"], default="table")
    coeffs.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    coeffs.add_argument("--output", default=None, help="write to a file instead of stdout")
    coeffs.set_defaults(func=_cmd_coeffs)

    verify = sub.add_parser("verify", help="run a verification check and report pass/fail")
    verify.add_argument("check", choices=sorted(CHECKS))
    verify.add_argument("--max-n", type=_nonneg, default=None,
                        help="largest size to sweep (default depends on the check)")
    verify.add_argument("--jobs", type=_positive, default=1, help="worker processes")
    verify.add_argument("--output", default=None, help="write the JSON report to a file")
    verify.set_defaults(func=_cmd_verify)

    decompose_p = sub.add_parser("decompose", help="decompose a partition into its {1,2}-composition")
    decompose_p.add_argument("partition", help='partition literal, e.g. "5,3,3,1" ("-" for empty)')
    decompose_p.set_defaults(func=_cmd_decompose)

    build_p = sub.add_parser("build", help="build the partition encoded by a {1,2}-composition")
    build_p.add_argument("composition", help='composition literal, e.g. "2,2,1,2" ("-" for empty)')
    build_p.set_defaults(func=_cmd_build)

    admissible_p = sub.add_parser("admissible", help="test whether a composition builds a partition")
    admissible_p.add_argument("composition")
    admissible_p.set_defaults(func=_cmd_admissible)

    weight_p = sub.add_parser("weight", help="mod-3 weight of a partition")
    weight_p.add_argument("partition")
    weight_p.add_argument("--weight", choices=[k.value for k in WeightKind], default="wt-tilde")
    weight_p.set_defaults(func=_cmd_weight)

    boundary_p = sub.add_parser("boundary", help="boundary label sequence of a partition")
    boundary_p.add_argument("partition")
    boundary_p.set_defaults(func=_cmd_boundary)

    stairs_p = sub.add_parser("stairs", help="stair-step report of a partition")
    stairs_p.add_argument("partition")
    stairs_p.set_defaults(func=_cmd_stairs)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    raise SystemExit(main())
