"""Command-line interface.

Subcommands:
    encode <n>            numeral -> state letters (or digits with --digits)
    decode <state>        state letters (or digits) -> numeral
    simulate              run an organization to bankruptcy
    gtraj                 print a g-trajectory
    verify                range verification with CSV/JSONL/human reports
    emit-trs              write prover-ready .srs/.trs files
    run-srs               drive the rewriting engine on one start value

All numbers are decimal strings of unbounded size. Exit status: 0 on
success, 1 on disagreement or budget/fuel exhaustion, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import IO

from .codec import decode, encode, org_from_digits, org_to_digits
from .collatz import DEFAULT_MAX_STEPS, g_trajectory, trajectory_to_json
from .organization import (
    DEFAULT_MAX_DAYS,
    org_from_text,
    org_to_text,
    run_until_bankrupt,
)
from .rewriting import (
    DEFAULT_FUEL,
    RewriteOutcome,
    SrsMode,
    export_tpdb_srs,
    export_tpdb_trs,
    generate_srs,
    normalize_word,
    word_of_org,
)
from .verify import (
    CSV_HEADER,
    RunConfig,
    Summary,
    record_to_csv,
    record_to_human,
    record_to_jsonl,
    summary_to_human,
    validate_config,
    verify_range,
)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _parse_even(text: str) -> int:
    value = int(text)
    if value < 0 or value % 2:
        raise ValueError(f"{value} is not an even nonnegative number")
    return value


def cmd_encode(args: argparse.Namespace) -> int:
    org = encode(_parse_even(args.n))
    print(org_to_digits(org) if args.digits else org_to_text(org))
    return EXIT_OK


def cmd_decode(args: argparse.Namespace) -> int:
    org = org_from_digits(args.state) if args.digits else org_from_text(args.state)
    print(decode(org))
    return EXIT_OK


def cmd_simulate(args: argparse.Namespace) -> int:
    if args.n is not None:
        org = encode(_parse_even(args.n))
    else:
        org = org_from_text(args.state)
    run = run_until_bankrupt(org, args.max_days, record_states=args.trace)
    if args.trace:
        for day, state in enumerate(run.states):
            print(f"{day} {org_to_text(state)} {decode(state)}")
    if run.exhausted:
        print(f"budget exhausted after {run.days} days")
        print(f"final: {org_to_text(run.final)}")
        print(f"value: {decode(run.final)}")
        return EXIT_FAILED
    print(f"days: {run.days}")
    print(f"final: {org_to_text(run.final)}")
    print(f"value: {decode(run.final)}")
    return EXIT_OK


def cmd_gtraj(args: argparse.Namespace) -> int:
    traj = g_trajectory(_parse_even(args.n), max_steps=args.max_steps)
    if args.json:
        print(trajectory_to_json(traj))
    else:
        for value in traj.values:
            print(value)
    if not traj.terminated:
        print(f"budget exhausted after {traj.steps} steps", file=sys.stderr)
        return EXIT_FAILED
    return EXIT_OK


def _run_verify(config: RunConfig, report: IO[str]) -> Summary:
    to_line = {
        "csv": record_to_csv,
        "jsonl": record_to_jsonl,
        "human": record_to_human,
    }[config.output_format]
    summary = Summary()
    if config.output_format == "csv":
        report.write(CSV_HEADER + "\n")
    for record in verify_range(config):
        report.write(to_line(record) + "\n")
        summary.update(record)
    if config.output_format == "human":
        report.write(summary_to_human(summary) + "\n")
    return summary


def cmd_verify(args: argparse.Namespace) -> int:
    config = RunConfig(
        lo=int(args.lo),
        hi=int(args.hi),
        max_days=args.max_days,
        shard_size=args.shard_size,
        workers=args.workers,
        output_format=args.format,
    )
    validate_config(config)
    if args.out:
        with open(args.out, "w") as report:
            summary = _run_verify(config, report)
        print(summary_to_human(summary))
    else:
        summary = _run_verify(config, sys.stdout)
        if config.output_format != "human":
            print(summary_to_human(summary), file=sys.stderr)
    return EXIT_OK if summary.clean else EXIT_FAILED


def cmd_emit_trs(args: argparse.Namespace) -> int:
    srs = generate_srs(SrsMode(args.mode))
    text = export_tpdb_srs(srs) if args.format == "srs" else export_tpdb_trs(srs)
    if args.out:
        with open(args.out, "w", newline="") as out:
            out.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def cmd_run_srs(args: argparse.Namespace) -> int:
    srs = generate_srs(SrsMode(args.mode))
    org = encode(_parse_even(args.n))
    if srs.mode is SrsMode.SINGLE_DAY:
        word = "BG" + org_to_text(org) + "E"
    else:
        word = word_of_org(org)
    run = normalize_word(
        srs, word, strategy=args.strategy, fuel=args.fuel, seed=args.seed, trace=args.trace
    )
    print(f"start: {run.start}")
    if args.trace:
        for number, step in enumerate(run.log, start=1):
            print(f"{number} {step.rule_index} {step.position} {step.word}")
    print(f"outcome: {run.outcome.value}")
    print(f"final: {run.final}")
    print(f"steps: {run.steps}")
    if srs.mode is SrsMode.CHAINED:
        print(f"day-starts: {srs.day_start_count(run)}")
    return EXIT_OK if run.outcome is RewriteOutcome.NORMAL_FORM else EXIT_FAILED


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orgcollatz",
        description="Organization-dynamics simulator, Collatz cross-checks, and rewriting exports.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("encode", help="even number -> state string")
    p.add_argument("n", help="even nonnegative decimal number")
    p.add_argument("--digits", action="store_true", help="emit digits over {0,2,4} instead of letters")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("decode", help="state string -> number")
    p.add_argument("state", help="string over {Z,C,M} (or {0,2,4} with --digits)")
    p.add_argument("--digits", action="store_true", help="read digits over {0,2,4} instead of letters")
    p.set_defaults(func=cmd_decode)

    p = sub.add_parser("simulate", help="run an organization until bankruptcy")
    start = p.add_mutually_exclusive_group(required=True)
    start.add_argument("--n", help="even start value to encode")
    start.add_argument("--state", help="start state as a string over {Z,C,M}")
    p.add_argument("--max-days", type=int, default=DEFAULT_MAX_DAYS)
    p.add_argument("--trace", action="store_true", help="print one line per day: day, state, value")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("gtraj", help="print the g-trajectory of an even number")
    p.add_argument("--n", required=True, help="even start value")
    p.add_argument("--max-steps", type=int, default=DEFAULT_MAX_STEPS)
    p.add_argument("--json", action="store_true", help="emit a JSON array of decimal strings")
    p.set_defaults(func=cmd_gtraj)

    p = sub.add_parser("verify", help="verify simulator/oracle agreement over a range")
    p.add_argument("--lo", required=True, help="even inclusive lower bound")
    p.add_argument("--hi", required=True, help="even inclusive upper bound")
    p.add_argument("--max-days", type=int, default=DEFAULT_MAX_DAYS)
    p.add_argument("--shard-size", type=int, default=4096, help="records per shard")
    p.add_argument("--workers", type=int, default=1, help="worker processes for shards")
    p.add_argument("--format", choices=("csv", "jsonl", "human"), default="csv")
    p.add_argument("--out", help="write the report to FILE instead of stdout")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("emit-trs", help="export the rewrite system for termination provers")
    p.add_argument("--mode", choices=("single-day", "chained"), required=True)
    p.add_argument("--format", choices=("srs", "trs"), required=True)
    p.add_argument("--out", help="write to FILE instead of stdout")
    p.set_defaults(func=cmd_emit_trs)

    p = sub.add_parser("run-srs", help="normalize one start value with the rewriting engine")
    p.add_argument("--mode", choices=("single-day", "chained"), required=True)
    p.add_argument("--n", required=True, help="even start value")
    p.add_argument("--strategy", choices=("leftmost", "rightmost", "random"), default="leftmost")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--fuel", type=int, default=DEFAULT_FUEL)
    p.add_argument("--trace", action="store_true", help="print one line per step: step, rule, position, word")
    p.set_defaults(func=cmd_run_srs)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
