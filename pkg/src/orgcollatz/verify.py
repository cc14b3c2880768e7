"""Range verification: simulator vs. oracle, record by record.

For each even n in a range the simulator runs to bankruptcy while the
g-map iterates independently; a record captures both step counts, the
day-by-day value agreement, and the terminal value. Ranges are split
into fixed-size shards so shards can run on worker processes, and the
merged output is ordered by n no matter how the shards executed, so a
given configuration always produces byte-identical reports.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterable, Iterator

from .codec import decode, encode
from .collatz import g_trajectory
from .organization import DEFAULT_MAX_DAYS, run_until_bankrupt

__all__ = [
    "VerifyRecord",
    "RunConfig",
    "Summary",
    "CSV_HEADER",
    "verify_one",
    "verify_range",
    "summarize",
    "record_to_csv",
    "record_to_jsonl",
    "record_to_human",
    "summary_to_human",
]

CSV_HEADER = "n,days,g_steps,max_org_len,terminal_value,agree,budget_exhausted"

OUTPUT_FORMATS = ("csv", "jsonl", "human")

DEFAULT_SHARD_SIZE = 4096


@dataclass(frozen=True, slots=True)
class VerifyRecord:
    """Outcome row for one start value.

    ``agree`` requires equal step counts, elementwise equality of the
    day-by-day decoded states with the g-trajectory, and a terminal value
    in {2, 4} (0 is allowed only for n = 0). ``terminal_value`` is the
    simulator's final decoded value.
    """

    n: int
    days: int
    g_steps: int
    max_org_len: int
    terminal_value: int
    agree: bool
    budget_exhausted: bool


@dataclass(frozen=True, slots=True)
class RunConfig:
    """Inclusive even range [lo, hi] plus execution and output settings."""

    lo: int
    hi: int
    max_days: int = DEFAULT_MAX_DAYS
    shard_size: int = DEFAULT_SHARD_SIZE
    workers: int = 1
    output_format: str = "csv"


def validate_config(config: RunConfig) -> None:
    """Reject a bad configuration before any work starts."""
    if config.lo % 2 or config.hi % 2:
        raise ValueError(f"lo and hi must be even, got lo={config.lo} hi={config.hi}")
    if config.lo < 0:
        raise ValueError(f"lo must be >= 0, got {config.lo}")
    if config.lo > config.hi:
        raise ValueError(f"empty range: lo={config.lo} > hi={config.hi}")
    if config.max_days < 0:
        raise ValueError(f"max_days must be >= 0, got {config.max_days}")
    if config.shard_size < 1:
        raise ValueError(f"shard_size must be >= 1, got {config.shard_size}")
    if config.workers < 1:
        raise ValueError(f"workers must be >= 1, got {config.workers}")
    if config.output_format not in OUTPUT_FORMATS:
        raise ValueError(
            f"unknown output format {config.output_format!r}; expected one of {OUTPUT_FORMATS}"
        )


def verify_one(n: int, max_days: int = DEFAULT_MAX_DAYS) -> VerifyRecord:
    """Run the two independent routes for a single n and compare them."""
    sim = run_until_bankrupt(encode(n), max_days, record_states=True)
    traj = g_trajectory(n, max_steps=max_days)
    decoded = [decode(state) for state in sim.states]
    terminal = decoded[-1]
    agree = (
        sim.days == traj.steps
        and decoded == list(traj.values)
        and (terminal in (2, 4) or (n == 0 and terminal == 0))
    )
    return VerifyRecord(
        n=n,
        days=sim.days,
        g_steps=traj.steps,
        max_org_len=max(len(state) for state in sim.states),
        terminal_value=terminal,
        agree=agree,
        budget_exhausted=sim.exhausted or not traj.terminated,
    )


def _shard_bounds(lo: int, hi: int, shard_size: int) -> list[tuple[int, int]]:
    bounds = []
    n = lo
    while n <= hi:
        end = min(n + 2 * (shard_size - 1), hi)
        bounds.append((n, end))
        n = end + 2
    return bounds


def _verify_shard(task: tuple[int, int, int]) -> list[VerifyRecord]:
    lo, hi, max_days = task
    return [verify_one(n, max_days) for n in range(lo, hi + 1, 2)]


def verify_range(config: RunConfig) -> Iterator[VerifyRecord]:
    """Yield records for every even n in [lo, hi], ordered by n.

    Shards are independent; with ``workers > 1`` they run on a process
    pool, and the merge preserves n order either way. Yielding shard by
    shard keeps memory flat on large ranges.
    """
    validate_config(config)
    tasks = [(a, b, config.max_days) for a, b in _shard_bounds(config.lo, config.hi, config.shard_size)]
    if config.workers > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for records in pool.map(_verify_shard, tasks):
                yield from records
    else:
        for task in tasks:
            yield from _verify_shard(task)


@dataclass(slots=True)
class Summary:
    """Aggregates over a record stream; all zero for an empty stream."""

    records: int = 0
    disagreements: int = 0
    budget_exhausted: int = 0
    max_days: int = 0
    max_days_n: int = 0
    max_org_len: int = 0

    def update(self, record: VerifyRecord) -> None:
        self.records += 1
        if not record.agree:
            self.disagreements += 1
        if record.budget_exhausted:
            self.budget_exhausted += 1
        if record.days > self.max_days:
            self.max_days = record.days
            self.max_days_n = record.n
        if record.max_org_len > self.max_org_len:
            self.max_org_len = record.max_org_len

    @property
    def clean(self) -> bool:
        return self.disagreements == 0 and self.budget_exhausted == 0


def summarize(records: Iterable[VerifyRecord]) -> Summary:
    summary = Summary()
    for record in records:
        summary.update(record)
    return summary


def record_to_csv(record: VerifyRecord) -> str:
    return (
        f"{record.n},{record.days},{record.g_steps},{record.max_org_len},"
        f"{record.terminal_value},{str(record.agree).lower()},"
        f"{str(record.budget_exhausted).lower()}"
    )


def record_to_jsonl(record: VerifyRecord) -> str:
    # Unbounded values travel as decimal strings; counts fit native ints.
    return json.dumps(
        {
            "n": str(record.n),
            "days": record.days,
            "g_steps": record.g_steps,
            "max_org_len": record.max_org_len,
            "terminal_value": str(record.terminal_value),
            "agree": record.agree,
            "budget_exhausted": record.budget_exhausted,
        },
        separators=(",", ":"),
    )


def record_to_human(record: VerifyRecord) -> str:
    flags = "agree" if record.agree else "DISAGREE"
    if record.budget_exhausted:
        flags += " BUDGET-EXHAUSTED"
    return (
        f"n={record.n} days={record.days} g_steps={record.g_steps} "
        f"max_len={record.max_org_len} terminal={record.terminal_value} {flags}"
    )


def summary_to_human(summary: Summary) -> str:
    return (
        f"records: {summary.records}\n"
        f"disagreements: {summary.disagreements}\n"
        f"budget-exhausted: {summary.budget_exhausted}\n"
        f"max days: {summary.max_days} (n={summary.max_days_n})\n"
        f"max org length: {summary.max_org_len}"
    )
