"""Reference Collatz maps and the simulator cross-check.

``collatz_f`` is the classic map (halve or 3n+1). ``collatz_g`` is the
even-to-even variant: one g step halves once and, if that lands on an odd
number, immediately applies 3n+1. One organization day step realizes one
g step on the decoded value; :func:`check_bisimulation` tests exactly that
identity for a single n, with the two sides computed by independent code
paths.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .codec import decode, encode
from .organization import day_step

__all__ = [
    "STOP_SET",
    "Trajectory",
    "DEFAULT_MAX_STEPS",
    "collatz_f",
    "collatz_g",
    "g_trajectory",
    "check_bisimulation",
    "f_g_consistency",
    "trajectory_to_json",
]

# Decoded values of bankrupt states; 2 and 4 cycle into each other under g,
# and 0 is a fixed point only reachable from 0.
STOP_SET = frozenset({0, 2, 4})

DEFAULT_MAX_STEPS = 100_000


@dataclass(frozen=True, slots=True)
class Trajectory:
    """g-iteration record; ``terminated`` is False on budget exhaustion."""

    start: int
    values: tuple[int, ...]
    terminated: bool

    @property
    def steps(self) -> int:
        return len(self.values) - 1


def collatz_f(n: int) -> int:
    """n/2 for even n, 3n+1 for odd n; defined on positive integers."""
    if n < 1:
        raise ValueError(f"collatz_f needs n >= 1, got {n}")
    return n // 2 if n % 2 == 0 else 3 * n + 1


def collatz_g(n: int) -> int:
    """Even-to-even step: halve, then 3x+1 if the half is odd."""
    if n < 0 or n % 2:
        raise ValueError(f"collatz_g needs an even n >= 0, got {n}")
    half = n // 2
    return half if half % 2 == 0 else 3 * half + 1


def g_trajectory(n: int, max_steps: int = DEFAULT_MAX_STEPS) -> Trajectory:
    """Iterate g from ``n`` until the stop set {0, 2, 4} or the budget."""
    values = [n]
    value = n
    if value % 2:
        raise ValueError(f"g_trajectory needs an even start, got {n}")
    steps = 0
    while value not in STOP_SET:
        if steps >= max_steps:
            return Trajectory(start=n, values=tuple(values), terminated=False)
        half = value // 2
        value = half if half % 2 == 0 else 3 * half + 1
        values.append(value)
        steps += 1
    return Trajectory(start=n, values=tuple(values), terminated=True)


def check_bisimulation(n: int) -> bool:
    """One day of the simulator matches one g step on the decoded value."""
    return decode(day_step(encode(n))) == collatz_g(n)


def f_g_consistency(n: int) -> bool:
    """Each g step embeds one halving of f.

    For even n: g(n) must equal f(n) when f(n) is even, and f(f(n)) when
    f(n) is odd (the halving exposed an odd value, so f applies 3x+1).
    """
    fn = collatz_f(n)
    gn = collatz_g(n)
    return gn == fn if fn % 2 == 0 else gn == collatz_f(fn)


def trajectory_to_json(trajectory: Trajectory) -> str:
    """JSON array of decimal strings; values can exceed 64 bits."""
    return json.dumps([str(v) for v in trajectory.values])
