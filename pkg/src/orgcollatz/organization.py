"""Organization-level dynamics: day steps, hiring, bankruptcy.

An organization is an ordered tuple of employee states, index 0 at the
top of the hierarchy. Each day a gentle nudge enters at the top and is
propagated downward by :func:`orgcollatz.mealy.step_employee`. If the most
junior member emits a hard push, a motivated hire is appended; the hire
absorbs the push and the day ends. An organization is bankrupt when every
member except possibly the last is a zombie.
"""

from __future__ import annotations

from dataclasses import dataclass

from .mealy import (
    EmployeeState,
    Signal,
    state_from_letter,
    state_letter,
    step_employee,
)

__all__ = [
    "OrgState",
    "DayEvent",
    "DayTrace",
    "BankruptcyRun",
    "DEFAULT_MAX_DAYS",
    "day_step",
    "day_step_traced",
    "is_bankrupt",
    "normalize",
    "run_until_bankrupt",
    "org_to_text",
    "org_from_text",
]

OrgState = tuple[EmployeeState, ...]

# Far above the day counts seen for any start value of desk scale, while
# still bounding runaway runs.
DEFAULT_MAX_DAYS = 100_000

_ZOMBIE = EmployeeState.ZOMBIE
_MOTIVATED = EmployeeState.MOTIVATED
_GENTLE_NUDGE = Signal.GENTLE_NUDGE
_HARD_PUSH = Signal.HARD_PUSH


@dataclass(frozen=True, slots=True)
class DayEvent:
    """One employee's share of a day: signal in, new state, signal out."""

    received: Signal
    became: EmployeeState
    emitted: Signal


@dataclass(frozen=True, slots=True)
class DayTrace:
    """Full walkthrough of one day, one event per (pre-hire) employee."""

    start: OrgState
    events: tuple[DayEvent, ...]
    hired: bool
    end: OrgState


@dataclass(frozen=True, slots=True)
class BankruptcyRun:
    """Result of iterating day steps until bankruptcy or budget exhaustion.

    ``days`` counts applied day steps. ``exhausted`` marks that the day
    budget ran out before a bankrupt state was reached; ``final`` is then
    the last state computed, not a bankrupt one. ``states`` (when
    recorded) holds the day-by-day states including the start, so
    ``states[k]`` is the state after ``k`` days.
    """

    days: int
    final: OrgState
    exhausted: bool
    states: tuple[OrgState, ...] | None = None


def day_step(org: OrgState) -> OrgState:
    """Propagate one morning's gentle nudge through the whole hierarchy."""
    signal = _GENTLE_NUDGE
    step = step_employee
    out = []
    for employee in org:
        employee, signal = step(employee, signal)
        out.append(employee)
    if signal is _HARD_PUSH:
        out.append(_MOTIVATED)
    return tuple(out)


def day_step_traced(org: OrgState) -> DayTrace:
    """Like :func:`day_step` but records every intermediate event."""
    signal = _GENTLE_NUDGE
    events = []
    out = []
    for employee in org:
        received = signal
        employee, signal = step_employee(employee, received)
        events.append(DayEvent(received, employee, signal))
        out.append(employee)
    hired = signal is _HARD_PUSH
    if hired:
        out.append(_MOTIVATED)
    return DayTrace(start=org, events=tuple(events), hired=hired, end=tuple(out))


def is_bankrupt(org: OrgState) -> bool:
    """True iff every member except possibly the last is a zombie."""
    for employee in org[:-1]:
        if employee is not _ZOMBIE:
            return False
    return True


def normalize(org: OrgState) -> OrgState:
    """Drop leading zombies; the decoded value is unchanged."""
    i = 0
    n = len(org)
    while i < n and org[i] is _ZOMBIE:
        i += 1
    return org[i:]


def run_until_bankrupt(
    org: OrgState,
    max_days: int = DEFAULT_MAX_DAYS,
    record_states: bool = False,
) -> BankruptcyRun:
    """Iterate day steps until the first bankrupt state.

    Returns immediately with ``days=0`` if ``org`` is already bankrupt.
    A run that uses up ``max_days`` without reaching bankruptcy comes back
    with ``exhausted=True``; that outcome is an engineering cap, not a
    statement about the dynamics.
    """
    if max_days < 0:
        raise ValueError(f"max_days must be >= 0, got {max_days}")
    states = [org] if record_states else None
    days = 0
    current = org
    while not is_bankrupt(current):
        if days >= max_days:
            return BankruptcyRun(
                days=days,
                final=current,
                exhausted=True,
                states=tuple(states) if states is not None else None,
            )
        current = day_step(current)
        days += 1
        if states is not None:
            states.append(current)
    return BankruptcyRun(
        days=days,
        final=current,
        exhausted=False,
        states=tuple(states) if states is not None else None,
    )


def org_to_text(org: OrgState) -> str:
    """Letter form over {Z, C, M}, head of the hierarchy first."""
    return "".join(state_letter(employee) for employee in org)


def org_from_text(text: str) -> OrgState:
    """Parse the letter form; rejects characters outside {Z, C, M}."""
    return tuple(state_from_letter(ch) for ch in text)
