"""The single-employee machine: three states of mind, two signals.

An employee is a fixed Mealy machine. It receives a signal from above
(gentle nudge or hard push), moves to a new state of mind, and emits a
signal for the person below. The three states double as the digits 0, 2,
and 4 of the base-3 numeral encoding used elsewhere in this package.
"""

from __future__ import annotations

from enum import Enum, IntEnum

__all__ = [
    "EmployeeState",
    "Signal",
    "step_employee",
    "digit_of",
    "state_of_digit",
    "state_letter",
    "state_from_letter",
    "signal_letter",
    "signal_from_letter",
]


class EmployeeState(IntEnum):
    """State of mind of one employee; the int value is its digit."""

    ZOMBIE = 0
    CONFUSED = 2
    MOTIVATED = 4


class Signal(Enum):
    """Token passed down the hierarchy; the value is its letter form."""

    GENTLE_NUDGE = "G"
    HARD_PUSH = "H"


_Z = EmployeeState.ZOMBIE
_C = EmployeeState.CONFUSED
_M = EmployeeState.MOTIVATED
_G = Signal.GENTLE_NUDGE
_H = Signal.HARD_PUSH

# Total transition table: (state, input) -> (next state, output).
_STEP: dict[tuple[EmployeeState, Signal], tuple[EmployeeState, Signal]] = {
    (_Z, _G): (_Z, _G),
    (_Z, _H): (_C, _H),
    (_C, _G): (_Z, _H),
    (_C, _H): (_M, _G),
    (_M, _G): (_C, _G),
    (_M, _H): (_M, _H),
}

_STATE_OF_DIGIT = {0: _Z, 2: _C, 4: _M}

_STATE_TO_LETTER = {_Z: "Z", _C: "C", _M: "M"}
_LETTER_TO_STATE = {"Z": _Z, "C": _C, "M": _M}
_SIGNAL_TO_LETTER = {_G: "G", _H: "H"}
_LETTER_TO_SIGNAL = {"G": _G, "H": _H}


def step_employee(state: EmployeeState, signal: Signal) -> tuple[EmployeeState, Signal]:
    """One employee processes one incoming signal."""
    return _STEP[state, signal]


def digit_of(state: EmployeeState) -> int:
    """Digit carried by a state: 0, 2, or 4."""
    return int(state)


def state_of_digit(digit: int) -> EmployeeState:
    """Inverse of :func:`digit_of`; rejects anything outside {0, 2, 4}."""
    try:
        return _STATE_OF_DIGIT[digit]
    except (KeyError, TypeError):
        raise ValueError(f"invalid digit {digit!r}: must be 0, 2, or 4") from None


def state_letter(state: EmployeeState) -> str:
    return _STATE_TO_LETTER[state]


def state_from_letter(letter: str) -> EmployeeState:
    try:
        return _LETTER_TO_STATE[letter]
    except KeyError:
        raise ValueError(f"invalid state letter {letter!r}: must be Z, C, or M") from None


def signal_letter(signal: Signal) -> str:
    return _SIGNAL_TO_LETTER[signal]


def signal_from_letter(letter: str) -> Signal:
    try:
        return _LETTER_TO_SIGNAL[letter]
    except KeyError:
        raise ValueError(f"invalid signal letter {letter!r}: must be G or H") from None
