"""Bijection between even naturals and organization states.

A state is read as a base-3 numeral whose digits come from {0, 2, 4}
(zombie, confused, motivated), most significant digit at the top of the
hierarchy. Every even nonnegative integer has exactly one representation
with no leading zero digit; odd numbers have none. All arithmetic is on
Python ints, so trajectory values never overflow.
"""

from __future__ import annotations

from .mealy import state_of_digit
from .organization import OrgState

__all__ = ["decode", "encode", "org_to_digits", "org_from_digits"]


def decode(org: OrgState) -> int:
    """Value of a state as a {0,2,4} base-3 numeral (always even)."""
    value = 0
    for employee in org:
        value = value * 3 + employee  # EmployeeState is its own digit
    return value


def encode(n: int) -> OrgState:
    """The unique normalized state whose decoded value is ``n``.

    ``encode(0)`` is the empty organization. Raises ``ValueError`` for
    negative or odd input; odd numbers have no representation with an
    all-even digit set.
    """
    if n < 0:
        raise ValueError(f"cannot encode {n}: value must be nonnegative")
    if n % 2:
        raise ValueError(f"cannot encode odd number {n}: only even values are representable")
    digits = []
    while n:
        # Residue mod 3 forces the digit: 0 -> 0, 2 -> 2, 1 -> 4.
        r = n % 3
        d = 4 if r == 1 else r
        digits.append(state_of_digit(d))
        n = (n - d) // 3
    digits.reverse()
    return tuple(digits)


def org_to_digits(org: OrgState) -> str:
    """Digit-string form, e.g. the state for 42 renders as ``"420"``."""
    return "".join(str(int(employee)) for employee in org)


def org_from_digits(text: str) -> OrgState:
    """Parse a digit string over {0, 2, 4} into a state."""
    states = []
    for ch in text:
        if ch not in "024":
            raise ValueError(f"invalid digit {ch!r}: must be one of 0, 2, 4")
        states.append(state_of_digit(int(ch)))
    return tuple(states)
