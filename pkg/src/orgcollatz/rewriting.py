"""String-rewriting view of the organization dynamics.

Words live over a 7-symbol alphabet: ``B``/``E`` mark the two ends of the
hierarchy, ``Z``/``C``/``M`` are employee letters, and ``G``/``H`` are
signals in flight. A signal token sits immediately left of the employee
about to receive it, so the six employee transitions become six local
two-symbol rules (e.g. a nudge meeting a confused employee: GC -> ZH).
Two boundary rules finish a day: a nudge reaching the right end vanishes
(GE -> E) and a push reaching the right end hires (HE -> ME).

The SINGLE_DAY system is exactly those eight rules; normalizing
``B G <letters> E`` performs one day. The CHAINED system adds six fused
day-start rules and one cleanup rule so that whole runs to bankruptcy
happen inside the rewriting:

* day-start: ``B C b -> B Z H b`` and ``B M b -> B C G b`` for each
  employee letter ``b``. The head employee's transition is baked in, and
  the guard ``b`` means no rule fires when at most one employee remains,
  making bankrupt words normal forms.
* cleanup: ``B Z -> B`` drops a value-preserving leading zombie, which is
  also what makes a non-zombie head (or a bankrupt word) appear.

Cleanup may fire mid-day and a new day may start while the previous
signal is still in flight; signals cannot overtake one another, so the
normal form is unaffected. That independence is checked empirically by
the strategy-fuzzing tests rather than proved here.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum

from .organization import OrgState, org_from_text, org_to_text

__all__ = [
    "ALPHABET",
    "DEFAULT_FUEL",
    "SrsMode",
    "SrsRule",
    "Srs",
    "RewriteOutcome",
    "RewriteStep",
    "RewriteRun",
    "generate_srs",
    "apply_at",
    "normalize_word",
    "word_of_org",
    "org_of_word",
    "export_tpdb_srs",
    "export_tpdb_trs",
]

ALPHABET = "BEZCMGH"

DEFAULT_FUEL = 10_000_000


class SrsMode(Enum):
    SINGLE_DAY = "single-day"
    CHAINED = "chained"


@dataclass(frozen=True, slots=True)
class SrsRule:
    lhs: str
    rhs: str


@dataclass(frozen=True, slots=True)
class Srs:
    """An immutable rule list plus the indices of the day-start rules."""

    mode: SrsMode
    rules: tuple[SrsRule, ...]
    day_start_indices: tuple[int, ...]

    def day_start_count(self, run: RewriteRun) -> int:
        """How many day-start rules fired in ``run`` (0 for SINGLE_DAY)."""
        return sum(run.rule_counts[i] for i in self.day_start_indices)


class RewriteOutcome(Enum):
    NORMAL_FORM = "normal-form"
    FUEL_EXHAUSTED = "fuel-exhausted"


@dataclass(frozen=True, slots=True)
class RewriteStep:
    """One applied rewrite: which rule, where, and the word after it."""

    rule_index: int
    position: int
    word: str


@dataclass(frozen=True, slots=True)
class RewriteRun:
    start: str
    final: str
    steps: int
    outcome: RewriteOutcome
    rule_counts: tuple[int, ...]
    log: tuple[RewriteStep, ...] | None = None


def generate_srs(mode: SrsMode) -> Srs:
    """Build the 8-rule SINGLE_DAY or 15-rule CHAINED system."""
    rules = [
        SrsRule("GZ", "ZG"),
        SrsRule("HZ", "CH"),
        SrsRule("GC", "ZH"),
        SrsRule("HC", "MG"),
        SrsRule("GM", "CG"),
        SrsRule("HM", "MH"),
        SrsRule("GE", "E"),
        SrsRule("HE", "ME"),
    ]
    day_start_indices: tuple[int, ...] = ()
    if mode is SrsMode.CHAINED:
        first = len(rules)
        for head, stepped in (("C", "ZH"), ("M", "CG")):
            for guard in "ZCM":
                rules.append(SrsRule("B" + head + guard, "B" + stepped + guard))
        day_start_indices = tuple(range(first, len(rules)))
        rules.append(SrsRule("BZ", "B"))
    return Srs(mode=mode, rules=tuple(rules), day_start_indices=day_start_indices)


def apply_at(word: str, rule: SrsRule, position: int) -> str:
    """Replace the occurrence of ``rule.lhs`` at ``position``."""
    if position < 0 or not word.startswith(rule.lhs, position):
        raise ValueError(
            f"rule {rule.lhs} -> {rule.rhs} does not match {word!r} at position {position}"
        )
    return word[:position] + rule.rhs + word[position + len(rule.lhs):]


def _check_word(word: str) -> None:
    for ch in word:
        if ch not in ALPHABET:
            raise ValueError(f"symbol {ch!r} is not in the alphabet {ALPHABET}")


def _group_by_first(rules: tuple[SrsRule, ...]) -> dict[str, list[tuple[int, str, str]]]:
    groups: dict[str, list[tuple[int, str, str]]] = {}
    for idx, rule in enumerate(rules):
        groups.setdefault(rule.lhs[0], []).append((idx, rule.lhs, rule.rhs))
    return groups


def normalize_word(
    srs: Srs,
    word: str,
    strategy: str = "leftmost",
    fuel: int = DEFAULT_FUEL,
    seed: int = 0,
    trace: bool = False,
) -> RewriteRun:
    """Rewrite ``word`` to a normal form, or stop when ``fuel`` runs out.

    ``strategy`` selects the redex: ``"leftmost"`` and ``"rightmost"``
    take the extremal matching position (lowest rule index on ties), and
    ``"random"`` draws uniformly from all (rule, position) matches using
    a generator seeded with ``seed`` and nothing else. The step log is
    kept only when ``trace`` is set; rule application counts are always
    kept.
    """
    if fuel < 0:
        raise ValueError(f"fuel must be >= 0, got {fuel}")
    if strategy not in ("leftmost", "rightmost", "random"):
        raise ValueError(f"unknown strategy {strategy!r}")
    _check_word(word)

    groups = _group_by_first(srs.rules)
    max_lhs = max(len(rule.lhs) for rule in srs.rules)
    rule_counts = [0] * len(srs.rules)
    log: list[RewriteStep] | None = [] if trace else None
    rng = random.Random(seed) if strategy == "random" else None

    start = word
    steps = 0
    # Leftmost only: no redex begins left of this position. A rewrite at p
    # can create new redexes no further left than p - max_lhs + 1, so the
    # scan never restarts from 0 and long runs stay near-linear.
    scan_from = 0

    while True:
        found = None
        if strategy == "leftmost":
            for pos in range(scan_from, len(word)):
                cands = groups.get(word[pos])
                if not cands:
                    continue
                for idx, lhs, rhs in cands:
                    if word.startswith(lhs, pos):
                        found = (idx, lhs, rhs, pos)
                        break
                if found:
                    break
        elif strategy == "rightmost":
            for pos in range(len(word) - 1, -1, -1):
                cands = groups.get(word[pos])
                if not cands:
                    continue
                for idx, lhs, rhs in cands:
                    if word.startswith(lhs, pos):
                        found = (idx, lhs, rhs, pos)
                        break
                if found:
                    break
        else:
            matches = []
            for pos in range(len(word)):
                cands = groups.get(word[pos])
                if not cands:
                    continue
                for idx, lhs, rhs in cands:
                    if word.startswith(lhs, pos):
                        matches.append((idx, lhs, rhs, pos))
            if matches:
                found = rng.choice(matches)

        if found is None:
            outcome = RewriteOutcome.NORMAL_FORM
            break
        if steps >= fuel:
            outcome = RewriteOutcome.FUEL_EXHAUSTED
            break

        idx, lhs, rhs, pos = found
        word = word[:pos] + rhs + word[pos + len(lhs):]
        steps += 1
        rule_counts[idx] += 1
        if log is not None:
            log.append(RewriteStep(rule_index=idx, position=pos, word=word))
        scan_from = max(0, pos - max_lhs + 1)

    return RewriteRun(
        start=start,
        final=word,
        steps=steps,
        outcome=outcome,
        rule_counts=tuple(rule_counts),
        log=tuple(log) if log is not None else None,
    )


def word_of_org(org: OrgState) -> str:
    """Wrap an organization's letters in the end markers: B ... E."""
    return "B" + org_to_text(org) + "E"


def org_of_word(word: str) -> OrgState:
    """Inverse of :func:`word_of_org` on signal-free words."""
    if len(word) < 2 or word[0] != "B" or word[-1] != "E":
        raise ValueError(f"malformed word {word!r}: expected B ... E markers")
    inner = word[1:-1]
    for ch in inner:
        if ch in "GH":
            raise ValueError(f"word {word!r} contains an in-flight signal {ch!r}")
    return org_from_text(inner)


def export_tpdb_srs(srs: Srs) -> str:
    """Legacy TPDB string-rewriting format, one comma-separated rule per line."""
    lines = ["(RULES"]
    last = len(srs.rules) - 1
    for i, rule in enumerate(srs.rules):
        sep = "," if i < last else ""
        lines.append("  " + " ".join(rule.lhs) + " -> " + " ".join(rule.rhs) + sep)
    lines.append(")")
    return "\n".join(lines) + "\n"


def _unary_term(symbols: str) -> str:
    term = "x"
    for ch in reversed(symbols):
        term = f"{ch}({term})"
    return term


def export_tpdb_trs(srs: Srs) -> str:
    """TPDB term-rewriting format: each symbol becomes a unary function."""
    lines = ["(VAR x)", "(RULES"]
    for rule in srs.rules:
        lines.append(f"  {_unary_term(rule.lhs)} -> {_unary_term(rule.rhs)}")
    lines.append(")")
    return "\n".join(lines) + "\n"
