"""Organization-dynamics laboratory.

A fixed three-state employee machine, day-step dynamics over ordered
hierarchies, the base-3 {0,2,4} numeral view under which one day equals
one step of the even-to-even Collatz map g, an internal string-rewriting
engine for the same dynamics, and batch verification tooling.
"""

from .codec import decode, encode, org_from_digits, org_to_digits
from .collatz import (
    STOP_SET,
    Trajectory,
    check_bisimulation,
    collatz_f,
    collatz_g,
    f_g_consistency,
    g_trajectory,
)
from .mealy import EmployeeState, Signal, digit_of, state_of_digit, step_employee
from .organization import (
    DEFAULT_MAX_DAYS,
    BankruptcyRun,
    DayEvent,
    DayTrace,
    OrgState,
    day_step,
    day_step_traced,
    is_bankrupt,
    normalize,
    org_from_text,
    org_to_text,
    run_until_bankrupt,
)
from .rewriting import (
    DEFAULT_FUEL,
    RewriteOutcome,
    RewriteRun,
    Srs,
    SrsMode,
    SrsRule,
    apply_at,
    export_tpdb_srs,
    export_tpdb_trs,
    generate_srs,
    normalize_word,
    org_of_word,
    word_of_org,
)
from .verify import (
    RunConfig,
    Summary,
    VerifyRecord,
    summarize,
    verify_one,
    verify_range,
)

__version__ = "0.1.0"
