"""Finite automata with translucent words.

Exact step semantics for deterministic and nondeterministic automata
whose states can skip over prefix-code words, including the repetitive
variant that re-scans the tape at the end marker; plus example machines,
a Post-correspondence reduction, brute-force language oracles, a text
format, and a CLI.
"""

from .core import (
    Automaton,
    ClassReport,
    Goto,
    Halt,
    InvalidAutomatonError,
    SentinelAction,
    Word,
    classify,
    validate,
)
from .engine import (
    Accepted,
    AllTranslucent,
    Configuration,
    Dead,
    Diverged,
    NotALetterStepError,
    NotDeterministicError,
    ReadAt,
    RejectReason,
    Rejected,
    RunResult,
    ScanResult,
    Successors,
    accepts,
    check_append_property,
    run_deterministic,
    run_from,
    run_nondeterministic,
    scan,
    step,
)
from .kernel import BACKEND_NAME
from .oracle import (
    BudgetExceededError,
    MismatchReport,
    ParikhVector,
    compare_language,
    enumerate_accepted,
    letter_equivalent,
    parikh,
)
from .textfmt import FormatError, parse, serialize

__all__ = [
    "Accepted",
    "AllTranslucent",
    "Automaton",
    "BACKEND_NAME",
    "BudgetExceededError",
    "ClassReport",
    "Configuration",
    "Dead",
    "Diverged",
    "FormatError",
    "Goto",
    "Halt",
    "InvalidAutomatonError",
    "MismatchReport",
    "NotALetterStepError",
    "NotDeterministicError",
    "ParikhVector",
    "ReadAt",
    "RejectReason",
    "Rejected",
    "RunResult",
    "ScanResult",
    "SentinelAction",
    "Successors",
    "Word",
    "accepts",
    "check_append_property",
    "classify",
    "compare_language",
    "enumerate_accepted",
    "letter_equivalent",
    "parikh",
    "parse",
    "run_deterministic",
    "run_from",
    "run_nondeterministic",
    "scan",
    "serialize",
    "step",
    "validate",
]
