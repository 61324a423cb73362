"""Command-line front end.

Exit codes: 0 for success (accepted word, agreeing comparison), 1 for a
negative outcome (rejected word, mismatching comparison, non-solution),
2 for usage, syntax, or validation problems.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .core import SENTINEL_GLYPH, classify
from .engine import (
    Accepted,
    Configuration,
    Diverged,
    HaltStep,
    ReadStep,
    Rejected,
    RejectReason,
    RunResult,
    SentinelStep,
    run_deterministic,
    run_nondeterministic,
)
from .core import Halt
from .examples import (
    build_a_2lin,
    build_a_2lin1,
    build_a_ex,
    build_l_lin_union,
    build_l_vee_nfawtl,
)
from .oracle import (
    BudgetExceededError,
    InvalidLetterError,
    PREDICATES,
    compare_language,
    enumerate_accepted,
)
from .reductions import (
    EmptySolutionError,
    IndexOutOfRangeError,
    PairsFormatError,
    ReductionAlphabet,
    canonical_witness,
    compile_pcp,
    parse_pairs_file,
)
from .textfmt import FormatError, WordSyntaxError, format_word, parse, parse_word

EXAMPLES = {
    "a_ex": build_a_ex,
    "a_2lin": build_a_2lin,
    "a_2lin1": build_a_2lin1,
    "l_lin_union": build_l_lin_union,
    "l_vee_nfawtl": build_l_vee_nfawtl,
}


class _CliError(Exception):
    def __init__(self, *messages: str):
        self.messages = messages


# ---------------------------------------------------------------------------
# trace rendering
# ---------------------------------------------------------------------------


def config_text(config: Configuration, alphabet) -> str:
    tape = format_word(config.tape, alphabet)
    if tape:
        return f"{config.state} {tape} {SENTINEL_GLYPH}"
    return f"{config.state} {SENTINEL_GLYPH}"


def verdict_text(result: RunResult) -> str:
    if isinstance(result, Accepted):
        return "ACCEPT"
    if isinstance(result, Diverged):
        return "DIVERGED"
    return f"REJECT({result.reason.value})"


def render_trace(result: RunResult, alphabet) -> list[str]:
    steps = getattr(result, "trace", ())
    lines = []
    for i, st in enumerate(steps):
        lhs = config_text(st.config, alphabet)
        action = st.action
        if isinstance(action, ReadStep):
            arrow = f"--read {action.letter}@{action.position}-->"
            rhs = config_text(steps[i + 1].config, alphabet)
        elif isinstance(action, SentinelStep):
            arrow = "--sentinel-->"
            if i + 1 < len(steps):
                rhs = config_text(steps[i + 1].config, alphabet)
            else:
                rhs = config_text(Configuration(action.target, st.config.tape), alphabet)
        else:
            if action.dead_position is not None:
                arrow = f"--dead@{action.dead_position}-->"
                rhs = "REJECT(dead)"
            else:
                arrow = "--sentinel-->"
                rhs = "ACCEPT" if action.verdict is Halt.ACCEPT else "REJECT(sentinel)"
        lines.append(f"{lhs}  {arrow}  {rhs}")
    if isinstance(result, Diverged):
        lines.append("DIVERGED")
    if isinstance(result, Rejected) and result.reason is RejectReason.EXHAUSTED:
        lines.append("REJECT(exhausted)")
    return lines


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def _read_file(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as e:
        raise _CliError(f"cannot read {path}: {e}")


def _load_automaton(path: str):
    try:
        return parse(_read_file(path))
    except FormatError as e:
        raise _CliError(*[str(d) for d in e.diagnostics])


def cmd_validate(ns) -> int:
    _load_automaton(ns.file)
    print("valid")
    return 0


def cmd_run(ns) -> int:
    a = _load_automaton(ns.file)
    try:
        word = parse_word(ns.word, a.alphabet)
    except WordSyntaxError as e:
        raise _CliError(str(e))
    if classify(a).deterministic:
        result: RunResult = run_deterministic(a, word)
    else:
        ok, trace = run_nondeterministic(a, word)
        result = Accepted(trace) if ok else Rejected(RejectReason.EXHAUSTED)
    if ns.trace:
        for line in render_trace(result, a.alphabet):
            print(line)
    else:
        print(verdict_text(result))
    return 0 if isinstance(result, Accepted) else 1


def cmd_enumerate(ns) -> int:
    a = _load_automaton(ns.file)
    try:
        words = enumerate_accepted(a, ns.max_len, ns.budget)
    except BudgetExceededError as e:
        raise _CliError(str(e))
    for w in words:
        print(format_word(w, a.alphabet))
    return 0


def cmd_compare(ns) -> int:
    a = _load_automaton(ns.file)
    try:
        report = compare_language(a, PREDICATES[ns.predicate], ns.max_len, ns.budget)
    except (BudgetExceededError, InvalidLetterError) as e:
        raise _CliError(str(e))
    for w in report.false_accepts:
        print(f"false-accept {format_word(w, a.alphabet)}")
    for w in report.false_rejects:
        print(f"false-reject {format_word(w, a.alphabet)}")
    mismatches = len(report.false_accepts) + len(report.false_rejects)
    print(
        f"checked {report.total_checked} words up to length {report.max_len}:"
        f" {mismatches} mismatches"
    )
    return 0 if report.agree else 1


def cmd_classify(ns) -> int:
    report = classify(_load_automaton(ns.file))
    det = "deterministic" if report.deterministic else "nondeterministic"
    rep = "repetitive" if report.repetitive else "non-repetitive"
    print(f"{det} {rep} k={report.k} ell={report.ell}")
    return 0


def cmd_example(ns) -> int:
    from .textfmt import serialize

    print(serialize(EXAMPLES[ns.name]()), end="")
    return 0


def _load_instance(path: str):
    try:
        return parse_pairs_file(_read_file(path))
    except PairsFormatError as e:
        raise _CliError(*[f"line {n}: {m}" if n else m for n, m in e.diagnostics])


def cmd_pcp_compile(ns) -> int:
    from .textfmt import serialize

    print(serialize(compile_pcp(_load_instance(ns.file), bounded=ns.bounded)), end="")
    return 0


def cmd_pcp_witness(ns) -> int:
    inst = _load_instance(ns.file)
    try:
        report = canonical_witness(inst, ns.indices)
    except (EmptySolutionError, IndexOutOfRangeError) as e:
        raise _CliError(str(e))
    tokens = ReductionAlphabet.for_instance(inst).tokens
    print("witness " + format_word(report.word, tokens))
    print("f " + "".join(report.f_image))
    print("g " + "".join(report.g_image))
    print("solution " + ("yes" if report.is_solution else "no"))
    return 0 if report.is_solution else 1


# ---------------------------------------------------------------------------
# argument parsing
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twa", description="Finite automata with translucent words."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an automaton file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("run", help="run an automaton on one word")
    p.add_argument("file")
    p.add_argument("word")
    p.add_argument("--trace", action="store_true", help="print one line per step")
    p.set_defaults(func=cmd_run)

    p = sub.add_parser("enumerate", help="list all accepted words up to a length")
    p.add_argument("file")
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("compare", help="compare against a reference predicate")
    p.add_argument("file")
    p.add_argument("--predicate", required=True, choices=sorted(PREDICATES))
    p.add_argument("--max-len", type=int, required=True)
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("classify", help="report determinism/repetitiveness/k/ell")
    p.add_argument("file")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("example", help="print a built-in automaton")
    p.add_argument("name", choices=sorted(EXAMPLES))
    p.set_defaults(func=cmd_example)

    p = sub.add_parser("pcp", help="Post correspondence reductions")
    pcp_sub = p.add_subparsers(dest="pcp_command", required=True)

    q = pcp_sub.add_parser("compile", help="compile a pairs file to an automaton")
    q.add_argument("file")
    q.add_argument("--bounded", action="store_true")
    q.set_defaults(func=cmd_pcp_compile)

    q = pcp_sub.add_parser("witness", help="canonical tape for an index sequence")
    q.add_argument("file")
    q.add_argument("indices", nargs="+", type=int)
    q.set_defaults(func=cmd_pcp_witness)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code else 0
    try:
        return ns.func(ns)
    except _CliError as e:
        for m in e.messages:
            print(m, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
