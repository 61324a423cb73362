"""Line-oriented text format for automata.

Directives (one per line, ``#`` starts a comment):

    alphabet <token> ...
    state <id>
    initial <id> ...
    translucent <state> <word> ...
    delta <state> <token> <target> ...
    sentinel <state> accept|reject|goto <target> ...

States without a ``sentinel`` line reject at the end of the tape; states
without a ``translucent`` line have no translucent words.  Words are
written contiguously when every token is a single character, otherwise
tokens are joined with ``.``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .core import (
    Automaton,
    EmptyInitialSet,
    Goto,
    Halt,
    InvalidAutomatonError,
    PrefixCodeViolation,
    ReadableLetterPrefix,
    SentinelAction,
    Word,
    state_name_ok,
    token_name_ok,
    validate,
)


@dataclass(frozen=True)
class Diagnostic:
    line: int  # 0 when the problem is not tied to one line
    message: str

    def __str__(self) -> str:
        where = f"line {self.line}" if self.line else "file"
        return f"{where}: {self.message}"


class FormatError(ValueError):
    def __init__(self, diagnostics: Sequence[Diagnostic]):
        self.diagnostics = tuple(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


class WordSyntaxError(ValueError):
    pass


def format_word(word: Word, alphabet: Sequence[str]) -> str:
    if all(len(t) == 1 for t in alphabet):
        return "".join(word)
    return ".".join(word)


def parse_word(text: str, alphabet: Sequence[str]) -> Word:
    """Inverse of :func:`format_word`; raises :class:`WordSyntaxError`."""
    if text == "":
        return ()
    tokens = set(alphabet)
    if "." in text:
        parts = text.split(".")
        if "" in parts:
            raise WordSyntaxError(f"empty token in word {text!r}")
    elif all(len(t) == 1 for t in alphabet):
        parts = list(text)
    else:
        parts = [text]
    for p in parts:
        if p not in tokens:
            raise WordSyntaxError(f"unknown token {p!r} in word {text!r}")
    return tuple(parts)


def _split_lines(text: str) -> list[tuple[int, list[str]]]:
    out = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        fields = raw.split("#", 1)[0].split()
        if fields:
            out.append((lineno, fields))
    return out


def parse(text: str) -> Automaton:
    """Parse and validate; raises :class:`FormatError` carrying every
    diagnostic (with line numbers) instead of just the first."""
    lines = _split_lines(text)
    diags: list[Diagnostic] = []

    # first pass: declarations, so later lines may refer forward
    alphabet: list[str] = []
    states: list[str] = []
    for lineno, fields in lines:
        directive, args = fields[0], fields[1:]
        if directive == "alphabet":
            if not args:
                diags.append(Diagnostic(lineno, "alphabet line declares no tokens"))
            for t in args:
                if not token_name_ok(t):
                    diags.append(Diagnostic(lineno, f"invalid token name {t!r}"))
                elif t not in alphabet:
                    alphabet.append(t)
        elif directive == "state":
            if len(args) != 1:
                diags.append(Diagnostic(lineno, "expected: state <id>"))
                continue
            if not state_name_ok(args[0]):
                diags.append(Diagnostic(lineno, f"invalid state name {args[0]!r}"))
            elif args[0] not in states:
                states.append(args[0])

    token_set = set(alphabet)
    state_set = set(states)

    def word_at(lineno: int, text_word: str) -> Word | None:
        try:
            return parse_word(text_word, alphabet)
        except WordSyntaxError as e:
            diags.append(Diagnostic(lineno, str(e)))
            return None

    initials: list[str] = []
    translucent: dict[str, list[Word]] = {}
    translucent_line: dict[str, int] = {}
    letter_delta: dict[tuple[str, str], list[str]] = {}
    sentinel: dict[str, SentinelAction] = {}

    def known_state(lineno: int, q: str, what: str) -> bool:
        if q not in state_set:
            diags.append(Diagnostic(lineno, f"undeclared state {q!r} in {what}"))
            return False
        return True

    for lineno, fields in lines:
        directive, args = fields[0], fields[1:]
        if directive in ("alphabet", "state"):
            continue
        if directive == "initial":
            if not args:
                diags.append(Diagnostic(lineno, "expected: initial <id> ..."))
            for q in args:
                if known_state(lineno, q, "initial line") and q not in initials:
                    initials.append(q)
        elif directive == "translucent":
            if len(args) < 2:
                diags.append(Diagnostic(lineno, "expected: translucent <state> <word> ..."))
                continue
            q = args[0]
            if not known_state(lineno, q, "translucent line"):
                continue
            translucent_line.setdefault(q, lineno)
            for text_word in args[1:]:
                w = word_at(lineno, text_word)
                if w is not None:
                    translucent.setdefault(q, []).append(w)
        elif directive == "delta":
            if len(args) < 3:
                diags.append(Diagnostic(lineno, "expected: delta <state> <token> <target> ..."))
                continue
            q, t, targets = args[0], args[1], args[2:]
            ok = known_state(lineno, q, "delta line")
            if t not in token_set:
                diags.append(Diagnostic(lineno, f"undeclared token {t!r} in delta line"))
                ok = False
            for p in targets:
                ok = known_state(lineno, p, "delta target") and ok
            if ok:
                bucket = letter_delta.setdefault((q, t), [])
                for p in targets:
                    if p not in bucket:
                        bucket.append(p)
        elif directive == "sentinel":
            if len(args) < 2:
                diags.append(
                    Diagnostic(lineno, "expected: sentinel <state> accept|reject|goto <target> ...")
                )
                continue
            q, kind, targets = args[0], args[1], args[2:]
            if not known_state(lineno, q, "sentinel line"):
                continue
            if q in sentinel:
                diags.append(Diagnostic(lineno, f"conflicting sentinel action for {q!r}"))
                continue
            if kind == "accept" and not targets:
                sentinel[q] = Halt.ACCEPT
            elif kind == "reject" and not targets:
                sentinel[q] = Halt.REJECT
            elif kind == "goto" and targets:
                if all(known_state(lineno, p, "sentinel target") for p in targets):
                    sentinel[q] = Goto(tuple(dict.fromkeys(targets)))
            else:
                diags.append(
                    Diagnostic(lineno, "expected: sentinel <state> accept|reject|goto <target> ...")
                )
        else:
            diags.append(Diagnostic(lineno, f"unknown directive {directive!r}"))

    for q in states:
        sentinel.setdefault(q, Halt.REJECT)

    for v in validate(states, alphabet, initials, translucent, letter_delta, sentinel):
        if isinstance(v, (PrefixCodeViolation, ReadableLetterPrefix)):
            diags.append(Diagnostic(translucent_line.get(v.state, 0), str(v)))
        elif isinstance(v, EmptyInitialSet):
            diags.append(Diagnostic(0, str(v)))
        elif not diags:  # anything else should already carry a line number
            diags.append(Diagnostic(0, str(v)))

    if diags:
        raise FormatError(sorted(diags, key=lambda d: d.line))
    try:
        return Automaton(states, alphabet, initials, translucent, letter_delta, sentinel)
    except InvalidAutomatonError as e:  # pragma: no cover - defensive
        raise FormatError([Diagnostic(0, str(v)) for v in e.violations])


def serialize(a: Automaton) -> str:
    """Canonical text form; ``parse(serialize(a))`` describes the same
    automaton and serializing again is a byte-level fixed point."""
    lines = ["alphabet " + " ".join(a.alphabet)]
    lines += [f"state {q}" for q in a.states]
    lines.append("initial " + " ".join(a.initials))
    for q in a.states:
        words = a.translucent[q]
        if words:
            lines.append(f"translucent {q} " + " ".join(format_word(w, a.alphabet) for w in words))
    for q in a.states:
        for t in a.alphabet:
            targets = a.letter_delta.get((q, t))
            if targets:
                lines.append(f"delta {q} {t} " + " ".join(targets))
    for q in a.states:
        action = a.sentinel[q]
        if action is Halt.ACCEPT:
            lines.append(f"sentinel {q} accept")
        elif isinstance(action, Goto):
            lines.append(f"sentinel {q} goto " + " ".join(action.targets))
    return "\n".join(lines) + "\n"
