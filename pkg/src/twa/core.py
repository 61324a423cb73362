"""Domain types for finite automata with translucent words.

An automaton here is a finite-state device that reads a tape ended by a
reserved end-of-tape marker.  In every state some finite set of words is
*translucent*: the automaton cannot see those words, so the next letter it
actually reads is the first letter that follows a maximal translucent
prefix.  Reading deletes that letter from the tape.  At the end of the
tape the automaton either halts (accept/reject) or -- in the *repetitive*
variant -- jumps back to the start of the shortened tape in a new state.

This module holds the validated automaton structure and its static
checks; the step semantics live in :mod:`twa.engine`.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Mapping, Sequence, Union

SENTINEL_GLYPH = "◁"  # the end-of-tape marker, rendered in traces
WORD_JOINER = "."  # joins tokens of a word in text form

Word = tuple[str, ...]
EMPTY_WORD: Word = ()


class Halt(Enum):
    """Immediate verdict when the whole remaining tape is translucent."""

    ACCEPT = "accept"
    REJECT = "reject"


@dataclass(frozen=True)
class Goto:
    """Sentinel action of a repetitive automaton: instead of halting at the
    end-of-tape marker, continue scanning the unchanged tape from the left in
    one of the target states."""

    targets: tuple[str, ...]

    def __post_init__(self) -> None:
        if not self.targets:
            raise ValueError("goto action needs at least one target state")


SentinelAction = Union[Halt, Goto]


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class EmptyInitialSet:
    def __str__(self) -> str:
        return "the set of initial states is empty"


@dataclass(frozen=True)
class MissingSentinel:
    state: str

    def __str__(self) -> str:
        return f"state {self.state!r} has no end-of-tape action"


@dataclass(frozen=True)
class UndeclaredState:
    state: str
    where: str

    def __str__(self) -> str:
        return f"undeclared state {self.state!r} used in {self.where}"


@dataclass(frozen=True)
class UndeclaredToken:
    token: str
    where: str

    def __str__(self) -> str:
        return f"undeclared token {self.token!r} used in {self.where}"


@dataclass(frozen=True)
class BadStateName:
    state: str

    def __str__(self) -> str:
        return f"invalid state name {self.state!r}"


@dataclass(frozen=True)
class BadTokenName:
    token: str

    def __str__(self) -> str:
        return f"invalid token name {self.token!r}"


@dataclass(frozen=True)
class EmptyTranslucentWord:
    state: str

    def __str__(self) -> str:
        return f"state {self.state!r} declares the empty word as translucent"


@dataclass(frozen=True)
class PrefixCodeViolation:
    state: str
    shorter: Word
    longer: Word

    def __str__(self) -> str:
        u, v = "".join(self.shorter), "".join(self.longer)
        return (
            f"translucent words of state {self.state!r} are not a prefix code:"
            f" {u!r} is a prefix of {v!r}"
        )


@dataclass(frozen=True)
class ReadableLetterPrefix:
    state: str
    word: Word
    letter: str

    def __str__(self) -> str:
        return (
            f"translucent word {''.join(self.word)!r} of state {self.state!r}"
            f" begins with {self.letter!r}, which that state can read"
        )


Violation = Union[
    EmptyInitialSet,
    MissingSentinel,
    UndeclaredState,
    UndeclaredToken,
    BadStateName,
    BadTokenName,
    EmptyTranslucentWord,
    PrefixCodeViolation,
    ReadableLetterPrefix,
]


class InvalidAutomatonError(ValueError):
    """Raised when an automaton description violates a static restriction."""

    def __init__(self, violations: Sequence[Violation]):
        self.violations = tuple(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


def token_name_ok(name: str) -> bool:
    if not name or SENTINEL_GLYPH in name or "#" in name or WORD_JOINER in name:
        return False
    return not any(c.isspace() for c in name)


def state_name_ok(name: str) -> bool:
    # unlike tokens, state names may contain the word joiner
    if not name or SENTINEL_GLYPH in name or "#" in name:
        return False
    return not any(c.isspace() for c in name)


def is_prefix(u: Word, v: Word) -> bool:
    return len(u) <= len(v) and v[: len(u)] == u


def _normalize(
    states: Iterable[str],
    alphabet: Iterable[str],
    initials: Iterable[str],
    translucent: Mapping[str, Iterable[Word]] | None,
    letter_delta: Mapping[tuple[str, str], Iterable[str]] | None,
    sentinel: Mapping[str, SentinelAction] | None,
):
    states_t = tuple(dict.fromkeys(states))
    alphabet_t = tuple(dict.fromkeys(alphabet))
    initials_t = tuple(dict.fromkeys(initials))
    def _words(ws: Iterable[Word]) -> tuple[Word, ...]:
        return tuple(dict.fromkeys(tuple(w) for w in ws))

    trans = {q: _words((translucent or {}).get(q, ())) for q in states_t}
    for q in (translucent or {}):
        if q not in trans:  # keep undeclared keys visible to validation
            trans[q] = _words(translucent[q])
    delta: dict[tuple[str, str], tuple[str, ...]] = {}
    for key, targets in (letter_delta or {}).items():
        tgt = tuple(dict.fromkeys(targets))
        if tgt:
            delta[(key[0], key[1])] = tgt
    sent = dict(sentinel or {})
    return states_t, alphabet_t, initials_t, trans, delta, sent


def validate(
    states: Iterable[str],
    alphabet: Iterable[str],
    initials: Iterable[str],
    translucent: Mapping[str, Iterable[Word]] | None = None,
    letter_delta: Mapping[tuple[str, str], Iterable[str]] | None = None,
    sentinel: Mapping[str, SentinelAction] | None = None,
) -> list[Violation]:
    """Every static violation in the description, in a stable order."""
    states_t, alphabet_t, initials_t, trans, delta, sent = _normalize(
        states, alphabet, initials, translucent, letter_delta, sentinel
    )
    out: list[Violation] = []
    state_set = set(states_t)
    token_set = set(alphabet_t)

    for q in states_t:
        if not state_name_ok(q):
            out.append(BadStateName(q))
    for t in alphabet_t:
        if not token_name_ok(t):
            out.append(BadTokenName(t))

    if not initials_t:
        out.append(EmptyInitialSet())
    for q in initials_t:
        if q not in state_set:
            out.append(UndeclaredState(q, "initial set"))

    for q, words in trans.items():
        if q not in state_set:
            out.append(UndeclaredState(q, "translucency map"))
        for w in words:
            for t in w:
                if t not in token_set:
                    out.append(UndeclaredToken(t, f"translucent word of {q!r}"))

    for (q, t), targets in delta.items():
        if q not in state_set:
            out.append(UndeclaredState(q, "transition source"))
        if t not in token_set:
            out.append(UndeclaredToken(t, f"transition on {q!r}"))
        for p in targets:
            if p not in state_set:
                out.append(UndeclaredState(p, f"transition target of ({q!r}, {t!r})"))

    for q, act in sent.items():
        if q not in state_set:
            out.append(UndeclaredState(q, "end-of-tape action map"))
        if isinstance(act, Goto):
            for p in act.targets:
                if p not in state_set:
                    out.append(UndeclaredState(p, f"end-of-tape target of {q!r}"))
    for q in states_t:
        if q not in sent:
            out.append(MissingSentinel(q))

    readable = _readable_map(states_t, delta)
    for q in states_t:
        words = trans.get(q, ())
        for w in words:
            if not w:
                out.append(EmptyTranslucentWord(q))
        seen: list[Word] = []
        for w in words:
            if not w:
                continue
            for v in seen:
                if is_prefix(v, w):
                    out.append(PrefixCodeViolation(q, v, w))
                elif is_prefix(w, v):
                    out.append(PrefixCodeViolation(q, w, v))
            if w not in seen:
                seen.append(w)
            if w[0] in readable.get(q, frozenset()):
                out.append(ReadableLetterPrefix(q, w, w[0]))
    return out


def _readable_map(
    states: tuple[str, ...], delta: Mapping[tuple[str, str], tuple[str, ...]]
) -> dict[str, frozenset[str]]:
    by_state: dict[str, set[str]] = {q: set() for q in states}
    for (q, t), targets in delta.items():
        if targets and q in by_state:
            by_state[q].add(t)
    return {q: frozenset(s) for q, s in by_state.items()}


# ---------------------------------------------------------------------------
# the automaton proper
# ---------------------------------------------------------------------------


class _TrieNode:
    __slots__ = ("children", "word")

    def __init__(self) -> None:
        self.children: dict[str, _TrieNode] = {}
        self.word: Word | None = None  # set on the node ending a translucent word


def _build_trie(words: tuple[Word, ...]) -> _TrieNode:
    root = _TrieNode()
    for w in words:
        node = root
        for tok in w:
            node = node.children.setdefault(tok, _TrieNode())
        node.word = w
    return root


class Automaton:
    """A validated automaton with translucent words.

    Instances are immutable by convention and can only be built from a
    description that passes :func:`validate`; construction raises
    :class:`InvalidAutomatonError` otherwise.
    """

    __slots__ = (
        "states",
        "alphabet",
        "initials",
        "translucent",
        "letter_delta",
        "sentinel",
        "readable",
        "_tries",
        "__weakref__",
    )

    def __init__(
        self,
        states: Iterable[str],
        alphabet: Iterable[str],
        initials: Iterable[str],
        translucent: Mapping[str, Iterable[Word]] | None = None,
        letter_delta: Mapping[tuple[str, str], Iterable[str]] | None = None,
        sentinel: Mapping[str, SentinelAction] | None = None,
    ):
        parts = _normalize(states, alphabet, initials, translucent, letter_delta, sentinel)
        violations = validate(*_as_validate_args(parts))
        if violations:
            raise InvalidAutomatonError(violations)
        self.states, self.alphabet, self.initials, trans, delta, sent = parts
        self.translucent: dict[str, tuple[Word, ...]] = trans
        self.letter_delta: dict[tuple[str, str], tuple[str, ...]] = delta
        self.sentinel: dict[str, SentinelAction] = sent
        self.readable: dict[str, frozenset[str]] = _readable_map(self.states, delta)
        self._tries = {q: _build_trie(trans[q]) for q in self.states}

    def trie(self, state: str) -> _TrieNode:
        return self._tries[state]

    def __repr__(self) -> str:
        return (
            f"<Automaton states={len(self.states)} alphabet={len(self.alphabet)}"
            f" initials={list(self.initials)}>"
        )


def _as_validate_args(parts):
    states_t, alphabet_t, initials_t, trans, delta, sent = parts
    return states_t, alphabet_t, initials_t, trans, delta, sent


@dataclass(frozen=True)
class ClassReport:
    """Where an automaton sits in the deterministic/repetitive taxonomy.

    ``k`` is the largest number of translucent words any state carries and
    ``ell`` the length of the longest translucent word (0 for none).
    """

    deterministic: bool
    repetitive: bool
    k: int
    ell: int


def classify(a: Automaton) -> ClassReport:
    det = len(a.initials) == 1
    if det:
        det = all(len(t) <= 1 for t in a.letter_delta.values())
    if det:
        det = all(
            len(act.targets) == 1 for act in a.sentinel.values() if isinstance(act, Goto)
        )
    repetitive = any(isinstance(act, Goto) for act in a.sentinel.values())
    k = max((len(ws) for ws in a.translucent.values()), default=0)
    ell = max((len(w) for ws in a.translucent.values() for w in ws), default=0)
    return ClassReport(det, repetitive, k, ell)
