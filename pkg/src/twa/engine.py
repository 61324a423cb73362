"""Step semantics and run loops for automata with translucent words.

The heart of everything is :func:`scan`: walk the tape left to right,
skipping maximal translucent blocks, until one of three things happens --
a readable letter surfaces, the whole tape turns out translucent, or the
walk gets stuck.  Because each state's translucent words form a prefix
code and never begin with a readable letter, exactly one of the three
outcomes applies and the split of the tape is unique.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum
from typing import Union

from .core import Automaton, Goto, Halt, Word, classify

# ---------------------------------------------------------------------------
# scan outcomes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ReadAt:
    """A readable letter found after a translucent prefix of length ``skip_len``."""

    skip_len: int
    letter: str
    prefix: Word  # the translucent part before the letter
    suffix: Word  # everything after the letter


@dataclass(frozen=True)
class AllTranslucent:
    """The whole tape splits into translucent words (the unique factorization)."""

    factorization: tuple[Word, ...]


@dataclass(frozen=True)
class Dead:
    """The walk got stuck at ``position``: no readable letter and no
    translucent word matches there (or a word match runs off the tape)."""

    position: int


ScanResult = Union[ReadAt, AllTranslucent, Dead]


def scan(a: Automaton, state: str, tape: Word) -> ScanResult:
    readable = a.readable[state]
    root = a.trie(state)
    blocks: list[Word] = []
    n = len(tape)
    p = 0
    while p < n:
        tok = tape[p]
        if tok in readable:
            return ReadAt(p, tok, tape[:p], tape[p + 1 :])
        node = root
        i = p
        matched: Word | None = None
        while i < n:
            node = node.children.get(tape[i])
            if node is None:
                break
            i += 1
            if node.word is not None:
                matched = node.word
                break
        if matched is None:
            return Dead(p)
        blocks.append(matched)
        p = i
    return AllTranslucent(tuple(blocks))


# ---------------------------------------------------------------------------
# single step
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Configuration:
    state: str
    tape: Word


@dataclass(frozen=True)
class Successors:
    configs: tuple[Configuration, ...]


StepOutcome = Union[Successors, Halt]


def step(a: Automaton, config: Configuration) -> StepOutcome:
    """All configurations reachable in one step, or the halting verdict."""
    result = scan(a, config.state, config.tape)
    if isinstance(result, Dead):
        return Halt.REJECT
    if isinstance(result, ReadAt):
        targets = a.letter_delta[(config.state, result.letter)]
        tape = result.prefix + result.suffix
        return Successors(tuple(Configuration(q, tape) for q in targets))
    action = a.sentinel[config.state]
    if isinstance(action, Goto):
        return Successors(tuple(Configuration(q, config.tape) for q in action.targets))
    return action


# ---------------------------------------------------------------------------
# runs and traces
# ---------------------------------------------------------------------------


class RejectReason(Enum):
    DEAD = "dead"  # the scan got stuck
    SENTINEL = "sentinel"  # reached the end-of-tape marker in a rejecting state
    EXHAUSTED = "exhausted"  # no branch of a nondeterministic run accepts


@dataclass(frozen=True)
class ReadStep:
    letter: str
    position: int


@dataclass(frozen=True)
class SentinelStep:
    target: str


@dataclass(frozen=True)
class HaltStep:
    verdict: Halt
    dead_position: int | None = None


TraceAction = Union[ReadStep, SentinelStep, HaltStep]


@dataclass(frozen=True)
class TraceStep:
    config: Configuration
    action: TraceAction


Trace = tuple[TraceStep, ...]


@dataclass(frozen=True)
class Accepted:
    trace: Trace


@dataclass(frozen=True)
class Rejected:
    reason: RejectReason
    trace: Trace = ()


@dataclass(frozen=True)
class Diverged:
    """The run revisited a state at the end-of-tape marker without reading
    anything in between, so it would loop forever.  Not accepting."""

    cycle: tuple[str, ...]
    trace: Trace


RunResult = Union[Accepted, Rejected, Diverged]


class NotDeterministicError(ValueError):
    pass


class NotALetterStepError(ValueError):
    pass


def run_from(a: Automaton, config: Configuration) -> RunResult:
    """Deterministic run from an arbitrary configuration."""
    if not classify(a).deterministic:
        raise NotDeterministicError("run_from needs a deterministic automaton")
    trace: list[TraceStep] = []
    epoch: list[str] = []  # states seen at the tape end since the last read
    while True:
        result = scan(a, config.state, config.tape)
        if isinstance(result, ReadAt):
            target = a.letter_delta[(config.state, result.letter)][0]
            trace.append(TraceStep(config, ReadStep(result.letter, result.skip_len)))
            config = Configuration(target, result.prefix + result.suffix)
            epoch.clear()
            continue
        if isinstance(result, Dead):
            trace.append(TraceStep(config, HaltStep(Halt.REJECT, result.position)))
            return Rejected(RejectReason.DEAD, tuple(trace))
        action = a.sentinel[config.state]
        if action is Halt.ACCEPT:
            trace.append(TraceStep(config, HaltStep(Halt.ACCEPT)))
            return Accepted(tuple(trace))
        if action is Halt.REJECT:
            trace.append(TraceStep(config, HaltStep(Halt.REJECT)))
            return Rejected(RejectReason.SENTINEL, tuple(trace))
        if config.state in epoch:
            cycle = tuple(epoch[epoch.index(config.state) :])
            return Diverged(cycle, tuple(trace))
        epoch.append(config.state)
        target = action.targets[0]
        trace.append(TraceStep(config, SentinelStep(target)))
        config = Configuration(target, config.tape)


def run_deterministic(a: Automaton, word: Word) -> RunResult:
    return run_from(a, Configuration(a.initials[0], tuple(word)))


def accepts(a: Automaton, word: Word) -> bool:
    """Breadth-first membership; works for any automaton."""
    start = [Configuration(q, tuple(word)) for q in a.initials]
    seen = set(start)
    queue = deque(start)
    while queue:
        config = queue.popleft()
        outcome = step(a, config)
        if outcome is Halt.ACCEPT:
            return True
        if outcome is Halt.REJECT:
            continue
        for nxt in outcome.configs:
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return False


def run_nondeterministic(a: Automaton, word: Word) -> tuple[bool, Trace | None]:
    """Breadth-first search of the configuration graph.  On acceptance the
    second component is a witness trace for one accepting branch."""
    start = [Configuration(q, tuple(word)) for q in a.initials]
    parent: dict[Configuration, tuple[Configuration, TraceAction] | None] = {}
    queue: deque[Configuration] = deque()
    for c in start:
        if c not in parent:
            parent[c] = None
            queue.append(c)
    while queue:
        config = queue.popleft()
        result = scan(a, config.state, config.tape)
        if isinstance(result, Dead):
            continue
        if isinstance(result, ReadAt):
            tape = result.prefix + result.suffix
            action = ReadStep(result.letter, result.skip_len)
            for q in a.letter_delta[(config.state, result.letter)]:
                nxt = Configuration(q, tape)
                if nxt not in parent:
                    parent[nxt] = (config, action)
                    queue.append(nxt)
            continue
        sentinel = a.sentinel[config.state]
        if sentinel is Halt.ACCEPT:
            return True, _witness(parent, config)
        if sentinel is Halt.REJECT:
            continue
        for q in sentinel.targets:
            nxt = Configuration(q, config.tape)
            if nxt not in parent:
                parent[nxt] = (config, SentinelStep(q))
                queue.append(nxt)
    return False, None


def _witness(parent, last: Configuration) -> Trace:
    steps: list[TraceStep] = [TraceStep(last, HaltStep(Halt.ACCEPT))]
    cur = last
    while parent[cur] is not None:
        prev, action = parent[cur]
        steps.append(TraceStep(prev, action))
        cur = prev
    steps.reverse()
    return tuple(steps)


def check_append_property(a: Automaton, config: Configuration, suffix: Word) -> bool:
    """Does the letter step from ``config`` survive appending ``suffix``?

    For every successor (q, u) of ``config`` the extended configuration
    (q, u + suffix) must be a successor of (state, tape + suffix).  Raises
    :class:`NotALetterStepError` when the step from ``config`` is not a
    letter-reading step, since the property is about those only.
    """
    result = scan(a, config.state, config.tape)
    if not isinstance(result, ReadAt):
        raise NotALetterStepError("configuration does not perform a letter step")
    base = step(a, config)
    extended = step(a, Configuration(config.state, config.tape + tuple(suffix)))
    if not isinstance(extended, Successors):
        return False
    extended_set = set(extended.configs)
    return all(
        Configuration(c.state, c.tape + tuple(suffix)) in extended_set
        for c in base.configs
    )
