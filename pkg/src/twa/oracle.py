"""Brute-force language probes: exhaustive enumeration, arithmetic
reference predicates, and letter-count comparisons.

Everything here treats the automaton as a black box for membership, so
these functions double as an independent check on the step semantics:
an automaton built for some language and the closed-form predicate for
that language must coincide on every word up to a length bound.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Callable, Iterator, Sequence

from . import engine, kernel
from .core import Automaton, Word

DEFAULT_BUDGET = 2_000_000
BUDGET_ENV = "TWA_BUDGET"


class BudgetExceededError(RuntimeError):
    pass


class InvalidLetterError(ValueError):
    pass


def resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get(BUDGET_ENV)
    return int(env) if env else DEFAULT_BUDGET


def word_count(n_tokens: int, max_len: int) -> int:
    """Number of words of length <= max_len over an alphabet of n_tokens."""
    return sum(n_tokens**length for length in range(max_len + 1))


def _check_budget(a: Automaton, max_len: int, budget: int | None) -> int:
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    total = word_count(len(a.alphabet), max_len)
    allowed = resolve_budget(budget)
    if total > allowed:
        raise BudgetExceededError(
            f"enumerating {total} words exceeds the budget of {allowed}"
        )
    return total


def _all_words(alphabet: Sequence[str], max_len: int) -> Iterator[Word]:
    for length in range(max_len + 1):
        yield from product(alphabet, repeat=length)


def enumerate_accepted(a: Automaton, max_len: int, budget: int | None = None) -> list[Word]:
    """All accepted words of length <= max_len, shortest first and
    lexicographic (in alphabet declaration order) within each length.

    Refuses with :class:`BudgetExceededError` when the word space is larger
    than the budget (default 2_000_000, overridable via ``TWA_BUDGET``).
    """
    _check_budget(a, max_len, budget)
    prog = kernel.program_for(a)
    if prog is not None:
        return kernel.enumerate_words(prog, max_len)
    return [w for w in _all_words(a.alphabet, max_len) if engine.accepts(a, w)]


@dataclass(frozen=True)
class MismatchReport:
    """Where an automaton and a reference predicate disagree."""

    false_accepts: tuple[Word, ...]  # accepted by the automaton, not the predicate
    false_rejects: tuple[Word, ...]  # the other way round
    max_len: int
    total_checked: int

    @property
    def agree(self) -> bool:
        return not self.false_accepts and not self.false_rejects


def compare_language(
    a: Automaton,
    predicate: Callable[[Word], bool],
    max_len: int,
    budget: int | None = None,
) -> MismatchReport:
    """Compare automaton membership against ``predicate`` on every word up
    to ``max_len`` (the empty word included)."""
    total = _check_budget(a, max_len, budget)
    prog = kernel.program_for(a)
    if prog is not None:
        accepted = set(kernel.enumerate_words(prog, max_len))
        member = lambda w: w in accepted
    else:
        member = lambda w: engine.accepts(a, w)
    false_accepts: list[Word] = []
    false_rejects: list[Word] = []
    for w in _all_words(a.alphabet, max_len):
        got, want = member(w), predicate(w)
        if got and not want:
            false_accepts.append(w)
        elif want and not got:
            false_rejects.append(w)
    return MismatchReport(tuple(false_accepts), tuple(false_rejects), max_len, total)


# ---------------------------------------------------------------------------
# letter counting
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ParikhVector:
    """Letter counts of a word over a fixed alphabet order."""

    alphabet: tuple[str, ...]
    counts: tuple[int, ...]

    def __getitem__(self, token: str) -> int:
        return self.counts[self.alphabet.index(token)]


def parikh(word: Word, alphabet_order: Sequence[str]) -> ParikhVector:
    order = tuple(alphabet_order)
    for t in word:
        if t not in order:
            raise InvalidLetterError(f"letter {t!r} outside {order}")
    return ParikhVector(order, tuple(sum(1 for t in word if t == o) for o in order))


def letter_equivalent(
    first: Sequence[Word], second: Sequence[Word], alphabet_order: Sequence[str]
) -> bool:
    """Do two word sets induce the same set of letter-count vectors?"""
    left = {parikh(w, alphabet_order).counts for w in first}
    right = {parikh(w, alphabet_order).counts for w in second}
    return left == right


# ---------------------------------------------------------------------------
# reference predicates over {a, b}
# ---------------------------------------------------------------------------


def _ab_counts(word: Word) -> tuple[int, int]:
    na = nb = 0
    for t in word:
        if t == "a":
            na += 1
        elif t == "b":
            nb += 1
        else:
            raise InvalidLetterError(f"letter {t!r} outside ('a', 'b')")
    return na, nb


def _sorted_equal(word: Word) -> int | None:
    """n when word == a^n b^n (n >= 0), else None."""
    na, nb = _ab_counts(word)
    if na != nb or word != ("a",) * na + ("b",) * nb:
        return None
    return na


def is_llin(word: Word) -> bool:
    """a^n b^n with n >= 1."""
    n = _sorted_equal(word)
    return n is not None and n >= 1


def is_l2lin(word: Word) -> bool:
    """a^(2n) b^(2n) with n >= 1."""
    n = _sorted_equal(word)
    return n is not None and n >= 2 and n % 2 == 0


def is_l2lin1(word: Word) -> bool:
    """a^(2n+1) b^(2n+1) with n >= 0."""
    n = _sorted_equal(word)
    return n is not None and n % 2 == 1


def is_lex(word: Word) -> bool:
    """(ab)^m with m a power of two, m >= 2."""
    na, nb = _ab_counts(word)
    if na != nb or word != ("a", "b") * na:
        return False
    return na >= 2 and na & (na - 1) == 0


def is_lvee(word: Word) -> bool:
    """#b equals #a or twice #a (any letter order)."""
    na, nb = _ab_counts(word)
    return nb == na or nb == 2 * na


def is_leq2(word: Word) -> bool:
    """#a equals #b (any letter order)."""
    na, nb = _ab_counts(word)
    return na == nb


PREDICATES: dict[str, Callable[[Word], bool]] = {
    "llin": is_llin,
    "l2lin": is_l2lin,
    "l2lin1": is_l2lin1,
    "lex": is_lex,
    "lvee": is_lvee,
    "leq2": is_leq2,
}
