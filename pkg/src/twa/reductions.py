"""Post correspondence instances compiled into automata with translucent words.

A PCP instance is a list of word pairs (u_i, v_i) over {a, b}.  The
compiled automaton accepts exactly the words x_{i1}..x_{ir} interleaved
with a primed/unprimed doubling of u_{i1}..u_{ir} when that index
sequence is a solution (f-image equals g-image), so the automaton's
language is non-empty iff the instance is solvable.  A bounded variant
adds a two-letter padding alphabet and accepts any padding tail after the
witness, which keeps short witnesses inside a fixed word-length window.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .core import Automaton, Goto, Halt, Word

BASE_TOKENS = ("a", "b")
PRIMED = {"a": "a'", "b": "b'"}
PAD_TOKENS = ("c", "d")


class InvalidInstanceError(ValueError):
    pass


class EmptySolutionError(ValueError):
    pass


class IndexOutOfRangeError(IndexError):
    pass


class PairsFormatError(ValueError):
    def __init__(self, diagnostics: Sequence[tuple[int, str]]):
        self.diagnostics = tuple(diagnostics)
        super().__init__("; ".join(f"line {n}: {m}" for n, m in self.diagnostics))


@dataclass(frozen=True)
class PcpInstance:
    """Pairs (f-word, g-word), both non-empty words over {a, b}."""

    pairs: tuple[tuple[Word, Word], ...]

    def __post_init__(self) -> None:
        if not self.pairs:
            raise InvalidInstanceError("an instance needs at least one pair")
        for i, (u, v) in enumerate(self.pairs, start=1):
            for side, w in (("f", u), ("g", v)):
                if not w:
                    raise InvalidInstanceError(f"pair {i}: empty {side}-word")
                for t in w:
                    if t not in BASE_TOKENS:
                        raise InvalidInstanceError(
                            f"pair {i}: letter {t!r} outside {{a, b}}"
                        )

    @property
    def size(self) -> int:
        return len(self.pairs)

    def f_image(self, indices: Sequence[int]) -> Word:
        return self._image(indices, 0)

    def g_image(self, indices: Sequence[int]) -> Word:
        return self._image(indices, 1)

    def _image(self, indices: Sequence[int], side: int) -> Word:
        out: list[str] = []
        for i in indices:
            if not 1 <= i <= len(self.pairs):
                raise IndexOutOfRangeError(f"pair index {i} out of range")
            out.extend(self.pairs[i - 1][side])
        return tuple(out)


def pcp_instance(pairs: Iterable[tuple[str, str]]) -> PcpInstance:
    """Convenience builder from contiguous strings."""
    return PcpInstance(tuple((tuple(u), tuple(v)) for u, v in pairs))


@dataclass(frozen=True)
class ReductionAlphabet:
    """Token groups used by a compiled instance, in declaration order."""

    index_tokens: tuple[str, ...]  # x1 .. xm, one per pair
    base: tuple[str, ...] = BASE_TOKENS
    primed: tuple[str, ...] = ("a'", "b'")
    padding: tuple[str, ...] = ()  # (c, d) in the bounded variant

    @classmethod
    def for_instance(cls, inst: PcpInstance, bounded: bool = False) -> "ReductionAlphabet":
        xs = tuple(f"x{i}" for i in range(1, inst.size + 1))
        return cls(xs, padding=PAD_TOKENS if bounded else ())

    @property
    def tokens(self) -> tuple[str, ...]:
        return self.index_tokens + self.base + self.primed + self.padding


def psi2(word: Word) -> Word:
    """The doubling substitution a -> a a', b -> b b'."""
    out: list[str] = []
    for t in word:
        if t not in PRIMED:
            raise InvalidInstanceError(f"letter {t!r} outside {{a, b}}")
        out.append(t)
        out.append(PRIMED[t])
    return tuple(out)


def _p_state(i: int, prefix: Word) -> str:
    return f"p.{i}.{''.join(prefix) or '-'}"


def _q_state(i: int, prefix: Word) -> str:
    return f"q.{i}.{''.join(prefix) or '-'}"


def compile_pcp(inst: PcpInstance, bounded: bool = False) -> Automaton:
    """The automaton whose language is non-empty iff ``inst`` has a solution.

    State q0 checks that the tape is an interleaving of index letters with
    doubled pairs aa'/bb'; the q1/q2 loop then repeatedly reads the first
    index letter x_i and matches u_i against the unprimed letters (p-chain)
    and v_i against the primed ones (q-chain).  Acceptance happens at q2
    with everything consumed.
    """
    alpha = ReductionAlphabet.for_instance(inst, bounded)
    xs = alpha.index_tokens

    states: list[str] = ["q0", "q1", "q2"]
    translucent: dict[str, list[Word]] = {}
    letter_delta: dict[tuple[str, str], list[str]] = {}
    sentinel: dict[str, Halt | Goto] = {
        "q0": Goto(("q1",)),
        "q1": Halt.REJECT,
        "q2": Goto(("q3",)) if bounded else Halt.ACCEPT,
    }

    singles = [(t,) for t in xs]
    translucent["q0"] = singles + [("a", "a'"), ("b", "b'")]
    if bounded:
        translucent["q0"] = translucent["q0"] + [(t,) for t in PAD_TOKENS]
    translucent["q1"] = []
    translucent["q2"] = []

    for i, (u, v) in enumerate(inst.pairs, start=1):
        first_q = _q_state(i, ())
        # p-chain: read the letters of u_i among the unprimed tape letters
        for j in range(len(u)):
            name = _p_state(i, u[:j])
            states.append(name)
            translucent[name] = singles + [("a'",), ("b'",)]
            nxt = _p_state(i, u[: j + 1]) if j + 1 < len(u) else first_q
            letter_delta[(name, u[j])] = [nxt]
            sentinel[name] = Halt.REJECT
        # q-chain: read the primed letters of v_i
        for j in range(len(v)):
            name = _q_state(i, v[:j])
            states.append(name)
            translucent[name] = singles + [("a",), ("b",)]
            nxt = _q_state(i, v[: j + 1]) if j + 1 < len(v) else "q2"
            letter_delta[(name, PRIMED[v[j]])] = [nxt]
            sentinel[name] = Halt.REJECT
        letter_delta[("q1", xs[i - 1])] = [_p_state(i, ())]
        letter_delta[("q2", xs[i - 1])] = [_p_state(i, ())]

    if bounded:
        states.append("q3")
        translucent["q3"] = []
        sentinel["q3"] = Halt.ACCEPT
        for t in PAD_TOKENS:
            letter_delta[("q2", t)] = ["q3"]
            letter_delta[("q3", t)] = ["q3"]

    return Automaton(
        states=states,
        alphabet=alpha.tokens,
        initials=["q0"],
        translucent=translucent,
        letter_delta=letter_delta,
        sentinel=sentinel,
    )


def compile_pcp_bounded(inst: PcpInstance) -> Automaton:
    """Variant accepting witness + arbitrary non-empty c/d padding."""
    return compile_pcp(inst, bounded=True)


@dataclass(frozen=True)
class WitnessReport:
    """The canonical tape for an index sequence, plus both morphism images."""

    word: Word
    f_image: Word
    g_image: Word

    @property
    def is_solution(self) -> bool:
        return self.f_image == self.g_image


def canonical_witness(inst: PcpInstance, solution: Sequence[int]) -> WitnessReport:
    """x_{i1}..x_{ir} followed by the doubled f-image.

    The compiled automaton accepts this word iff ``solution`` solves the
    instance.  Raises on empty sequences or out-of-range indices.
    """
    if not solution:
        raise EmptySolutionError("an index sequence must be non-empty")
    f = inst.f_image(solution)
    g = inst.g_image(solution)
    word = tuple(f"x{i}" for i in solution) + psi2(f)
    return WitnessReport(word, f, g)


def brute_force_solutions(inst: PcpInstance, max_len: int) -> list[tuple[int, ...]]:
    """Every solution sequence of length <= max_len, shortest first."""
    found: list[tuple[int, ...]] = []
    indices = range(1, inst.size + 1)
    for r in range(1, max_len + 1):
        for seq in product(indices, repeat=r):
            if inst.f_image(seq) == inst.g_image(seq):
                found.append(seq)
    return found


def parse_pairs_file(text: str) -> PcpInstance:
    """Instance from ``pair <f-word> <g-word>`` lines ('#' starts a comment)."""
    diagnostics: list[tuple[int, str]] = []
    pairs: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if fields[0] != "pair":
            diagnostics.append((lineno, f"unknown directive {fields[0]!r}"))
            continue
        if len(fields) != 3:
            diagnostics.append((lineno, "expected: pair <f-word> <g-word>"))
            continue
        for w in fields[1:]:
            bad = sorted(set(w) - set(BASE_TOKENS))
            if bad:
                diagnostics.append((lineno, f"letter {bad[0]!r} outside {{a, b}}"))
        pairs.append((fields[1], fields[2]))
    if not diagnostics and not pairs:
        diagnostics.append((0, "no pairs declared"))
    if diagnostics:
        raise PairsFormatError(diagnostics)
    return pcp_instance(pairs)
