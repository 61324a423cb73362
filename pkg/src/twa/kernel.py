"""Backend selection and the automaton-to-table compiler.

Deterministic automata get lowered to flat integer tables so membership
and exhaustive enumeration can run in the compiled extension
(:mod:`twa._ckernel`) when it is built, or in the pure-Python mirror
otherwise.  Set ``TWA_BACKEND=pure`` or ``TWA_BACKEND=c`` to force one.
"""
from __future__ import annotations

import os
import weakref
from array import array
from dataclasses import dataclass

from .core import Automaton, Goto, Halt, Word, classify

_FORCED = os.environ.get("TWA_BACKEND")
if _FORCED == "pure":
    from . import _pykernel as backend
elif _FORCED in ("c", "cython"):
    from . import _ckernel as backend  # type: ignore[no-redef]
else:
    try:
        from . import _ckernel as backend  # type: ignore[no-redef]
    except ImportError:  # pragma: no cover - depends on the build
        from . import _pykernel as backend

BACKEND_NAME: str = backend.NAME


@dataclass
class DetProgram:
    """A deterministic automaton lowered to flat tables."""

    n_tokens: int
    n_states: int
    start: int
    delta: array  # state * n_tokens + token -> state or -1
    troot: array  # state -> trie node
    tchild: array  # node * n_tokens + token -> node or -1
    tterm: array  # node -> 1 when a translucent word ends here
    skind: array  # state -> 0 reject / 1 accept / 2 jump
    starget: array  # state -> jump target or -1
    tokens: tuple[str, ...]
    token_index: dict[str, int]


def compile_det(a: Automaton) -> DetProgram | None:
    """Flat tables for ``a``, or None when it is not deterministic."""
    if not classify(a).deterministic:
        return None
    tokens = a.alphabet
    n_tokens = len(tokens)
    n_states = len(a.states)
    token_index = {t: i for i, t in enumerate(tokens)}
    state_index = {q: i for i, q in enumerate(a.states)}

    delta = [-1] * (n_states * n_tokens)
    for (q, t), targets in a.letter_delta.items():
        delta[state_index[q] * n_tokens + token_index[t]] = state_index[targets[0]]

    children: list[list[int]] = []
    terminal: list[int] = []

    def new_node() -> int:
        children.append([-1] * n_tokens)
        terminal.append(0)
        return len(terminal) - 1

    troot = []
    for q in a.states:
        root = new_node()
        troot.append(root)
        for word in a.translucent[q]:
            node = root
            for tok in word:
                ti = token_index[tok]
                nxt = children[node][ti]
                if nxt < 0:
                    nxt = new_node()
                    children[node][ti] = nxt
                node = nxt
            terminal[node] = 1

    skind, starget = [], []
    for q in a.states:
        action = a.sentinel[q]
        if action is Halt.ACCEPT:
            skind.append(1)
            starget.append(-1)
        elif action is Halt.REJECT:
            skind.append(0)
            starget.append(-1)
        else:
            assert isinstance(action, Goto)
            skind.append(2)
            starget.append(state_index[action.targets[0]])

    flat_children = [c for row in children for c in row]
    return DetProgram(
        n_tokens=n_tokens,
        n_states=n_states,
        start=state_index[a.initials[0]],
        delta=array("i", delta or [-1]),
        troot=array("i", troot),
        tchild=array("i", flat_children or [-1]),
        tterm=array("B", terminal or [0]),
        skind=array("b", skind),
        starget=array("i", starget),
        tokens=tokens,
        token_index=token_index,
    )


_programs: "weakref.WeakKeyDictionary[Automaton, DetProgram | None]" = (
    weakref.WeakKeyDictionary()
)


def program_for(a: Automaton) -> DetProgram | None:
    try:
        return _programs[a]
    except KeyError:
        prog = compile_det(a)
        _programs[a] = prog
        return prog


def run_word(prog: DetProgram, word: Word) -> int:
    """Verdict 0/1/2 of the deterministic run on a token word."""
    try:
        encoded = [prog.token_index[t] for t in word]
    except KeyError:
        return 0  # a token outside the alphabet can never be read or skipped
    return backend.run_det(
        prog.n_tokens, prog.n_states, prog.start, prog.delta, prog.troot,
        prog.tchild, prog.tterm, prog.skind, prog.starget, encoded,
    )


def enumerate_words(prog: DetProgram, max_len: int) -> list[Word]:
    """Accepted words up to ``max_len``, shortest first then lexicographic
    in alphabet-declaration order."""
    raw = backend.enumerate_det(
        prog.n_tokens, prog.n_states, prog.start, prog.delta, prog.troot,
        prog.tchild, prog.tterm, prog.skind, prog.starget, max_len,
    )
    tokens = prog.tokens
    return [tuple(tokens[i] for i in ixs) for ixs in raw]
