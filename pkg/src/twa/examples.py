"""Ready-made automata over {a, b} that showcase what translucency buys.

Each builder returns a fresh validated :class:`~twa.core.Automaton`.  The
deterministic repetitive ones decide languages far outside what ordinary
one-way DFAs can do: block-doubling powers, linear letter counts, and a
union built purely from nondeterministic choice of the start state.
"""
from __future__ import annotations

from .core import Automaton, Goto, Halt, Word


class AlphabetMismatchError(ValueError):
    pass


def _w(text: str) -> Word:
    return tuple(text)


def build_a_ex() -> Automaton:
    """Deterministic repetitive automaton accepting (ab)^(2^n) for n >= 1.

    One full sweep deletes an `a` from the front half and a `b` from the
    back half while the translucent blocks force the remaining word to
    keep the shape (ab)^m with m halved, so only power-of-two block
    counts survive down to the accepting sweep.
    """
    return Automaton(
        states=["q0", "q1", "q2", "q3", "q4", "q5", "q6", "q7", "qf"],
        alphabet=["a", "b"],
        initials=["q0"],
        translucent={
            "q0": [_w("ab")],
            "q2": [_w("bab")],
            "q4": [_w("ab")],
            "q5": [_w("ab")],
        },
        letter_delta={
            ("q1", "a"): ["q2"],
            ("q2", "a"): ["q2"],
            ("q3", "b"): ["q4"],
            ("q4", "b"): ["q5"],
            ("q5", "b"): ["q5"],
            ("q6", "a"): ["q7"],
            ("q7", "b"): ["qf"],
        },
        sentinel={
            "q0": Goto(("q1",)),
            "q1": Halt.REJECT,
            "q2": Goto(("q3",)),
            "q3": Halt.REJECT,
            "q4": Goto(("q6",)),
            "q5": Goto(("q1",)),
            "q6": Halt.REJECT,
            "q7": Halt.REJECT,
            "qf": Halt.ACCEPT,
        },
    )


def build_a_2lin1() -> Automaton:
    """Deterministic repetitive automaton accepting a^(2n+1) b^(2n+1), n >= 0.

    Each loop iteration deletes two a's and two b's: plain front reads for
    the a's, and for the b's a skip over an even block of a's (with an `ab`
    bridge when the block is odd).  The parity checks {aa,b} and {a,bb}
    reject any tape whose letter runs fall out of shape.
    """
    return Automaton(
        states=["q0", "q1", "q2", "q3", "q4", "q5", "q6"],
        alphabet=["a", "b"],
        initials=["q0"],
        translucent={
            "q1": [_w("aa"), _w("b")],
            "q3": [_w("aa"), _w("ab")],
            "q4": [_w("a"), _w("bb")],
            "q5": [_w("aa"), _w("ab")],
        },
        letter_delta={
            ("q0", "a"): ["q1"],
            ("q2", "a"): ["q3"],
            ("q2", "b"): ["q6"],
            ("q3", "b"): ["q4"],
            ("q5", "b"): ["q0"],
        },
        sentinel={
            "q0": Halt.REJECT,
            "q1": Goto(("q2",)),
            "q2": Halt.REJECT,
            "q3": Halt.REJECT,
            "q4": Goto(("q5",)),
            "q5": Halt.REJECT,
            "q6": Halt.ACCEPT,
        },
    )


def build_a_2lin() -> Automaton:
    """Deterministic repetitive automaton accepting a^(2n) b^(2n), n >= 1.

    Reads one leading `a`, which turns the tape into the odd-exponent shape
    a^(2n-1) b^(2n-1) with one extra b; from there the machine runs the same
    two-by-two deletion loop as the odd automaton, entered at the step that
    consumes the surplus b.
    """
    return Automaton(
        states=["q0", "q1", "q2", "q3", "q4", "q5", "q6", "q7"],
        alphabet=["a", "b"],
        initials=["q0"],
        translucent={
            "q1": [_w("a"), _w("bb")],
            "q2": [_w("aa"), _w("ab")],
            "q4": [_w("aa"), _w("b")],
            "q6": [_w("aa"), _w("ab")],
        },
        letter_delta={
            ("q0", "a"): ["q1"],
            ("q2", "b"): ["q3"],
            ("q3", "a"): ["q4"],
            ("q5", "a"): ["q6"],
            ("q5", "b"): ["q7"],
            ("q6", "b"): ["q1"],
        },
        sentinel={
            "q0": Halt.REJECT,
            "q1": Goto(("q2",)),
            "q2": Halt.REJECT,
            "q3": Halt.REJECT,
            "q4": Goto(("q5",)),
            "q5": Halt.REJECT,
            "q6": Halt.REJECT,
            "q7": Halt.ACCEPT,
        },
    )


def build_l_vee_nfawtl() -> Automaton:
    """Nondeterministic, non-repetitive automaton (translucent letters only)
    for the words where #b equals #a or twice #a.

    Two disjoint branches, chosen by the initial state: one cancels an `a`
    against one `b` per cycle, the other cancels an `a` against two b's.
    """
    return Automaton(
        states=["e0", "e1", "e2", "d0", "d1", "d2", "d3"],
        alphabet=["a", "b"],
        initials=["e0", "d0"],
        translucent={
            "e1": [_w("a")],
            "e2": [_w("b")],
            "d1": [_w("a")],
            "d2": [_w("a")],
            "d3": [_w("b")],
        },
        letter_delta={
            ("e0", "a"): ["e1"],
            ("e0", "b"): ["e2"],
            ("e1", "b"): ["e0"],
            ("e2", "a"): ["e0"],
            ("d0", "a"): ["d1"],
            ("d0", "b"): ["d3"],
            ("d1", "b"): ["d2"],
            ("d2", "b"): ["d0"],
            ("d3", "a"): ["d2"],
        },
        sentinel={
            "e0": Halt.ACCEPT,
            "e1": Halt.REJECT,
            "e2": Halt.REJECT,
            "d0": Halt.ACCEPT,
            "d1": Halt.REJECT,
            "d2": Halt.REJECT,
            "d3": Halt.REJECT,
        },
    )


def build_union(left: Automaton, right: Automaton) -> Automaton:
    """Union automaton over a shared alphabet: both state sets, disjointly
    renamed with ``L.``/``R.`` prefixes, and the initial states of both."""
    if set(left.alphabet) != set(right.alphabet):
        raise AlphabetMismatchError(
            "union needs identical alphabets, got"
            f" {sorted(left.alphabet)} and {sorted(right.alphabet)}"
        )

    def _merge(a: Automaton, prefix: str, into: dict) -> None:
        ren = lambda q: prefix + q
        into["states"] += [ren(q) for q in a.states]
        into["initials"] += [ren(q) for q in a.initials]
        into["translucent"].update({ren(q): a.translucent[q] for q in a.states})
        into["letter_delta"].update(
            {(ren(q), t): [ren(p) for p in tgts] for (q, t), tgts in a.letter_delta.items()}
        )
        for q, action in a.sentinel.items():
            if isinstance(action, Goto):
                action = Goto(tuple(ren(p) for p in action.targets))
            into["sentinel"][ren(q)] = action

    parts: dict = {
        "states": [],
        "initials": [],
        "translucent": {},
        "letter_delta": {},
        "sentinel": {},
    }
    _merge(left, "L.", parts)
    _merge(right, "R.", parts)
    return Automaton(
        states=parts["states"],
        alphabet=left.alphabet,
        initials=parts["initials"],
        translucent=parts["translucent"],
        letter_delta=parts["letter_delta"],
        sentinel=parts["sentinel"],
    )


def build_l_lin_union() -> Automaton:
    """Nondeterministic repetitive automaton for a^n b^n, n >= 1, as the
    union of the even and odd exponent machines."""
    return build_union(build_a_2lin(), build_a_2lin1())
