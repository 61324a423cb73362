"""Shared test utilities: an independent scan oracle and random generators.

Everything here is deliberately written *against the grain* of the package
internals -- the oracle factorizes tapes with a dynamic-programming table
instead of a trie walk, and membership is re-derived from `step` alone --
so agreement between the two sides actually means something.
"""
from __future__ import annotations

import random
from itertools import product

from twa.core import Automaton, Goto, Halt, Word
from twa.engine import (
    AllTranslucent,
    Configuration,
    Dead,
    ReadAt,
    Successors,
    scan,
    step,
)

AB = ("a", "b")


def w(text: str) -> Word:
    return tuple(text)


def all_words(alphabet, max_len: int):
    for length in range(max_len + 1):
        yield from product(alphabet, repeat=length)


# ---------------------------------------------------------------------------
# independent scan oracle
# ---------------------------------------------------------------------------


def scan_oracle(tau, readable, tape: Word):
    """Reference scan result computed by brute-force split search.

    ``star[i]`` says whether tape[:i] splits into translucent words; the
    walk of the real scanner must stop exactly at the largest such i.
    Returns ("read", pos, letter) or ("all", blocks) or ("dead", pos).
    """
    words = [tuple(t) for t in tau]
    n = len(tape)
    star = [False] * (n + 1)
    star[0] = True
    for i in range(1, n + 1):
        star[i] = any(
            len(t) <= i and star[i - len(t)] and tape[i - len(t) : i] == t
            for t in words
        )
    p = max(i for i in range(n + 1) if star[i])
    if p == n:
        blocks = []
        i = n
        while i > 0:
            t = next(
                t
                for t in words
                if len(t) <= i and star[i - len(t)] and tape[i - len(t) : i] == t
            )
            blocks.append(t)
            i -= len(t)
        blocks.reverse()
        return ("all", tuple(blocks))
    if tape[p] in readable:
        return ("read", p, tape[p])
    return ("dead", p)


def assert_scan_matches_oracle(a: Automaton, state: str, tape: Word) -> None:
    got = scan(a, state, tape)
    want = scan_oracle(a.translucent[state], a.readable[state], tape)
    if want[0] == "read":
        _, pos, letter = want
        assert isinstance(got, ReadAt), (state, tape, got, want)
        assert (got.skip_len, got.letter) == (pos, letter), (state, tape, got, want)
        assert got.prefix == tape[:pos] and got.suffix == tape[pos + 1 :]
    elif want[0] == "all":
        assert got == AllTranslucent(want[1]), (state, tape, got, want)
    else:
        assert got == Dead(want[1]), (state, tape, got, want)


def prefix_code_sets(alphabet, max_words: int, max_word_len: int):
    """All prefix codes with at most ``max_words`` non-empty words of length
    at most ``max_word_len``, as tuples in a stable order."""
    words = [t for n in range(1, max_word_len + 1) for t in product(alphabet, repeat=n)]

    def comparable(u, v):
        k = min(len(u), len(v))
        return u[:k] == v[:k]

    out = [()]

    def extend(start: int, chosen: tuple):
        for i in range(start, len(words)):
            cand = words[i]
            if any(comparable(cand, c) for c in chosen):
                continue
            nxt = chosen + (cand,)
            out.append(nxt)
            if len(nxt) < max_words:
                extend(i + 1, nxt)

    extend(0, ())
    return out


def loop_automaton(tau, alphabet=AB) -> Automaton:
    """One accepting state with the given translucent words and self-loops on
    every letter that may legally be read (= starts no translucent word)."""
    first = {t[0] for t in tau}
    readable = [t for t in alphabet if t not in first]
    return Automaton(
        states=["q"],
        alphabet=list(alphabet),
        initials=["q"],
        translucent={"q": [tuple(t) for t in tau]},
        letter_delta={("q", t): ["q"] for t in readable},
        sentinel={"q": Halt.ACCEPT},
    )


# ---------------------------------------------------------------------------
# membership rebuilt from single steps only
# ---------------------------------------------------------------------------


def brute_accepts(a: Automaton, word: Word) -> bool:
    """Depth-first membership using nothing but `step`."""
    seen: set[Configuration] = set()
    stack = [Configuration(q, tuple(word)) for q in a.initials]
    while stack:
        config = stack.pop()
        if config in seen:
            continue
        seen.add(config)
        outcome = step(a, config)
        if outcome is Halt.ACCEPT:
            return True
        if isinstance(outcome, Successors):
            stack.extend(outcome.configs)
    return False


# ---------------------------------------------------------------------------
# random automata
# ---------------------------------------------------------------------------


def random_automaton(
    rng: random.Random,
    max_states: int = 5,
    alphabet=AB,
    deterministic: bool | None = None,
) -> Automaton:
    """A random *valid* automaton; determinism is drawn unless forced."""
    if deterministic is None:
        deterministic = rng.random() < 0.5
    n = rng.randint(1, max_states)
    states = [f"s{i}" for i in range(n)]

    letter_delta = {}
    for q in states:
        for t in alphabet:
            fan = rng.choice((0, 0, 0, 1, 1, 1 if deterministic else 2))
            if fan:
                letter_delta[(q, t)] = rng.sample(states, min(fan, n))

    readable = {q: {t for t in alphabet if (q, t) in letter_delta} for q in states}
    translucent = {}
    for q in states:
        allowed_first = [t for t in alphabet if t not in readable[q]]
        words: list[Word] = []
        for _ in range(rng.randint(0, 3)):
            if not allowed_first:
                break
            cand = (rng.choice(allowed_first),) + tuple(
                rng.choice(alphabet) for _ in range(rng.randint(0, 2))
            )
            k = len(cand)
            if any(u[:k] == cand or cand[: len(u)] == u for u in words):
                continue
            words.append(cand)
        translucent[q] = words

    sentinel = {}
    for q in states:
        r = rng.random()
        if r < 0.35:
            sentinel[q] = Halt.ACCEPT
        elif r < 0.70:
            sentinel[q] = Halt.REJECT
        else:
            fan = 1 if deterministic else rng.randint(1, min(2, n))
            sentinel[q] = Goto(tuple(rng.sample(states, fan)))

    initials = [states[0]] if deterministic else sorted(
        rng.sample(states, rng.randint(1, min(2, n)))
    )
    return Automaton(states, list(alphabet), initials, translucent, letter_delta, sentinel)


def plant_letter_step(rng: random.Random, a: Automaton) -> Configuration | None:
    """A configuration of ``a`` whose next step reads a letter, built by
    planting a translucent prefix in front of a readable letter."""
    candidates = [q for q in a.states if a.readable[q]]
    if not candidates:
        return None
    q = rng.choice(candidates)
    prefix: tuple[str, ...] = ()
    words = a.translucent[q]
    for _ in range(rng.randint(0, 2)):
        if words:
            prefix += rng.choice(words)
    letter = rng.choice(sorted(a.readable[q]))
    tail = tuple(rng.choice(a.alphabet) for _ in range(rng.randint(0, 3)))
    return Configuration(q, prefix + (letter,) + tail)


# ---------------------------------------------------------------------------
# random, possibly broken, automaton descriptions
# ---------------------------------------------------------------------------


def random_draft(rng: random.Random) -> dict:
    """A description that is valid most of the time but may carry any of the
    static defects, for exercising `validate` against `draft_is_valid`."""
    a = random_automaton(rng)
    states = list(a.states)
    alphabet = list(a.alphabet)
    initials = list(a.initials)
    translucent = {q: [list(t) for t in ws] for q, ws in a.translucent.items()}
    letter_delta = {k: list(v) for k, v in a.letter_delta.items()}
    sentinel = dict(a.sentinel)

    def maybe(p: float) -> bool:
        return rng.random() < p

    if maybe(0.08):
        initials = []
    if maybe(0.08):
        initials.append("ghost")
    if maybe(0.08) and states:
        sentinel.pop(rng.choice(states), None)
    if maybe(0.08):
        sentinel["phantom"] = Halt.REJECT
    if maybe(0.08) and states:
        sentinel[states[0]] = Goto(("nowhere",))
    if maybe(0.08):
        letter_delta[(rng.choice(states), "z")] = [states[0]]
    if maybe(0.08):
        letter_delta[("missing", alphabet[0])] = [states[0]]
    if maybe(0.08):
        letter_delta[(states[0], alphabet[0])] = ["missing"]
    if maybe(0.08) and states:
        translucent.setdefault(rng.choice(states), []).append([])
    if maybe(0.08) and states:
        translucent.setdefault(rng.choice(states), []).append(["z"])
    if maybe(0.10) and states:
        q = rng.choice(states)
        ws = translucent.setdefault(q, [])
        base = rng.choice(ws) if ws and maybe(0.7) else [rng.choice(alphabet)]
        ws.append(list(base) + [rng.choice(alphabet)])  # likely prefix clash
    if maybe(0.08) and states:
        # a word starting with a readable letter
        q = rng.choice(states)
        readable = sorted({t for (p, t) in letter_delta if p == q and letter_delta[(p, t)]})
        if readable:
            translucent.setdefault(q, []).append([readable[0], rng.choice(alphabet)])
    if maybe(0.06):
        states.append("bad name")
    if maybe(0.06):
        alphabet.append("a.b")
    return dict(
        states=states,
        alphabet=alphabet,
        initials=initials,
        translucent=translucent,
        letter_delta=letter_delta,
        sentinel=sentinel,
    )


def draft_is_valid(desc: dict) -> bool:
    """Straight-line re-statement of every static restriction."""
    states = list(dict.fromkeys(desc["states"]))
    alphabet = list(dict.fromkeys(desc["alphabet"]))
    initials = list(dict.fromkeys(desc["initials"]))
    translucent = desc["translucent"]
    sentinel = desc["sentinel"]

    def name_ok(s: str, token: bool) -> bool:
        if not s or "#" in s or "◁" in s or any(c.isspace() for c in s):
            return False
        return not (token and "." in s)

    if not all(name_ok(q, False) for q in states):
        return False
    if not all(name_ok(t, True) for t in alphabet):
        return False
    if not initials or not set(initials) <= set(states):
        return False

    readable: dict[str, set[str]] = {q: set() for q in states}
    for (q, t), targets in desc["letter_delta"].items():
        if not list(dict.fromkeys(targets)):
            continue  # empty transition entries are dropped, not flagged
        if q not in states or t not in alphabet or not set(targets) <= set(states):
            return False
        readable[q].add(t)

    for q, action in sentinel.items():
        if q not in states:
            return False
        if isinstance(action, Goto) and not set(action.targets) <= set(states):
            return False
    if any(q not in sentinel for q in states):
        return False

    for q, ws in translucent.items():
        if q not in states:
            return False
        words = list(dict.fromkeys(tuple(x) for x in ws))
        for u in words:
            if not u or not set(u) <= set(alphabet):
                return False
            if u[0] in readable.get(q, ()):
                return False
            for v in words:
                if u != v and v[: len(u)] == u:
                    return False
    return True
