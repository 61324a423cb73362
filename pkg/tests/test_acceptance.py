"""Acceptance gate: fourteen behavioural criteria, one test each.

Every test finishes by printing a single ``PASS:`` line (visible with
``pytest -s`` and in captured output).  The timed criteria assume the
compiled kernel backend; the pure fallback stays correct but may miss the
wall-clock bounds on slow machines.
"""
from __future__ import annotations

import itertools
import random
import time

from twa.cli import render_trace
from twa.core import Automaton, Goto, classify, validate
from twa.engine import (
    Accepted,
    Configuration,
    Diverged,
    Halt,
    Rejected,
    RejectReason,
    SentinelStep,
    Successors,
    accepts,
    check_append_property,
    run_deterministic,
    run_from,
    step,
)
from twa.examples import (
    build_a_2lin,
    build_a_2lin1,
    build_a_ex,
    build_l_lin_union,
    build_l_vee_nfawtl,
)
from twa.oracle import (
    compare_language,
    enumerate_accepted,
    is_l2lin,
    is_l2lin1,
    is_lex,
    is_llin,
    parikh,
)
from twa.reductions import (
    brute_force_solutions,
    canonical_witness,
    compile_pcp,
    compile_pcp_bounded,
    pcp_instance,
)
from twa.textfmt import parse, serialize

from helpers import (
    AB,
    all_words,
    assert_scan_matches_oracle,
    loop_automaton,
    plant_letter_step,
    prefix_code_sets,
    random_automaton,
    w,
)

BIG_BUDGET = 2_000_000_000


def ab_power(m: int):
    return w("ab" * m)


def test_c01_doubling_automaton_is_exact_up_to_length_12():
    started = time.perf_counter()
    a = build_a_ex()
    report = compare_language(a, is_lex, 12)
    assert report.agree and report.total_checked == 8191
    assert accepts(a, ab_power(8)) and accepts(a, ab_power(16))
    for m in range(3, 17):
        if m in (4, 8, 16):
            continue
        assert not accepts(a, ab_power(m)), m
    elapsed = time.perf_counter() - started
    assert elapsed < 10.0
    print(f"PASS: c01 exact on all 8191 words up to length 12 ({elapsed:.2f}s)")


def test_c02_eight_configuration_trace_is_verbatim():
    result = run_deterministic(build_a_ex(), w("abab"))
    lines = render_trace(result, build_a_ex().alphabet)
    assert lines == [
        "q0 abab ◁  --sentinel-->  q1 abab ◁",
        "q1 abab ◁  --read a@0-->  q2 bab ◁",
        "q2 bab ◁  --sentinel-->  q3 bab ◁",
        "q3 bab ◁  --read b@0-->  q4 ab ◁",
        "q4 ab ◁  --sentinel-->  q6 ab ◁",
        "q6 ab ◁  --read a@0-->  q7 b ◁",
        "q7 b ◁  --read b@0-->  qf ◁",
        "qf ◁  --sentinel-->  ACCEPT",
    ]
    assert len(result.trace) == 8
    print("PASS: c02 abab trace matches the frozen 8-line form verbatim")


def test_c03_halving_pass_visits_the_expected_waypoints():
    a = build_a_ex()
    for n in range(2, 7):
        result = run_from(a, Configuration("q1", w("abab" * n)))
        seen = {(s.config.state, s.config.tape) for s in result.trace}
        assert ("q3", w("bab" * n)) in seen, n
        assert ("q1", w("ab" * n)) in seen, n
    print("PASS: c03 (q1,(abab)^n) passes (q3,(bab)^n) and reaches (q1,(ab)^n) for n=2..6")


def test_c04_odd_block_counter_is_exact_up_to_length_14():
    started = time.perf_counter()
    report = compare_language(build_a_2lin1(), is_l2lin1, 14)
    assert report.agree and report.total_checked == 32767
    elapsed = time.perf_counter() - started
    assert elapsed < 30.0
    print(f"PASS: c04 exact on all 32767 words up to length 14 ({elapsed:.2f}s)")


def test_c05_even_block_counter_is_exact_up_to_length_14():
    report = compare_language(build_a_2lin(), is_l2lin, 14)
    assert report.agree and report.total_checked == 32767
    print("PASS: c05 exact on all 32767 words up to length 14")


def test_c06_union_machine_matches_the_block_language():
    got = set(enumerate_accepted(build_l_lin_union(), 14))
    assert got == {w("a" * n + "b" * n) for n in range(1, 8)}
    print("PASS: c06 union accepts exactly a^n b^n for n=1..7 up to length 14")


def test_c07_sentinel_steps_do_not_survive_appended_letters():
    a = Automaton(
        states=["q", "q2"],
        alphabet=["a"],
        initials=["q"],
        translucent={"q": [w("aa")]},
        sentinel={"q": Goto(("q2",)), "q2": Halt.ACCEPT},
    )
    outcome = step(a, Configuration("q", w("aa")))
    assert outcome == Successors((Configuration("q2", w("aa")),))
    assert step(a, Configuration("q", w("aaa"))) is Halt.REJECT
    result = run_from(a, Configuration("q", w("aaa")))
    assert isinstance(result, Rejected) and result.reason is RejectReason.DEAD
    print("PASS: c07 tape aa jumps to q2 while tape aaa is rejected dead")


def test_c08_letter_steps_survive_any_appended_suffix():
    rng = random.Random(20260814)
    checked = 0
    while checked < 1000:
        a = random_automaton(rng)
        config = plant_letter_step(rng, a)
        if config is None:
            continue
        suffix = tuple(rng.choices(a.alphabet, k=rng.randrange(0, 5)))
        assert check_append_property(a, config, suffix)
        checked += 1
    print("PASS: c08 1000 random letter steps survive appended suffixes")


def test_c09_correspondence_reduction_round_trip():
    started = time.perf_counter()
    ref = pcp_instance((("a", "baa"), ("ab", "aa"), ("bba", "bb")))
    assert brute_force_solutions(ref, 4) == [(3, 2, 3, 1)]
    witness = canonical_witness(ref, (3, 2, 3, 1))
    assert witness.is_solution
    assert accepts(compile_pcp(ref), witness.word)
    bounded = compile_pcp_bounded(ref)
    for pad_len in range(3):
        for pad in itertools.product(("c", "d"), repeat=pad_len):
            assert accepts(bounded, witness.word + pad), pad
    lone = pcp_instance((("a", "aa"),))
    assert enumerate_accepted(compile_pcp(lone), 10, budget=BIG_BUDGET) == []
    assert enumerate_accepted(compile_pcp_bounded(lone), 10, budget=BIG_BUDGET) == []
    elapsed = time.perf_counter() - started
    assert elapsed < 60.0
    print(f"PASS: c09 witness accepted, unsolvable instance empty to length 10 ({elapsed:.2f}s)")


def test_c10_reduction_output_is_structurally_sound():
    rng = random.Random(777)
    for _ in range(50):
        pairs = tuple(
            (
                "".join(rng.choices("ab", k=rng.randrange(1, 4))),
                "".join(rng.choices("ab", k=rng.randrange(1, 4))),
            )
            for _ in range(rng.randrange(1, 5))
        )
        inst = pcp_instance(pairs)
        a = compile_pcp(inst)
        expected = 3 + sum(len(u) + len(v) for u, v in pairs)
        assert len(a.states) == expected
        assert validate(a.states, a.alphabet, a.initials, a.translucent,
                        a.letter_delta, a.sentinel) == []
        report = classify(a)
        assert report.deterministic and report.repetitive
    print("PASS: c10 50 random instances compile to sound machines of the stated size")


def test_c11_sentinel_loop_diverges_within_the_state_bound():
    spinner = Automaton(
        states=["q"],
        alphabet=["a"],
        initials=["q"],
        translucent={"q": [w("a")]},
        sentinel={"q": Goto(("q",))},
    )
    for n in range(9):
        result = run_deterministic(spinner, w("a" * n))
        assert isinstance(result, Diverged), n
        jumps = sum(isinstance(s.action, SentinelStep) for s in result.trace)
        assert jumps <= len(spinner.states) + 1
    print("PASS: c11 sentinel loop diverges within |Q|+1 jumps on a^n for n<=8")


def test_c12_scan_agrees_with_the_split_search_oracle():
    pairs = 0
    tapes = list(all_words(AB, 8))
    for tau in prefix_code_sets(AB, max_words=3, max_word_len=4):
        a = loop_automaton(tau)
        for tape in tapes:
            assert_scan_matches_oracle(a, "q", tape)
            pairs += 1
    assert pairs == 2860 * 511
    print(f"PASS: c12 scan matches the oracle on all {pairs} (tau, tape) pairs")


def test_c13_accepted_letter_counts_double():
    a = build_a_ex()
    accepted = set(enumerate_accepted(a, 12))
    accepted.update(ab_power(m) for m in range(1, 17) if accepts(a, ab_power(m)))
    counts = {tuple(parikh(word, "ab").counts) for word in accepted}
    assert counts == {(2, 2), (4, 4), (8, 8), (16, 16)}
    print("PASS: c13 letter-count pairs are exactly (2^n, 2^n) for n=1..4")


def test_c14_text_round_trip_preserves_behaviour():
    machines = [
        build_a_ex(),
        build_a_2lin(),
        build_a_2lin1(),
        build_l_lin_union(),
        build_l_vee_nfawtl(),
    ]
    rng = random.Random(4242)
    while len(machines) < 55:
        machines.append(random_automaton(rng))
    words = list(all_words(AB, 8))
    for a in machines:
        back = parse(serialize(a))
        if a.alphabet == AB:
            probe = words
        else:
            probe = list(all_words(a.alphabet, 4))
        for word in probe:
            assert accepts(a, word) == accepts(back, word), (a.states, word)
    print("PASS: c14 55 machines behave identically after a text round trip")
