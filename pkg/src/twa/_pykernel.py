"""Pure-Python mirror of the compiled kernel.

Same flat-table layout, same verdicts, same enumeration order as
``twa._ckernel`` -- used when the extension is unavailable (or forced via
``TWA_BACKEND=pure``) and as the reference side of backend parity tests.
"""
from __future__ import annotations

NAME = "pure"


def _run(delta, troot, tchild, tterm, skind, starget, n_tokens, n_states,
         start, tape, n):
    """Run on a mutable list ``tape``; returns (verdict, first_scan_dead_index)."""
    state = start
    sent_run = 0
    first_scan = True
    dead = -1
    while True:
        p = 0
        restarted = False
        while p < n:
            tok = tape[p]
            target = delta[state * n_tokens + tok]
            if target >= 0:
                del tape[p]
                n -= 1
                state = target
                sent_run = 0
                first_scan = False
                restarted = True
                break
            node = troot[state]
            i = p
            while True:
                if i >= n:
                    node = -1
                    i = n - 1
                    break
                node = tchild[node * n_tokens + tape[i]]
                if node < 0:
                    break
                i += 1
                if tterm[node]:
                    break
            if node < 0:
                if first_scan:
                    dead = i
                return 0, dead
            p = i
        if restarted:
            continue
        kind = skind[state]
        if kind == 1:
            return 1, dead
        if kind == 0:
            return 0, dead
        sent_run += 1
        if sent_run > n_states:
            return 2, dead
        state = starget[state]
        first_scan = False


def run_det(n_tokens, n_states, start, delta, troot, tchild, tterm, skind,
            starget, word):
    verdict, _ = _run(list(delta), list(troot), list(tchild), list(tterm),
                      list(skind), list(starget), n_tokens, n_states, start,
                      list(word), len(word))
    return verdict


def enumerate_det(n_tokens, n_states, start, delta, troot, tchild, tterm,
                  skind, starget, max_len):
    out = []
    delta = list(delta)
    troot = list(troot)
    tchild = list(tchild)
    tterm = list(tterm)
    skind = list(skind)
    starget = list(starget)
    for length in range(max_len + 1):
        if n_tokens == 0 and length > 0:
            break
        word = [0] * length
        while True:
            verdict, dead = _run(delta, troot, tchild, tterm, skind, starget,
                                 n_tokens, n_states, start, word.copy(), length)
            if verdict == 1:
                out.append(tuple(word))
            if length == 0:
                break
            carry = length - 1
            if 0 <= dead < length - 1:
                carry = dead
            for k in range(carry + 1, length):
                word[k] = 0
            j = carry
            while j >= 0:
                word[j] += 1
                if word[j] < n_tokens:
                    break
                word[j] = 0
                j -= 1
            if j < 0:
                break
    return out
