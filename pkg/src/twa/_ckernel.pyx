# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled inner loops: deterministic runs and exhaustive word enumeration.

Operates on the flat integer tables produced by ``twa.kernel.compile_det``.
Tokens are alphabet indices; the per-state translucency tries are flattened
into one child table.  Verdicts: 0 reject, 1 accept, 2 diverged.
"""

from libc.stdlib cimport free, malloc

NAME = "c"


cdef int _run(const int* delta, const int* troot, const int* tchild,
              const unsigned char* tterm, const signed char* skind,
              const int* starget, int n_tokens, int n_states, int start,
              int* tape, int n, int* dead_examined) noexcept nogil:
    cdef int state = start
    cdef int sent_run = 0      # consecutive end-of-tape jumps; > n_states means a loop
    cdef int first_scan = 1
    cdef int p, i, j, tok, target, node, kind
    dead_examined[0] = -1
    while True:
        p = 0
        while p < n:
            tok = tape[p]
            target = delta[state * n_tokens + tok]
            if target >= 0:
                # read the letter: delete it and restart the scan
                for j in range(p, n - 1):
                    tape[j] = tape[j + 1]
                n -= 1
                state = target
                sent_run = 0
                first_scan = 0
                p = -1
                break
            # try to cross one translucent word
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
                    dead_examined[0] = i
                return 0
            p = i
        if p == -1:
            continue
        # the whole tape is translucent
        kind = skind[state]
        if kind == 1:
            return 1
        if kind == 0:
            return 0
        sent_run += 1
        if sent_run > n_states:
            return 2
        state = starget[state]
        first_scan = 0


def run_det(int n_tokens, int n_states, int start,
            int[::1] delta, int[::1] troot, int[::1] tchild,
            unsigned char[::1] tterm, signed char[::1] skind, int[::1] starget,
            word):
    """Verdict of the deterministic run on ``word`` (a sequence of token indices)."""
    cdef int n = len(word)
    cdef int* tape = <int*> malloc((n + 1) * sizeof(int))
    cdef int j, verdict, dead
    if tape == NULL:
        raise MemoryError
    try:
        for j in range(n):
            tape[j] = word[j]
        verdict = _run(&delta[0], &troot[0], &tchild[0], &tterm[0], &skind[0],
                       &starget[0], n_tokens, n_states, start, tape, n, &dead)
    finally:
        free(tape)
    return verdict


def enumerate_det(int n_tokens, int n_states, int start,
                  int[::1] delta, int[::1] troot, int[::1] tchild,
                  unsigned char[::1] tterm, signed char[::1] skind,
                  int[::1] starget, int max_len):
    """All accepted token-index words of length <= max_len, shortest first,
    lexicographic within a length.

    When the very first scan of a word gets stuck after examining only a
    prefix, every word sharing that prefix dies the same way, so the
    enumeration skips the whole block at once.
    """
    out = []
    cdef int length, j, k, verdict, dead, carry
    cdef int* word
    cdef int* tape
    if max_len < 0:
        return out
    word = <int*> malloc((max_len + 1) * sizeof(int))
    tape = <int*> malloc((max_len + 1) * sizeof(int))
    if word == NULL or tape == NULL:
        if word != NULL:
            free(word)
        if tape != NULL:
            free(tape)
        raise MemoryError
    try:
        for length in range(0, max_len + 1):
            if n_tokens == 0 and length > 0:
                break
            for j in range(length):
                word[j] = 0
            while True:
                for j in range(length):
                    tape[j] = word[j]
                verdict = _run(&delta[0], &troot[0], &tchild[0], &tterm[0],
                               &skind[0], &starget[0], n_tokens, n_states,
                               start, tape, length, &dead)
                if verdict == 1:
                    out.append(tuple([word[j] for j in range(length)]))
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
    finally:
        free(word)
        free(tape)
    return out
