#!/usr/bin/env python3
"""Time the pure-Python kernel against the compiled one on shared workloads.

Usage, from a checkout with the package installed::

    python benchmarks/bench_backends.py [--repeat N]

Each workload runs on both backends via the same flat tables, so the numbers
isolate the interpreter cost of the inner run loop.
"""
from __future__ import annotations

import argparse
import time

from twa import _pykernel
from twa.examples import build_a_2lin1, build_a_ex
from twa.kernel import DetProgram, program_for
from twa.reductions import compile_pcp_bounded, pcp_instance

try:
    from twa import _ckernel
except ImportError:  # extension not built
    _ckernel = None


def table_args(prog: DetProgram):
    return (prog.n_tokens, prog.n_states, prog.start, prog.delta, prog.troot,
            prog.tchild, prog.tterm, prog.skind, prog.starget)


def best_of(repeat, call):
    best = None
    for _ in range(repeat):
        started = time.perf_counter()
        call()
        elapsed = time.perf_counter() - started
        best = elapsed if best is None else min(best, elapsed)
    return best


def workloads():
    doubling = program_for(build_a_ex())
    odd = program_for(build_a_2lin1())
    pcp = program_for(compile_pcp_bounded(pcp_instance((("a", "aa"),))))
    long_word = [doubling.token_index[t] for t in ("a", "b") * 4096]
    return [
        ("run (ab)^4096 on the doubling machine", doubling, "run_det", long_word),
        ("enumerate doubling machine, len <= 16", doubling, "enumerate_det", 16),
        ("enumerate odd-block machine, len <= 16", odd, "enumerate_det", 16),
        ("sweep bounded correspondence machine, len <= 10", pcp, "enumerate_det", 10),
    ]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3,
                        help="take the best of N runs (default 3)")
    opts = parser.parse_args()

    print(f"{'workload':<48} {'pure (s)':>10} {'c (s)':>10} {'speedup':>8}")
    for label, prog, fn, payload in workloads():
        pure = best_of(opts.repeat,
                       lambda: getattr(_pykernel, fn)(*table_args(prog), payload))
        if _ckernel is None:
            print(f"{label:<48} {pure:>10.4f} {'-':>10} {'-':>8}")
            continue
        fast = best_of(opts.repeat,
                       lambda: getattr(_ckernel, fn)(*table_args(prog), payload))
        ratio = pure / fast if fast > 0 else float("inf")
        print(f"{label:<48} {pure:>10.4f} {fast:>10.4f} {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
