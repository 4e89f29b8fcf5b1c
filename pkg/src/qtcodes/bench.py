"""Benchmark the kernel backends against each other.

Run as `python -m qtcodes.bench`.  Times the three hot kernels on
fixed pseudo-random inputs for every importable backend and prints a
table with the numpy/numba ratio.  Compilation happens in a warm-up
pass, so numba numbers are steady-state.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from .kernels import implementations


def _rows(k, bits, seed):
    rng = np.random.default_rng(seed)
    lim = (1 << bits) - 1
    a = rng.integers(0, lim, size=k, dtype=np.uint64)
    b = rng.integers(0, lim, size=k, dtype=np.uint64)
    return a, b


def _time(fn, repeat):
    best = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        dt = time.perf_counter() - t0
        best = dt if best is None else min(best, dt)
    return best


def run(span_k=20, min_k=22, oracle_n=8, oracle_l=2, repeat=3):
    cases = {}
    ra, rb = _rows(span_k, 60, seed=11)
    cases[f"span_codewords k={span_k}"] = ("span_codewords", (ra, rb))
    ma, mb = _rows(min_k, 60, seed=12)
    cases[f"span_min_lee   k={min_k}"] = ("span_min_lee", (ma, mb))
    ca, cb = _rows(oracle_l, oracle_n, seed=13)
    cases[f"oracle n={oracle_n} l={oracle_l}  "] = (
        "oracle_codewords",
        (ca, cb, oracle_n, oracle_l),
    )

    impls = implementations()
    timings = {}
    for name, impl in impls.items():
        for label, (fn_name, fn_args) in cases.items():
            fn = getattr(impl, fn_name)
            fn(*fn_args)  # warm-up / compile
            timings[(name, label)] = _time(lambda: fn(*fn_args), repeat)

    names = list(impls)
    header = f"{'kernel':<22}" + "".join(f"{n:>12}" for n in names)
    if len(names) == 2:
        header += f"{'ratio':>10}"
    print(header)
    for label in cases:
        line = f"{label:<22}"
        for name in names:
            line += f"{timings[(name, label)] * 1e3:>10.2f}ms"
        if len(names) == 2:
            a, b = (timings[(n, label)] for n in names)
            line += f"{a / b:>9.1f}x"
        print(line)
    return timings


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--span-k", type=int, default=20)
    parser.add_argument("--min-k", type=int, default=22)
    parser.add_argument("--oracle-n", type=int, default=8)
    parser.add_argument("--oracle-l", type=int, default=2)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)
    run(args.span_k, args.min_k, args.oracle_n, args.oracle_l, args.repeat)


if __name__ == "__main__":
    main()
