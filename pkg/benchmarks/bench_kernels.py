"""Compare the jit-compiled merge kernel against the pure-numpy fallback.

Run directly:  python3 benchmarks/bench_kernels.py
The first jit timing includes compilation unless warmed up, so each kernel
is called once before measurement.
"""

import timeit

import numpy as np

from polaralign._kernels import _merge_sorted_jit, _merge_sorted_np


def make_case(rng, n):
    keys = np.sort(rng.normal(scale=2.0, size=n))
    dup = rng.random(n) < 0.3
    keys[dup] = np.round(keys[dup], 1)
    keys = np.sort(keys)
    return keys, rng.random(n), rng.random(n)


def bench(fn, args, repeat=5):
    fn(*args)  # warm-up (jit compile / numpy cache)
    number = max(1, int(2e6 / max(len(args[0]), 1)))
    times = timeit.repeat(lambda: fn(*args), number=number, repeat=repeat)
    return min(times) / number


def main():
    rng = np.random.default_rng(0)
    print(f"{'n':>9}  {'jit':>12}  {'numpy':>12}  {'speedup':>8}")
    for n in (100, 1_000, 10_000, 100_000, 1_000_000):
        keys, w0, w1 = make_case(rng, n)
        t_jit = bench(_merge_sorted_jit, (keys, w0, w1, 1e-10))
        t_np = bench(_merge_sorted_np, (keys, w0, w1, 1e-10))
        print(f"{n:>9}  {t_jit * 1e6:>10.2f}us  {t_np * 1e6:>10.2f}us"
              f"  {t_np / t_jit:>7.2f}x")


if __name__ == "__main__":
    main()
