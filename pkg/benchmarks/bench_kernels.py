"""Timing comparison of the pure-Python and compiled correlation kernels.

Times three representative workloads through both backends regardless of
which one the package selected at import:

  profile     sum of squared autocorrelations for single sequences
  enumerate   full power-sum scan of one class (count, sum q, sum q^2)
  batch       sampled free-index blocks, the Monte Carlo inner loop

Usage: python benchmarks/bench_kernels.py [--quick]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from littlewood.kernels import KIND_ALL, _to_words, pure

try:
    from littlewood.kernels import _corrfast as fast
except ImportError:
    fast = None


def timed(fn, min_time=0.2, max_repeat=1_000_000):
    """Seconds per call, repeating until min_time has elapsed."""
    fn()  # warm up; also surfaces errors before timing
    done = 0
    start = time.perf_counter()
    while True:
        fn()
        done += 1
        elapsed = time.perf_counter() - start
        if elapsed >= min_time or done >= max_repeat:
            return elapsed / done


def bench_profile(n, bits):
    cases = {"pure": lambda: pure.acf_sum_sq(bits, n)}
    if fast is not None:
        cases["compiled"] = lambda: int(fast.sum_sq_words(_to_words(bits, n), n))
    return cases


def bench_enumerate(n):
    hi = 1 << n
    cases = {"pure": lambda: pure.range_power_sums(KIND_ALL, n, 0, hi)}
    if fast is not None:
        cases["compiled"] = lambda: fast.range_power_sums(KIND_ALL, n, 0, hi)
    return {name: (fn, 1) for name, fn in cases.items()}


def bench_batch(n, rows, seed=7):
    gen = np.random.Generator(np.random.Philox(key=seed))
    words = gen.integers(0, 1 << 63, size=(rows, (n + 63) // 64), dtype=np.uint64)
    cases = {"pure": lambda: pure.batch_sum_sq(KIND_ALL, n, words)}
    if fast is not None:
        cases["compiled"] = lambda: fast.batch_sum_sq(KIND_ALL, n, words)
    return {name: (fn, 20) for name, fn in cases.items()}


def run(label, cases, results):
    times = {}
    for name, entry in cases.items():
        fn, max_repeat = entry if isinstance(entry, tuple) else (entry, 1_000_000)
        times[name] = timed(fn, max_repeat=max_repeat)
    results.append((label, times))


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--quick", action="store_true",
                        help="smaller sizes, for smoke-testing the harness")
    args = parser.parse_args()

    if fast is None:
        print("compiled extension not importable; timing the pure backend only")

    gen = np.random.Generator(np.random.Philox(key=11))
    results = []

    n = 64 if args.quick else 256
    bits = int.from_bytes(gen.bytes(n // 8), "little") & ((1 << n) - 1)
    run(f"profile n={n}", bench_profile(n, bits), results)

    n = 12 if args.quick else 18
    run(f"enumerate all n={n} ({1 << n} members)", bench_enumerate(n), results)

    n, rows = (128, 64) if args.quick else (1024, 512)
    run(f"batch n={n} rows={rows}", bench_batch(n, rows), results)

    width = max(len(label) for label, _ in results)
    print(f"{'workload':<{width}}  {'pure':>12}  {'compiled':>12}  {'speedup':>8}")
    for label, times in results:
        pure_t = times["pure"]
        if "compiled" in times:
            fast_t = times["compiled"]
            print(f"{label:<{width}}  {pure_t:>10.3e}s  {fast_t:>10.3e}s  "
                  f"{pure_t / fast_t:>7.1f}x")
        else:
            print(f"{label:<{width}}  {pure_t:>10.3e}s  {'-':>12}  {'-':>8}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
