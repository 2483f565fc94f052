"""Compare the compiled and pure-Python allowed-pattern kernels.

Usage: python benchmarks/bench_kernels.py [--repeat 3] [--quick]
"""

import argparse
import time

from negabeta import kernels

CASES = [(2, 8), (3, 6), (4, 6), (5, 6), (6, 6), (7, 6), (2, 12)]
QUICK = [(2, 6), (3, 5), (4, 5)]


def best_time(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true")
    args = parser.parse_args(argv)
    cases = QUICK if args.quick else CASES
    if kernels.BACKEND != "cython":
        print("compiled extension unavailable; timing the Python kernel only")
    print(f"{'N':>3} {'n':>3} {'patterns':>9} {'python s':>10} {'cython s':>10} {'speedup':>8}")
    for N, n in cases:
        t_py, res_py = best_time(lambda: kernels.integer_patterns(N, n, "python"), args.repeat)
        if kernels.BACKEND == "cython":
            t_cy, res_cy = best_time(lambda: kernels.integer_patterns(N, n, "cython"), args.repeat)
            if res_cy != res_py:
                raise SystemExit(f"backends disagree at N={N}, n={n}")
            print(f"{N:>3} {n:>3} {len(res_py):>9} {t_py:>10.4f} {t_cy:>10.4f} {t_py / t_cy:>7.1f}x")
        else:
            print(f"{N:>3} {n:>3} {len(res_py):>9} {t_py:>10.4f} {'-':>10} {'-':>8}")


if __name__ == "__main__":
    main()
