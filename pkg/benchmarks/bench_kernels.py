"""Benchmark the compiled convolution kernels against the pure-Python path.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import random
import time

from ikdeg import kernels


def bench(fn, a, b, force, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(a, b, force=force)
        best = min(best, time.perf_counter() - t0)
    return best, out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=7)
    args = ap.parse_args()

    print(f"compiled kernels available: {kernels.HAVE_COMPILED}")
    rng = random.Random(12345)
    print(f"{'kind':<8}{'size':>6}{'pure (ms)':>12}{'compiled (ms)':>15}{'speedup':>9}")
    for kind, fn in (("linear", kernels.linear_convolve), ("cyclic", kernels.cyclic_convolve)):
        for size in (32, 128, 512, 2048):
            a = [rng.randrange(-(10**6), 10**6) for _ in range(size)]
            b = [rng.randrange(-(10**6), 10**6) for _ in range(size)]
            t_pure, out_pure = bench(fn, a, b, "pure", args.repeat)
            if kernels.HAVE_COMPILED:
                t_comp, out_comp = bench(fn, a, b, "compiled", args.repeat)
                assert out_pure == out_comp, "kernel mismatch"
                print(
                    f"{kind:<8}{size:>6}{t_pure * 1e3:>12.3f}{t_comp * 1e3:>15.3f}"
                    f"{t_pure / t_comp:>8.1f}x"
                )
            else:
                print(f"{kind:<8}{size:>6}{t_pure * 1e3:>12.3f}{'n/a':>15}{'n/a':>9}")


if __name__ == "__main__":
    main()
