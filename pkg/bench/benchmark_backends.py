"""Benchmark the compiled kernels against the pure-Python twins.

Usage:
    python3 bench/benchmark_backends.py [--size 20000] [--bet-size 600] [--repeat 3]

Times each of the five kernel operations on both backends at a common input
size (betweenness kernels get their own, smaller default since they are
quadratic-ish) and prints the speedup. Also cross-checks that the two
backends returned identical results while it is at it.
"""

import argparse
import time

import numpy as np

import divnet._kernels_py as pure

try:
    import divnet._kernels as compiled
except ImportError:
    compiled = None


def best_of(fn, args, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, out


def same(a, b):
    if isinstance(a, tuple):
        return all(same(x, y) for x, y in zip(a, b))
    if a.dtype.kind == "f":
        return bool(np.max(np.abs(a - b)) < 1e-12)
    return bool(np.array_equal(a, b))


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--size", type=int, default=20_000)
    parser.add_argument("--bet-size", type=int, default=600)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if compiled is None:
        print("compiled extension not available; timing pure backend only")

    big_csr = pure.divisibility_csr(args.size)
    small_csr = pure.divisibility_csr(args.bet_size)
    cases = [
        ("sieve_tables", "sieve_tables", (args.size,)),
        ("divisibility_csr", "divisibility_csr", (args.size,)),
        ("triangle_edge_counts", "triangle_edge_counts", big_csr),
        ("betweenness_pair_scan", "betweenness_pair_scan", small_csr),
        ("brandes_betweenness", "brandes_betweenness", small_csr),
    ]

    name_w = max(len(c[0]) for c in cases)
    print(f"sizes: {args.size} (sieve/graph), {args.bet_size} (betweenness); best of {args.repeat}")
    print(f"{'kernel':<{name_w}}  {'pure':>10}  {'compiled':>10}  {'speedup':>8}  agree")
    for label, attr, call_args in cases:
        t_pure, out_pure = best_of(getattr(pure, attr), call_args, args.repeat)
        if compiled is None:
            print(f"{label:<{name_w}}  {t_pure:>9.4f}s  {'-':>10}  {'-':>8}")
            continue
        t_comp, out_comp = best_of(getattr(compiled, attr), call_args, args.repeat)
        agree = same(out_pure, out_comp)
        print(
            f"{label:<{name_w}}  {t_pure:>9.4f}s  {t_comp:>9.4f}s"
            f"  {t_pure / t_comp:>7.1f}x  {agree}"
        )


if __name__ == "__main__":
    main()
