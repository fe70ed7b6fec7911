"""Timing comparison: compiled elimination kernels vs the pure fallback.

Both backends compute exact integer ranks (Bareiss) and ranks mod p; the
compiled path additionally bails out to big integers on potential int64
overflow, so correctness is identical and only throughput differs.

Run from the repository root:

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --size 60 --reps 40 --seed 7
"""

import argparse
import random
import statistics
import time

from ualie import _kernels, _pure


def make_matrices(rng, count, size, span):
    return [
        [rng.randint(-span, span) for _ in range(size * size)] for _ in range(count)
    ]


def bench(fn, mats, size, *extra):
    times = []
    checksum = 0
    for entries in mats:
        t0 = time.perf_counter()
        checksum += fn(entries, size, size, *extra)
        times.append(time.perf_counter() - t0)
    return sum(times), statistics.median(times), checksum


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=40, help="square matrix side")
    ap.add_argument("--reps", type=int, default=30, help="matrices per workload")
    ap.add_argument("--span", type=int, default=99, help="entry range [-span, span]")
    ap.add_argument("--seed", type=int, default=2026)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    mats = make_matrices(rng, args.reps, args.size, args.span)
    prime = 2**31 - 1

    workloads = [
        ("int_rank (Bareiss over Z)", _kernels.int_rank, _pure.int_rank, ()),
        ("rank_mod_p (p = 2^31 - 1)", _kernels.rank_mod_p, _pure.rank_mod_p, (prime,)),
    ]

    print(f"backend selected at import: {_kernels.BACKEND}")
    print(f"workload: {args.reps} random {args.size}x{args.size} integer matrices, "
          f"entries in [-{args.span}, {args.span}]\n")
    header = f"{'kernel':<28} {'dispatched':>12} {'pure':>12} {'speedup':>9}"
    print(header)
    print("-" * len(header))

    for name, fast, slow, extra in workloads:
        t_fast, med_fast, chk_fast = bench(fast, mats, args.size, *extra)
        t_slow, med_slow, chk_slow = bench(slow, mats, args.size, *extra)
        if chk_fast != chk_slow:
            raise SystemExit(f"backend disagreement in {name}: "
                             f"{chk_fast} != {chk_slow}")
        speedup = t_slow / t_fast if t_fast > 0 else float("inf")
        print(f"{name:<28} {t_fast:>10.4f}s {t_slow:>10.4f}s {speedup:>8.1f}x")

    if _kernels.BACKEND == "pure":
        print("\nnote: extension not built, both columns ran the fallback; "
              "rerun after `pip install -e .` with Cython available")


if __name__ == "__main__":
    main()
