"""Time the numba kernels against their numpy fallbacks.

    python benchmarks/bench_kernels.py [--n 6] [--deg 12] [--max-n 60] [--repeat 5]

Each pair is checked for identical output before timing. The first numba
call (JIT compilation or cache load) is excluded from the timings.
"""
from __future__ import annotations

import argparse
import sys
import timeit

import numpy as np

from catsl2 import _accel
from catsl2.homvanish import gap_sweep
from catsl2.nilhecke.kernels import build_lookup, demazure_triplets, xmul_triplets
from catsl2.nilhecke.poly import monomials_up_to


def best_of(fn, repeat: int) -> float:
    return min(timeit.repeat(fn, number=1, repeat=repeat))


def same(a, b) -> bool:
    if isinstance(a, dict):
        return a == b
    ka = np.lexsort((a[1], a[0]))
    kb = np.lexsort((b[1], b[0]))
    return all(np.array_equal(x[ka], y[kb]) for x, y in zip(a, b))


def main(argv=None) -> int:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=6)
    ap.add_argument("--deg", type=int, default=12)
    ap.add_argument("--max-n", type=int, default=60)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)

    if not _accel.HAVE_NUMBA or _accel.numba_disabled():
        print("numba unavailable or disabled; nothing to compare")
        return 0

    exps = np.array(monomials_up_to(args.n, args.deg), dtype=np.int64)
    table = build_lookup(exps, args.deg)
    jobs = {
        f"demazure n={args.n} D={args.deg} ({len(exps)} monomials)":
            lambda be: demazure_triplets(exps, table, args.deg, 0, be),
        f"x-multiplication n={args.n} D={args.deg}":
            lambda be: xmul_triplets(exps, table, args.deg, 0, be),
        f"degree-gap sweep N <= {args.max_n}":
            lambda be: gap_sweep(args.max_n, be),
    }
    print(f"{'kernel':<48} {'numpy (ms)':>11} {'numba (ms)':>11} {'speedup':>8}")
    ok = True
    for name, fn in jobs.items():
        ref, fast = fn("numpy"), fn("numba")
        if not same(ref, fast):
            print(f"{name}: backends disagree", file=sys.stderr)
            ok = False
            continue
        t_np = best_of(lambda: fn("numpy"), args.repeat)
        t_nb = best_of(lambda: fn("numba"), args.repeat)
        print(f"{name:<48} {1e3 * t_np:>11.2f} {1e3 * t_nb:>11.2f} {t_np / t_nb:>7.1f}x")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
