#!/usr/bin/env python3
"""Benchmark the exhaustive 2 x 2 pair-scan kernels: numba vs pure numpy.

Usage: python3 benchmarks/bench_scan.py [--bounds 3 4 5] [--repeat 3]
"""

import argparse
import time

from detdiv import _scan


def time_backend(backend, mats, gs, dets, bound, repeat):
    fn = _scan.scan_pairs_numba if backend == "numba" else _scan.scan_pairs_numpy
    fn(mats, gs, dets, bound)  # warmup; includes JIT compilation for numba
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn(mats, gs, dets, bound)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bounds", type=int, nargs="+", default=[3, 4, 5])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    backends = ["numpy"]
    try:
        import numba  # noqa: F401

        backends.insert(0, "numba")
    except ImportError:
        print("numba not importable; timing the numpy fallback only")

    print(f"{'bound':>6} {'matrices':>9} {'pairs':>13} "
          + "".join(f"{b + ' (s)':>12}" for b in backends)
          + (f"{'speedup':>9}" if len(backends) == 2 else ""))
    for bound in args.bounds:
        mats, gs, dets = _scan.enumerate_2x2(bound)
        pairs = mats.shape[0] ** 2
        times = [time_backend(b, mats, gs, dets, bound, args.repeat) for b in backends]
        row = f"{bound:>6} {mats.shape[0]:>9} {pairs:>13}"
        row += "".join(f"{t:>12.3f}" for t in times)
        if len(times) == 2:
            row += f"{times[1] / times[0]:>8.1f}x"
        print(row)


if __name__ == "__main__":
    main()
