"""Compare the compiled and numpy kernels on typical workloads.

Run with ``python3 benchmarks/bench_kernels.py``; prints seconds per call and speedup.
"""

import argparse
import timeit

import numpy as np

from koszulkit import _pykernels

try:
    from koszulkit import _ckernels
except ImportError:
    _ckernels = None


def _table(n):
    t = np.zeros((n, n), dtype=np.int64)
    k = 0
    for i in range(n):
        for j in range(i, n):
            t[i, j] = t[j, i] = k
            k += 1
    return t


def workloads(seed=0):
    rng = np.random.default_rng(seed)
    p = 32003
    A = rng.integers(0, p, size=(120, 160)).astype(np.int64)
    yield "rref 120x160 mod 32003", lambda m: m.rref_modp(A.copy(), p)

    p, n = 7, 5
    N = n * (n + 1) // 2
    B = rng.integers(0, p, size=(5, N)).astype(np.int64)
    piv = _pykernels.rref_modp(B, p)
    B = np.ascontiguousarray(B[:len(piv)])
    tab = _table(n)
    yield "scan_multiples n=5 p=7", lambda m: m.scan_multiples(B, piv, tab, p)

    p = 11
    T = rng.integers(0, p, size=(2, 6, 8)).astype(np.int64)
    yield "min_rank_pencil 6x8 p=11", lambda m: m.min_rank_pencil(T, p)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args(argv)
    print(f"{'workload':<28} {'python':>10} {'cython':>10} {'speedup':>8}")
    for name, fn in workloads():
        py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        if _ckernels is None:
            print(f"{name:<28} {py:>10.4f} {'n/a':>10} {'':>8}")
            continue
        cy = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<28} {py:>10.4f} {cy:>10.4f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
