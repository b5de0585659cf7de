"""Compiled vs pure-Python curve kernels.

Run ``python3 benchmarks/bench_sfc.py [--size 256] [--repeat 5]``. Every row
also asserts the two backends agree element for element.
"""

import argparse
import time

import numpy as np

from eat._backend import BACKEND, kernels, python_kernels


def _best(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def cases(n):
    ks = np.arange(n * n, dtype=np.int64)
    xs, ys = ks % n, ks // n
    m = min(n, 64)
    b3 = m.bit_length() - 1
    k3 = np.arange(m ** 3, dtype=np.int64)
    x3, y3, z3 = k3 % m, (k3 // m) % m, k3 // (m * m)
    return [
        ("hilbert xy->d", lambda K: K.hilbert_index_array(n, xs, ys)),
        ("hilbert d->xy", lambda K: K.hilbert_point_array(n, ks)),
        ("morton xy->d", lambda K: K.morton_index_array(xs, ys)),
        ("morton d->xy", lambda K: K.morton_point_array(ks)),
        ("hilbert3d xyz->d", lambda K: K.hilbert3d_index_array(b3, x3, y3, z3)),
        ("hilbert3d d->xyz", lambda K: K.hilbert3d_point_array(b3, k3)),
    ]


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--size", type=int, default=256, help="power-of-two grid side")
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()
    if BACKEND != "cython":
        print("compiled kernels not built; run `pip install -e . --no-build-isolation` first")
        return 1
    rows = cases(args.size)
    print(f"{'kernel':<18}{'python s':>12}{'cython s':>12}{'speedup':>10}")
    for name, fn in rows:
        tp, outp = _best(lambda: fn(python_kernels), max(1, args.repeat // 2))
        tc, outc = _best(lambda: fn(kernels), args.repeat)
        outp, outc = (o if isinstance(o, tuple) else (o,) for o in (outp, outc))
        assert all(np.array_equal(a, b) for a, b in zip(outp, outc)), name
        print(f"{name:<18}{tp:>12.4f}{tc:>12.5f}{tp / tc:>9.0f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
