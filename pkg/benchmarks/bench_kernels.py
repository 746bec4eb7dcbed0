#!/usr/bin/env python3
"""Benchmark the float-mode hot kernels: numba @njit vs pure numpy.

Times the principal-minor table, the ranked subset convolution, and the
end-to-end float mixed determinant on both backends, plus the exact path
for scale.  The numba backend is skipped automatically when unavailable or
disabled via MIXEDDET_DISABLE_NUMBA=1.

    python3 benchmarks/bench_kernels.py --n 14 --m 2 --repeat 5
"""

import argparse
import random
import time

import numpy as np

import mixeddet._kernels as kernels
from mixeddet.matcore import GaussianRational, HermitianMatrix
from mixeddet.mixed import mixed_det


def random_int_hermitian(rng, n, bound=5):
    rows = [[None] * n for _ in range(n)]
    for i in range(n):
        rows[i][i] = GaussianRational(rng.randint(-bound, bound))
        for j in range(i + 1, n):
            re, im = rng.randint(-bound, bound), rng.randint(-bound, bound)
            rows[i][j] = GaussianRational(re, im)
            rows[j][i] = GaussianRational(re, -im)
    return HermitianMatrix(rows, check=False)


def to_complex(a):
    return np.array(
        [[complex(e.re, e.im) for e in row] for row in a.rows], dtype=np.complex128
    ).reshape(a.n, a.n)


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=14, help="matrix order")
    ap.add_argument("--m", type=int, default=2, help="tuple length")
    ap.add_argument("--exact-n", type=int, default=10, help="order for the exact timing")
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    rng = random.Random(args.seed)
    mats = [random_int_hermitian(rng, args.n) for _ in range(args.m)]
    arrs = [to_complex(a) for a in mats]
    size = 1 << args.n

    have_numba = kernels.backend_name() == "numba"
    rows = []

    f_np = kernels.minor_table_numpy(arrs[0])
    rows.append(
        ("minor table / numpy", best_of(lambda: kernels.minor_table_numpy(arrs[0]), args.repeat))
    )
    if have_numba:
        kernels._minor_table_jit(arrs[0])  # compile outside the timer
        rows.append(
            ("minor table / numba", best_of(lambda: kernels._minor_table_jit(arrs[0]), args.repeat))
        )

    g_np = kernels.minor_table_numpy(arrs[-1])
    rows.append(
        (
            "subset convolution / numpy",
            best_of(lambda: kernels.subset_convolve_numpy(f_np, g_np, args.n), args.repeat),
        )
    )
    if have_numba:
        kernels._subset_convolve_jit(f_np, g_np, args.n)
        rows.append(
            (
                "subset convolution / numba",
                best_of(
                    lambda: kernels._subset_convolve_jit(f_np, g_np, args.n), args.repeat
                ),
            )
        )

    mixed_det(mats[:1], mode="float")  # warm the dispatch path
    rows.append(
        (
            f"mixed_det float n={args.n} m={args.m} / {kernels.backend_name()}",
            best_of(lambda: mixed_det(mats, mode="float"), args.repeat),
        )
    )

    exact_mats = [random_int_hermitian(rng, args.exact_n) for _ in range(3)]
    rows.append(
        (
            f"mixed_det exact n={args.exact_n} m=3",
            best_of(lambda: mixed_det(exact_mats), max(1, args.repeat // 3)),
        )
    )

    width = max(len(name) for name, _ in rows)
    print(f"backend: {kernels.backend_name()}   table size: 2^{args.n} = {size}")
    for name, t in rows:
        print(f"{name:<{width}}  {t * 1e3:10.2f} ms")
    if have_numba:
        np_time = dict(rows)["minor table / numpy"]
        nb_time = dict(rows)["minor table / numba"]
        print(f"minor-table speedup numba/numpy: {np_time / nb_time:.1f}x")


if __name__ == "__main__":
    main()
