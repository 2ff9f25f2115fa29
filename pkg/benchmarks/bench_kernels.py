#!/usr/bin/env python3
"""Benchmark the numba kernels against their pure-numpy twins.

Times the two integrand kernels on frequency batches of several sizes and a
full bound-report column sweep under each backend (the sweep runs in a
subprocess so the KRONBOUNDS_BACKEND flag is honored at import).
"""

import os
import subprocess
import sys
import time

import numpy as np

from kronbounds import _kernels_numba, _kernels_numpy

BATCH_SIZES = (15, 240, 4096, 65536)
REPEATS = 200


def time_kernel(fn, args, repeats=REPEATS):
    fn(*args)  # warm up / compile
    start = time.perf_counter()
    for _ in range(repeats):
        fn(*args)
    return (time.perf_counter() - start) / repeats


def bench_kernels():
    print(f"{'kernel':<26} {'batch':>7} {'numpy':>12} {'numba':>12} {'speedup':>9}")
    rng = np.random.default_rng(0)
    for size in BATCH_SIZES:
        w = rng.uniform(0.0, 100.0, size=size)
        pair_args = (w, 0.081, 3.919, 3.0, 0.081, 3.919, 5.0)
        mixed_args = (w, 0.081, 3.919, 4.0)
        for name, np_fn, nb_fn, args in (
            ("resolvent_pair_integrand", _kernels_numpy.resolvent_pair_integrand,
             _kernels_numba.resolvent_pair_integrand, pair_args),
            ("mixed_axis_integrand", _kernels_numpy.mixed_axis_integrand,
             _kernels_numba.mixed_axis_integrand, mixed_args),
        ):
            t_np = time_kernel(np_fn, args)
            t_nb = time_kernel(nb_fn, args)
            print(f"{name:<26} {size:>7} {t_np * 1e6:>10.1f}us {t_nb * 1e6:>10.1f}us "
                  f"{t_np / t_nb:>8.2f}x")


SWEEP_CODE = """
import time
import kronbounds as kb

m = kb.scale_by_diagonal(kb.make_preset("fd-laplacian", 10))
kb.column_reports(m, 35)  # warm up / compile
start = time.perf_counter()
for t in (1, 35, 55, 100):
    kb.column_reports(m, t)
print(f"{kb.active_backend}: {time.perf_counter() - start:.3f}s for 4 columns (400 entries)")
"""


def bench_column_sweep():
    print("\nfull column sweep (adaptive quadrature end to end):")
    for backend in ("numpy", "numba"):
        env = dict(os.environ, KRONBOUNDS_BACKEND=backend)
        out = subprocess.run(
            [sys.executable, "-c", SWEEP_CODE], env=env, capture_output=True, text=True
        )
        sys.stdout.write(out.stdout)
        if out.returncode != 0:
            sys.stderr.write(out.stderr)


if __name__ == "__main__":
    bench_kernels()
    bench_column_sweep()
