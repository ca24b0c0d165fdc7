#!/usr/bin/env python3
"""Benchmark the numba kernels against the pure-numpy fallback.

Runs the hot paths at experiment sizes under both backends and prints a
timing table with speedups.  Both backends are checked to agree on the
outputs before timing.

Usage:
    python benchmarks/bench_backends.py [--repeat 5]
"""

import argparse
import time

import numpy as np

from fig8jones import _kernels


def time_call(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


CASES = []


def case(name):
    def wrap(fn):
        CASES.append((name, fn))
        return fn
    return wrap


@case("single scan, N = 100000 (Kashaev point)")
def _single_scan():
    return _kernels.jones_scan(100000, 1.0 / 100000)


@case("convergence grid, 496 points at N = 2000")
def _conv_grid():
    rs = np.arange(5, 501) / 100.0
    xs = rs / 2000.0
    return _kernels.jones_grid(np.full(len(xs), 2000, dtype=np.int64), xs)


@case("circle quadrature grid, 2^14 samples of J_500")
def _quad_grid():
    xs = (np.arange(1 << 14) + 0.5) / (1 << 14)
    return _kernels.jones_grid(np.full(len(xs), 500, dtype=np.int64), xs)


@case("cable profile, odd colors to 1599 at N = 800")
def _profile():
    cs = np.arange(1, 1600, 2, dtype=np.int64)
    return _kernels.jones_grid_exact(cs, 1, 800)


def agreement_tag(a, b) -> str:
    """Coarse cross-backend sanity; the strict well-conditioned checks
    live in the unit tests.  Alternating-sign grid points cancel by up
    to ~1e-13 of their peak, where the two summation orders keep only a
    few common digits of the log, so only gross disagreement flags."""
    if isinstance(a, tuple) and isinstance(a[0], np.ndarray):
        sa, la = a
        sb, lb = b
        live = (sa != 0) & (sb != 0) & np.isfinite(la) & np.isfinite(lb)
        if not np.any(live):
            return ""
        diff = np.abs(la[live] - lb[live])
        tight = diff <= 1e-6 * np.maximum(1.0, np.abs(la[live]))
        sign_flips = int(np.sum(sa != sb))
        if float(np.max(diff)) > 6.0 or sign_flips > 0.02 * len(sa):
            return "  [MISMATCH]"
        n = int(np.sum(~tight)) + sign_flips
        return f"  [{n} cancellation pts]" if n else ""
    same = a[0] == b[0] and abs(a[1] - b[1]) < 1e-9 * max(1.0, abs(a[1]))
    return "" if same else "  [MISMATCH]"


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba backend unavailable; nothing to compare "
                         "(set FIG8JONES_BACKEND=numba or install numba)")

    _kernels.use_backend("numba")
    _kernels.warmup()

    print(f"{'case':<48} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for name, fn in CASES:
        _kernels.use_backend("numba")
        t_nb, out_nb = time_call(fn, args.repeat)
        _kernels.use_backend("numpy")
        t_np, out_np = time_call(fn, args.repeat)
        _kernels.use_backend("numba")
        tag = agreement_tag(out_nb, out_np)
        print(f"{name:<48} {t_nb*1e3:>8.2f}ms {t_np*1e3:>8.2f}ms "
              f"{t_np/t_nb:>7.1f}x{tag}")


if __name__ == "__main__":
    main()
