#!/usr/bin/env python3
"""Timing comparison of the compiled and numpy step cores.

Runs the same semi-Lagrangian step repeatedly with each backend on an
identical state and reports per-node cost, checking on the way that the two
backends agree bitwise.
"""

import argparse
import time

import numpy as np

from semilag1d import _core_np

try:
    from semilag1d import _core_cy
except ImportError:
    _core_cy = None

SCHEMES = {"cip": 0, "rational": 1, "modified-rational": 2, "hybrid": 3}


def make_state(n, rng):
    h = 1.0 / n
    x = np.arange(n) * h
    f = np.cos(2 * np.pi * x) + 0.3 * np.sin(10 * np.pi * x)
    d = -2 * np.pi * np.sin(2 * np.pi * x) + 3 * np.pi * np.cos(10 * np.pi * x)
    u = 0.5 + 0.4 * np.sin(2 * np.pi * x) * rng.choice([-1.0, 1.0], size=n)
    return f, d, u, h


def bench(core, f, d, u, h, dt, scheme, steps, repeats=3):
    best = float("inf")
    for _ in range(repeats):
        ff, dd = f, d
        t0 = time.perf_counter()
        for _ in range(steps):
            ff, dd = core.step_arrays(ff, dd, u, h, dt, scheme, 1.0, True)
        best = min(best, time.perf_counter() - t0)
    return best, (ff, dd)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--n", type=int, default=16384, help="grid points")
    ap.add_argument("--steps", type=int, default=200, help="steps per timing rep")
    ap.add_argument("--scheme", default="hybrid", choices=sorted(SCHEMES))
    args = ap.parse_args()

    rng = np.random.default_rng(0)
    f, d, u, h = make_state(args.n, rng)
    dt = 0.4 * h / np.max(np.abs(u))
    scheme = SCHEMES[args.scheme]
    work = args.n * args.steps

    t_np, out_np = bench(_core_np, f, d, u, h, dt, scheme, args.steps)
    print(f"{'backend':<10} {'total s':>10} {'ns/node':>10}")
    print(f"{'python':<10} {t_np:>10.4f} {1e9 * t_np / work:>10.1f}")

    if _core_cy is None:
        print("compiled core not built; install with a C compiler to compare")
        return

    t_cy, out_cy = bench(_core_cy, f, d, u, h, dt, scheme, args.steps)
    print(f"{'compiled':<10} {t_cy:>10.4f} {1e9 * t_cy / work:>10.1f}")
    print(f"speedup: {t_np / t_cy:.1f}x")

    same = np.array_equal(out_np[0], out_cy[0]) and np.array_equal(out_np[1], out_cy[1])
    print(f"backends bitwise identical after {args.steps} steps: {same}")
    if not same:
        raise SystemExit("backend mismatch")


if __name__ == "__main__":
    main()
