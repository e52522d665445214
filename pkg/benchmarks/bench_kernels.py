#!/usr/bin/env python3
"""Side-by-side timing of the numpy and numba kernels.

Each row runs both backends on the same input, checks the results agree and
prints the speedup.  The first numba call compiles; it is excluded.
"""
import argparse
import random
import time

import numpy as np

from arcalg import _kernels
from arcalg.arc_algebra import run_plan, surgery_plan
from arcalg.diagrams import cup_diagrams


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        times.append(time.perf_counter() - t0)
    return min(times), out


def circle_case(m, rows, rng):
    ds = cup_diagrams(m)
    top = np.array([rng.choice(ds).partner for _ in range(rows)], dtype=np.int64)
    bottom = np.array([rng.choice(ds).partner for _ in range(rows)], dtype=np.int64)
    return (lambda: _kernels.circle_labels_numpy(top, bottom),
            lambda: _kernels.circle_labels_numba(top, bottom),
            np.array_equal)


def surgery_case(m, rng):
    ds = cup_diagrams(m)
    plans = [surgery_plan(rng.choice(ds), rng.choice(ds), rng.choice(ds)) for _ in range(20)]

    def run(use_jit):
        _kernels.set_backend(use_jit)
        out = []
        for plan in plans:
            nf = plan.n_old[0] - plan.n_lower
            out.append(run_plan(plan, range(2 ** nf), range(2 ** plan.n_lower)))
        return out

    return lambda: run(False), lambda: run(True), lambda x, y: x == y


def rank_case(size, rng):
    mat = np.array([[rng.randrange(-5, 6) for _ in range(size)] for _ in range(size)], dtype=np.int64)
    return (lambda: _kernels.rank_mod_p_numpy(mat),
            lambda: _kernels.rank_mod_p_numba(mat),
            lambda x, y: x == y)


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()
    if not _kernels.HAVE_NUMBA:
        raise SystemExit("numba is not installed; nothing to compare")
    rng = random.Random(args.seed)
    cases = [
        ("circles m=6 x2000", circle_case(6, 2000, rng)),
        ("circles m=10 x2000", circle_case(10, 2000, rng)),
        ("surgery m=4 x20", surgery_case(4, rng)),
        ("surgery m=6 x20", surgery_case(6, rng)),
        ("rank mod p 120", rank_case(120, rng)),
        ("rank mod p 300", rank_case(300, rng)),
    ]
    before = _kernels.JIT_ENABLED
    print(f"{'case':<22} {'numpy (s)':>10} {'numba (s)':>10} {'speedup':>8} {'agree':>6}")
    print("-" * 60)
    for name, (slow, fast, same) in cases:
        fast()  # compile
        t_np, out_np = best_of(slow, args.repeat)
        t_nb, out_nb = best_of(fast, args.repeat)
        ok = same(out_np, out_nb)
        print(f"{name:<22} {t_np:>10.4f} {t_nb:>10.4f} {t_np / t_nb:>7.1f}x {'ok' if ok else 'FAIL':>6}")
    _kernels.set_backend(before)


if __name__ == "__main__":
    main()
