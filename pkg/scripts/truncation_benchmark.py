"""Cost of exp_delta, the explicit recursion and Witt multiplication as n grows.

Reports wall time and the size (number of terms) of the top component.
"""

import argparse
import random
import time

from deltawitt.config import PRESETS
from deltawitt.delta import exp_delta, explicit_sequence
from deltawitt.harness import Bounds, sample_poly, sample_witt


def timed(fn, *args):
    start = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - start


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--rings", nargs="*", default=["f2tu", "f2tu-twisted", "f4tu", "z2u", "z3u", "ziu"])
    ap.add_argument("--n-max", type=int, default=5)
    ap.add_argument("--reps", type=int, default=5)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    bounds = Bounds(u_degree=2, t_degree=2, coeff=3, terms=3)

    print(f"{'ring':<26} {'n':>2} {'exp ms':>9} {'explicit ms':>12} {'witt mul ms':>12} {'|P_n|':>7}")
    for name in args.rings:
        setup = PRESETS[name]
        n_top = args.n_max if setup.ring.q == 2 else min(args.n_max, 4)
        for n in range(1, n_top + 1):
            rng = random.Random(f"{args.seed}/{name}/{n}")
            t_exp = t_rec = t_mul = 0.0
            size = 0
            for _ in range(args.reps):
                x = sample_poly(rng, setup.alg, bounds)
                seq, dt = timed(exp_delta, setup.ctx, x, n)
                t_exp += dt
                _, dt = timed(explicit_sequence, setup.ctx, x, n)
                t_rec += dt
                size = max(size, len(seq[n]))
                a, b = sample_witt(rng, setup.alg, n, bounds), sample_witt(rng, setup.alg, n, bounds)
                _, dt = timed(lambda: a * b)
                t_mul += dt
            r = 1000 / args.reps
            print(f"{setup.label:<26} {n:>2} {t_exp * r:>9.2f} {t_rec * r:>12.2f} {t_mul * r:>12.2f} {size:>7}")


if __name__ == "__main__":
    main()
