#!/usr/bin/env python3
"""Estimate the range-scaling exponent for each path model and print a table.

Usage:
    python3 scripts/calibrate_alpha.py [--paths 100000] [--steps 4000] [--seed 1]
"""

import argparse
import time

from lix.simlab import PathModel, WalkKind, estimate_alpha

GRID = [i / 10 for i in range(1, 11)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--paths", type=int, default=100_000)
    ap.add_argument("--steps", type=int, default=4000)
    ap.add_argument("--seed", type=int, default=1)
    args = ap.parse_args()

    models = [
        ("random walk", PathModel(kind=WalkKind.ARITHMETIC_RANDOM_WALK,
                                  steps_per_day=args.steps,
                                  volatility_per_step=0.01, seed=args.seed)),
        ("gaussian returns", PathModel(kind=WalkKind.GAUSSIAN_RETURNS,
                                       steps_per_day=args.steps,
                                       volatility_per_step=0.0005,
                                       seed=args.seed)),
        ("student-t dof=3", PathModel(kind=WalkKind.STUDENT_T_RETURNS, dof=3,
                                      steps_per_day=args.steps,
                                      volatility_per_step=0.0005,
                                      seed=args.seed)),
    ]
    print(f"{'model':<18} {'alpha_hat':>10} {'stderr':>10} {'seconds':>8}")
    for name, model in models:
        t0 = time.perf_counter()
        est = estimate_alpha(model, args.paths, GRID)
        print(f"{name:<18} {est.alpha_hat:>10.4f} {est.stderr:>10.5f} "
              f"{time.perf_counter() - t0:>8.1f}")


if __name__ == "__main__":
    main()
