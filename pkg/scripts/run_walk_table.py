#!/usr/bin/env python3
"""Hitting-probability table for the Burau walk on 3-braids.

Exact column from the convolution DP, Monte Carlo column with a fixed seed
next to it, so sampling error is visible against the exact values.
"""

import argparse

from braidwalk.walks import (
    GenMeasure,
    PREDICATES,
    hitting_series,
    monte_carlo_hitting,
)


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--steps", type=int, default=12)
    ap.add_argument("--predicate", default="z11", choices=sorted(PREDICATES))
    ap.add_argument("--trials", type=int, default=100_000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--skip-mc", action="store_true", help="exact column only")
    args = ap.parse_args()

    mu = GenMeasure.uniform_generators(3)
    series = hitting_series(mu, PREDICATES[args.predicate][0], args.steps)

    print("step  exact                 decimal    mc_estimate")
    for k in range(1, args.steps + 1):
        if args.skip_mc:
            mc = ""
        else:
            est = monte_carlo_hitting(
                mu, args.predicate, k, trials=args.trials, seed=args.seed
            )
            mc = "%.4f +- %.4f" % (est["estimate"], 1.96 * est["stderr"])
        print("%4d  %-20s  %.6f   %s" % (k, series[k], float(series[k]), mc))


if __name__ == "__main__":
    main()
