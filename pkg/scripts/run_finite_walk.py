#!/usr/bin/env python3
"""Total-variation decay of the mod-p Burau walk on Sp(2, F_p) or its
projective quotient: prints the TV curve and the first step under 1e-3."""

import argparse
from fractions import Fraction

from braidwalk.walks import GenMeasure, finite_walk_tv


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=int, default=7)
    ap.add_argument("--projective", action="store_true")
    ap.add_argument("--steps", type=int, default=200)
    ap.add_argument("--every", type=int, default=5, help="print every k-th step")
    args = ap.parse_args()

    mu = GenMeasure.uniform_generators(3)
    res = finite_walk_tv(mu, args.p, projective=args.projective, steps=args.steps)
    print("group order %d, generated by the support: %s" % (res.group_order, res.generated))
    for k in range(0, args.steps + 1, args.every):
        print("step %4d  tv %.9f" % (k, float(res.tv[k])))
    thresh = Fraction(1, 1000)
    hit = next((k for k, v in enumerate(res.tv) if v < thresh), None)
    if hit is None:
        print("tv never dropped below 1e-3 in %d steps" % args.steps)
    else:
        print("tv < 1e-3 first at step %d" % hit)


if __name__ == "__main__":
    main()
