#!/usr/bin/env python3
"""Zero-signature percentage tables for Lissajous toric knots, both
eligibility modes side by side (the two readings of the survey range)."""

import argparse

from braidwalk.lissajous import DEFAULT_TABLE_QS, percentage_table


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--qmax", type=int, default=101)
    args = ap.parse_args()

    qs = tuple(q for q in DEFAULT_TABLE_QS if q <= args.qmax)
    literal = {r["q"]: r for r in percentage_table(qs=qs, mode="literal")}
    full = {r["q"]: r for r in percentage_table(qs=qs, mode="full-range")}

    print("  q   literal          full-range")
    for q in qs:
        a, b = literal[q], full[q]
        print(
            "%3d   %3d/%-3d = %3d%%   %3d/%-3d = %3d%%"
            % (q, a["numerator"], a["denominator"], a["percent"],
               b["numerator"], b["denominator"], b["percent"])
        )


if __name__ == "__main__":
    main()
