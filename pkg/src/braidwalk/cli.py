"""Command-line front end: invariants of single words, walk experiments,
finite-group statistics, Lissajous classification, and table reproduction.

Exit codes: 0 on success, 1 on usage errors, 2 when a computation rejects
its input (the diagnostic names the violated precondition).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

from . import __version__
from .braid import parse_word
from .burau import alexander_at_minus1, alexander_poly, burau_matrix, burau_minus1
from .lissajous import (
    DEFAULT_TABLE_QS,
    braid_from_parametrization,
    classify,
    lissajous_braid,
    percentage_table,
    sample_polyline,
)
from .meyer import gg_signature, meyer_cocycle, seifert_signature_oracle
from .walks import (
    GenMeasure,
    PREDICATES,
    finite_walk_tv,
    hitting_series,
    monte_carlo_hitting,
    zero_density,
)


class _Parser(argparse.ArgumentParser):
    """argparse maps usage errors to exit code 2; we reserve 2 for
    computation errors and use 1 for usage."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print("%s: error: %s" % (self.prog, message), file=sys.stderr)
        sys.exit(1)


def _header_lines(seed=None):
    lines = ["# tool=braidwalk version=%s" % __version__]
    if seed is not None:
        lines.append("# seed=%s" % seed)
    return lines


def _emit(lines, out_path=None):
    text = "\n".join(lines) + "\n"
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _matrix_json(m):
    return [[str(x) if not isinstance(x, int) else x for x in row] for row in m]


# ---------------------------------------------------------------------------
# subcommand handlers


def _cmd_burau(args):
    word = parse_word(args.word, args.strands)
    if args.generic:
        m = burau_matrix(word)
        payload = [[repr(entry) for entry in row] for row in m]
    else:
        if args.at != -1:
            raise ValueError("only the integer specialization t = -1 is supported")
        payload = [list(row) for row in burau_minus1(word)]
    print(json.dumps({"strands": args.strands, "matrix": payload}))
    return 0


def _cmd_alexander(args):
    word = parse_word(args.word, args.strands)
    poly = alexander_poly(word)
    out = {"polynomial": repr(poly)}
    if args.strands % 2 == 1:
        out["at_minus1"] = alexander_at_minus1(word)
    print(json.dumps(out))
    return 0


def _cmd_signature(args):
    word = parse_word(args.word, args.strands)
    if args.oracle:
        value = seifert_signature_oracle(word)
    else:
        if args.strands != 3:
            raise ValueError(
                "the cocycle route needs strands = 3; pass --oracle for other counts"
            )
        value = gg_signature(word).value
    print(value)
    return 0


def _parse_sl2(text):
    parts = [int(x) for x in text.split()]
    if len(parts) != 4:
        raise ValueError("expected four integers 'a b c d'")
    m = ((parts[0], parts[1]), (parts[2], parts[3]))
    if parts[0] * parts[3] - parts[1] * parts[2] != 1:
        raise ValueError("matrix must have determinant 1")
    return m


def _cmd_meyer(args):
    g1 = _parse_sl2(args.g1)
    g2 = _parse_sl2(args.g2)
    print(meyer_cocycle(g1, g2))
    return 0


def _walk_rows(args):
    mu = GenMeasure.uniform_generators(args.strands)
    if args.predicate not in PREDICATES:
        raise ValueError(
            "unknown predicate %r (choose from %s)"
            % (args.predicate, ", ".join(sorted(PREDICATES)))
        )
    rows = []
    if args.exact:
        series = hitting_series(mu, PREDICATES[args.predicate][0], args.steps)
        for k in range(1, args.steps + 1):
            rows.append((k, series[k], float(series[k])))
    else:
        for k in range(1, args.steps + 1):
            est = monte_carlo_hitting(
                mu, args.predicate, k, trials=args.trials, seed=args.seed
            )
            rows.append((k, Fraction(est["hits"], est["trials"]), est["estimate"]))
    return rows


def _cmd_walk(args):
    rows = _walk_rows(args)
    seed = None if args.exact else args.seed
    lines = _header_lines(seed=seed)
    lines.append("step,exact_rational,decimal")
    for k, frac, dec in rows:
        lines.append("%d,%s,%.6f" % (k, frac, dec))
    _emit(lines, args.out)
    return 0


def _cmd_density(args):
    d = zero_density(args.poly, args.l, args.p)
    print(json.dumps({"poly": args.poly, "l": args.l, "p": args.p,
                      "density": str(d), "decimal": float(d)}))
    return 0


def _cmd_finite_walk(args):
    mu = GenMeasure.uniform_generators(args.strands)
    res = finite_walk_tv(mu, args.p, projective=args.projective, steps=args.steps)
    lines = _header_lines()
    lines.append("# group_order=%d generated=%s" % (res.group_order, res.generated))
    lines.append("step,tv_exact,tv_decimal")
    for k, tv in enumerate(res.tv):
        lines.append("%d,%s,%.9f" % (k, tv, float(tv)))
    _emit(lines, args.out)
    return 0


def _table_rows(mode, qs):
    return percentage_table(qs=qs, mode=mode)


def _lissajous_table_lines(rows, mode, fmt):
    if fmt == "markdown":
        qs = " | ".join(str(r["q"]) for r in rows)
        pct = " | ".join(str(r["percent"]) for r in rows)
        return [
            "<!-- tool=braidwalk version=%s mode=%s -->" % (__version__, mode),
            "| q | " + qs + " |",
            "|---" * (len(rows) + 1) + "|",
            "| % | " + pct + " |",
        ]
    if fmt == "json":
        return [json.dumps({
            "mode": mode,
            "version": __version__,
            "rows": [
                {"q": r["q"], "numerator": r["numerator"],
                 "denominator": r["denominator"], "fraction": str(r["fraction"]),
                 "percent": r["percent"]}
                for r in rows
            ],
        })]
    lines = _header_lines()
    lines.append("# mode=%s" % mode)
    lines.append("q,numerator,denominator,fraction,percent")
    for r in rows:
        lines.append("%d,%d,%d,%s,%d" % (
            r["q"], r["numerator"], r["denominator"], r["fraction"], r["percent"]
        ))
    return lines


def _cmd_lissajous(args):
    if args.lissajous_cmd == "classify":
        c = classify(args.q, args.p)
        word = lissajous_braid(args.q, args.p)
        print(json.dumps({
            "q": args.q, "p": args.p, "kind": c.kind, "h": c.h,
            "trace": c.trace, "p_matrix": [list(r) for r in c.p_matrix],
            "braid": " ".join(str(g) for g in word.letters),
        }))
        return 0
    if args.lissajous_cmd == "table":
        qs = tuple(q for q in DEFAULT_TABLE_QS if q <= args.qmax)
        threads = int(os.environ.get("BRAIDWALK_THREADS", "1"))
        if threads > 1:
            with ProcessPoolExecutor(max_workers=threads) as pool:
                chunks = pool.map(_table_rows, [args.mode] * len(qs), [(q,) for q in qs])
            rows = [row for chunk in chunks for row in chunk]
        else:
            rows = percentage_table(qs=qs, mode=args.mode)
        _emit(_lissajous_table_lines(rows, args.mode, args.format), args.out)
        return 0
    if args.lissajous_cmd == "sample":
        if args.N != 3:
            raise ValueError("only 3-strand curves are supported")
        poly = sample_polyline(args.q, args.p, alpha=args.alpha, samples=args.samples)
        payload = json.dumps(poly)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(payload + "\n")
        else:
            print(payload)
        return 0
    if args.lissajous_cmd == "sweep":
        word = braid_from_parametrization(args.q, args.p)
        print(json.dumps({
            "q": args.q, "p": args.p,
            "braid": " ".join(str(g) for g in word.letters),
        }))
        return 0
    raise ValueError("unknown lissajous subcommand %r" % args.lissajous_cmd)


def _cmd_reproduce(args):
    if args.target != "paper-tables":
        raise ValueError("unknown reproduction target %r" % args.target)
    os.makedirs(args.out_dir, exist_ok=True)

    mu = GenMeasure.uniform_generators(3)
    series = hitting_series(mu, PREDICATES["z11"][0], 12)
    lines = _header_lines()
    lines.append("step,exact_rational,decimal")
    for k in range(1, 13):
        lines.append("%d,%s,%.6f" % (k, series[k], float(series[k])))
    walk_path = os.path.join(args.out_dir, "walk_z11_table.csv")
    _emit(lines, walk_path)

    paths = [walk_path]
    for mode in ("literal", "full-range"):
        rows = percentage_table(mode=mode)
        path = os.path.join(
            args.out_dir, "lissajous_table_%s.csv" % mode.replace("-", "_")
        )
        _emit(_lissajous_table_lines(rows, mode, "csv"), path)
        paths.append(path)
    print(json.dumps({"written": paths}))
    return 0


# ---------------------------------------------------------------------------
# parser assembly


def build_parser():
    parser = _Parser(prog="braidwalk", description=__doc__)
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="cmd", required=True, parser_class=_Parser)

    p = sub.add_parser("burau", help="Burau matrix of a braid word")
    p.add_argument("--word", required=True, help="signed generator indices, e.g. '1 -2'")
    p.add_argument("--strands", type=int, required=True)
    p.add_argument("--at", type=int, default=-1, help="integer evaluation point (only -1)")
    p.add_argument("--generic", action="store_true", help="emit Laurent-polynomial entries")
    p.set_defaults(fn=_cmd_burau)

    p = sub.add_parser("alexander", help="Alexander polynomial of the closure")
    p.add_argument("--word", required=True)
    p.add_argument("--strands", type=int, required=True)
    p.set_defaults(fn=_cmd_alexander)

    p = sub.add_parser("signature", help="signature of the closure")
    p.add_argument("--word", required=True)
    p.add_argument("--strands", type=int, default=3)
    p.add_argument("--oracle", action="store_true",
                   help="use the Seifert-matrix route (any strand count)")
    p.set_defaults(fn=_cmd_signature)

    p = sub.add_parser("meyer", help="Meyer cocycle of two SL(2,Z) matrices")
    p.add_argument("--g1", required=True, help="four integers 'a b c d'")
    p.add_argument("--g2", required=True)
    p.set_defaults(fn=_cmd_meyer)

    p = sub.add_parser("walk", help="hitting probabilities of the Burau walk")
    p.add_argument("--strands", type=int, default=3)
    p.add_argument("--measure", default="uniform4",
                   help="only 'uniform4' (uniform on generators and inverses)")
    p.add_argument("--predicate", default="z11")
    p.add_argument("--steps", type=int, default=12)
    p.add_argument("--exact", action="store_true", help="exact convolution instead of sampling")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    p.set_defaults(fn=_cmd_walk)

    p = sub.add_parser("density", help="zero density of an entry polynomial on Sp(2l,p)")
    p.add_argument("--poly", default="m11")
    p.add_argument("--l", type=int, default=1)
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(fn=_cmd_density)

    p = sub.add_parser("finite-walk", help="TV distance to uniform on Sp(2l,F_p)")
    p.add_argument("--strands", type=int, default=3)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--projective", action="store_true")
    p.add_argument("--steps", type=int, default=200)
    p.add_argument("--out", default=None)
    p.set_defaults(fn=_cmd_finite_walk)

    p = sub.add_parser("lissajous", help="Lissajous toric knot tools")
    lsub = p.add_subparsers(dest="lissajous_cmd", required=True, parser_class=_Parser)

    pc = lsub.add_parser("classify", help="trichotomy class of a frequency pair")
    pc.add_argument("--q", type=int, required=True)
    pc.add_argument("--p", type=int, required=True)
    pc.set_defaults(fn=_cmd_lissajous)

    pt = lsub.add_parser("table", help="zero-signature percentage table")
    pt.add_argument("--qmax", type=int, default=101)
    pt.add_argument("--mode", choices=("literal", "full-range"), default="literal")
    pt.add_argument("--format", choices=("csv", "json", "markdown"), default="csv")
    pt.add_argument("--out", default=None)
    pt.set_defaults(fn=_cmd_lissajous)

    ps = lsub.add_parser("sample", help="export the space curve as a polyline")
    ps.add_argument("--N", type=int, default=3)
    ps.add_argument("--q", type=int, required=True)
    ps.add_argument("--p", type=int, required=True)
    ps.add_argument("--alpha", type=float, default=0.0)
    ps.add_argument("--samples", type=int, default=2000)
    ps.add_argument("--out", default=None)
    ps.set_defaults(fn=_cmd_lissajous)

    pw = lsub.add_parser("sweep", help="braid word read off the parametrised curve")
    pw.add_argument("--q", type=int, required=True)
    pw.add_argument("--p", type=int, required=True)
    pw.set_defaults(fn=_cmd_lissajous)

    p = sub.add_parser("reproduce", help="regenerate the statistics tables")
    p.add_argument("target", help="'paper-tables'")
    p.add_argument("--out-dir", default="tables")
    p.set_defaults(fn=_cmd_reproduce)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except (ValueError, RuntimeError, OverflowError, ZeroDivisionError) as exc:
        print("braidwalk: computation error: %s" % exc, file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
