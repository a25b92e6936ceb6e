"""Command-line front end: evaluate, scan, and export CSV/JSON tables.

Times and steps are parsed as exact fractions only (``num`` or ``num/den``);
decimal input is rejected so no precision is lost at the boundary.  All
output is deterministic for a fixed command line, including bernoulli
schemes (the seed is part of the scheme spec).

Exit codes: 0 success, 2 invalid configuration, 3 scheme depth exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .extrema import grid_extrema
from .follmer import RationalPolynomial, follmer_sum, ito_residual
from .modulus import modulus_scan, sweep_all_steps, witness_ratios, witness_steps
from .qfield import Dyadic, QuadValue
from .quadvar import QVRow, counterexample_series, cov_approx, qv_profile
from .schemes import SchemeDepthError, parse_exact_fraction, parse_scheme
from .takagi import TakagiFunction, thirds_value

DECIMAL_DIGITS = 12

#: Base CSV schema for series rows; some commands append extra columns.
SERIES_FIELDS = (
    "level",
    "t_num",
    "t_den",
    "value_a_num",
    "value_a_den",
    "value_b_num",
    "value_b_den",
    "value_decimal",
)


def _series_record(level: int, t: Fraction, value: QuadValue) -> dict:
    return {
        "level": level,
        "t_num": t.numerator,
        "t_den": t.denominator,
        "value_a_num": value.a.numerator,
        "value_a_den": value.a.denominator,
        "value_b_num": value.b.numerator,
        "value_b_den": value.b.denominator,
        "value_decimal": value.decimal(DECIMAL_DIGITS),
    }


def _row_record(row: QVRow, **extra) -> dict:
    rec = _series_record(row.level, row.t.as_fraction(), row.value)
    rec.update(extra)
    if row.distance is not None:
        rec["distance_decimal"] = row.distance.decimal(DECIMAL_DIGITS)
    return rec


def _emit(records: list[dict], fields: list[str], args: argparse.Namespace) -> None:
    if args.format == "json":
        text = json.dumps(records, indent=2) + "\n"
    else:
        lines = [",".join(fields)]
        for rec in records:
            lines.append(",".join(str(rec.get(f, "")) for f in fields))
        text = "\n".join(lines) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def _scheme(args: argparse.Namespace, attr: str = "scheme") -> TakagiFunction:
    spec = getattr(args, attr.replace("-", "_"))
    # allow 'bernoulli:p' with the seed supplied via --seed
    if spec.startswith("bernoulli:") and spec.count(":") == 1:
        spec = f"{spec}:{args.seed}"
    return TakagiFunction(parse_scheme(spec))


def _fraction(text: str) -> Fraction:
    return parse_exact_fraction(text)


def _is_dyadic(t: Fraction) -> bool:
    return t.denominator & (t.denominator - 1) == 0


def cmd_eval(args: argparse.Namespace) -> None:
    fn = _scheme(args)
    t = _fraction(args.t)
    print(f"scheme: {fn.scheme.spec}")
    print(f"t: {t}")
    if _is_dyadic(t):
        v = fn.at_dyadic(t)
        print(f"value: {v}")
        print(f"decimal: {v.decimal(args.digits)}")
        return
    try:
        v = thirds_value(fn, t)
    except ValueError:
        v, bound = fn.approx(t, Fraction(args.tol))
        print(f"value: {v}  (truncated series)")
        print(f"decimal: {v.decimal(args.digits)}")
        print(f"tail_bound: {bound.decimal(args.digits)}")
        return
    print(f"value: {v}")
    print(f"decimal: {v.decimal(args.digits)}")


def cmd_sample(args: argparse.Namespace) -> None:
    fn = _scheme(args)
    p, q = fn.grid_pairs(args.grid)
    den = 1 << args.grid
    records = []
    for j in range(den + 1):
        a = Fraction(int(p[j]), den)
        b = Fraction(int(q[j]), den)
        v = QuadValue(a, b)
        records.append(
            {
                "t": str(Fraction(j, den)),
                "value_decimal": v.decimal(DECIMAL_DIGITS),
                "value_a": str(a),
                "value_b": str(b),
            }
        )
    _emit(records, ["t", "value_decimal", "value_a", "value_b"], args)


def cmd_extrema(args: argparse.Namespace) -> None:
    rep = grid_extrema(_scheme(args), args.grid)
    record = {
        "level": rep.level,
        "max": str(rep.max),
        "max_decimal": rep.max.decimal(DECIMAL_DIGITS),
        "argmax": [str(d) for d in rep.argmax],
        "min": str(rep.min),
        "min_decimal": rep.min.decimal(DECIMAL_DIGITS),
        "argmin": [str(d) for d in rep.argmin],
        "oscillation": str(rep.oscillation),
        "oscillation_decimal": rep.oscillation.decimal(DECIMAL_DIGITS),
    }
    text = json.dumps(record, indent=2) + "\n"
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_qv(args: argparse.Namespace) -> None:
    fn = _scheme(args)
    series = qv_profile(fn, args.level, args.stride)
    rows = series.rows
    if args.t is not None:
        limit = _fraction(args.t)
        rows = [r for r in rows if r.t.as_fraction() <= limit]
    _emit([_row_record(r) for r in rows], list(SERIES_FIELDS), args)


def cmd_cov(args: argparse.Namespace) -> None:
    fx = _scheme(args)
    fy = _scheme(args, "scheme_y")
    t = Dyadic.from_fraction(_fraction(args.t))
    if t.exp > args.level:
        raise ValueError(f"t={t} needs level >= {t.exp}")
    records = []
    for n in range(max(1, t.exp), args.level + 1):
        v = cov_approx(fx, fy, n, t)
        records.append(_series_record(n, t.as_fraction(), v))
    _emit(records, list(SERIES_FIELDS), args)


def cmd_counterexample(args: argparse.Namespace) -> None:
    t = Dyadic.from_fraction(_fraction(args.t))
    study = counterexample_series(args.levels, t)
    records = []
    for name in ("even_qv", "odd_qv", "even_cov", "odd_cov"):
        series = getattr(study, name)
        for row in series.rows:
            records.append(_row_record(row, series=name))
    fields = list(SERIES_FIELDS) + ["series", "distance_decimal"]
    _emit(records, fields, args)


def cmd_modulus(args: argparse.Namespace) -> None:
    fn = _scheme(args)
    if args.h is not None:
        reports = [modulus_scan(fn, args.grid, _fraction(args.h))]
    else:
        reports = sweep_all_steps(fn, args.grid)
    records = []
    for rep in reports:
        rec = _series_record(args.grid, rep.witness_t, rep.scan_max)
        rec.update(
            {
                "kind": "modulus",
                "h_num": rep.h.numerator,
                "h_den": rep.h.denominator,
                "nu": rep.nu,
                "omega_decimal": rep.omega.decimal(DECIMAL_DIGITS),
                "ratio_decimal": rep.ratio_decimal,
            }
        )
        records.append(rec)
    fields = list(SERIES_FIELDS) + [
        "kind", "h_num", "h_den", "nu", "omega_decimal", "ratio_decimal",
    ]
    _emit(records, fields, args)


def cmd_witness(args: argparse.Namespace) -> None:
    records = []
    for kind in ("part_a", "part_b"):
        for row in witness_ratios(kind, 1, args.levels):
            t_n, _ = witness_steps(row.n)
            t0 = Fraction(0) if kind == "part_a" else t_n
            rec = _series_record(row.n, t0, row.increment)
            rec.update({"kind": kind, "ratio_decimal": row.ratio_decimal})
            records.append(rec)
    fields = list(SERIES_FIELDS) + ["kind", "ratio_decimal"]
    _emit(records, fields, args)


def cmd_ito(args: argparse.Namespace) -> None:
    fn = _scheme(args)
    poly = RationalPolynomial.parse(args.poly)
    t = Dyadic.from_fraction(_fraction(args.t))
    levels = range(args.level, args.level + 1) if args.levels is None else range(
        max(1, t.exp), args.levels + 1
    )
    records = []
    for n in levels:
        res = ito_residual(poly, fn, n, t)
        rsum = follmer_sum(poly.derivative(), fn, n, t)
        rec = _series_record(n, t.as_fraction(), res)
        rec.update(
            {
                "kind": "ito_residual",
                "riemann_sum_decimal": rsum.decimal(DECIMAL_DIGITS),
            }
        )
        records.append(rec)
    fields = list(SERIES_FIELDS) + ["kind", "riemann_sum_decimal"]
    _emit(records, fields, args)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="takagiqv",
        description="Exact analysis of +/-1 wedge-coefficient functions: "
        "evaluation, extrema, moduli of continuity, quadratic variation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, scheme: bool = True) -> None:
        if scheme:
            p.add_argument("--scheme", default="all_plus",
                           help="scheme spec, e.g. all_plus, alt_m, block:5, "
                                "bernoulli:1/2:7, file:PATH")
        p.add_argument("--seed", type=int, default=0,
                       help="seed used when a bernoulli spec omits one")
        p.add_argument("--out", help="output path (default: stdout)")
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p = sub.add_parser("eval", help="exact or certified value at one point")
    common(p)
    p.add_argument("--t", required=True, help="time as an exact fraction, e.g. 5/16")
    p.add_argument("--tol", default="1/1000000000000",
                   help="tail tolerance for non-closed-form points")
    p.add_argument("--digits", type=int, default=DECIMAL_DIGITS)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sample", help="all values on a dyadic grid")
    common(p)
    p.add_argument("--grid", type=int, required=True, help="grid level N")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("extrema", help="exact grid extrema report (JSON)")
    common(p)
    p.add_argument("--grid", type=int, required=True)
    p.set_defaults(func=cmd_extrema)

    p = sub.add_parser("qv", help="running quadratic-variation profile")
    common(p)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--stride", type=int, default=1)
    p.add_argument("--t", help="truncate rows after this time")
    p.set_defaults(func=cmd_qv)

    p = sub.add_parser("cov", help="covariation of two schemes across levels")
    common(p)
    p.add_argument("--scheme-y", default="alt_m", dest="scheme_y")
    p.add_argument("--level", type=int, required=True, help="largest level")
    p.add_argument("--t", default="1")
    p.set_defaults(func=cmd_cov)

    p = sub.add_parser("counterexample",
                       help="qv-of-sum and covariation subsequences for (all_plus, alt_m)")
    common(p, scheme=False)
    p.add_argument("--levels", type=int, required=True)
    p.add_argument("--t", default="1")
    p.set_defaults(func=cmd_counterexample)

    p = sub.add_parser("modulus", help="largest grid increment vs the envelope")
    common(p)
    p.add_argument("--grid", type=int, required=True)
    p.add_argument("--h", help="step as an exact fraction; omit to sweep all steps")
    p.set_defaults(func=cmd_modulus)

    p = sub.add_parser("witness", help="sharpness witnesses of the envelope bounds")
    common(p, scheme=False)
    p.add_argument("--levels", type=int, default=12)
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("ito", help="Riemann-sum residual for a polynomial integrand")
    common(p)
    p.add_argument("--poly", required=True,
                   help="comma-separated rational coefficients, ascending degree")
    p.add_argument("--level", type=int)
    p.add_argument("--levels", type=int, help="emit a profile up to this level")
    p.add_argument("--t", default="1")
    p.set_defaults(func=cmd_ito)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "ito" and args.level is None and args.levels is None:
        parser.error("ito needs --level or --levels")
    try:
        args.func(args)
    except SchemeDepthError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
