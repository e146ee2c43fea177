"""Command-line front end: ``luka <subcommand> ...``.

Tabular results go out as text, CSV or JSON.  CSV and JSON carry the same
rows with the same 12-significant-digit strings.  Exit status is 0 on
success, 1 when a verification fails, 2 on a usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction
from typing import Sequence

from . import bijections as bij
from . import genfun, phase, qarea
from .errors import LukaError
from .paths import DEFAULT_CAP, INF, ModelParams, iter_paths, partition_polynomial, weights

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- flag parsing ------------------------------------------------------------------

def _ell(text: str):
    t = text.strip().lower()
    if t in ("inf", "infinity"):
        return INF
    try:
        v = int(t)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer or 'inf', got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"--l must be non-negative, got {v}")
    return v


def _nonneg(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}")
    if v < 0:
        raise argparse.ArgumentTypeError(f"expected a non-negative integer, got {v}")
    return v


def _rational(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected a rational number, got {text!r}")


def _positive(text: str) -> Fraction:
    v = _rational(text)
    if v <= 0:
        raise argparse.ArgumentTypeError(f"expected a positive number, got {text!r}")
    return v


def _range(text: str) -> tuple[Fraction, Fraction]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise argparse.ArgumentTypeError(f"expected LO:HI, got {text!r}")
    lo_v, hi_v = _rational(lo), _rational(hi)
    if hi_v < lo_v:
        raise argparse.ArgumentTypeError(f"empty range {text!r}")
    return lo_v, hi_v


def _ell_list(text: str) -> list:
    out = []
    for part in text.split(","):
        if ".." in part:
            lo, hi = part.split("..")
            out.extend(range(_nonneg(lo), _nonneg(hi) + 1))
        else:
            out.append(_ell(part))
    return out


def _params(args) -> ModelParams:
    if args.l is not INF and args.k > args.l:
        raise UsageError(f"--k {args.k} exceeds --l {args.l}")
    return ModelParams(args.k, args.l)


# -- output ------------------------------------------------------------------------

def _emit(rows: list[dict], header: Sequence[str], fmt: str, out, kv: bool = False):
    if fmt == "json":
        out.write(json.dumps(rows, indent=1) + "\n")
    elif fmt == "csv":
        w = csv.DictWriter(out, fieldnames=list(header), lineterminator="\n")
        w.writeheader()
        w.writerows(rows)
    elif kv and len(rows) == 1:
        for h in header:
            out.write(f"{h} = {rows[0][h]}\n")
    else:
        widths = {h: max([len(h)] + [len(str(r[h])) for r in rows]) for h in header}
        out.write("  ".join(h.ljust(widths[h]) for h in header).rstrip() + "\n")
        for r in rows:
            out.write("  ".join(str(r[h]).ljust(widths[h]) for h in header).rstrip() + "\n")


# -- subcommands ---------------------------------------------------------------------

def cmd_enumerate(args, out) -> int:
    p = _params(args)
    if args.count:
        n = sum(1 for _ in iter_paths(p, args.n, args.cap))
        if args.format == "text":
            out.write(f"{n}\n")
        else:
            _emit([{"n": args.n, "count": n}], ["n", "count"], args.format, out)
        return EXIT_OK
    rows = []
    for path in sorted(iter_paths(p, args.n, args.cap), key=lambda x: x.steps):
        w = weights(path)
        rows.append({"steps": json.dumps(list(path.steps)), "contacts": w.contacts, "area": w.area})
    _emit(rows, ["steps", "contacts", "area"], args.format, out)
    return EXIT_OK


def cmd_series(args, out) -> int:
    p = _params(args)
    if args.method == "enumerate":
        polys = [partition_polynomial(p, n, args.area, args.cap) for n in range(args.order + 1)]
    elif args.area:
        polys = qarea.R_series_q(p, args.order).coeffs
    else:
        polys = genfun.series_R(p, args.order).coeffs
    rows = [{"n": n, "Z_n": str(c)} for n, c in enumerate(polys)]
    _emit(rows, ["n", "Z_n"], args.format, out)
    return EXIT_OK


def cmd_critical(args, out) -> int:
    cp = phase.critical_point(_params(args), args.tol)
    row = {"k": args.k, "l": str(args.l), "u_c": phase.fmt(cp.u_c),
           "z_c": phase.fmt(cp.z_c), "a_c": phase.fmt(cp.a_c)}
    _emit([row], list(row), args.format, out, kv=True)
    return EXIT_OK


def cmd_phase(args, out) -> int:
    lo, hi = args.a_range
    if lo < 1:
        raise UsageError("--a-range must start at a >= 1")
    curve = phase.phase_curve(_params(args), phase.a_grid(lo, hi, args.points), args.tol)
    _emit(phase.phase_curve_rows(curve), ["a", "z_c", "kappa"], args.format, out)
    return EXIT_OK


def cmd_ac_sweep(args, out) -> int:
    rows = phase.ac_sweep_rows(phase.ac_sweep(args.k, args.ells, args.tol))
    _emit(rows, ["ell", "a_c"], args.format, out)
    return EXIT_OK


def cmd_crit_poly(args, out) -> int:
    p = _params(args)
    poly = phase.crit_polynomial(p, args.form)
    ac = phase.critical_point(p, args.tol).a_c
    root = phase.crit_root_near(poly, ac.midpoint, args.tol)
    row = {"k": args.k, "l": str(args.l), "form": args.form, "poly": str(poly),
           "root_near_a_c": phase.fmt(root), "a_c": phase.fmt(ac)}
    _emit([row], list(row), args.format, out, kv=True)
    return EXIT_OK


def cmd_discriminant_check(args, out) -> int:
    rep = phase.discriminant_factorization_check(_params(args))
    row = {"k": args.k, "l": str(args.l), "ratio": str(rep.ratio),
           "expected": f"a^{rep.exponent}", "pass": str(rep.passed).lower()}
    _emit([row], list(row), args.format, out, kv=True)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_bijection(args, out) -> int:
    if (args.k is None) != (args.l is None):
        raise UsageError("--k and --l must be given together")
    params = None if args.l is None else _params(args)
    if args.verify:
        rep = bij.verify_bijection(args.which, params, args.n, args.cap)
        if args.format == "text":
            out.write("pass\n" if rep.passed else f"fail: {rep.counterexample}\n")
        else:
            row = {k: (json.dumps(v) if isinstance(v, bool) else v) for k, v in rep.as_dict().items()}
            _emit([row], list(row), args.format, out)
        return EXIT_OK if rep.passed else EXIT_FAIL
    rows = []
    if args.which == "rise":
        if params is None:
            raise UsageError("--which rise needs --k and --l")
        for path in sorted(iter_paths(params, args.n, args.cap), key=lambda x: x.steps):
            rows.append({"source": json.dumps(list(path.steps)), "image": str(bij.luka_to_rise_dyck(path))})
    elif args.which == "motzkin":
        for m in (args.n, args.n + 1):
            for path in sorted(iter_paths(bij.MOTZKIN_PARAMS, m, args.cap), key=lambda x: x.steps):
                rows.append({"source": json.dumps(list(path.steps)),
                             "image": str(bij.motzkin_map(path, args.n))})
    else:
        for path in sorted(iter_paths(bij.AREA_PARAMS, args.n, args.cap), key=lambda x: x.steps):
            rows.append({"source": json.dumps(list(path.steps)), "image": str(bij.area_luka_to_dyck(path))})
    _emit(rows, ["source", "image"], args.format, out)
    return EXIT_OK


def cmd_qseries(args, out) -> int:
    p = _params(args)
    if args.what == "R":
        s = qarea.R_series_q(p, args.order, args.route)
        rows = [{"n": n, "R_n": str(c)} for n, c in enumerate(s.coeffs)]
        _emit(rows, ["n", "R_n"], args.format, out)
        return EXIT_OK
    H = qarea.H_series(p, args.order)
    s = H if args.what == "c" else qarea.L_from_H(H)
    rows = [{"n": n, "num": json.dumps(c.num), "den": json.dumps(c.den), "value": str(c)}
            for n, c in enumerate(s.coeffs)]
    _emit(rows, ["n", "num", "den", "value"], args.format, out)
    return EXIT_OK


def cmd_identity_check(args, out) -> int:
    rep = qarea.identity_checks(args.order)
    rows = [{"check": name, "pass": str(ok).lower()} for name, ok in rep.checks]
    _emit(rows, ["check", "pass"], args.format, out)
    return EXIT_OK if rep.passed else EXIT_FAIL


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="luka", description="Restricted Lukasiewicz paths.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, fn, help, model=True, fmt="text"):
        sp = sub.add_parser(name, help=help)
        if model:
            sp.add_argument("--k", type=_nonneg, required=True)
            sp.add_argument("--l", type=_ell, required=True, help="maximal jump, or 'inf'")
        sp.add_argument("--format", choices=["text", "csv", "json"], default=fmt)
        sp.add_argument("--out", help="write to this file instead of stdout")
        sp.add_argument("--tol", type=_positive, default=Fraction(1, 10**12))
        sp.add_argument("--cap", type=_nonneg, default=DEFAULT_CAP, help="enumeration cap")
        sp.set_defaults(func=fn)
        return sp

    sp = add("enumerate", cmd_enumerate, "list or count paths of length n")
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--count", action="store_true")

    sp = add("series", cmd_series, "partition polynomials Z_n")
    sp.add_argument("--order", type=_nonneg, default=10)
    sp.add_argument("--area", action="store_true", help="also weight area with q")
    sp.add_argument("--method", choices=["genfun", "enumerate"], default="genfun")

    add("critical", cmd_critical, "u_c, z_c and a_c")

    sp = add("phase", cmd_phase, "z_c(a) and kappa(a) on a grid", fmt="csv")
    sp.add_argument("--a-range", type=_range, default=(Fraction(1), Fraction(10)))
    sp.add_argument("--points", type=_nonneg, default=50)

    sp = add("ac-sweep", cmd_ac_sweep, "a_c across ell", model=False, fmt="csv")
    sp.add_argument("--k", type=_nonneg, required=True)
    sp.add_argument("--ells", type=_ell_list, default=list(range(1, 9)),
                    help="e.g. 1..8 or 1,2,inf")

    sp = add("crit-poly", cmd_crit_poly, "critical polynomial in a")
    sp.add_argument("--form", choices=["resultant", "reduced"], default="resultant")

    add("discriminant-check", cmd_discriminant_check, "check the discriminant factorization")

    sp = add("bijection", cmd_bijection, "apply or verify a bijection", model=False)
    sp.add_argument("--which", choices=["rise", "motzkin", "area"], required=True)
    sp.add_argument("--k", type=_nonneg)
    sp.add_argument("--l", type=_ell)
    sp.add_argument("--n", type=_nonneg, required=True)
    sp.add_argument("--verify", action="store_true")

    sp = add("qseries", cmd_qseries, "area-weighted series")
    sp.add_argument("--order", type=_nonneg, default=10)
    sp.add_argument("--what", choices=["c", "L", "R"], default="c")
    sp.add_argument("--route", choices=["iteration", "H-ratio"], default="iteration")

    sp = add("identity-check", cmd_identity_check, "q-series identities", model=False)
    sp.add_argument("--order", type=_nonneg, default=12)
    return parser


def run(argv: Sequence[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = sys.stdout if stdout is None else stdout
    stderr = sys.stderr if stderr is None else stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    buf = io.StringIO()
    try:
        status = args.func(args, buf)
    except UsageError as e:
        stderr.write(f"luka: error: {e}\n")
        return EXIT_USAGE
    except (LukaError, ValueError) as e:
        stderr.write(f"luka: {type(e).__name__}: {e}\n")
        return EXIT_USAGE
    if args.out:
        with open(args.out, "w", newline="") as fh:
            fh.write(buf.getvalue())
    else:
        stdout.write(buf.getvalue())
    return status


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
