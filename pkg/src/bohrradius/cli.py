"""Command-line interface.

    bohrradius radius {classical|refined-lk|refined-s|laplace} [--gamma G] [--lambda EXPR]
    bohrradius table {t1|t2}
    bohrradius verify {fourier|laplace|refined|lemma-a|sharpness-fourier|sharpness-laplace} ...
    bohrradius eval {dilog|sum} ...

Exit codes: 0 ok, 1 usage, 2 lambda error, 3 solver bracket/no-root,
4 verification failure.  Diagnostics go to stderr only.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from . import bohr_sums, radius, verify
from .coefficients import constant_sequence, f0_sequence, finite_sequence, koebe_sequence, lk_extremal_sequence
from .errors import (
    BohrError,
    BracketError,
    ConvergenceError,
    LambdaEvalError,
    LambdaSyntaxError,
)
from .lambda_dsl import parse_lambda, to_source
from .specfun import dilog
from .tables import reproduce_table

EXIT_OK, EXIT_USAGE, EXIT_LAMBDA, EXIT_SOLVER, EXIT_FAIL = 0, 1, 2, 3, 4

RECORD_FIELDS = ("problem", "gamma", "lambda", "radius", "residual", "iterations",
                 "pass", "margin", "witness_a")
TABLE_FIELDS = ("lambda_source", "computed_radius", "paper_value", "abs_diff", "flag")
EVAL_FIELDS = ("problem", "r", "value", "tail_bound", "terms_used")

DEFAULT_RADIUS_TOL = 1e-9
DEFAULT_SERIES_TOL = 1e-13
# fine enough to show the first violating a for r just above 1/3
CLI_A_GRID = tuple(round(0.05 * k, 2) for k in range(1, 20)) + verify.DEFAULT_A_GRID


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        sys.exit(EXIT_USAGE)


def _csv_floats(text):
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated reals, got {text!r}") from None


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=None, help="solver / series tolerance")
    common.add_argument("--max-terms", type=int, default=bohr_sums.MAX_TERMS,
                        help="term budget for truncated series")
    common.add_argument("--format", choices=("json", "csv", "text"), default="json")
    common.add_argument("--out", default=None, help="write output to this path instead of stdout")

    inputs = argparse.ArgumentParser(add_help=False)
    inputs.add_argument("--gamma", type=float, default=0.0)
    inputs.add_argument("--lambda", dest="lam", default=None, help="weight function, e.g. \"r*exp(r)/(1-r)^2\"")
    inputs.add_argument("--r", type=float, default=None)
    inputs.add_argument("--a", type=float, default=None)
    inputs.add_argument("--coeffs", type=_csv_floats, default=None,
                        help="comma-separated non-negative coefficient moduli")

    parser = _Parser(prog="bohrradius", description="Bohr radii, published radius tables and inequality checks.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("radius", parents=[common, inputs], help="compute a Bohr radius")
    p.add_argument("problem", choices=("classical", "refined-lk", "refined-s", "laplace"))

    p = sub.add_parser("table", parents=[common], help="recompute a published table")
    p.add_argument("table", choices=("t1", "t2"))

    p = sub.add_parser("verify", parents=[common, inputs], help="check an inequality")
    p.add_argument("check", choices=("fourier", "laplace", "refined", "lemma-a",
                                     "sharpness-fourier", "sharpness-laplace"))
    p.add_argument("--class", dest="cls", choices=("lk", "s"), default="lk")
    p.add_argument("--n-max", type=int, default=30)
    p.add_argument("--a-grid", type=_csv_floats, default=None)

    p = sub.add_parser("eval", parents=[common, inputs], help="evaluate dilog or a series")
    p.add_argument("what", choices=("dilog", "sum"))
    p.add_argument("--kind", choices=("majorant", "refined", "fourier", "laplace"), default="majorant")
    p.add_argument("--family", choices=("koebe", "lk", "f0", "constant"), default=None)
    p.add_argument("--square-start", type=int, choices=(1, 2), default=2)
    return parser


# --- formatting ------------------------------------------------------------


def _num(x):
    if not isinstance(x, float):
        return x
    return float(f"{x:.9g}")


def _text(x):
    if x is None:
        return ""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, float):
        return f"{x:.9g}"
    return str(x)


def render(records, fields, fmt):
    if fmt == "json":
        return "".join(json.dumps({k: _num(rec.get(k)) for k in fields}) + "\n" for rec in records)
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(fields)
        for rec in records:
            writer.writerow([_text(rec.get(k)) for k in fields])
        return buf.getvalue()
    rows = [[_text(rec.get(k)) for k in fields] for rec in records]
    widths = [max(len(f), *(len(row[i]) for row in rows)) if rows else len(f)
              for i, f in enumerate(fields)]
    lines = ["  ".join(f.ljust(w) for f, w in zip(fields, widths)).rstrip()]
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in rows]
    return "\n".join(lines) + "\n"


# --- commands --------------------------------------------------------------


def _require(args, name, flag):
    value = getattr(args, name)
    if value is None:
        raise UsageError(f"{flag} is required here")
    return value


def _record(**kw):
    # "lambda" and "pass" are Python keywords, hence lam= and passed=
    kw["lambda"] = kw.pop("lam", None)
    kw["pass"] = kw.pop("passed", None)
    return {k: kw.get(k) for k in RECORD_FIELDS}


def cmd_radius(args):
    tol = args.tol or DEFAULT_RADIUS_TOL
    if args.problem == "classical":
        rho = radius.classical_radius(args.gamma)
        rec = _record(problem="classical", gamma=args.gamma, radius=rho, residual=0.0, iterations=0)
    elif args.problem == "laplace":
        res = radius.laplace_radius(args.gamma, tol)
        rec = _record(problem="laplace", gamma=args.gamma, radius=res.root,
                      residual=res.residual, iterations=res.iterations)
    else:
        cls = "lk" if args.problem == "refined-lk" else "s"
        expr = parse_lambda(_require(args, "lam", "--lambda"))
        res = radius.refined_radius(cls, expr, tol)
        if res.unique is False:
            print(f"warning: more than one sign change found for lambda={to_source(expr)}",
                  file=sys.stderr)
        rec = _record(problem=args.problem, lam=args.lam, radius=res.root, residual=res.residual,
                      iterations=res.iterations)
    return [rec], RECORD_FIELDS, EXIT_OK


def cmd_table(args):
    tol = args.tol or 1e-12
    rows = reproduce_table(args.table, tol)
    records = []
    code = EXIT_OK
    for row in rows:
        if row.error:
            print(f"row {row.lambda_source!r} failed: {row.error}", file=sys.stderr)
            code = EXIT_SOLVER
        elif not row.matches and code == EXIT_OK:
            code = EXIT_FAIL
        records.append({
            "lambda_source": row.lambda_source,
            "computed_radius": row.computed_radius,
            "paper_value": row.paper_value,
            "abs_diff": row.abs_diff,
            "flag": row.flag,
        })
    return records, TABLE_FIELDS, code


def _sequence(args, default_family="f0"):
    if args.coeffs is not None:
        return finite_sequence(args.coeffs)
    family = getattr(args, "family", None) or default_family
    if family == "koebe":
        return koebe_sequence()
    if family == "lk":
        return lk_extremal_sequence()
    if family == "constant":
        return constant_sequence(args.a if args.a is not None else 1.0)
    return f0_sequence(_require(args, "a", "--a"), args.gamma)


def _verify_record(rep, gamma=None, lam=None):
    w = rep.witness or {}
    return _record(problem=rep.claim, gamma=gamma, lam=lam, passed=rep.passed,
                   margin=rep.margin, witness_a=w.get("a"))


def cmd_verify(args):
    g = args.gamma
    if args.check == "fourier":
        rep = verify.verify_fourier_inequality(g, _sequence(args), _require(args, "r", "--r"))
    elif args.check == "laplace":
        rep = verify.verify_laplace_inequality(g, _sequence(args), _require(args, "r", "--r"))
    elif args.check == "refined":
        expr = parse_lambda(_require(args, "lam", "--lambda"))
        rep = verify.verify_refined_inequality(args.cls, expr, _require(args, "r", "--r"))
        return [_verify_record(rep, None, args.lam)], RECORD_FIELDS, EXIT_OK if rep.passed else EXIT_FAIL
    elif args.check == "lemma-a":
        rep = verify.lemma_a_check(g, _require(args, "a", "--a"), args.n_max)
    elif args.check == "sharpness-fourier":
        grid = args.a_grid or CLI_A_GRID
        rep = verify.sharpness_sweep_fourier(g, _require(args, "r", "--r"), grid)
    else:
        grid = args.a_grid or verify.DEFAULT_A_GRID
        rep = verify.sharpness_sweep_laplace(g, _require(args, "r", "--r"), grid)
    return [_verify_record(rep, g)], RECORD_FIELDS, EXIT_OK if rep.passed else EXIT_FAIL


def cmd_eval(args):
    r = _require(args, "r", "--r")
    tol = args.tol or DEFAULT_SERIES_TOL
    if args.what == "dilog":
        res = dilog(r, tol, args.max_terms)
        rec = {"problem": "dilog", "r": r, "value": res.value, "tail_bound": res.tail_bound,
               "terms_used": res.terms_used}
        return [rec], EVAL_FIELDS, EXIT_OK
    seq = _sequence(args, default_family="constant")
    if args.kind == "majorant":
        ev = bohr_sums.majorant_sum(seq, r, tol, args.max_terms)
    elif args.kind == "refined":
        expr = parse_lambda(_require(args, "lam", "--lambda"))
        ev = bohr_sums.refined_sum(seq, r, expr, args.square_start, tol, args.max_terms)
    elif args.kind == "fourier":
        ev = bohr_sums.fourier_majorant(seq, r, tol, args.max_terms)
    else:
        ev = bohr_sums.laplace_majorant(seq, r, tol, args.max_terms)
    rec = {"problem": f"{args.kind}_sum", "r": r, "value": ev.value, "tail_bound": ev.tail_bound,
           "terms_used": ev.terms_used}
    return [rec], EVAL_FIELDS, EXIT_OK


COMMANDS = {"radius": cmd_radius, "table": cmd_table, "verify": cmd_verify, "eval": cmd_eval}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        # argparse exits on usage errors and --help; report the code instead
        return exc.code
    if args.tol is not None and not args.tol > 0:
        print("bohrradius: error: --tol must be positive", file=sys.stderr)
        return EXIT_USAGE
    try:
        records, fields, code = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"bohrradius: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LambdaSyntaxError as exc:
        print(f"bohrradius: lambda syntax error: {exc}\n{exc.caret()}", file=sys.stderr)
        return EXIT_LAMBDA
    except LambdaEvalError as exc:
        print(f"bohrradius: lambda evaluation error: {exc}", file=sys.stderr)
        return EXIT_LAMBDA
    except (BracketError, ConvergenceError) as exc:
        print(f"bohrradius: solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except BohrError as exc:
        print(f"bohrradius: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    text = render(records, fields, args.format)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
