"""Command-line front end: ``python -m meixner_scheme <subcommand>``.

Exit codes: 0 success, 1 usage or parse error, 2 negative mathematical result
(not orthogonal, a failed check), 3 truncation or other internal failure.
"""
import argparse
import json
import logging
import os
import re
import sys
import traceback
from fractions import Fraction
from pathlib import Path

import pandas as pd

from . import settings, suites
from .classify import NOT_ORTHOGONAL, RecurrenceSpec, classify
from .errors import DegenerateRecurrenceError, MeixnerError, ParameterError, TruncationError
from .families import parse_family
from .limits import EDGES, default_epsilons, limit_transition
from .report import jsonable
from .scalar import QuadraticNumber, is_rational, parse_rational, rat_to_str
from .sheffer import Poly, ShefferPair, expand

logger = logging.getLogger(__name__)

FORMATS = ("csv", "json", "latex-table")
VERIFY_ALL_FILE = "verify_all.json"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


_NEGATIVE_VALUE = re.compile(r"^-(\d+(/\d+)?|\d*\.\d+)$")


def _join_negative_values(argv):
    """Rewrite ``--flag -1/2`` as ``--flag=-1/2``; argparse reads a bare ``-1/2`` as an option."""
    out = []
    for token in argv:
        if (out and _NEGATIVE_VALUE.match(token) and out[-1].startswith("--")
                and "=" not in out[-1]):
            out[-1] = f"{out[-1]}={token}"
        else:
            out.append(token)
    return out


def _rational(token):
    try:
        return parse_rational(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed rational {token!r}") from None


def _n_max(token):
    try:
        value = int(token)
    except ValueError:
        raise argparse.ArgumentTypeError(f"malformed degree {token!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"degree must be >= 0, got {value}")
    return value


def _cell(value):
    """Exact string for a table cell."""
    if is_rational(value):
        return rat_to_str(value)
    if isinstance(value, QuadraticNumber):
        return str(value)
    if isinstance(value, complex):
        return f"{value.real:.17g}{value.imag:+.17g}j"
    return repr(float(value))


def _term(coeff, k):
    text = _cell(coeff)
    if not is_rational(coeff):
        text = f"({text})"
    if k == 0:
        return text
    power = "x" if k == 1 else f"x^{k}"
    if coeff == 1:
        return power
    if coeff == -1:
        return f"-{power}"
    return f"{text}*{power}"


def _pretty(P):
    terms = [_term(c, k) for k, c in reversed(list(enumerate(P.coeffs))) if c != 0]
    if not terms:
        return "0"
    return " ".join([terms[0]] + [f"- {t[1:]}" if t.startswith("-") else f"+ {t}" for t in terms[1:]])


def _poly_frame(polys, extra=None):
    width = max(len(P.coeffs) for P in polys) if polys else 0
    rows = []
    for n, P in enumerate(polys):
        row = {"n": n, "polynomial": _pretty(P)}
        row.update({f"x^{k}": _cell(P.coeff(k)) if k < len(P.coeffs) else "" for k in range(width)})
        if extra is not None:
            row.update(extra[n])
        rows.append(row)
    return pd.DataFrame(rows)


def _render(df, fmt):
    if fmt == "csv":
        return df.to_csv(index=False)
    if fmt == "latex-table":
        return df.to_latex(index=False)
    return df.to_json(orient="records", indent=2) + "\n"


def _dump(obj):
    return json.dumps(jsonable(obj), indent=2) + "\n"


def _resolve_out(out, default_name=None):
    if out is None and default_name is None:
        return None
    out_dir = settings.output_dir()
    path = Path(out if out is not None else default_name)
    if out_dir and path.parent == Path("."):
        path = Path(out_dir) / path
    return path


def _emit(text, out, default_name=None):
    path = _resolve_out(out, default_name)
    if path is None:
        sys.stdout.write(text)
        return
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        print("Saved", path)
    except OSError as err:
        print("Failed to save output:", err, file=sys.stderr)
        raise


def _series_order(args):
    required = settings.default_order(args.n_max)
    if args.order is None:
        return required
    if args.order < required:
        logger.warning("series order %d is below %d for degree %d; raised", args.order, required, args.n_max)
        return required
    return args.order


def _spec(args):
    missing = [name for name in ("lambda_rec", "k2", "kappa") if getattr(args, name) is None]
    if missing:
        raise ParameterError(f"missing recurrence flag(s): {', '.join(missing)}")
    return RecurrenceSpec(args.lambda_rec, args.k2, args.kappa, args.l1)


def cmd_classify(args):
    result = classify(_spec(args), _series_order(args))
    _emit(_dump(result.to_json()), args.out)
    return 2 if result.case_tag == NOT_ORTHOGONAL else 0


def cmd_expand(args):
    order = _series_order(args)
    if args.family is not None:
        gf = parse_family(args.family).generating_function(order)
        pair = ShefferPair.from_series(gf.f, gf.u)
    else:
        pair = classify(_spec(args), order).pair
    polys = expand(pair, args.n_max)
    _emit(_render(_poly_frame(polys), args.format), args.out)
    return 0


def cmd_table(args):
    fam = parse_family(args.family)
    n_max = args.n_max
    limit = getattr(fam, "N", None)
    if limit is not None and n_max > limit:
        logger.warning("%s has standard polynomials only up to degree %d", fam.label, limit)
        n_max = limit
    x = Poly.x()
    polys, extra = [], []
    for n in range(n_max + 1):
        p = fam.standard(n, x)
        polys.append(p if isinstance(p, Poly) else Poly.constant(p))
        row = {"c_n": _cell(fam.normalization(n))}
        for value in args.x or ():
            row[f"p_n({rat_to_str(value)})"] = _cell(fam.standard(n, value))
        extra.append(row)
    _emit(_render(_poly_frame(polys, extra), args.format), args.out)
    return 0


def cmd_verify(args):
    if args.all:
        report = suites.run_all(args.seed, args.count, args.tol, with_limits=not args.no_limits)
        _emit(_dump(report), args.out, VERIFY_ALL_FILE)
    else:
        report = suites.run_family(parse_family(args.family), args.tol)
        _emit(_dump(report), args.out)
    if not report["passed"]:
        print("Some checks failed.", file=sys.stderr)
        return 2
    return 0


def cmd_limits(args):
    record = limit_transition(args.edge, args.n_max, args.x, default_epsilons(args.eps_decades))
    df = record.to_frame()
    df["eps"] = [f"{e:.0e}" for e in df["eps"]]
    df["error"] = [f"{e:.6e}" for e in df["error"]]
    _emit(_render(df, args.format), args.out)
    order = "inf" if record.order == float("inf") else f"{record.order:.3f}"
    print(f"{record.edge} n={record.n} x={rat_to_str(args.x)}: decreasing={record.decreasing} "
          f"order={order} passed={record.passed}", file=sys.stderr)
    return 0 if record.passed else 2


def cmd_identities(args):
    reports = suites.identity_suites(args.seed, args.count, args.tol)
    passed = all(r.passed for r in reports)
    _emit(_dump({"passed": passed, "reports": reports}), args.out)
    return 0 if passed else 2


def _add_recurrence_flags(parser, required):
    parser.add_argument("--lambda", dest="lambda_rec", type=_rational, required=required)
    parser.add_argument("--k2", type=_rational, required=required)
    parser.add_argument("--kappa", type=_rational, required=required)
    parser.add_argument("--l1", type=_rational, default=Fraction(0))


def _add_common(parser, n_default=settings.DEFAULT_N_MAX):
    parser.add_argument("-n", "--n-max", dest="n_max", type=_n_max, default=n_default)
    parser.add_argument("--out", help="output file (bare names go to $MEIXNER_OUT_DIR)")


def build_parser():
    parser = _Parser(prog="meixner_scheme", description="Meixner's orthogonal Sheffer polynomials.")
    parser.add_argument("--log-level", default=None, help="logging level (default $MEIXNER_LOG_LEVEL or WARNING)")
    parser.add_argument("-v", "--verbose", action="count", default=0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify recurrence data (lambda, k2, kappa)")
    _add_recurrence_flags(p, required=True)
    _add_common(p)
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("expand", help="monic polynomials from a family or recurrence")
    p.add_argument("--family")
    _add_recurrence_flags(p, required=False)
    _add_common(p)
    p.add_argument("--order", type=int)
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.set_defaults(func=cmd_expand)

    p = sub.add_parser("table", help="standard polynomials p_n with c_n and values")
    p.add_argument("--family", required=True)
    _add_common(p, n_default=6)
    p.add_argument("--x", type=_rational, action="append")
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run the verification suites")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--family")
    group.add_argument("--all", action="store_true")
    p.add_argument("--out")
    p.add_argument("--tol", type=float)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--no-limits", action="store_true", help="skip the limit-transition suite")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("limits", help="error table along one limit edge")
    p.add_argument("--edge", choices=sorted(EDGES), required=True)
    _add_common(p, n_default=2)
    p.add_argument("--x", type=_rational, default=Fraction(1, 2))
    p.add_argument("--eps-decades", type=int, default=6)
    p.add_argument("--format", choices=FORMATS, default="csv")
    p.set_defaults(func=cmd_limits)

    p = sub.add_parser("identities", help="cross-family identities on random parameters")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=20)
    p.add_argument("--tol", type=float)
    p.add_argument("--out")
    p.set_defaults(func=cmd_identities)
    return parser


def _configure_logging(args):
    level = args.log_level.upper() if args.log_level else settings.log_level()
    if args.verbose:
        level = "DEBUG" if args.verbose > 1 else "INFO"
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)


def _origin(exc):
    frames = traceback.extract_tb(exc.__traceback__)
    return os.path.splitext(os.path.basename(frames[-1].filename))[0] if frames else "meixner_scheme"


def main(argv=None):
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_join_negative_values(argv))
    _configure_logging(args)
    try:
        return args.func(args)
    except ParameterError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 1
    except DegenerateRecurrenceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TruncationError as exc:
        print(f"error in {_origin(exc)}: {exc} (needs about {exc.required_terms} terms)", file=sys.stderr)
        return 3
    except MeixnerError as exc:
        print(f"error in {_origin(exc)}: {exc}", file=sys.stderr)
        return 3
    except OSError:
        return 3
