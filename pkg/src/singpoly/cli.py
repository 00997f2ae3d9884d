"""Command-line front end.

Exit status: 0 on success, 1 when a mathematical verification fails,
2 on usage errors (bad flags or invalid parameters).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import __version__
from .comb import format_composition, length, parse_composition, syt_count
from .config import RunConfig
from .errors import (
    IndexOutOfRange,
    InvalidPair,
    InvalidParameters,
    PreconditionViolated,
    SingPolyError,
)
from .jack import critical_pairs, hook_product, nsjp
from .properties import SUITE_NAMES, run_suites
from .scalar import KAPPA, as_rf, format_rational, parse_rational
from .singular import (
    datum,
    isotype_of,
    murphy_labels,
    nonexistence_witness,
    singular_basis,
    singular_space,
    verify_singular,
    witness_plan,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


USAGE_ERRORS = (UsageError, InvalidPair, InvalidParameters, PreconditionViolated, IndexOutOfRange)


def _composition(text):
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad composition {text!r}: {exc}") from None


def _rational(text):
    try:
        return parse_rational(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {text!r}") from None


def _positive(text):
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {v}")
    return v


def _shift(text):
    t = text.replace(" ", "").replace("κ", "k").replace("kappa", "k")
    if t == "k+1":
        return KAPPA + 1
    try:
        return as_rf(Fraction(t))
    except ValueError:
        raise argparse.ArgumentTypeError(f"shift must be a rational or kappa+1, got {text!r}") from None


def _rf_json(c):
    rf = as_rf(c)
    return {"num": rf.num_coeffs(), "den": rf.den_coeffs(), "text": str(rf)}


def _emit(cfg, payload, text):
    if cfg.json:
        print(json.dumps(payload, sort_keys=True))
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands


def run_nsjp(args, cfg):
    alpha = args.alpha
    N = args.nvars if args.nvars is not None else len(alpha)
    if length(alpha) > N:
        raise UsageError(f"alpha {format_composition(alpha)} needs more than {N} variables")
    rec = nsjp(alpha, N)
    if args.coef is not None:
        if length(args.coef) > N:
            raise UsageError(f"coefficient index needs more than {N} variables")
        c = rec.coef(args.coef)
        _emit(cfg, {"alpha": list(rec.alpha), "beta": _padded(args.coef, N), "coef": _rf_json(c)},
              str(as_rf(c)))
    else:
        _emit(cfg, rec.poly.to_dict(), str(rec.poly))
    return EXIT_OK


def _padded(beta, N):
    return list(beta) + [0] * (N - len(beta))


def run_hook(args, cfg):
    value = hook_product(args.alpha, args.shift)
    _emit(cfg, {"alpha": list(args.alpha), "shift": _rf_json(args.shift), "value": _rf_json(value)},
          str(value))
    return EXIT_OK


def run_critical(args, cfg):
    pairs = critical_pairs(args.alpha, args.m, args.n, args.maxlen)
    betas = [c.beta for c in pairs]
    _emit(cfg, {"alpha": list(args.alpha), "m": args.m, "n": args.n,
                "pairs": [list(b) for b in betas]},
          "\n".join(format_composition(b) for b in betas) if betas else "(none)")
    return EXIT_OK


def run_singular(args, cfg):
    dat = datum(args.nvars, args.m0, args.n0)
    payload = {
        "N": dat.N, "m0": dat.m0, "n0": dat.n0, "d": dat.d, "m": dat.m, "n": dat.n,
        "kappa0": format_rational(dat.kappa0), "tau": list(dat.tau), "l": dat.l,
        "lambda": list(dat.lambda_), "degree": dat.degree,
    }
    lines = [
        f"N: {dat.N}",
        f"kappa0: {format_rational(dat.kappa0)}",
        f"tau: ({format_composition(dat.tau)})",
        f"lambda: {format_composition(dat.lambda_)}",
        f"degree: {dat.degree}",
    ]
    status = EXIT_OK
    if args.verify or args.basis:
        labels = murphy_labels(dat)
        basis = singular_basis(dat)
        if args.basis:
            payload["basis"] = [{"label": list(a), "poly": p.to_dict()} for a, p in zip(labels, basis)]
            for a, p in zip(labels, basis):
                lines.append(f"[{format_composition(a)}] {p}")
        if args.verify:
            ok = [verify_singular(p, dat.kappa0) for p in basis]
            payload["verified"] = sum(ok)
            payload["basis_size"] = len(basis)
            lines.append(f"{sum(ok)}/{len(basis)} basis elements singular")
            if not all(ok):
                status = EXIT_FAIL
    _emit(cfg, payload, "\n".join(lines))
    return status


def run_kernel(args, cfg):
    space = singular_space(args.nvars, args.kappa0, args.degree)
    payload = {"N": args.nvars, "kappa0": format_rational(args.kappa0), "degree": args.degree,
               "dimension": len(space)}
    lines = [f"dimension: {len(space)}"]
    if space and args.isotype:
        tau = isotype_of(space, args.kappa0)
        payload["isotype"] = list(tau)
        payload["syt_count"] = syt_count(tau)
        lines.append(f"isotype: ({format_composition(tau)})")
    if args.basis:
        payload["basis"] = [p.to_dict() for p in space]
        lines.extend(str(p) for p in space)
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK


def run_witness(args, cfg):
    plan = witness_plan(args.nvars, args.m, args.n, args.tau)
    value = nonexistence_witness(plan, route=args.route)
    payload = {"lambda": list(plan.lambda_), "gamma": list(plan.gamma),
               "kappa0": format_rational(plan.kappa0), "witness": format_rational(value)}
    _emit(cfg, payload, "\n".join([
        f"lambda: {format_composition(plan.lambda_)}",
        f"gamma: {format_composition(plan.gamma)}",
        f"witness: {format_rational(value)}",
    ]))
    return EXIT_OK


def run_verify(args, cfg):
    reports = run_suites(args.suite, seed=args.seed, threads=cfg.threads)
    payload = {"seed": args.seed, "suites": {}}
    lines = []
    for rep in reports:
        payload["suites"][rep.suite] = {
            "passed": rep.passed, "total": rep.total,
            "failures": [{"property": n, "message": msg} for n, ok, msg in rep.results if not ok],
        }
        lines.append(rep.summary())
        lines.extend(f"  FAIL {n}: {msg}" for n, ok, msg in rep.results if not ok)
    if len(reports) > 1:
        passed = sum(r.passed for r in reports)
        total = sum(r.total for r in reports)
        lines.append(f"all: {passed}/{total} properties passed")
    _emit(cfg, payload, "\n".join(lines))
    return EXIT_OK if all(r.ok for r in reports) else EXIT_FAIL


# ---------------------------------------------------------------------------


def _common(suppress):
    common = argparse.ArgumentParser(add_help=False)
    kw = {"default": argparse.SUPPRESS} if suppress else {}
    common.add_argument("--json", action="store_true", help="machine-readable output", **kw)
    common.add_argument("--threads", type=_positive, help="worker threads (default: $SINGPOLY_THREADS or 1)",
                        **(kw or {"default": None}))
    return common


def build_parser():
    # flags may appear before or after the subcommand
    common = _common(suppress=True)
    parser = argparse.ArgumentParser(prog="singpoly", description=__doc__.splitlines()[0],
                                     parents=[_common(suppress=False)])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("nsjp", parents=[common], help="nonsymmetric Jack polynomial")
    p.add_argument("--alpha", type=_composition, required=True)
    p.add_argument("--nvars", type=_positive)
    p.add_argument("--coef", type=_composition, help="print only this coefficient")
    p.set_defaults(func=run_nsjp)

    p = sub.add_parser("hook", parents=[common], help="hook-length product h(alpha, t)")
    p.add_argument("--alpha", type=_composition, required=True)
    p.add_argument("--shift", type=_shift, default=KAPPA + 1, help="t: a rational or kappa+1")
    p.set_defaults(func=run_hook)

    p = sub.add_parser("critical-pairs", parents=[common], help="enumerate critical pairs")
    p.add_argument("--alpha", type=_composition, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--maxlen", type=_positive)
    p.set_defaults(func=run_critical)

    p = sub.add_parser("singular", parents=[common], help="singular module for (N, m0, n0)")
    p.add_argument("--nvars", type=_positive, required=True)
    p.add_argument("--m0", type=_positive, required=True)
    p.add_argument("--n0", type=_positive, required=True)
    p.add_argument("--verify", action="store_true")
    p.add_argument("--basis", action="store_true")
    p.set_defaults(func=run_singular)

    p = sub.add_parser("kernel", parents=[common], help="exact common kernel of the Dunkl operators")
    p.add_argument("--nvars", type=_positive, required=True)
    p.add_argument("--kappa0", type=_rational, required=True, help='e.g. "-1/2"')
    p.add_argument("--degree", type=_positive, required=True)
    p.add_argument("--isotype", action="store_true")
    p.add_argument("--basis", action="store_true")
    p.set_defaults(func=run_kernel)

    p = sub.add_parser("witness", parents=[common], help="nonexistence witness")
    p.add_argument("--nvars", type=_positive, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--n", type=_positive, required=True)
    p.add_argument("--tau", type=_composition, required=True)
    p.add_argument("--route", choices=["insertion", "cyclic", "direct"], default="insertion")
    p.set_defaults(func=run_witness)

    p = sub.add_parser("verify", parents=[common], help="run a property suite")
    p.add_argument("--suite", choices=SUITE_NAMES, default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=run_verify)
    return parser


def _join_negative_values(argv):
    """Let "--kappa0 -1/2" through: argparse would read -1/2 as a flag."""
    out, it = [], iter(argv)
    for a in it:
        if a == "--kappa0":
            nxt = next(it, None)
            out.append(a if nxt is None else f"--kappa0={nxt}")
        else:
            out.append(a)
    return out


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(_join_negative_values(argv))
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        cfg = RunConfig.resolve(threads=args.threads, json=args.json,
                                seed=getattr(args, "seed", 0))
        return args.func(args, cfg)
    except USAGE_ERRORS as exc:
        print(f"singpoly {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SingPolyError as exc:
        print(f"singpoly {args.command}: verification failed: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except ValueError as exc:
        print(f"singpoly {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
