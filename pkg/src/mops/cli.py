"""Command-line front end.

One command per process; everything is deterministic (no randomness
anywhere in the library).  Exit codes: 0 success, 2 domain or syntax
errors, 3 poles and convergence failures.  Output goes to stdout,
diagnostics to stderr.
"""

import argparse
import json
import os
import sys
from fractions import Fraction

from . import binom, expect, hypergeom, jack, orthopoly, partitions, symfun
from .errors import ConvergenceError, DomainError, MopsError, PoleError
from .parser import parse_expression, parse_scalar
from .rational import R as R_PARAM
from .rational import RationalFunction, rf
from .symfun import GENERIC


def _parse_alpha(text):
    value = parse_scalar(text)
    if value.is_constant:
        return value.to_fraction()
    return value


def _parse_vars(text):
    if text in ("generic", "n"):
        return GENERIC
    try:
        return int(text)
    except ValueError:
        raise DomainError("--vars expects an integer or 'generic'")


def _parse_point(text):
    return [float(x) for x in text.split(",") if x.strip() != ""]


def _parse_grid(text):
    try:
        start, stop, count = text.split(":")
        start, stop, count = float(start), float(stop), int(count)
    except ValueError:
        raise DomainError("--grid expects start:stop:count")
    if count < 2:
        raise DomainError("grid needs at least 2 points")
    step = (stop - start) / (count - 1)
    return [start + i * step for i in range(count)]


def _scalar_json(value):
    value = rf(value) if not isinstance(value, RationalFunction) else value
    return value.to_json()


def _scalar_text(value):
    value = rf(value) if not isinstance(value, RationalFunction) else value
    return value.text()


def _emit_symexpr(e, fmt):
    if fmt == "json":
        print(json.dumps(e.to_json(), sort_keys=True))
    else:
        print(e.text())


def _emit_scalar(value, fmt):
    if fmt == "json":
        print(json.dumps(_scalar_json(value), sort_keys=True))
    else:
        print(_scalar_text(value))


def _emit_csv(xs, ys):
    print("x,density")
    for x, y in zip(xs, ys):
        print("%.17g,%.17g" % (x, y))


def _ortho_output(expansion, args):
    if args.format == "json":
        print(json.dumps(expansion.to_json(), sort_keys=True))
    else:
        print(expansion.as_symexpr().text())


def cmd_jack(args):
    alpha = _parse_alpha(args.alpha)
    kappa = partitions.deserialize(args.partition)
    nvars = _parse_vars(args.vars)
    e = jack.jack_expand(alpha, kappa, args.norm, nvars)
    if args.at is not None:
        value = symfun.eval_numeric(e, _parse_point(args.at))
        print(float(value))
        return
    _emit_symexpr(e, args.format)


def cmd_ortho(args):
    alpha = _parse_alpha(args.alpha)
    kappa = partitions.deserialize(args.partition)
    nvars = _parse_vars(args.vars)
    if args.family == "hermite":
        e = orthopoly.hermite(alpha, kappa, nvars)
    elif args.family == "hermite2":
        e = orthopoly.hermite2(alpha, kappa, nvars)
    elif args.family == "laguerre":
        e = orthopoly.laguerre(alpha, kappa, parse_scalar(args.g), nvars)
    else:
        e = orthopoly.jacobi(
            alpha, kappa, parse_scalar(args.g1), parse_scalar(args.g2), nvars
        )
    _ortho_output(e, args)


def cmd_gbinomial(args):
    alpha = _parse_alpha(args.alpha)
    value = binom.gbinomial(
        alpha, partitions.deserialize(args.kappa), partitions.deserialize(args.sigma)
    )
    _emit_scalar(value, args.format)


def cmd_gsfact(args):
    alpha = _parse_alpha(args.alpha)
    value = binom.gsfact(alpha, parse_scalar(args.r), partitions.deserialize(args.partition))
    _emit_scalar(value, args.format)


def cmd_hypergeom(args):
    alpha = _parse_alpha(args.alpha)
    upper = [parse_scalar(t) for t in args.upper.split(",") if t.strip()] if args.upper else []
    lower = [parse_scalar(t) for t in args.lower.split(",") if t.strip()] if args.lower else []
    if args.xid:
        xtext, m = args.xid.rsplit(":", 1)
        # "x" is accepted as a spelling of the formal series variable
        x = R_PARAM if xtext.strip() == "x" else parse_scalar(xtext)
        arg = ("xid", x, int(m))
    elif args.x:
        arg = ("vec", _parse_point(args.x))
    else:
        raise DomainError("give --xid x:m or --x x1,x2,...")
    value = hypergeom.ghypergeom(alpha, upper, lower, arg, limit=args.limit, tol=args.tol)
    if isinstance(value, (RationalFunction, Fraction, int)):
        _emit_scalar(value, args.format)
    else:
        print(float(value))


def cmd_convert(args):
    alpha = _parse_alpha(args.alpha) if args.alpha else None
    nvars = _parse_vars(args.vars)
    tree = parse_expression(args.expr)
    what = args.what
    if what == "m2m":
        out = symfun.m2m(tree, nvars)
    elif what == "m2p":
        out = symfun.m2p(tree)
    elif what == "p2m":
        out = symfun.p2m(tree, nvars)
    elif what == "m2jack":
        out = symfun.m2jack(alpha, symfun.m2m(tree, nvars), nvars)
    elif what == "jack2jack":
        out = symfun.jack2jack(alpha, tree, nvars)
    else:
        raise DomainError("unknown conversion %r" % what)
    _emit_symexpr(out, args.format)


def cmd_expect(args):
    alpha = _parse_alpha(args.alpha)
    nvars = _parse_vars(args.vars)
    kwargs = {}
    if args.ensemble == "laguerre":
        kwargs["g"] = parse_scalar(args.g)
    elif args.ensemble == "jacobi":
        kwargs["g1"] = parse_scalar(args.g1)
        kwargs["g2"] = parse_scalar(args.g2)
    spec = expect.EnsembleSpec(args.ensemble, alpha, nvars, **kwargs)
    tree = parse_expression(args.expr)
    if args.basis == "monomial":
        value = expect.expect_monomial_expr(spec, tree)
    else:
        value = expect.expect_jack_expr(spec, tree)
    _emit_scalar(value, args.format)


def cmd_eval(args):
    alpha = _parse_alpha(args.alpha) if args.alpha else None
    xs = _parse_point(args.at)
    tree = parse_expression(args.expr)
    mono = symfun.expand_to_monomials(alpha, tree, len(xs))
    value = symfun.eval_numeric(mono, xs)
    print(float(value))


def cmd_density(args):
    alpha = _parse_alpha(args.alpha) if args.alpha else None
    if args.which == "smallest":
        if args.p is None or args.m is None:
            raise DomainError("density smallest needs --p and --m")
        xs = _parse_grid(args.grid)
        values, mass = hypergeom.smallest_eig_density_normalized(alpha, args.p, args.m, xs)
        print("# normalizing mass %.17g" % mass, file=sys.stderr)
        _emit_csv(xs, values)
    elif args.which == "level":
        if args.beta is None or args.n is None:
            raise DomainError("density level needs --beta and --n")
        xs = _parse_grid(args.grid)
        coeffs = hypergeom.level_density_polynomial(args.beta, args.n)
        if args.scaled:
            values = [hypergeom.level_density_scaled(args.beta, args.n, x, _coeffs=coeffs) for x in xs]
        else:
            values = [hypergeom.level_density(args.beta, args.n, x, _coeffs=coeffs) for x in xs]
        _emit_csv(xs, values)
    elif args.which == "largest-cdf":
        if args.g is None or args.m is None:
            raise DomainError("density largest-cdf needs --g and --m")
        gamma = parse_scalar(args.g).to_fraction()
        xs = _parse_grid(args.grid) if args.grid else [float(args.x)]
        values = [hypergeom.largest_eig_cdf(alpha, gamma, args.m, x, tol=args.tol or 1e-10) for x in xs]
        if len(xs) == 1 and not args.grid:
            print(values[0])
        else:
            _emit_csv(xs, values)
    else:
        raise DomainError("unknown density %r" % args.which)


def _load_config(path):
    settings = {}
    with open(path) as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            if "=" not in line:
                raise DomainError("config lines must be key=value: %r" % line)
            key, value = line.split("=", 1)
            settings[key.strip()] = value.strip()
    return settings


def build_parser():
    ap = argparse.ArgumentParser(
        prog="mops",
        description="Jack polynomials, multivariate orthogonal polynomials, "
        "hypergeometric functions of matrix argument, and beta-ensemble "
        "eigenvalue statistics, computed exactly.",
    )
    ap.add_argument("--config", help="key=value file: cache_mb, default_limit")
    sub = ap.add_subparsers(dest="command", required=True)

    fmt = {"choices": ("text", "json"), "default": "text"}

    p = sub.add_parser("jack", help="Jack polynomial in the monomial basis")
    p.add_argument("--alpha", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--norm", choices=("C", "J", "P"), default="C")
    p.add_argument("--vars", default="generic")
    p.add_argument("--at", help="evaluate at x1,x2,... instead of printing")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_jack)

    for family in ("hermite", "hermite2", "laguerre", "jacobi"):
        p = sub.add_parser(family, help="%s polynomial in the Jack C basis" % family)
        p.add_argument("--alpha", required=True)
        p.add_argument("--partition", required=True)
        p.add_argument("--vars", default="generic")
        if family == "laguerre":
            p.add_argument("--g", required=True)
        if family == "jacobi":
            p.add_argument("--g1", required=True)
            p.add_argument("--g2", required=True)
        p.add_argument("--format", **fmt)
        p.set_defaults(func=cmd_ortho, family=family)

    p = sub.add_parser("gbinomial", help="generalized binomial coefficient")
    p.add_argument("--alpha", required=True)
    p.add_argument("--kappa", required=True)
    p.add_argument("--sigma", required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_gbinomial)

    p = sub.add_parser("gsfact", help="generalized shifted factorial")
    p.add_argument("--alpha", required=True)
    p.add_argument("--r", required=True)
    p.add_argument("--partition", required=True)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_gsfact)

    p = sub.add_parser("hypergeom", help="hypergeometric function pFq")
    p.add_argument("--alpha", required=True)
    p.add_argument("--upper", default="")
    p.add_argument("--lower", default="")
    p.add_argument("--xid", help="scalar-identity argument x:m")
    p.add_argument("--x", help="numeric point x1,x2,...")
    p.add_argument("--limit", type=int)
    p.add_argument("--tol", type=float)
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_hypergeom)

    p = sub.add_parser("convert", help="basis conversions")
    p.add_argument("--what", required=True, choices=("m2m", "m2p", "p2m", "m2jack", "jack2jack"))
    p.add_argument("--alpha")
    p.add_argument("--expr", required=True)
    p.add_argument("--vars", default="generic")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("expect", help="ensemble expectation of an expression")
    p.add_argument("--ensemble", required=True, choices=("hermite", "laguerre", "jacobi"))
    p.add_argument("--alpha", required=True)
    p.add_argument("--g")
    p.add_argument("--g1")
    p.add_argument("--g2")
    p.add_argument("--vars", default="generic")
    p.add_argument("--expr", required=True)
    p.add_argument("--basis", choices=("jack", "monomial"), default="jack")
    p.add_argument("--format", **fmt)
    p.set_defaults(func=cmd_expect)

    p = sub.add_parser("eval", help="numeric value of an expression at a point")
    p.add_argument("--alpha")
    p.add_argument("--expr", required=True)
    p.add_argument("--at", required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("density", help="eigenvalue-statistics curves (CSV)")
    p.add_argument("which", choices=("smallest", "level", "largest-cdf"))
    p.add_argument("--alpha")
    p.add_argument("--p", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--beta", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--g")
    p.add_argument("--x")
    p.add_argument("--grid")
    p.add_argument("--scaled", action="store_true")
    p.add_argument("--tol", type=float)
    p.add_argument("--out", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_density)

    return ap


def main(argv=None):
    ap = build_parser()
    args = ap.parse_args(argv)
    if args.config:
        settings = _load_config(args.config)
        if "cache_mb" in settings and "MOPS_CACHE_MB" not in os.environ:
            os.environ["MOPS_CACHE_MB"] = settings["cache_mb"]
        if "default_limit" in settings and getattr(args, "limit", None) is None:
            if hasattr(args, "limit"):
                args.limit = int(settings["default_limit"])
    try:
        args.func(args)
    except (PoleError, ConvergenceError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 3
    except MopsError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
