"""Exact application of the ensemble differential operators.

Symmetric polynomials are expanded into explicit exponent vectors over a
fixed number of variables; the singular pair terms sum_{i != j}
x_i^w / (x_i - x_j) * d/dx_i collapse to polynomial contributions via the
divided-difference identity (x^a y^b - x^b y^a) / (x - y) =
sum_{r=b..a-1} x^r y^{a+b-1-r}, so no rational-function division is ever
performed.  Coefficients are exact scalars (Fractions or rational
functions), exponents machine ints.
"""

from .errors import DomainError
from .symfun import GENERIC, SymExpr, _distinct_rearrangements


def expand_to_vectors(expr, nvars):
    """Monomial SymExpr -> dict exponent-vector -> coefficient."""
    if expr.basis != "m":
        raise DomainError("operators act on monomial expansions")
    out = {}
    for part, coeff in expr.terms.items():
        if len(part) > nvars:
            continue
        for vec in _distinct_rearrangements(part, nvars):
            out[vec] = coeff
    return out


def collect_to_symexpr(poly, nvars):
    """Inverse of expand_to_vectors; checks the result is symmetric."""
    terms = {}
    seen = {}
    for vec, coeff in poly.items():
        part = tuple(sorted(vec, reverse=True))
        if part in seen:
            if seen[part] != coeff:
                raise DomainError("operator produced a non-symmetric polynomial")
        else:
            seen[part] = coeff
            terms[tuple(p for p in part if p)] = coeff
    return SymExpr("m", terms, nvars)


def _add(poly, vec, coeff):
    if not coeff:
        return
    cur = poly.get(vec)
    new = coeff if cur is None else cur + coeff
    if new:
        poly[vec] = new
    else:
        del poly[vec]


def _apply_pairs(poly, weight_exp, out, factor):
    """Pair terms of the operator with x_i^weight_exp numerator.

    weight_exp = 2 gives sum x_i^2/(x_i - x_j) d_i, weight_exp = 1 the
    x_i variant, weight_exp = 0 the bare 1/(x_i - x_j) variant.  Each
    unordered monomial pair {v, swap_ij(v)} is processed once, from the
    representative with v_i >= v_j.
    """
    for vec, c in poly.items():
        n = len(vec)
        fc = factor * c
        for i in range(n):
            u = vec[i]
            for j in range(i + 1, n):
                v = vec[j]
                if u < v:
                    continue
                pre = list(vec)
                if weight_exp == 2:
                    if u == v:
                        _add(out, vec, fc * u)
                        continue
                    _add(out, vec, fc * u)
                    pre[i], pre[j] = v, u
                    _add(out, tuple(pre), fc * u)
                    for rexp in range(v + 1, u):
                        pre[i], pre[j] = rexp, u + v - rexp
                        _add(out, tuple(pre), fc * (u - v))
                elif weight_exp == 1:
                    if u == v:
                        continue
                    for rexp in range(v, u):
                        pre[i], pre[j] = rexp, u + v - 1 - rexp
                        _add(out, tuple(pre), fc * (u - v))
                else:
                    if u == v:
                        if u >= 1:
                            pre[i], pre[j] = u - 1, u - 1
                            _add(out, tuple(pre), -fc * u)
                        continue
                    for rexp in range(v, u - 1):
                        pre[i], pre[j] = rexp, u + v - 2 - rexp
                        _add(out, tuple(pre), fc * u)
                    if v >= 1:
                        for rexp in range(v - 1, u):
                            pre[i], pre[j] = rexp, u + v - 2 - rexp
                            _add(out, tuple(pre), -fc * v)


def _apply_second_derivative(poly, weight_exp, out):
    """sum_i x_i^weight_exp d^2/dx_i^2 (weight_exp in {0, 1, 2})."""
    drop = 2 - weight_exp
    for vec, c in poly.items():
        for i, u in enumerate(vec):
            if u < 2:
                continue
            coeff = c * (u * (u - 1))
            if drop == 0:
                _add(out, vec, coeff)
            else:
                lst = list(vec)
                lst[i] = u - drop
                _add(out, tuple(lst), coeff)


def apply_operator(poly, kind, alpha=None):
    """Apply one operator to an exponent-vector polynomial.

    kind: 'dstar'        x^2 second derivatives + (2/a) x^2 pair terms
          'deltastar'    x   second derivatives + (2/a) x   pair terms
          'deltastarstar'     second derivatives + (2/a)    pair terms
          'E'            sum x_i d_i (degree operator)
          'eps'          sum d_i
    """
    out = {}
    if kind == "E":
        for vec, c in poly.items():
            _add(out, vec, c * sum(vec))
        return out
    if kind == "eps":
        for vec, c in poly.items():
            for i, u in enumerate(vec):
                if u:
                    lst = list(vec)
                    lst[i] = u - 1
                    _add(out, tuple(lst), c * u)
        return out
    weight_exp = {"dstar": 2, "deltastar": 1, "deltastarstar": 0}.get(kind)
    if weight_exp is None:
        raise DomainError("unknown operator %r" % kind)
    if alpha is None:
        raise DomainError("operator %s requires alpha" % kind)
    _apply_second_derivative(poly, weight_exp, out)
    _apply_pairs(poly, weight_exp, out, 2 / alpha)
    return out


def apply_to_symexpr(expr, kind, alpha=None, nvars=None):
    if nvars is GENERIC or nvars is None:
        raise DomainError("operator application needs a numeric variable count")
    poly = expand_to_vectors(expr, nvars)
    return collect_to_symexpr(apply_operator(poly, kind, alpha), nvars)
