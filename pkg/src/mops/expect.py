"""Expected values over the 2/alpha Hermite, Laguerre and Jacobi ensembles.

Everything reduces to the expectation of a single Jack polynomial C_kappa:
a generalized-Pochhammer closed form for Laguerre and Jacobi, and the
constant term of the Hermite polynomial (computed through the
limiting-process construction, which only needs the empty-partition
coefficient) for Hermite.  Expressions are first flattened to the Jack C
basis and expectation is applied by linearity.
"""

from fractions import Fraction

from . import binom, jack, orthopoly, partitions, symfun
from .errors import DomainError, UnsupportedModeError
from .rational import N as N_PARAM
from .rational import RationalFunction
from .symfun import GENERIC

FAMILIES = ("hermite", "laguerre", "jacobi")


class EnsembleSpec:
    """Which weight, its parameters, and the variable-count mode."""

    __slots__ = ("family", "alpha", "params", "nvars")

    def __init__(self, family, alpha, nvars=GENERIC, **params):
        if family not in FAMILIES:
            raise DomainError("unknown ensemble %r" % family)
        self.family = family
        self.alpha = jack._as_alpha(alpha)
        self.nvars = nvars
        checked = {}
        if family == "laguerre":
            checked["g"] = orthopoly._check_weight_param(params.pop("g"), "g")
        elif family == "jacobi":
            checked["g1"] = orthopoly._check_weight_param(params.pop("g1"), "g1")
            checked["g2"] = orthopoly._check_weight_param(params.pop("g2"), "g2")
        if params:
            raise DomainError("unexpected parameters: %s" % ", ".join(params))
        self.params = checked

    def _m_scalar(self):
        if self.nvars is GENERIC:
            return N_PARAM
        return Fraction(self.nvars)


def expect_jack_c(spec, kappa):
    """E[C_kappa] over the ensemble."""
    kappa = partitions.as_partition(kappa)
    k = partitions.weight(kappa)
    alpha = spec.alpha
    m = spec._m_scalar()
    if spec.nvars is not GENERIC and len(kappa) > spec.nvars:
        return alpha * 0
    if spec.family == "hermite":
        if k % 2:
            return alpha * 0
        h0 = orthopoly.eval_at_zero(orthopoly.hermite2(alpha, kappa, spec.nvars))
        return h0 if (k // 2) % 2 == 0 else -h0
    ident = jack.jack_identity_value(alpha, kappa, "C", m)
    if spec.family == "laguerre":
        c1 = spec.params["g"] + (m - 1) / alpha + 1
        return binom.gsfact(alpha, c1, kappa) * ident
    c1 = spec.params["g1"] + (m - 1) / alpha + 1
    c2 = spec.params["g1"] + spec.params["g2"] + (2 / alpha) * (m - 1) + 2
    return binom.gsfact(alpha, c1, kappa) / binom.gsfact(alpha, c2, kappa) * ident


def expect_jack_expr(spec, expr):
    """E of an expression over Jack-basis leaves."""
    flat = symfun.jack2jack(spec.alpha, expr, spec.nvars)
    total = None
    for kappa, coeff in flat.terms.items():
        term = coeff * expect_jack_c(spec, kappa)
        total = term if total is None else total + term
    return total if total is not None else spec.alpha * 0


def expect_monomial_expr(spec, expr):
    """E of an expression over monomial leaves."""
    if spec.nvars is GENERIC and not isinstance(expr, symfun.SymExpr):
        if symfun.has_true_product(expr):
            raise UnsupportedModeError(
                "products of monomials need a numeric variable count for expectations"
            )
    flat = symfun.m2m(expr, spec.nvars)
    cexp = symfun.m2jack(spec.alpha, flat, spec.nvars)
    total = None
    for kappa, coeff in cexp.terms.items():
        term = coeff * expect_jack_c(spec, kappa)
        total = term if total is None else total + term
    return total if total is not None else spec.alpha * 0


def conjecture_coefficients(alpha, k, cap=8):
    """Structure report for the expansion m_[k] = sum f_lambda C_lambda.

    For each lambda the conjecture predicts f_lambda = (1/n(lambda)) *
    prod_{i >= 2} (-(i-1)/alpha)_{lambda_i} with n(lambda) a nonzero
    integer independent of alpha (the i = 1 factor is trivial).  Returns
    a list of dicts with the coefficient, the predicted integer when the
    shape holds, and a conforming flag; never raises on a counterexample.
    """
    alpha = jack._as_alpha(alpha)
    if k < 1:
        raise DomainError("need k >= 1")
    if k > cap:
        raise DomainError("k = %d exceeds the cap %d" % (k, cap))
    expansion = symfun.m2jack(alpha, symfun.SymExpr("m", {(k,): 1}), GENERIC)
    report = []
    for lam in sorted(expansion.terms, reverse=True):
        f_lam = expansion.terms[lam]
        product = alpha**0
        for i0 in range(1, len(lam)):
            product = product * binom.sfact(-(i0 / alpha), lam[i0])
        entry = {"partition": lam, "coefficient": f_lam, "n": None, "conforming": False}
        if product != 0:
            ratio = f_lam / product
            if isinstance(ratio, RationalFunction):
                constant = ratio.is_constant
                value = ratio.to_fraction() if constant else None
            else:
                constant = True
                value = Fraction(ratio)
            if constant and value != 0 and abs(value.numerator) == 1:
                entry["n"] = value.denominator * (1 if value.numerator > 0 else -1)
                entry["conforming"] = True
        report.append(entry)
    return report
