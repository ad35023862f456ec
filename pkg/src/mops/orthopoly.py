"""Multivariate Hermite, Laguerre and Jacobi polynomials.

Each polynomial is stored as an OrthoExpansion: a map from subpartitions
sigma of kappa to the exact coefficient of the plain Jack polynomial
C_sigma.  Two independent Hermite constructions are provided (a
coefficient recurrence and a limiting-process formula); they must agree
exactly, which is enforced by the test suite.

Sign conventions follow the explicit expansion formulas and the
eigenfunction equations, cross-checked against the univariate classical
polynomials at n = 1.
"""

from fractions import Fraction

from . import binom, jack, operators, partitions
from .errors import DomainError, PoleError
from .rational import N as N_PARAM
from .rational import RationalFunction
from .symfun import GENERIC, SymExpr

FAMILIES = ("hermite", "laguerre", "jacobi")


class OrthoExpansion:
    """Expansion sum_sigma coeffs[sigma] * C_sigma in the plain C basis."""

    __slots__ = ("family", "kappa", "params", "nvars", "coeffs")

    def __init__(self, family, kappa, params, nvars, coeffs):
        self.family = family
        self.kappa = kappa
        self.params = dict(params)
        self.nvars = nvars
        self.coeffs = {p: c for p, c in coeffs.items() if c}

    def __repr__(self):
        return "OrthoExpansion(%s, %r)" % (self.family, list(self.kappa))

    def coefficient(self, sigma):
        sigma = partitions.as_partition(sigma)
        return self.coeffs.get(sigma, 0)

    def sorted_terms(self):
        return [(p, self.coeffs[p]) for p in sorted(self.coeffs, reverse=True)]

    def as_symexpr(self):
        return SymExpr("C", self.coeffs, self.nvars)

    def to_monomials(self, alpha):
        out = SymExpr("m", {}, self.nvars)
        if self.nvars is GENERIC:
            raise DomainError("monomial expansion needs a numeric variable count")
        for sigma, c in self.coeffs.items():
            out = out.add(jack.jack_expand(alpha, sigma, "C", self.nvars).scale(c))
        return out

    def to_json(self):
        from .rational import rf

        terms = []
        for part, coeff in self.sorted_terms():
            coeff = rf(coeff) if not isinstance(coeff, RationalFunction) else coeff
            terms.append({"partition": list(part), "coeff": coeff.to_json()})
        mode = "generic" if self.nvars is GENERIC else self.nvars
        params = {}
        for name in sorted(self.params):
            value = self.params[name]
            value = rf(value) if not isinstance(value, RationalFunction) else value
            params[name] = value.to_json()
        return {
            "family": self.family,
            "kappa": list(self.kappa),
            "params": params,
            "varMode": mode,
            "terms": terms,
        }


def _m_scalar(nvars):
    if nvars is GENERIC:
        return N_PARAM
    return Fraction(nvars)


def _check_nvars(kappa, nvars):
    if nvars is not GENERIC:
        if nvars < 1:
            raise DomainError("need at least one variable")
        if len(kappa) > nvars:
            raise DomainError(
                "partition %r needs at least %d variables" % (list(kappa), len(kappa))
            )


def _check_weight_param(value, name):
    """Numeric Laguerre/Jacobi exponents must exceed -1."""
    if isinstance(value, int):
        value = Fraction(value)
    if isinstance(value, Fraction) and value <= -1:
        raise DomainError("%s must be > -1, got %s" % (name, value))
    return value


def _identity_values(alpha, kappa, m_scalar):
    """C_sigma(I_m) for every subpartition sigma of kappa."""
    return {
        sigma: jack.jack_identity_value(alpha, sigma, "C", m_scalar)
        for sigma in partitions.subpartitions_of(kappa)
    }


def _by_weight(kappa):
    out = {}
    for sigma in partitions.subpartitions_of(kappa):
        out.setdefault(partitions.weight(sigma), []).append(sigma)
    return out


# ---------------------------------------------------------------------------
# Laguerre


def laguerre(alpha, kappa, gamma, nvars=GENERIC):
    """Laguerre polynomial, explicit binomial expansion in the C basis."""
    alpha = jack._as_alpha(alpha)
    kappa = partitions.as_partition(kappa)
    gamma = _check_weight_param(gamma, "gamma")
    _check_nvars(kappa, nvars)
    m = _m_scalar(nvars)
    c1 = gamma + (m - 1) / alpha + 1
    ident = _identity_values(alpha, kappa, m)
    btable = binom.gbinomial_table(alpha, kappa)
    ck_ident = ident[kappa]
    coeffs = {}
    for sigma, b in btable.items():
        s = partitions.weight(sigma)
        sign = -1 if s % 2 else 1
        value = (
            sign
            * b
            * binom.gsfact_skew(alpha, c1, kappa, sigma)
            * ck_ident
            / ident[sigma]
        )
        coeffs[sigma] = value
    return OrthoExpansion("laguerre", kappa, {"alpha": alpha, "g": gamma}, nvars, coeffs)


# ---------------------------------------------------------------------------
# Jacobi


def jacobi(alpha, kappa, g1, g2, nvars=GENERIC):
    """Jacobi polynomial via the binomial-coefficient recurrence.

    The one-box transition weight is the contiguous coefficient
    (sigma^(i) choose sigma) alone; this is what the eigenfunction
    equation yields, and the operator eigenchecks and the n = 1
    Gram-Schmidt reduction confirm it.
    """
    alpha = jack._as_alpha(alpha)
    kappa = partitions.as_partition(kappa)
    g1 = _check_weight_param(g1, "g1")
    g2 = _check_weight_param(g2, "g2")
    _check_nvars(kappa, nvars)
    m = _m_scalar(nvars)
    k = partitions.weight(kappa)
    big_g = g1 + g2 + (2 / alpha) * (m - 1) + 2
    rho_kappa = partitions.rho(alpha, kappa)
    btable = binom.gbinomial_table(alpha, kappa)
    by_weight = _by_weight(kappa)
    inner = {kappa: alpha**0}
    for s in range(k - 1, -1, -1):
        for sigma in by_weight.get(s, ()):
            total = None
            for i in range(1, len(sigma) + 2):
                upper = binom._row_increment(sigma, i)
                if upper is None or upper not in btable:
                    continue
                up = inner.get(upper)
                if up is None:
                    continue
                term = binom.contiguous(alpha, sigma, i) * up
                total = term if total is None else total + term
            if total is None:
                continue
            denom = big_g * (k - s) + rho_kappa - partitions.rho(alpha, sigma)
            if isinstance(denom, Fraction) and denom == 0:
                raise PoleError("Jacobi recurrence denominator vanished at sigma=%r" % (sigma,))
            inner[sigma] = total / denom
    c1 = g1 + (m - 1) / alpha + 1
    ident = _identity_values(alpha, kappa, m)
    ck_ident = ident[kappa]
    coeffs = {}
    for sigma, val in inner.items():
        s = partitions.weight(sigma)
        sign = -1 if s % 2 else 1
        coeffs[sigma] = (
            sign
            * val
            * binom.gsfact_skew(alpha, c1, kappa, sigma)
            * ck_ident
            / ident[sigma]
        )
    return OrthoExpansion("jacobi", kappa, {"alpha": alpha, "g1": g1, "g2": g2}, nvars, coeffs)


# ---------------------------------------------------------------------------
# Hermite, limiting-process construction


def hermite2(alpha, kappa, nvars=GENERIC):
    """Hermite polynomial from the Laguerre limit formula.

    The coefficient of C_sigma is (C_kappa(I)/C_sigma(I)) *
    sum_j (-1)^j sum_{sigma <= mu <= kappa, |mu| = j}
    (kappa choose mu)(mu choose sigma) [r^((k+s)/2 - j)]
    (r + 1 + (m-1)/alpha)_kappa / (r + 1 + (m-1)/alpha)_mu.
    """
    alpha = jack._as_alpha(alpha)
    kappa = partitions.as_partition(kappa)
    _check_nvars(kappa, nvars)
    m = _m_scalar(nvars)
    k = partitions.weight(kappa)
    c0 = 1 + (m - 1) / alpha
    btable = binom.gbinomial_table(alpha, kappa)
    by_weight = _by_weight(kappa)
    rpolys = {
        mu: binom.poch_ratio_rpoly(alpha, c0, kappa, mu)
        for mu in btable
    }
    ident = _identity_values(alpha, kappa, m)
    ck_ident = ident[kappa]
    coeffs = {}
    for sigma in btable:
        s = partitions.weight(sigma)
        if (k - s) % 2:
            continue
        total = None
        for j in range(s, (k + s) // 2 + 1):
            idx = (k + s) // 2 - j
            layer = None
            for mu in by_weight.get(j, ()):
                if not partitions.is_subpartition(sigma, mu):
                    continue
                term = (
                    btable[mu]
                    * binom.gbinomial_table(alpha, mu)[sigma]
                    * rpolys[mu][idx]
                )
                layer = term if layer is None else layer + term
            if layer is None:
                continue
            if (k - j) % 2:
                layer = -layer
            total = layer if total is None else total + layer
        if total is None:
            continue
        coeffs[sigma] = total * ck_ident / ident[sigma]
    return OrthoExpansion("hermite", kappa, {"alpha": alpha}, nvars, coeffs)


# ---------------------------------------------------------------------------
# Hermite, coefficient recurrence

def hermite(alpha, kappa, nvars=GENERIC):
    """Hermite polynomial via the two-box coefficient recurrence.

    Walking the eigenfunction equation down two units of weight at a time:
    the diagonal step adds two boxes to one row with weight
    -(sigma^(i)(i) choose sigma^(i))(sigma^(i) choose sigma); the
    off-diagonal step adds one box to each of rows i < j with scalar
    weight sigma_i - sigma_j - (i-j)/alpha times the DIFFERENCE of the
    two one-box chains, (via row i) - (via row j), a chain counting 0
    when its intermediate shape is not a partition.  This is the variant
    that agrees exactly with the limiting-process construction.
    """
    alpha = jack._as_alpha(alpha)
    kappa = partitions.as_partition(kappa)
    _check_nvars(kappa, nvars)
    m = _m_scalar(nvars)
    k = partitions.weight(kappa)
    ident = _identity_values(alpha, kappa, m)
    sub_set = set(partitions.subpartitions_of(kappa))
    by_weight = _by_weight(kappa)
    inner = {kappa: ident[kappa]}
    for s in range(k - 2, -1, -2):
        for sigma in by_weight.get(s, ()):
            total = None
            rows = len(sigma) + 1
            # two boxes in one row
            for i in range(1, rows + 1):
                step1 = binom._row_increment(sigma, i)
                if step1 is None:
                    continue
                step2 = binom._row_increment(step1, i)
                if step2 is None or step2 not in sub_set:
                    continue
                up = inner.get(step2)
                if up is None:
                    continue
                term = (
                    binom.contiguous(alpha, step1, i)
                    * binom.contiguous(alpha, sigma, i)
                    * up
                )
                total = -term if total is None else total - term
            # one box in each of two rows i < j
            for i in range(1, rows + 1):
                step_i = binom._row_increment(sigma, i)
                if step_i is None:
                    continue
                si = sigma[i - 1] if i - 1 < len(sigma) else 0
                for j in range(i + 1, rows + 2):
                    mu = binom._row_increment(step_i, j)
                    if mu is None or mu not in sub_set:
                        continue
                    up = inner.get(mu)
                    if up is None:
                        continue
                    sj = sigma[j - 1] if j - 1 < len(sigma) else 0
                    chain = binom.contiguous(alpha, step_i, j) * binom.contiguous(
                        alpha, sigma, i
                    )
                    step_j = binom._row_increment(sigma, j)
                    if step_j is not None:
                        chain = chain - binom.contiguous(
                            alpha, step_j, i
                        ) * binom.contiguous(alpha, sigma, j)
                    weight = si - sj - (i - j) / alpha
                    term = weight * chain * up
                    total = term if total is None else total + term
            if total is None:
                continue
            inner[sigma] = total / (k - s)
    coeffs = {}
    for sigma, val in inner.items():
        coeffs[sigma] = val / ident[sigma]
    return OrthoExpansion("hermite", kappa, {"alpha": alpha}, nvars, coeffs)


# ---------------------------------------------------------------------------
# evaluation helpers


def _poly_combine(parts):
    """Sum scalar * polynomial dicts."""
    out = {}
    for scalar, poly in parts:
        if not scalar:
            continue
        for vec, c in poly.items():
            cur = out.get(vec)
            new = scalar * c if cur is None else cur + scalar * c
            if new:
                out[vec] = new
            else:
                del out[vec]
    return out


def family_operator(expansion):
    """Apply the family's defining differential operator.

    hermite:  (sum d_i^2 + (2/a) sum 1/(x_i-x_j) d_i) - sum x_i d_i
    laguerre: (sum x_i d_i^2 + (2/a) sum x_i/(x_i-x_j) d_i) - E + (g+1) eps
    jacobi:   D* + (g1+g2+2) E - delta* - (g1+1) eps
    Returns a monomial SymExpr; compare with family_eigenvalue(expansion)
    times the polynomial.
    """
    if expansion.nvars is GENERIC:
        raise DomainError("operator check needs a numeric variable count")
    n = expansion.nvars
    alpha = expansion.params["alpha"]
    mono = expansion.to_monomials(alpha)
    poly = operators.expand_to_vectors(mono, n)
    if expansion.family == "hermite":
        out = _poly_combine(
            [
                (1, operators.apply_operator(poly, "deltastarstar", alpha)),
                (-1, operators.apply_operator(poly, "E")),
            ]
        )
    elif expansion.family == "laguerre":
        gamma = expansion.params["g"]
        out = _poly_combine(
            [
                (1, operators.apply_operator(poly, "deltastar", alpha)),
                (-1, operators.apply_operator(poly, "E")),
                (gamma + 1, operators.apply_operator(poly, "eps")),
            ]
        )
    elif expansion.family == "jacobi":
        g1 = expansion.params["g1"]
        g2 = expansion.params["g2"]
        out = _poly_combine(
            [
                (1, operators.apply_operator(poly, "dstar", alpha)),
                (g1 + g2 + 2, operators.apply_operator(poly, "E")),
                (-1, operators.apply_operator(poly, "deltastar", alpha)),
                (-(g1 + 1), operators.apply_operator(poly, "eps")),
            ]
        )
    else:
        raise DomainError("unknown family %r" % expansion.family)
    return operators.collect_to_symexpr(out, n)


def family_eigenvalue(expansion):
    """Eigenvalue of family_operator on the expansion.

    Hermite and Laguerre polynomials satisfy op(P) = -|kappa| P with the
    operators as written above; Jacobi polynomials satisfy op(P) =
    (rho_kappa + |kappa| (g1+g2+2+(2/alpha)(n-1))) P.
    """
    k = partitions.weight(expansion.kappa)
    if expansion.family in ("hermite", "laguerre"):
        return -k
    alpha = expansion.params["alpha"]
    n = expansion.nvars
    big_g = (
        expansion.params["g1"] + expansion.params["g2"] + 2 + (2 / alpha) * (n - 1)
    )
    return partitions.rho(alpha, expansion.kappa) + k * big_g


def eval_at_zero(expansion):
    """Constant term (the coefficient of C of the empty partition)."""
    return expansion.coeffs.get((), 0)


def eval_at_scalar_identity(expansion, x, m):
    """Value at (x, x, ..., x) with m entries, by homogeneity of C_sigma."""
    if expansion.nvars is GENERIC or expansion.nvars != m:
        raise DomainError(
            "expansion was built for %r variables, not %d" % (expansion.nvars, m)
        )
    alpha = expansion.params["alpha"]
    total = 0
    for sigma, c in expansion.coeffs.items():
        s = partitions.weight(sigma)
        ident = jack.jack_identity_value(alpha, sigma, "C", Fraction(m))
        total = total + c * x**s * ident
    return total


def _eval_monomials_float(expr, point):
    from .symfun import _distinct_rearrangements

    total = 0.0
    for part, coeff in expr.terms.items():
        c = coeff.to_float() if isinstance(coeff, RationalFunction) else float(coeff)
        acc = 0.0
        for vec in _distinct_rearrangements(part, len(point)):
            term = 1.0
            for xval, e in zip(point, vec):
                if e:
                    term *= xval**e
            acc += term
        total += c * acc
    return total


def laguerre_hermite_limit_check(alpha, kappa, n, gamma_grid, xs):
    """Deviation of the scaled Laguerre polynomials from the Hermite limit.

    Evaluates gamma^(-k/2) L(gamma + sqrt(gamma) x) against (-1)^k H(x) at
    the point xs for each gamma on an increasing grid; returns the list of
    absolute deviations, which should decrease along the grid.
    """
    alpha = Fraction(alpha)
    kappa = partitions.as_partition(kappa)
    k = partitions.weight(kappa)
    xs = [float(x) for x in xs]
    if len(xs) != n:
        raise DomainError("point has %d coordinates, expected %d" % (len(xs), n))
    herm = hermite(alpha, kappa, n).to_monomials(alpha)
    target = (-1) ** k * _eval_monomials_float(herm, xs)
    deviations = []
    for gamma in gamma_grid:
        gamma = Fraction(gamma)
        lag = laguerre(alpha, kappa, gamma, n).to_monomials(alpha)
        root = float(gamma) ** 0.5
        point = [float(gamma) + root * x for x in xs]
        scaled = _eval_monomials_float(lag, point) / float(gamma) ** (k / 2.0)
        deviations.append(abs(scaled - target))
    return deviations
