"""Hypergeometric functions of matrix argument and eigenvalue statistics.

The series  pFq(a; b; x) = sum_k sum_{kappa of k, l(kappa) <= m}
prod (a_i)_kappa / (k! prod (b_j)_kappa) C_kappa(x)  is summed layer by
layer in total degree.  A negative-integer upper parameter truncates the
partition widths and the series terminates; otherwise an explicit degree
limit or a relative tolerance must be supplied (and p >= q+2 is refused
without a limit).  Scalar-identity arguments x I_m use the closed form of
C_kappa at the identity, so no monomial expansions are built.
"""

import math
from fractions import Fraction

from scipy import integrate

from . import binom, jack, orthopoly, partitions
from .errors import ConvergenceError, DomainError, PoleError
from .rational import RationalFunction
from .symfun import eval_numeric

DEGREE_CAP = 400


def _negative_integer_bound(values):
    """Smallest p with some upper parameter equal to -p, else None."""
    best = None
    for v in values:
        if isinstance(v, RationalFunction):
            if not v.is_constant:
                continue
            v = v.to_fraction()
        if isinstance(v, int):
            v = Fraction(v)
        if isinstance(v, Fraction) and v <= -1 and v.denominator == 1:
            p = -int(v)
            best = p if best is None else min(best, p)
    return best


def _layer_partitions(k, m, width=None):
    for kappa in partitions.partitions_of(k, max_part=width):
        if len(kappa) <= m:
            yield kappa


def classify(upper, lower):
    """Convergence class of pFq: terminating, entire, boundary or divergent.

    'boundary' is the p = q+1 case with a finite convergence radius;
    'divergent' (p >= q+2, no negative-integer upper parameter) only
    admits explicit truncation.
    """
    if _negative_integer_bound(upper) is not None:
        return "terminating"
    p, q = len(upper), len(lower)
    if p <= q:
        return "entire"
    if p == q + 1:
        return "boundary"
    return "divergent"


def ghypergeom(alpha, upper, lower, arg, limit=None, tol=None):
    """Evaluate pFq of matrix argument.

    arg is ('xid', x, m) for the scalar-identity point x I_m (x may be a
    number or a rational function, kept exact), or ('vec', xs) for an
    explicit numeric point.  Exactly one of termination, limit, or tol
    must make the sum finite.
    """
    alpha = jack._as_alpha(alpha)
    upper = list(upper)
    lower = list(lower)
    kind, payload = arg[0], arg[1:]
    if kind == "xid":
        x, m = payload
        if isinstance(x, int):
            x = Fraction(x)
    elif kind == "vec":
        (xs,) = payload
        xs = list(xs)
        m = len(xs)
        # a numeric point needs fully numeric parameters
        norm = []
        for v in upper + lower + [alpha]:
            if isinstance(v, RationalFunction):
                if not v.is_constant:
                    raise DomainError(
                        "numeric-point evaluation needs numeric parameters, got %s"
                        % v.text()
                    )
                v = v.to_fraction()
            norm.append(v)
        upper = norm[: len(upper)]
        lower = norm[len(upper) : len(upper) + len(lower)]
        alpha = norm[-1]
    else:
        raise DomainError("argument must be ('xid', x, m) or ('vec', xs)")
    if m < 0:
        raise DomainError("negative variable count")
    width = _negative_integer_bound(upper)
    terminating = width is not None
    if terminating:
        max_degree = width * m
        if limit is not None:
            max_degree = min(max_degree, limit)
    elif limit is not None:
        max_degree = limit
    elif tol is not None:
        if len(upper) >= len(lower) + 2:
            raise DomainError(
                "series with p >= q+2 diverges; give an explicit degree limit"
            )
        max_degree = DEGREE_CAP
    else:
        raise DomainError("non-terminating series needs a degree limit or tolerance")

    total = None
    for k in range(0, max_degree + 1):
        layer = None
        fact = math.factorial(k)
        for kappa in _layer_partitions(k, m, width):
            coeff = (alpha**0) / fact
            for a_i in upper:
                coeff = coeff * binom.gsfact(alpha, a_i, kappa)
            for b_j in lower:
                denom = binom.gsfact(alpha, b_j, kappa)
                if denom == 0:
                    raise PoleError(
                        "lower parameter %s hits a pole at kappa=%r" % (b_j, kappa)
                    )
                coeff = coeff / denom
            if kind == "xid":
                value = coeff * jack.jack_identity_value(alpha, kappa, "C", m) * x**k
            else:
                cexp = jack.jack_expand(alpha, kappa, "C", m)
                value = coeff * eval_numeric(cexp, xs)
            layer = value if layer is None else layer + value
        if layer is None:
            continue
        total = layer if total is None else total + layer
        if tol is not None and k > 0:
            if abs(float(layer)) <= tol * max(abs(float(total)), 1e-300):
                return total
    if tol is not None and not terminating and limit is None:
        raise ConvergenceError(
            "series did not reach tolerance %g by degree %d" % (tol, max_degree),
            partial=total,
        )
    return total if total is not None else 0


# ---------------------------------------------------------------------------
# smallest eigenvalue of the 2/alpha-Laguerre ensemble


def smallest_eig_terms(alpha, p, m):
    """Exact coefficients c_k of the terminating 2F0 factor.

    The density is x^(p m) exp(-x m / 2) sum_k c_k (-2/x)^k with
    c_k = sum over kappa of k inside the p x (m-1) box of
    (-p)_kappa (m/alpha + 1)_kappa C_kappa(I_{m-1}) / k!.
    """
    alpha = Fraction(alpha)
    if not (isinstance(p, int) and p >= 1):
        raise DomainError("smallest-eigenvalue density needs integer p >= 1")
    if m < 1:
        raise DomainError("need m >= 1")
    a1 = Fraction(-p)
    a2 = Fraction(m) / alpha + 1
    terms = []
    for k in range(0, p * (m - 1) + 1):
        fact = math.factorial(k)
        c_k = Fraction(0)
        for kappa in _layer_partitions(k, m - 1, width=p):
            c_k += (
                binom.gsfact(alpha, a1, kappa)
                * binom.gsfact(alpha, a2, kappa)
                * jack.jack_identity_value(alpha, kappa, "C", m - 1)
                / fact
            )
        terms.append(c_k)
    return terms


def smallest_eig_density(alpha, p, m, x, _terms=None):
    """Unnormalized smallest-eigenvalue density at x > 0."""
    if x <= 0:
        raise DomainError("density is supported on x > 0")
    terms = smallest_eig_terms(alpha, p, m) if _terms is None else _terms
    x = float(x)
    f = 0.0
    u = 1.0
    for c in terms:
        f += float(c) * u
        u *= -2.0 / x
    return x ** (p * m) * math.exp(-x * m / 2.0) * f


def smallest_eig_mass(alpha, p, m):
    """Total mass of the unnormalized density, by adaptive quadrature."""
    terms = smallest_eig_terms(alpha, p, m)
    mass, err = integrate.quad(
        lambda t: smallest_eig_density(alpha, p, m, t, _terms=terms),
        0.0,
        math.inf,
        epsabs=1e-10,
        epsrel=1e-12,
        limit=200,
    )
    return mass, err, terms


def smallest_eig_density_normalized(alpha, p, m, xs):
    """Normalized density on a grid; returns (values, mass_used)."""
    mass, _, terms = smallest_eig_mass(alpha, p, m)
    values = [
        smallest_eig_density(alpha, p, m, x, _terms=terms) / mass if x > 0 else 0.0
        for x in xs
    ]
    return values, mass


# ---------------------------------------------------------------------------
# largest eigenvalue distribution


def largest_eig_cdf(alpha, gamma, m, x, tol=1e-10):
    """P[largest eigenvalue < x] for the 2/alpha-Laguerre ensemble."""
    alpha = Fraction(alpha)
    gamma = Fraction(gamma)
    if x <= 0:
        return 0.0
    if gamma <= -1:
        raise DomainError("gamma must be > -1")
    a1 = gamma + Fraction(m - 1) / alpha + 1
    b1 = gamma + 2 * Fraction(m - 1) / alpha + 2
    log_pref = binom.log_mv_gamma(alpha, Fraction(m - 1) / alpha + 1, m)
    log_pref -= binom.log_mv_gamma(alpha, b1, m)
    log_pref += float(m * a1) * math.log(x / 2.0)
    # 1F1 layer coefficients are exact; the argument enters as (-x/2)^k
    total = 0.0
    u = 1.0
    converged = False
    small_run = 0
    for k in range(0, DEGREE_CAP + 1):
        fact = math.factorial(k)
        c_k = Fraction(0)
        for kappa in _layer_partitions(k, m):
            c_k += (
                binom.gsfact(alpha, a1, kappa)
                / binom.gsfact(alpha, b1, kappa)
                * jack.jack_identity_value(alpha, kappa, "C", m)
                / fact
            )
        layer = float(c_k) * u
        total += layer
        u *= -x / 2.0
        if abs(layer) <= tol * max(abs(total), 1e-300):
            small_run += 1
            if k > 2 and small_run >= 3:
                converged = True
                break
        else:
            small_run = 0
    value = math.exp(log_pref) * total
    if not converged:
        raise ConvergenceError(
            "1F1 did not reach tolerance %g by degree %d" % (tol, DEGREE_CAP),
            partial=min(max(value, 0.0), 1.0),
        )
    return min(max(value, 0.0), 1.0)


# ---------------------------------------------------------------------------
# level density of the 2/alpha-Hermite ensemble


def level_density_polynomial(beta, n):
    """Exact even polynomial factor of the level density.

    Returns coefficients q[0..k] (odd slots zero) with
    rho(x) = exp(-x^2/2) / sqrt(2 pi) * sum_s q[s] x^s,
    normalized so the density has total mass 1 (one eigenvalue).
    """
    if not (isinstance(beta, int) and beta >= 2 and beta % 2 == 0):
        raise DomainError("level density needs an even integer beta >= 2")
    if n < 1:
        raise DomainError("need n >= 1")
    alpha = Fraction(2, beta)
    kappa = (beta,) * (n - 1)
    k = beta * (n - 1)
    h = orthopoly.hermite2(alpha, kappa, n)
    ck_ident = jack.jack_identity_value(alpha, kappa, "C", n)
    gamma_ratio = Fraction(
        math.factorial(beta // 2), math.factorial(n * beta // 2)
    )
    coeffs = [Fraction(0)] * (k + 1)
    for sigma, c in h.coeffs.items():
        s = partitions.weight(sigma)
        sign = -1 if ((k - s) // 2) % 2 else 1
        ident = jack.jack_identity_value(alpha, sigma, "C", n)
        coeffs[s] += sign * c * ident / ck_ident
    return [gamma_ratio * q for q in coeffs]


def level_density(beta, n, x, _coeffs=None):
    """Marginal density of one eigenvalue of the n x n ensemble at x."""
    coeffs = level_density_polynomial(beta, n) if _coeffs is None else _coeffs
    x = float(x)
    poly = 0.0
    for s in range(len(coeffs) - 1, -1, -1):
        poly = poly * x + float(coeffs[s])
    return math.exp(-x * x / 2.0) / math.sqrt(2.0 * math.pi) * poly


def level_density_scaled(beta, n, x, _coeffs=None):
    """Density rescaled by sqrt(2 n beta), keeping the spectrum near [-1,1]."""
    c = math.sqrt(2.0 * n * beta)
    return c * level_density(beta, n, c * x, _coeffs=_coeffs)


def level_density_scaled_polynomial(beta, n):
    """Exact coefficients of the scaled density's polynomial factor.

    The scaled density is sqrt(2 n beta) / sqrt(2 pi) *
    exp(-(n beta) x^2) * sum_t P[2t] x^(2t) with P[2t] =
    q[2t] * (2 n beta)^t; these come out as exact rationals (integers for
    the ensembles of interest).
    """
    coeffs = level_density_polynomial(beta, n)
    scale = 2 * n * beta
    return [coeffs[s] * Fraction(scale) ** (s // 2) if s % 2 == 0 else Fraction(0) for s in range(len(coeffs))]
