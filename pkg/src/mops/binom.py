"""Shifted factorials, the multivariate Gamma function, and generalized
binomial coefficients.

The binomial coefficients (kappa choose sigma) are rational functions of
alpha alone (no variable count, no normalization).  They are produced a
whole table at a time: the contiguous coefficients (sigma+box choose
sigma) come from a hook-product formula, and the rest follow from the
recurrence  sum_i (sigma^(i) choose sigma)(kappa choose sigma^(i)) =
(k - s)(kappa choose sigma)  solved top-down from (kappa choose kappa)=1.
"""

import math
from fractions import Fraction

from . import cache, partitions
from .errors import DomainError
from .rational import RationalFunction


def sfact(r, k):
    """Shifted factorial r (r+1) ... (r+k-1); empty product is 1."""
    if k < 0:
        raise DomainError("sfact needs a non-negative integer order")
    out = 1
    for i in range(k):
        out = out * (r + i)
    return out


def gsfact(alpha, r, kappa):
    """Generalized Pochhammer symbol prod_i (r - (i-1)/alpha)_{kappa_i}."""
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    kappa = partitions.as_partition(kappa)
    out = 1
    for i0, part in enumerate(kappa):
        out = out * sfact(r - i0 / alpha, part)
    return out


def gsfact_skew(alpha, r, kappa, sigma):
    """Exact ratio (r)_kappa / (r)_sigma for sigma inside kappa."""
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    kappa = partitions.as_partition(kappa)
    sigma = partitions.as_partition(sigma)
    if not partitions.is_subpartition(sigma, kappa):
        raise DomainError("skew Pochhammer needs sigma inside kappa")
    out = 1
    for i0, part in enumerate(kappa):
        low = sigma[i0] if i0 < len(sigma) else 0
        base = r - i0 / alpha
        for j in range(low, part):
            out = out * (base + j)
    return out


def poch_ratio_rpoly(alpha, c0, kappa, sigma):
    """Coefficient list of (r + c0)_kappa / (r + c0)_sigma as a poly in r.

    r is a formal variable; the coefficients live in the scalar field of
    alpha and c0.  Index t holds the coefficient of r^t.
    """
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    kappa = partitions.as_partition(kappa)
    sigma = partitions.as_partition(sigma)
    if not partitions.is_subpartition(sigma, kappa):
        raise DomainError("ratio is polynomial only for sigma inside kappa")
    coeffs = [1]
    for i0, part in enumerate(kappa):
        low = sigma[i0] if i0 < len(sigma) else 0
        for j in range(low, part):
            const = c0 - i0 / alpha + j
            new = [0] * (len(coeffs) + 1)
            for t, c in enumerate(coeffs):
                new[t] = new[t] + c * const
                new[t + 1] = new[t + 1] + c
            coeffs = new
    return coeffs


def mv_gamma(alpha, a, m):
    """Multivariate Gamma: pi^(m(m-1)/(2 alpha)) prod Gamma(a - (i-1)/alpha)."""
    return math.exp(log_mv_gamma(alpha, a, m))


def log_mv_gamma(alpha, a, m):
    alpha = float(alpha)
    a = float(a)
    if m < 1:
        raise DomainError("mv_gamma needs m >= 1")
    total = m * (m - 1) / (2.0 * alpha) * math.log(math.pi)
    for i in range(1, m + 1):
        x = a - (i - 1) / alpha
        if x <= 0 and abs(x - round(x)) < 1e-12:
            raise DomainError("Gamma pole at a - (i-1)/alpha = %g" % x)
        total += math.lgamma(x)
    return total


def _row_increment(sigma, i):
    """sigma with row i (1-based) incremented, or None if not a partition."""
    sigma = partitions.as_partition(sigma)
    l = len(sigma)
    if i < 1 or i > l + 1:
        return None
    row = sigma[i - 1] if i <= l else 0
    if i >= 2 and (sigma[i - 2] if i - 2 < l else 0) < row + 1:
        return None
    out = list(sigma) + [0] * (i - l)
    out[i - 1] += 1
    return tuple(p for p in out if p)


_contiguous_cache = cache.register({})


def contiguous(alpha, sigma, i):
    """(sigma^(i) choose sigma), the one-box binomial coefficient.

    The product formula distinguishes squares lying in the column that
    receives the new box (column sigma_i + 1) from the rest.
    """
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    sigma = partitions.as_partition(sigma)
    key = (alpha, sigma, i)
    hit = _contiguous_cache.get(key)
    if hit is not None:
        return hit
    upper = _row_increment(sigma, i)
    if upper is None:
        raise DomainError("row %d of %r cannot be incremented" % (i, sigma))
    new_col = (sigma[i - 1] if i - 1 < len(sigma) else 0) + 1
    num = alpha**0
    for r0, part in enumerate(sigma):
        for c0 in range(part):
            on_column = c0 + 1 == new_col
            if on_column:
                num = num * partitions.upper_hook(alpha, sigma, r0 + 1, c0 + 1)
                num = num * partitions.lower_hook(alpha, upper, r0 + 1, c0 + 1)
            else:
                num = num * partitions.lower_hook(alpha, sigma, r0 + 1, c0 + 1)
                num = num * partitions.upper_hook(alpha, upper, r0 + 1, c0 + 1)
    j_sigma = partitions.hook_products(alpha, sigma)[2]
    value = num / j_sigma
    _contiguous_cache[key] = value
    return value


_gbinom_cache = cache.register({})


def gbinomial_table(alpha, kappa):
    """All (kappa choose sigma) for sigma inside kappa, keyed by sigma."""
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    kappa = partitions.as_partition(kappa)
    key = (alpha, kappa)
    hit = _gbinom_cache.get(key)
    if hit is not None:
        return hit
    k = partitions.weight(kappa)
    subs = partitions.subpartitions_of(kappa)
    sub_set = set(subs)
    by_weight = {}
    for sigma in subs:
        by_weight.setdefault(partitions.weight(sigma), []).append(sigma)
    one = alpha**0
    table = {kappa: one}
    for s in range(k - 1, -1, -1):
        for sigma in by_weight.get(s, ()):
            total = None
            for i in range(1, len(sigma) + 2):
                upper = _row_increment(sigma, i)
                if upper is None or upper not in sub_set:
                    continue
                up_val = table.get(upper)
                if up_val is None:
                    continue
                term = contiguous(alpha, sigma, i) * up_val
                total = term if total is None else total + term
            if total is not None:
                table[sigma] = total / (k - s)
    cache.enforce_budget()
    _gbinom_cache[key] = table
    return table


def gbinomial(alpha, kappa, sigma):
    """Generalized binomial coefficient; 0 when sigma is not inside kappa."""
    kappa = partitions.as_partition(kappa)
    sigma = partitions.as_partition(sigma)
    if not partitions.is_subpartition(sigma, kappa):
        if isinstance(alpha, RationalFunction):
            return alpha * 0
        return Fraction(0)
    return gbinomial_table(alpha, kappa)[sigma]
