"""Partitions, their orderings and diagram statistics.

A partition is a tuple of positive ints in non-increasing order; the empty
tuple is the partition of 0.  Trailing zeros are never stored, all
operations pad logically.  Squares of the diagram are addressed with
1-based (row, column) indices.
"""

from fractions import Fraction

from . import cache
from .errors import DomainError

LESS = "less"
EQUAL = "equal"
GREATER = "greater"
INCOMPARABLE = "incomparable"


def as_partition(parts):
    """Validate and canonicalize an iterable of parts into a tuple."""
    kappa = tuple(int(p) for p in parts)
    while kappa and kappa[-1] == 0:
        kappa = kappa[:-1]
    for i, p in enumerate(kappa):
        if p < 1:
            raise DomainError("partition parts must be positive: %r" % (parts,))
        if i and kappa[i - 1] < p:
            raise DomainError("partition parts must be non-increasing: %r" % (parts,))
    return kappa


def weight(kappa):
    return sum(kappa)


def partitions_of(k, max_part=None):
    """All partitions of k in strictly decreasing lexicographic order.

    Starts with [k] and ends with [1^k]; k = 0 yields the empty partition.
    ``max_part`` restricts the first (largest) part.
    """
    if k < 0:
        raise DomainError("cannot partition a negative integer: %d" % k)
    bound = k if max_part is None else min(max_part, k)
    result = []

    def descend(remaining, largest, prefix):
        if remaining == 0:
            result.append(tuple(prefix))
            return
        for part in range(min(largest, remaining), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, prefix)
            prefix.pop()

    descend(k, bound, [])
    return result


_subpar_cache = cache.register({})


def subpartitions_of(kappa):
    """All sigma with sigma_i <= kappa_i for every i, kappa included."""
    kappa = as_partition(kappa)
    hit = _subpar_cache.get(kappa)
    if hit is not None:
        return hit
    result = []

    def descend(i, prev, prefix):
        result.append(tuple(prefix))
        if i == len(kappa):
            return
        for part in range(1, min(kappa[i], prev) + 1):
            prefix.append(part)
            descend(i + 1, part, prefix)
            prefix.pop()

    descend(0, kappa[0] if kappa else 0, [])
    result.sort()
    _subpar_cache[kappa] = result
    return result


def is_subpartition(sigma, kappa):
    sigma = as_partition(sigma)
    kappa = as_partition(kappa)
    if len(sigma) > len(kappa):
        return False
    return all(s <= k for s, k in zip(sigma, kappa))


def compare(lam, kappa, order="lexicographic"):
    """Compare two partitions; returns one of less/equal/greater/incomparable.

    Lexicographic comparison is total.  Dominance compares prefix sums and
    is only defined for equal weights (unequal weights raise DomainError);
    it may return ``incomparable``.
    """
    lam = as_partition(lam)
    kappa = as_partition(kappa)
    if order == "lexicographic":
        if lam == kappa:
            return EQUAL
        return LESS if lam < kappa else GREATER
    if order != "dominance":
        raise DomainError("unknown order: %r" % (order,))
    if weight(lam) != weight(kappa):
        raise DomainError("dominance compares only equal-weight partitions")
    if lam == kappa:
        return EQUAL
    le = ge = True
    acc_l = acc_k = 0
    for i in range(max(len(lam), len(kappa))):
        acc_l += lam[i] if i < len(lam) else 0
        acc_k += kappa[i] if i < len(kappa) else 0
        if acc_l > acc_k:
            le = False
        if acc_l < acc_k:
            ge = False
    if le:
        return LESS
    if ge:
        return GREATER
    return INCOMPARABLE


def dominates(kappa, lam):
    """True iff kappa dominates lam (weakly), same weight required."""
    return compare(lam, kappa, "dominance") in (LESS, EQUAL)


def conjugate(kappa):
    kappa = as_partition(kappa)
    if not kappa:
        return ()
    cols = [0] * kappa[0]
    for part in kappa:
        for j in range(part):
            cols[j] += 1
    return tuple(cols)


def _check_square(kappa, i, j):
    if i < 1 or i > len(kappa) or j < 1 or j > kappa[i - 1]:
        raise DomainError("square (%d,%d) outside diagram of %r" % (i, j, kappa))


def arm(kappa, i, j):
    """Number of squares to the right of (i, j)."""
    kappa = as_partition(kappa)
    _check_square(kappa, i, j)
    return kappa[i - 1] - j


def leg(kappa, i, j):
    """Number of squares below (i, j)."""
    kappa = as_partition(kappa)
    _check_square(kappa, i, j)
    return sum(1 for r in range(i, len(kappa)) if kappa[r] >= j)


def upper_hook(alpha, kappa, i, j):
    """leg + alpha*(1 + arm) at the square (i, j)."""
    return leg(kappa, i, j) + alpha * (1 + arm(kappa, i, j))


def lower_hook(alpha, kappa, i, j):
    """leg + 1 + alpha*arm at the square (i, j)."""
    return leg(kappa, i, j) + 1 + alpha * arm(kappa, i, j)


_hook_cache = cache.register({})


def hook_products(alpha, kappa):
    """(c, c', j): products of upper hooks, lower hooks, and their product.

    Empty partition gives (1, 1, 1).
    """
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    kappa = as_partition(kappa)
    key = (alpha, kappa)
    hit = _hook_cache.get(key)
    if hit is not None:
        return hit
    conj = conjugate(kappa)
    c = 1
    cprime = 1
    for i0, part in enumerate(kappa):
        for j0 in range(part):
            a = part - j0 - 1
            l = conj[j0] - i0 - 1
            c = c * (l + alpha * (1 + a))
            cprime = cprime * (l + 1 + alpha * a)
    j = c * cprime
    value = (c, cprime, j)
    _hook_cache[key] = value
    return value


def rho(alpha, kappa):
    """sum_i kappa_i * (kappa_i - 1 - (2/alpha)(i-1))."""
    if isinstance(alpha, int):
        alpha = Fraction(alpha)
    kappa = as_partition(kappa)
    if isinstance(alpha, Fraction) and alpha == 0:
        raise DomainError("rho undefined at alpha = 0")
    two_over = 2 / alpha
    total = 0
    for i, part in enumerate(kappa):
        total = total + part * (part - 1) - two_over * (part * i)
    return total


def z_aut(lam):
    """z_lambda = prod over distinct part values v of mult! * v^mult."""
    lam = as_partition(lam)
    z = 1
    mult = {}
    for part in lam:
        mult[part] = mult.get(part, 0) + 1
    for v, m in mult.items():
        fact = 1
        for t in range(2, m + 1):
            fact *= t
        z *= fact * v**m
    return z


def serialize(kappa):
    """CLI form: comma-separated parts, empty string for the empty partition."""
    return ",".join(str(p) for p in kappa)


def deserialize(text):
    text = text.strip()
    if text in ("", "[]"):
        return ()
    text = text.strip("[]")
    return as_partition(int(p) for p in text.split(","))
