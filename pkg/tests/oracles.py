"""Independent oracles used across the test suite.

These deliberately avoid the library's own algorithms: univariate
orthogonal polynomials come from exact moment Gram-Schmidt, generalized
binomial coefficients from the shifted-argument definition, Hermite
ensemble expectations from the two-variable rotation reduction, and
subpartition enumeration from brute force over tuples.
"""

import itertools
from fractions import Fraction

from mops import jack, m2jack
from mops.rational import GAMMA, G1, G2, rf
from mops.binom import sfact
from mops.symfun import SymExpr, _distinct_rearrangements


def brute_subpartitions(kappa):
    """All component-wise dominated non-increasing tuples, by enumeration."""
    if not kappa:
        return [()]
    ranges = [range(0, k + 1) for k in kappa]
    out = set()
    for tup in itertools.product(*ranges):
        if all(tup[i] >= tup[i + 1] for i in range(len(tup) - 1)):
            out.add(tuple(t for t in tup if t))
    return sorted(out)


def binomial_int(n, k):
    out = 1
    for t in range(k):
        out = out * (n - t) // (t + 1)
    return out


def monic_orthogonal(moments, degree):
    """Monic degree-d orthogonal polynomial from exact moments.

    Solves <p, x^j> = 0 for j < d by Gaussian elimination over the exact
    scalar field; returns the coefficient list [c_0, ..., c_{d-1}, 1].
    """
    d = degree
    if d == 0:
        return [1]
    rows = [[moments[i + j] for i in range(d)] + [-moments[d + j]] for j in range(d)]
    rows = [[rf(x) if isinstance(x, int) else x for x in row] for row in rows]
    for col in range(d):
        pivot = next(r for r in range(col, d) if rows[r][col] != 0)
        rows[col], rows[pivot] = rows[pivot], rows[col]
        inv = 1 / rows[col][col]
        rows[col] = [x * inv for x in rows[col]]
        for r in range(d):
            if r != col and rows[r][col] != 0:
                factor = rows[r][col]
                rows[r] = [x - factor * y for x, y in zip(rows[r], rows[col])]
    return [rows[j][d] for j in range(d)] + [1]


def hermite_moments(count):
    """(2j-1)!! for even j, 0 for odd."""
    out = []
    for j in range(count):
        if j % 2:
            out.append(rf(0))
        else:
            v = 1
            for t in range(1, j, 2):
                v *= t
            out.append(rf(v))
    return out


def laguerre_moments(count):
    return [rf(1)] + [sfact(GAMMA + 1, j) for j in range(1, count)]


def jacobi_moments(count):
    return [rf(1)] + [
        sfact(G1 + 1, j) / sfact(G1 + G2 + 2, j) for j in range(1, count)
    ]


def gbinomial_from_definition(alpha, kappa, sigma, m):
    """(kappa choose sigma) from the shifted-argument expansion of C_kappa.

    Expands C_kappa(x_1+1, ..., x_m+1) explicitly, rewrites it in the Jack
    C basis weight by weight, and normalizes by the identity values.
    """
    cexp = jack.jack_expand(alpha, kappa, "C", m)
    shifted = {}
    for part, coeff in cexp.terms.items():
        for vec in _distinct_rearrangements(part, m):
            choices = [
                [(t, binomial_int(e, t)) for t in range(e + 1)] for e in vec
            ]
            for combo in itertools.product(*choices):
                exps = tuple(t for t, _ in combo)
                mult = 1
                for _, b in combo:
                    mult *= b
                value = coeff * mult
                if exps in shifted:
                    shifted[exps] = shifted[exps] + value
                else:
                    shifted[exps] = value
    terms = {}
    for vec, coeff in shifted.items():
        if tuple(sorted(vec, reverse=True)) == vec:
            terms[tuple(e for e in vec if e)] = coeff
    mono = SymExpr("m", terms, m)
    in_c = m2jack(alpha, mono, m)
    c_sig = in_c.coefficient(sigma)
    if c_sig == 0:
        return c_sig
    ident_kappa = jack.jack_identity_value(alpha, kappa, "C", m)
    ident_sigma = jack.jack_identity_value(alpha, sigma, "C", m)
    return c_sig * ident_sigma / ident_kappa


def hermite_expect_2vars(mono_terms, alpha):
    """E over the 2-variable 2/alpha-Hermite ensemble of a monomial expr.

    Rotates to u = (x+y)/sqrt2, v = (x-y)/sqrt2, under which the weight
    factorizes into a Gaussian in u and an |v|^(2/alpha)-weighted Gaussian
    in v; both factors have exact moments.
    """

    def moment_u(p):
        if p % 2:
            return 0
        v = 1
        for t in range(1, p, 2):
            v *= t
        return v

    def moment_v(q):
        if q % 2:
            return 0
        out = alpha**0
        c = 2 / alpha
        for t in range(1, q, 2):
            out = out * (c + t)
        return out

    total = rf(0) * alpha
    for part, coeff in mono_terms.items():
        if len(part) > 2:
            continue
        weight = sum(part)
        if weight % 2:
            continue
        scale = Fraction(1, 2 ** (weight // 2))
        for vec in _distinct_rearrangements(part, 2):
            a_exp, b_exp = vec
            for i in range(a_exp + 1):
                bi = binomial_int(a_exp, i)
                for j in range(b_exp + 1):
                    bj = binomial_int(b_exp, j)
                    sign = -1 if j % 2 else 1
                    mu = moment_u(a_exp - i + b_exp - j)
                    if mu == 0:
                        continue
                    mv = moment_v(i + j)
                    if mv == 0:
                        continue
                    total = total + coeff * scale * sign * bi * bj * mu * mv
    return total
