import math
from fractions import Fraction

import pytest

from mops import binom
from mops.errors import DomainError
from mops.partitions import is_subpartition, partitions_of, subpartitions_of, weight
from mops.rational import ALPHA, GAMMA, N, R

from oracles import gbinomial_from_definition

a = ALPHA


def test_sfact():
    assert binom.sfact(a, 0) == 1
    assert binom.sfact(a, 2) == a * (a + 1)
    assert binom.sfact(3, 3) == 60


def test_gsfact():
    assert binom.gsfact(a, a, (2,)) == a * (a + 1)
    assert binom.gsfact(a, a, (1, 1)) == a * (a - 1 / a)
    m_over = N / a
    expected = m_over * (m_over + 1) * (m_over - 1 / a)
    assert binom.gsfact(a, m_over, (2, 1)) == expected
    # symbolic r flows through (used by the Hermite limit formula)
    assert binom.gsfact(a, R + 1, (1,)) == R + 1


def test_gsfact_skew_matches_ratio():
    r = GAMMA + 2
    for kappa in [(3, 1), (2, 2), (4, 2, 1)]:
        for sigma in subpartitions_of(kappa):
            full = binom.gsfact(a, r, kappa)
            part = binom.gsfact(a, r, sigma)
            assert binom.gsfact_skew(a, r, kappa, sigma) * part == full


def test_mv_gamma():
    assert abs(binom.mv_gamma(1.0, 1.0, 1) - 1.0) < 1e-12
    assert abs(binom.mv_gamma(2.0, 1.5, 1) - math.sqrt(math.pi) / 2) < 1e-12
    # exponent of pi is m(m-1)/(2 alpha) = 1 here: Gamma(2) Gamma(1) pi
    assert abs(binom.mv_gamma(1.0, 2.0, 2) - math.pi) < 1e-12
    with pytest.raises(DomainError):
        binom.mv_gamma(1.0, 0.0, 1)


def test_contiguous_examples():
    assert binom.contiguous(a, (), 1) == 1
    assert binom.contiguous(a, (1,), 1) == 2  # univariate (2 choose 1)
    assert binom.contiguous(a, (1,), 2) == 2  # (kappa choose [1]) = |kappa|
    with pytest.raises(DomainError):
        binom.contiguous(a, (1, 1), 2)  # (1,2) is not a partition
    with pytest.raises(DomainError):
        binom.contiguous(a, (2, 2), 4)


def test_gbinomial_examples():
    assert binom.gbinomial(a, (3, 1), (3, 1)) == 1
    assert binom.gbinomial(a, (2, 1), (2, 2)) == 0
    assert binom.gbinomial(a, (2,), (1,)) == 2
    assert binom.gbinomial(a, (2,), ()) == 1


def test_choose_one_is_weight():
    for k in range(1, 9):
        for kap in partitions_of(k):
            assert binom.gbinomial(a, kap, (1,)) == k


def test_vanishing_iff_not_subpartition():
    for k in range(1, 7):
        for kap in partitions_of(k):
            subs = set(subpartitions_of(kap))
            for s in range(0, k + 1):
                for sig in partitions_of(s):
                    value = binom.gbinomial(a, kap, sig)
                    if sig in subs:
                        assert value != 0, (kap, sig)
                    else:
                        assert value == 0, (kap, sig)


def test_one_box_down_support():
    # for |sigma| = |kappa| - 1 the coefficient is nonzero exactly when
    # sigma is kappa with one part decremented
    for k in range(2, 7):
        for kap in partitions_of(k):
            downs = set()
            for i in range(len(kap)):
                lowered = list(kap)
                lowered[i] -= 1
                cand = tuple(p for p in lowered if p)
                if cand == tuple(sorted(cand, reverse=True)):
                    downs.add(cand)
            for sig in partitions_of(k - 1):
                value = binom.gbinomial(a, kap, sig)
                assert (value != 0) == (sig in downs and is_subpartition(sig, kap))


def test_definition_oracle_two_variable_counts():
    # the defining shifted-argument expansion, at m = l(kappa) and m = |kappa|
    for kap in [(2,), (1, 1), (2, 1), (3,), (2, 2), (3, 1), (2, 1, 1)]:
        for sig in subpartitions_of(kap):
            expected = binom.gbinomial(a, kap, sig)
            for m in {len(kap), weight(kap)}:
                assert gbinomial_from_definition(a, kap, sig, m) == expected


def test_normalization_independence():
    # recompute (kappa choose sigma) from J and P normalized expansions
    from mops import jack, m2jack
    from mops.symfun import SymExpr, _distinct_rearrangements
    import itertools

    from oracles import binomial_int

    def from_norm(norm, kappa, sigma, m):
        e = jack.jack_expand(a, kappa, norm, m)
        shifted = {}
        for part, coeff in e.terms.items():
            for vec in _distinct_rearrangements(part, m):
                choices = [[(t, binomial_int(x, t)) for t in range(x + 1)] for x in vec]
                for combo in itertools.product(*choices):
                    exps = tuple(t for t, _ in combo)
                    mult = 1
                    for _, b in combo:
                        mult *= b
                    shifted[exps] = shifted.get(exps, 0) + coeff * mult
        terms = {}
        for vec, coeff in shifted.items():
            if tuple(sorted(vec, reverse=True)) == vec:
                terms[tuple(x for x in vec if x)] = coeff
        in_c = m2jack(a, SymExpr("m", terms, m), m)
        # convert target back to the same normalization before reading off
        c_sig = in_c.coefficient(sigma) * jack.normalization_factor("C", norm, a, sigma)
        v_kappa = jack.jack_identity_value(a, kappa, norm, m)
        v_sigma = jack.jack_identity_value(a, sigma, norm, m)
        return c_sig * v_sigma / v_kappa

    for kap in [(2, 1), (3,), (2, 2)]:
        for sig in subpartitions_of(kap):
            expected = binom.gbinomial(a, kap, sig)
            m = weight(kap)
            assert from_norm("J", kap, sig, m) == expected
            assert from_norm("P", kap, sig, m) == expected


def test_gbinomial_rational_in_alpha_only():
    value = binom.gbinomial(a, (3, 2), (2, 1))
    assert value.free_parameters() in ((), ("a",))
    numeric = binom.gbinomial(Fraction(2), (3, 2), (2, 1))
    assert value.substitute({"a": 2}).to_fraction() == numeric
