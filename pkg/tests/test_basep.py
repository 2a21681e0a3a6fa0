import random
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fptkit import (
    DomainError,
    ExponentPair,
    candidate_set,
    canonical_pair,
    equal_by_truncation,
    format_rational,
    frac_orbit,
    is_exponent_pair,
    parse_rational,
    truncate,
)
from fptkit.basep import is_prime

F = Fraction

positive_fractions = st.fractions(min_value=F(1, 600), max_value=F(50), max_denominator=600)
small_primes = st.sampled_from([2, 3, 5, 7])


def brute_order(p: int, n: int) -> int:
    """Independent oracle: smallest s >= 1 with p^s = 1 mod n."""
    if n == 1:
        return 1
    s, x = 1, p % n
    while x != 1:
        x = x * p % n
        s += 1
    return s


class TestPrimality:
    def test_small(self):
        assert [q for q in range(2, 40) if is_prime(q)] == [
            2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37,
        ]

    def test_large(self):
        assert is_prime(2**61 - 1)
        assert not is_prime(2**61)

    def test_reject_composite_characteristic(self):
        with pytest.raises(DomainError):
            truncate(F(1, 2), 1, 4)


class TestTruncate:
    def test_examples(self):
        assert truncate(F(7, 12), 2, 5) == F(14, 25)
        assert truncate(F(1, 2), 0, 5) == 0
        assert truncate(F(1), 1, 2) == F(1, 2)

    def test_integral_scaling(self):
        lam = F(7, 12)
        for e in range(6):
            assert (5**e * truncate(lam, e, 5)).denominator == 1

    def test_rejects_nonpositive(self):
        with pytest.raises(DomainError):
            truncate(F(0), 1, 5)
        with pytest.raises(DomainError):
            truncate(F(-1, 2), 1, 5)

    @given(lam=positive_fractions, p=small_primes, e=st.integers(0, 8), e2=st.integers(0, 8))
    def test_monotone_convergence(self, lam, p, e, e2):
        lo, hi = sorted((e, e2))
        t_lo, t_hi = truncate(lam, lo, p), truncate(lam, hi, p)
        assert t_lo <= t_hi < lam
        assert lam - t_lo <= F(1, p**lo)

    @given(lam=positive_fractions, gam=positive_fractions, p=small_primes, e=st.integers(0, 8))
    def test_prefix_property(self, lam, gam, p, e):
        if truncate(lam, e, p) == truncate(gam, e, p):
            for s in range(e + 1):
                assert truncate(lam, s, p) == truncate(gam, s, p)


class TestCanonicalPair:
    def test_examples(self):
        assert canonical_pair(F(7, 12), 5) == ExponentPair(0, brute_order(5, 12))
        assert canonical_pair(F(7, 12), 5) == ExponentPair(0, 2)
        assert canonical_pair(F(3), 2) == ExponentPair(0, 1)
        assert canonical_pair(F(4, 5), 5) == ExponentPair(1, 1)
        assert (5**1 * (5**1 - 1) * F(4, 5)).denominator == 1

    @given(lam=positive_fractions, p=small_primes)
    def test_membership(self, lam, p):
        pair = canonical_pair(lam, p)
        assert is_exponent_pair(lam, pair, p)

    @given(lam=positive_fractions, p=small_primes, a=st.integers(0, 4), b=st.integers(1, 4))
    def test_generation(self, lam, p, a, b):
        u, v = canonical_pair(lam, p)
        assert is_exponent_pair(lam, ExponentPair(u + a, v * b), p)

    @given(lam=positive_fractions, p=small_primes)
    def test_minimality(self, lam, p):
        u, v = canonical_pair(lam, p)
        if u > 0:
            assert not is_exponent_pair(lam, ExponentPair(u - 1, v), p)
        for smaller_v in range(1, v):
            assert not is_exponent_pair(lam, ExponentPair(u, smaller_v), p)

    def test_invalid_pair_shape(self):
        with pytest.raises(DomainError):
            ExponentPair(0, 0)
        with pytest.raises(DomainError):
            ExponentPair(-1, 1)


class TestExponentPairMembership:
    def test_examples(self):
        assert is_exponent_pair(F(7, 12), ExponentPair(0, 2), 5)
        assert not is_exponent_pair(F(7, 12), ExponentPair(3, 1), 5)


class TestCandidateSet:
    def test_examples(self):
        assert candidate_set(2, 2, (F(0), F(1))).values == (F(0), F(1, 3), F(1, 2), F(2, 3))
        assert candidate_set(3, 1, (F(0), F(1))).values == (F(0), F(1, 2))
        assert candidate_set(5, 1, (F(0), F(1))).values == (F(0), F(1, 4), F(1, 2), F(3, 4))

    def test_window_slicing(self):
        full = candidate_set(2, 2, (F(0), F(1))).values
        upper = candidate_set(2, 2, (F(1, 2), F(1))).values
        assert upper == tuple(v for v in full if v >= F(1, 2))

    def test_membership_characterization(self):
        # exactly the rationals with a pair summing to <= B, plus 0
        cs = candidate_set(3, 2, (F(0), F(2)))
        for v in cs.values:
            if v > 0:
                u, vv = canonical_pair(v, 3)
                assert u + vv <= 2
        step = F(1, 3**2 * (3**2 - 1))
        probe = F(0)
        expected = set(cs.values)
        while probe < 2:
            if probe > 0:
                u, vv = canonical_pair(probe, 3)
                assert (probe in expected) == (u + vv <= 2)
            probe += step

    def test_rejects_bad_windows(self):
        with pytest.raises(DomainError):
            candidate_set(2, 2, (F(0), None))
        with pytest.raises(DomainError):
            candidate_set(2, 0, (F(0), F(1)))
        with pytest.raises(DomainError):
            candidate_set(2, 2, (F(-1), F(1)))

    @pytest.mark.parametrize("p", [2, 3, 5])
    @pytest.mark.parametrize("bound", [1, 2, 3])
    def test_gap_exhaustive(self, p, bound):
        values = candidate_set(p, bound, (F(0), F(1))).values
        floor = F(1, p ** (2 * bound))
        for i in range(len(values)):
            for j in range(i + 1, len(values)):
                assert values[j] - values[i] > floor

    def test_exclusion_interval(self):
        rng = random.Random(4)
        for _ in range(40):
            p = rng.choice([2, 3, 5])
            bound = rng.randint(1, 3)
            lam = F(rng.randint(1, 40), rng.randint(1, 40))
            u, v = canonical_pair(lam, p)
            s = u + v * bound
            left = truncate(lam, s, p)
            right = left + F(1, p**s)
            window = candidate_set(p, bound, (left, right + F(1, p**s)))
            for value in window.values:
                assert not (left < value < lam)
                assert not (lam < value <= right)


class TestFracOrbit:
    def test_examples(self):
        assert frac_orbit(F(7, 12), 2, 5) == [F(7, 12), F(11, 12)]
        assert frac_orbit(F(4, 5), 2, 5) == [F(4, 5), F(0)]
        assert frac_orbit(F(1, 2), 1, 5) == [F(1, 2)]

    def test_rejects_zero_count(self):
        with pytest.raises(DomainError):
            frac_orbit(F(1, 2), 0, 5)

    @given(lam=positive_fractions, p=small_primes)
    @settings(max_examples=150)
    def test_orbit_cardinality(self, lam, p):
        u, v = canonical_pair(lam, p)
        if u + v > 8:
            return
        orbit = frac_orbit(lam, u + v, p)
        assert all(0 <= x < 1 for x in orbit)
        assert len(set(orbit)) == u + v


class TestEqualByTruncation:
    def test_examples(self):
        pair = ExponentPair(0, 2)
        assert equal_by_truncation(F(7, 12), F(7, 12), pair, pair, 5)
        assert not equal_by_truncation(F(7, 12), F(11, 12), pair, pair, 5)
        assert not equal_by_truncation(
            F(4, 5), F(4, 5) + F(1, 5**9), ExponentPair(1, 1), ExponentPair(9, 1), 5
        )

    def test_rejects_wrong_pair(self):
        with pytest.raises(DomainError):
            equal_by_truncation(F(7, 12), F(7, 12), ExponentPair(0, 1), ExponentPair(0, 2), 5)

    @given(lam=positive_fractions, gam=positive_fractions, p=small_primes)
    @settings(max_examples=150)
    def test_agrees_with_equality(self, lam, gam, p):
        pl, pg = canonical_pair(lam, p), canonical_pair(gam, p)
        assert equal_by_truncation(lam, gam, pl, pg, p) == (lam == gam)


class TestRationalWire:
    def test_format(self):
        assert format_rational(F(7, 12)) == "7/12"
        assert format_rational(F(3)) == "3"

    def test_parse(self):
        assert parse_rational("7/12") == F(7, 12)
        assert parse_rational(" 3 ") == F(3)
        with pytest.raises(DomainError):
            parse_rational("-1/2")
        with pytest.raises(DomainError):
            parse_rational("junk")

    @given(q=st.fractions(min_value=0, max_value=100, max_denominator=997))
    def test_round_trip(self, q):
        assert parse_rational(format_rational(q)) == q
