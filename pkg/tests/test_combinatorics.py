import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turan_systems.combinatorics import (
    LogValue,
    binomial,
    enumerate_subsets,
    log_binomial,
    rank_colex,
    unrank_colex,
)


class TestBinomial:
    def test_small_values(self):
        assert binomial(4, 2) == 6
        assert binomial(7, 0) == 1
        assert binomial(52, 5) == 2598960

    def test_k_above_n_is_zero(self):
        assert binomial(3, 5) == 0

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            binomial(-1, 0)
        with pytest.raises(ValueError):
            binomial(3, -2)

    def test_pascal_identity(self):
        # Oracle: Pascal recurrence on the full n <= 30 triangle.
        for n in range(1, 31):
            for k in range(1, n + 1):
                assert binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k)


class TestLogBinomial:
    def test_forced_values(self):
        assert log_binomial(4, 2) == pytest.approx(math.log(6), rel=1e-12)
        assert log_binomial(17, 17) == 0.0
        assert log_binomial(9, 0) == 0.0

    def test_domain_error(self):
        with pytest.raises(ValueError):
            log_binomial(3, 4)

    def test_matches_exact_up_to_60(self):
        for n in range(0, 61):
            for k in range(0, n + 1):
                ratio = math.exp(log_binomial(n, k)) / binomial(n, k)
                assert abs(ratio - 1) <= 1e-9

    def test_lgamma_path_agrees_with_exact(self):
        # (200,100) fits the exact path; force the huge-n summation and compare.
        exact = math.log(binomial(200, 100))
        lgamma = (
            math.lgamma(201) - math.lgamma(101) - math.lgamma(101)
        )
        assert lgamma == pytest.approx(exact, rel=1e-12)
        # And the huge case is finite and sane: ln C(10^6, 10^3) ~ 10^3 ln 10^3.
        huge = log_binomial(10**6, 10**3)
        assert 6000 < huge < 8000


class TestColex:
    def test_first_and_last(self):
        assert unrank_colex(0, 2, 5) == (0, 1)
        assert unrank_colex(binomial(5, 2) - 1, 2, 5) == (3, 4)

    def test_roundtrip_exhaustive(self):
        for n in range(0, 17):
            for k in range(0, n + 1):
                for i in range(binomial(n, k)):
                    assert rank_colex(unrank_colex(i, k, n)) == i

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            unrank_colex(binomial(6, 3), 3, 6)

    @given(st.integers(1, 14), st.data())
    @settings(max_examples=100, deadline=None)
    def test_rank_monotone_in_colex(self, n, data):
        k = data.draw(st.integers(1, n))
        i = data.draw(st.integers(0, binomial(n, k) - 1))
        j = data.draw(st.integers(0, binomial(n, k) - 1))
        a, b = unrank_colex(i, k, n), unrank_colex(j, k, n)
        assert (i < j) == (tuple(reversed(a)) < tuple(reversed(b)))


class TestEnumerate:
    def test_complete_listing(self):
        assert list(enumerate_subsets(3, 2)) == [(0, 1), (0, 2), (1, 2)]

    def test_empty_set(self):
        assert list(enumerate_subsets(5, 0)) == [()]

    def test_count_12_choose_6(self):
        assert sum(1 for _ in enumerate_subsets(12, 6)) == 924

    def test_matches_unrank(self):
        for n, k in [(6, 3), (8, 2), (5, 5)]:
            assert list(enumerate_subsets(n, k)) == [
                unrank_colex(i, k, n) for i in range(binomial(n, k))
            ]

    def test_rank_slices_partition_the_stream(self):
        full = list(enumerate_subsets(9, 4))
        total = binomial(9, 4)
        cuts = [0, 17, 50, 100, total]
        pieces = []
        for a, b in zip(cuts, cuts[1:]):
            pieces.extend(enumerate_subsets(9, 4, start=a, stop=b))
        assert pieces == full


class TestLogValue:
    def test_multiplication_adds_logs(self):
        x = LogValue.from_int(6) * LogValue.from_int(7)
        assert x.log_magnitude == pytest.approx(math.log(42), rel=1e-12)

    def test_zero_absorbs(self):
        assert (LogValue.zero() * LogValue.from_int(5)).is_zero

    def test_comparisons(self):
        assert LogValue.zero() < LogValue.from_int(1) < LogValue.from_int(2)

    def test_conversion_monotone(self):
        values = [LogValue.from_int(v) for v in [1, 2, 10, 10**100]]
        assert values == sorted(values)
