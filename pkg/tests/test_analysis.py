import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import divnet
from conftest import brute_adjacency, brute_clustering, brute_divisors


class TestBandDecomposition:
    def test_ten_nodes(self):
        bands = divnet.band_decomposition(10)
        assert [(b.index, b.lo, b.hi) for b in bands] == [
            (10, 1, 1),
            (5, 2, 2),
            (3, 3, 3),
            (2, 4, 5),
            (1, 6, 10),
        ]

    def test_single_node(self):
        bands = divnet.band_decomposition(1)
        assert len(bands) == 1
        assert (bands[0].index, bands[0].lo, bands[0].hi) == (1, 1, 1)

    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            divnet.band_decomposition(0)

    @given(st.integers(min_value=1, max_value=30_000))
    @settings(max_examples=100, deadline=None)
    def test_partition_and_count(self, size):
        bands = divnet.band_decomposition(size)
        assert bands[0].lo == 1
        assert bands[-1].hi == size
        for prev, cur in zip(bands, bands[1:]):
            assert cur.lo == prev.hi + 1
            assert cur.index < prev.index
        for b in bands:
            assert size // b.lo == size // b.hi == b.index
            if b.hi < size:
                assert size // (b.hi + 1) < b.index
        assert len(bands) <= 2 * math.isqrt(size)

    def test_prime_values_match_analytic(self, tables_2000):
        for band in divnet.band_decomposition(2000):
            for p in range(band.lo, band.hi + 1):
                if not tables_2000.is_prime(p):
                    continue
                assert divnet.degree(p, 2000, tables_2000) == band.prime_degree
                assert (
                    divnet.clustering(p, 2000, tables_2000).value
                    == band.prime_clustering
                )

    def test_band_containment_under_doubling(self):
        # the node range of band a at size N sits inside band a at size 2N
        small = {b.index: (b.lo, b.hi) for b in divnet.band_decomposition(600)}
        large = {b.index: (b.lo, b.hi) for b in divnet.band_decomposition(1200)}
        shared = 0
        for a, (lo, hi) in small.items():
            if a in large:
                outer_lo, outer_hi = large[a]
                # rescaling doubles the node positions
                assert outer_lo <= 2 * lo and 2 * hi <= outer_hi, a
                shared += 1
        assert shared > 20


class TestScalingFit:
    def test_frozen_slope_over_doublings(self):
        fit = divnet.scaling_fit([2**k for k in range(8, 17)])
        assert fit.slope == pytest.approx(-0.862607089907, abs=1e-9)
        assert len(fit.densities) == 9

    def test_matches_independent_least_squares(self):
        sizes = [100, 200, 400, 800]
        fit = divnet.scaling_fit(sizes)
        xs = [math.log(s) for s in sizes]
        ys = [math.log(float(divnet.link_density(s))) for s in sizes]
        mx = sum(xs) / len(xs)
        my = sum(ys) / len(ys)
        slope = sum((x - mx) * (y - my) for x, y in zip(xs, ys)) / sum(
            (x - mx) ** 2 for x in xs
        )
        assert fit.slope == pytest.approx(slope, rel=1e-12)
        assert fit.intercept == pytest.approx(my - slope * mx, rel=1e-12)

    def test_densities_match_oracle_graphs(self):
        sizes = [64, 128, 256, 512]
        fit = divnet.scaling_fit(sizes)
        for size, density in zip(fit.sizes, fit.densities):
            assert density == divnet.link_density_oracle(divnet.build_graph(size))

    def test_rejects_degenerate_inputs(self):
        with pytest.raises(ValueError):
            divnet.scaling_fit([100, 200])
        with pytest.raises(ValueError):
            divnet.scaling_fit([100, 200, 200])
        with pytest.raises(ValueError):
            divnet.scaling_fit([1, 100, 200])


class TestStretchSimilarity:
    def test_identity_is_one(self, tables_10k):
        assert divnet.stretch_similarity(5000, 5000, "degree", tables_10k) == 1.0

    def test_frozen_doubling_score(self):
        tables = divnet.build_sieve(20_000)
        score = divnet.stretch_similarity(10_000, 20_000, "degree", tables)
        assert score == pytest.approx(136 / 199, abs=1e-12)
        # prime band values for clustering are a bijective image of the
        # degree values, so the matching bands are the same bands
        assert divnet.stretch_similarity(
            10_000, 20_000, "clustering", tables
        ) == pytest.approx(score, abs=1e-12)

    def test_matches_independent_recount(self, tables_2000):
        # recompute the score by hand at a doubling pair
        size_small, size_large = 1000, 2000
        primes = [p for p in range(2, 2001) if tables_2000.is_prime(p)]

        def attained(size):
            out = {}
            for band in divnet.band_decomposition(size):
                present = any(band.lo <= p <= band.hi for p in primes)
                out[band.index] = {band.index} if present else set()
            return out

        small, large = attained(size_small), attained(size_large)
        expected = sum(
            1 for a, vals in small.items() if large.get(a, set()) == vals
        ) / len(small)
        got = divnet.stretch_similarity(size_small, size_large, "degree", tables_2000)
        assert got == pytest.approx(expected, abs=1e-12)

    def test_first_ten_bands_match_under_doubling(self, tables_2000):
        # low-index bands are wide enough to always hold a prime
        small = divnet.band_decomposition(1000)
        large = {b.index: b for b in divnet.band_decomposition(2000)}
        for band in [b for b in small if b.index <= 10]:
            partner = large[band.index]
            assert partner.prime_degree == band.prime_degree
            assert partner.prime_clustering == band.prime_clustering

    def test_validation(self, tables_100):
        with pytest.raises(ValueError):
            divnet.stretch_similarity(50, 20, "degree", tables_100)
        with pytest.raises(ValueError):
            divnet.stretch_similarity(10, 50, "volume", tables_100)
        with pytest.raises(ValueError):
            divnet.stretch_similarity(10, 200, "degree", tables_100)


class TestConsecutiveDivisorCensus:
    def test_at_one_hundred(self, tables_100):
        table = divnet.consecutive_divisor_census(100, tables_100)
        diffs = [
            len(brute_divisors(n)) - len(brute_divisors(n + 1)) for n in range(1, 100)
        ]
        assert table.count(0) == diffs.count(0) == 15
        for k in range(min(diffs), max(diffs) + 1):
            assert table.count(k) == diffs.count(k)

    def test_known_members(self, tables_100):
        # equal divisor counts at (93,94), (94,95), (85,86), (86,87)
        for n in (93, 94, 85, 86):
            assert divnet.delta_divisor(n, tables_100) == 0
        # (82, 83) differs by exactly 2
        assert divnet.delta_divisor(82, tables_100) == 2
        assert divnet.consecutive_divisor_census(100, tables_100).count(2) >= 1

    def test_small_case_membership(self):
        tables = divnet.build_sieve(5)
        assert divnet.delta_divisor(3, tables) == -1
        assert divnet.consecutive_divisor_census(5, tables).count(-1) >= 1

    def test_counts_sum(self, tables_2000):
        table = divnet.consecutive_divisor_census(2000, tables_2000)
        assert sum(table.counts.values()) == 1999

    def test_zero_bucket_nondecreasing(self, tables_10k):
        counts = [
            divnet.consecutive_divisor_census(size, tables_10k).count(0)
            for size in (100, 1000, 10_000)
        ]
        assert counts == sorted(counts)


class TestDeltaSymmetryStats:
    def test_matches_brute_graph_signs(self):
        size = 100
        tables = divnet.build_sieve(size)
        adj = brute_adjacency(size)
        values = [brute_clustering(adj, n) for n in range(1, size + 1)]
        diffs = [a - b for a, b in zip(values, values[1:])]
        stats = divnet.delta_symmetry_stats(size, tables)
        assert stats.count_zero == sum(1 for d in diffs if d == 0)
        assert stats.count_pos == sum(1 for d in diffs if d > 0)
        assert stats.count_neg == sum(1 for d in diffs if d < 0)
        assert stats.mean == sum(diffs, Fraction(0)) / len(diffs)

    def test_mean_telescopes(self, tables_2000):
        stats = divnet.delta_symmetry_stats(2000, tables_2000)
        first = divnet.clustering(1, 2000, tables_2000).value
        last = divnet.clustering(2000, 2000, tables_2000).value
        assert stats.mean == (first - last) / 1999

    def test_signs_balance_at_ten_thousand(self, tables_10k):
        stats = divnet.delta_symmetry_stats(10_000, tables_10k)
        assert stats.count_zero + stats.count_pos + stats.count_neg == 9999
        assert stats.imbalance < 0.05

    def test_divisor_measure_matches_census(self, tables_10k):
        stats = divnet.delta_symmetry_stats(10_000, tables_10k, measure="divisor")
        census = divnet.consecutive_divisor_census(10_000, tables_10k)
        assert stats.count_zero == census.count(0)
        assert stats.count_pos == sum(c for k, c in census.counts.items() if k > 0)
        assert stats.mean == Fraction(
            1 - int(tables_10k.s[10_000]), 9999
        )

    def test_validation(self, tables_100):
        with pytest.raises(ValueError):
            divnet.delta_symmetry_stats(1, tables_100)
        with pytest.raises(ValueError):
            divnet.delta_symmetry_stats(50, tables_100, measure="unknown")
