"""Band structure, density scaling, rescaling similarity, and delta statistics.

The floor value floor(size/n) is constant on runs of consecutive nodes; those
runs ("bands") organize most of what the network does at scale: a prime's
degree and clustering depend only on its band, the count of bands grows like
2*sqrt(size), and band values recur when the network is rescaled to a
multiple of its size.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import analytic
from .numtheory import SieveTables, divisor_summatory


@dataclass(frozen=True)
class BandSummary:
    """One maximal run of nodes sharing a floor value.

    ``index`` is the shared floor(size/n); nodes lo..hi inclusive belong to
    the band. ``prime_degree`` and ``prime_clustering`` are the values any
    prime inside the band takes, whether or not one is present.
    """

    index: int
    lo: int
    hi: int
    prime_degree: int
    prime_clustering: Fraction


@dataclass(frozen=True)
class ScalingFit:
    """Least-squares fit of log link density against log size."""

    sizes: tuple[int, ...]
    densities: tuple[Fraction, ...]
    slope: float
    intercept: float
    residual: float


@dataclass(frozen=True)
class CensusTable:
    """Counts of consecutive divisor-count differences s(n) - s(n+1)."""

    limit: int
    counts: dict[int, int]

    def count(self, k: int) -> int:
        return self.counts.get(k, 0)


@dataclass(frozen=True)
class SymmetryStats:
    """Sign census of consecutive-node deltas over 1..limit-1."""

    limit: int
    measure: str
    count_zero: int
    count_pos: int
    count_neg: int
    mean: Fraction

    @property
    def imbalance(self) -> float:
        """|positive - negative| as a share of all consecutive pairs."""
        return abs(self.count_pos - self.count_neg) / (self.limit - 1)


def band_decomposition(size: int) -> list[BandSummary]:
    """All floor bands of the network on 1..size, ascending by node range.

    Standard floor-value enumeration: from any node n, the band holding n
    ends at floor(size / floor(size/n)). At most 2*sqrt(size) bands exist.
    """
    if size < 1:
        raise ValueError("network size must be >= 1")
    bands = []
    lo = 1
    while lo <= size:
        a = size // lo
        hi = size // a
        bands.append(
            BandSummary(
                index=a,
                lo=lo,
                hi=hi,
                prime_degree=a,
                prime_clustering=analytic.prime_clustering(a),
            )
        )
        lo = hi + 1
    return bands


def scaling_fit(sizes) -> ScalingFit:
    """Fit log link density vs log size by least squares.

    Needs at least three distinct sizes, each >= 2; duplicates are rejected
    as a degenerate design. Densities are computed exactly, the fit in
    float64.
    """
    sizes = tuple(int(s) for s in sizes)
    if len(sizes) < 3:
        raise ValueError("scaling fit needs at least 3 sizes")
    if len(set(sizes)) != len(sizes):
        raise ValueError("scaling fit sizes must be distinct")
    if any(s < 2 for s in sizes):
        raise ValueError("scaling fit sizes must be >= 2")
    densities = tuple(analytic.link_density(s) for s in sizes)
    x = np.log(np.array(sizes, dtype=np.float64))
    y = np.log(np.array([float(d) for d in densities]))
    (slope, intercept), residual, *_ = np.polyfit(x, y, 1, full=True)
    return ScalingFit(
        sizes=sizes,
        densities=densities,
        slope=float(slope),
        intercept=float(intercept),
        residual=float(residual[0]) if residual.size else 0.0,
    )


def _prime_band_values(size: int, measure: str, tables: SieveTables) -> dict[int, frozenset]:
    """Per band index, the set of measure values attained by primes in band."""
    nodes = np.arange(size + 1, dtype=np.int64)
    primes = np.flatnonzero(tables.spf[: size + 1] == nodes)
    primes = primes[primes >= 2]
    out: dict[int, frozenset] = {}
    for band in band_decomposition(size):
        at = int(np.searchsorted(primes, band.lo))
        present = at < primes.size and int(primes[at]) <= band.hi
        if not present:
            out[band.index] = frozenset()
        elif measure == "degree":
            out[band.index] = frozenset({band.prime_degree})
        else:
            out[band.index] = frozenset({band.prime_clustering})
    return out


def stretch_similarity(
    size_small: int, size_large: int, measure: str, tables: SieveTables
) -> float:
    """Share of the smaller network's bands whose prime values recur after rescaling.

    For each band index of the network on 1..size_small, compares the set of
    measure values attained by primes in that band against the same band
    index of the larger network (empty set when the index is unattained
    there). The score is the matching fraction, 1.0 for identical sizes.
    ``measure`` is "degree" or "clustering".
    """
    if measure not in ("degree", "clustering"):
        raise ValueError(f"unknown measure {measure!r}")
    if not 2 <= size_small <= size_large:
        raise ValueError("need 2 <= size_small <= size_large")
    if size_large > tables.limit:
        raise ValueError(f"size {size_large} beyond sieve limit {tables.limit}")
    small = _prime_band_values(size_small, measure, tables)
    large = _prime_band_values(size_large, measure, tables)
    matches = sum(
        1 for a, values in small.items() if large.get(a, frozenset()) == values
    )
    return matches / len(small)


def consecutive_divisor_census(size: int, tables: SieveTables) -> CensusTable:
    """Histogram of s(n) - s(n+1) over n in 1..size-1.

    The zero bucket counts consecutive integers with equal divisor counts,
    an infinite family; its count is non-decreasing in size.
    """
    if size < 2:
        raise ValueError("census needs size >= 2")
    if size > tables.limit:
        raise ValueError(f"size {size} beyond sieve limit {tables.limit}")
    diffs = tables.s[1:size] - tables.s[2 : size + 1]
    values, counts = np.unique(diffs, return_counts=True)
    table = {int(v): int(c) for v, c in zip(values, counts)}
    return CensusTable(limit=size, counts=table)


def delta_symmetry_stats(
    size: int, tables: SieveTables, measure: str = "clustering"
) -> SymmetryStats:
    """Sign census of consecutive deltas, plus their exact mean.

    measure "clustering" classifies c(n) - c(n+1); "divisor" classifies
    s(n) - s(n+1). The mean telescopes to (first - last) / (size - 1) and is
    computed that way, exactly.
    """
    if measure not in ("clustering", "divisor"):
        raise ValueError(f"unknown measure {measure!r}")
    if size < 2:
        raise ValueError("delta statistics need size >= 2")
    if size > tables.limit:
        raise ValueError(f"size {size} beyond sieve limit {tables.limit}")
    if measure == "divisor":
        diffs = tables.s[1:size] - tables.s[2 : size + 1]
        zero = int(np.count_nonzero(diffs == 0))
        pos = int(np.count_nonzero(diffs > 0))
        neg = int(np.count_nonzero(diffs < 0))
        mean = Fraction(int(tables.s[1]) - int(tables.s[size]), size - 1)
        return SymmetryStats(size, measure, zero, pos, neg, mean)

    s = tables.s
    d3 = tables.d3
    cache: dict[int, int] = {}

    def numerator_denominator(n: int) -> tuple[int, int]:
        m = size // n
        dm = cache.get(m)
        if dm is None:
            dm = divisor_summatory(m)
            cache[m] = dm
        s_n = int(s[n])
        deg = m + s_n - 2
        if deg < 2:
            return 0, 1
        links = int(d3[n]) - 2 * s_n + 1 + dm - 2 * m + 1 + (m - 1) * (s_n - 1)
        return links, deg * (deg - 1) // 2

    zero = pos = neg = 0
    prev_num, prev_den = numerator_denominator(1)
    for n in range(2, size + 1):
        num, den = numerator_denominator(n)
        # sign of prev/prev_den - num/den without building Fractions
        lhs = prev_num * den
        rhs = num * prev_den
        if lhs == rhs:
            zero += 1
        elif lhs > rhs:
            pos += 1
        else:
            neg += 1
        prev_num, prev_den = num, den
    first = analytic.clustering(1, size, tables).value
    last = analytic.clustering(size, size, tables).value
    mean = (first - last) / (size - 1)
    return SymmetryStats(size, measure, zero, pos, neg, mean)
