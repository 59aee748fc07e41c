"""Closed-form measures for the divisibility network on 1..N.

The graph never gets built on this path. Every measure reduces to the sieved
divisor tables plus the divisor summatory function:

* degree of n:        floor(N/n) + s(n) - 2
* link density:       (D(N) - N) / C(N, 2)
* clustering of n:    a three-part count of edges among neighbors (edges
  among divisors, among multiples, and between the two sides) over C(k, 2)

Values are exact (int / fractions.Fraction); the brute-force route in
divnet.graph_oracle recomputes each one from an explicit graph so the two
can be cross-verified node by node.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .numtheory import SieveTables, divisor_summatory


@dataclass(frozen=True)
class ClusteringParts:
    """Clustering coefficient of one node with its edge-count decomposition.

    ``neighbor_links`` counts edges among the node's neighbors, split into
    edges joining two proper divisors, two proper multiples, or one of each.
    ``value`` is ``neighbor_links / C(degree, 2)``, zero by convention when
    the degree is below 2.
    """

    node: int
    degree: int
    divisor_links: int
    multiple_links: int
    cross_links: int
    neighbor_links: int
    value: Fraction


def _check_node(n: int, size: int, tables: SieveTables) -> None:
    if not 1 <= n <= size:
        raise ValueError(f"node {n} outside 1..{size}")
    if size < 1:
        raise ValueError("network size must be >= 1")
    if n > tables.limit:
        raise ValueError(f"node {n} beyond sieve limit {tables.limit}")


def degree(n: int, size: int, tables: SieveTables) -> int:
    """Closed-form degree of node ``n`` in the network on ``1..size``.

    Uniform across all nodes including 1: floor(size/1) + s(1) - 2 = size - 1.
    """
    _check_node(n, size, tables)
    return size // n + int(tables.s[n]) - 2


def degree_profile(size: int, tables: SieveTables) -> np.ndarray:
    """Degrees of every node, as an int64 array indexed by node (entry 0 unused)."""
    if size < 1:
        raise ValueError("network size must be >= 1")
    if size > tables.limit:
        raise ValueError(f"size {size} beyond sieve limit {tables.limit}")
    nodes = np.arange(1, size + 1, dtype=np.int64)
    out = np.zeros(size + 1, dtype=np.int64)
    out[1:] = size // nodes + tables.s[1 : size + 1] - 2
    return out


def link_density(size: int) -> Fraction:
    """Exact edge density: (D(size) - size) / C(size, 2)."""
    if size < 2:
        raise ValueError("link density needs at least 2 nodes")
    return Fraction(divisor_summatory(size) - size, size * (size - 1) // 2)


def link_density_from_summatory(size: int) -> Fraction:
    """Same density written as D(size)/C(size,2) - 2/(size-1).

    Kept as a distinct evaluation so the algebraic identity between the two
    published forms is testable rather than assumed.
    """
    if size < 2:
        raise ValueError("link density needs at least 2 nodes")
    half = size * (size - 1) // 2
    return Fraction(divisor_summatory(size), half) - Fraction(2, size - 1)


def clustering(n: int, size: int, tables: SieveTables) -> ClusteringParts:
    """Clustering coefficient of node ``n`` with its decomposition.

    Neighbors of ``n`` are its proper divisors plus its proper multiples.
    Edges among them come in three kinds, each countable in closed form:

    * divisor-divisor: both endpoints divide ``n``; count d3(n) - 2 s(n) + 1.
    * multiple-multiple: both are multiples ``i*n, j*n`` with ``i | j``;
      with m = floor(size/n) multiples available, count D(m) - 2 m + 1.
    * divisor-multiple: every proper divisor divides every proper multiple;
      count (m - 1)(s(n) - 1).
    """
    _check_node(n, size, tables)
    m = size // n
    s_n = int(tables.s[n])
    divisor_links = int(tables.d3[n]) - 2 * s_n + 1
    multiple_links = divisor_summatory(m) - 2 * m + 1
    cross_links = (m - 1) * (s_n - 1)
    neighbor_links = divisor_links + multiple_links + cross_links
    deg = m + s_n - 2
    if deg < 2:
        value = Fraction(0)
    else:
        value = Fraction(neighbor_links, deg * (deg - 1) // 2)
    return ClusteringParts(
        node=n,
        degree=deg,
        divisor_links=divisor_links,
        multiple_links=multiple_links,
        cross_links=cross_links,
        neighbor_links=neighbor_links,
        value=value,
    )


def clustering_profile(size: int, tables: SieveTables) -> list[Fraction]:
    """Clustering of every node, as a list indexed by node (entry 0 unused).

    The summatory values D(floor(size/n)) are cached per distinct floor
    value, of which there are at most 2*sqrt(size).
    """
    if size < 1:
        raise ValueError("network size must be >= 1")
    if size > tables.limit:
        raise ValueError(f"size {size} beyond sieve limit {tables.limit}")
    s = tables.s
    d3 = tables.d3
    summatory_cache: dict[int, int] = {}
    out = [Fraction(0)] * (size + 1)
    for n in range(1, size + 1):
        m = size // n
        dm = summatory_cache.get(m)
        if dm is None:
            dm = divisor_summatory(m)
            summatory_cache[m] = dm
        s_n = int(s[n])
        deg = m + s_n - 2
        if deg < 2:
            continue
        links = int(d3[n]) - 2 * s_n + 1 + dm - 2 * m + 1 + (m - 1) * (s_n - 1)
        out[n] = Fraction(links, deg * (deg - 1) // 2)
    return out


def prime_clustering(band_index: int) -> Fraction:
    """Clustering shared by every prime whose floor value is ``band_index``.

    A prime p with a = floor(size/p) has exactly its a - 1 proper multiples
    plus node 1 as neighbors, and the edges among those a nodes mirror the
    divisibility network on 1..a: (D(a) - a) / C(a, 2). Zero when a < 2
    (degree too small for a triangle).
    """
    if band_index < 1:
        raise ValueError("band index must be >= 1")
    if band_index == 1:
        return Fraction(0)
    return Fraction(
        divisor_summatory(band_index) - band_index,
        band_index * (band_index - 1) // 2,
    )


def delta_clustering(n: int, size: int, tables: SieveTables) -> Fraction:
    """Clustering difference between consecutive nodes, c(n) - c(n+1)."""
    if not 1 <= n < size:
        raise ValueError(f"need 1 <= n < size, got n={n}, size={size}")
    return clustering(n, size, tables).value - clustering(n + 1, size, tables).value


def _require_same_band(n: int, size: int) -> int:
    a = size // n
    if size // (n + 1) != a:
        raise ValueError(
            f"nodes {n} and {n + 1} sit in different floor bands of size {size}"
        )
    return a


def delta_clustering_in_band(n: int, size: int, tables: SieveTables) -> Fraction:
    """c(n) - c(n+1) for consecutive nodes sharing one floor band.

    Within a band both nodes see the same multiple count a = floor(size/n),
    so the multiple-multiple edge block D(a) - 2a + 1 and the band structure
    are shared; only the divisor-side terms move. Raises when n and n+1
    straddle a band boundary. Agrees exactly with the unrestricted
    difference, which is what the tests assert.
    """
    if not 1 <= n < size:
        raise ValueError(f"need 1 <= n < size, got n={n}, size={size}")
    a = _require_same_band(n, size)
    shared_block = divisor_summatory(a) - 2 * a + 1

    def banded_value(k: int) -> Fraction:
        s_k = int(tables.s[k])
        deg = a + s_k - 2
        if deg < 2:
            return Fraction(0)
        links = int(tables.d3[k]) - 2 * s_k + 1 + shared_block + (a - 1) * (s_k - 1)
        return Fraction(links, deg * (deg - 1) // 2)

    return banded_value(n) - banded_value(n + 1)


def delta_zero_predicate(n: int, size: int, tables: SieveTables) -> bool:
    """Sufficient condition for a zero in-band delta.

    When n and n+1 share a band and have equal divisor counts and equal
    divisor-count sums, every term of the clustering difference cancels.
    Raises when the pair crosses a band boundary.
    """
    if not 1 <= n < size:
        raise ValueError(f"need 1 <= n < size, got n={n}, size={size}")
    _require_same_band(n, size)
    return bool(
        tables.s[n] == tables.s[n + 1] and tables.d3[n] == tables.d3[n + 1]
    )


def delta_divisor(n: int, tables: SieveTables) -> int:
    """Divisor-count difference s(n) - s(n+1) between consecutive integers."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n + 1 > tables.limit:
        raise ValueError(f"n+1={n + 1} beyond sieve limit {tables.limit}")
    return int(tables.s[n]) - int(tables.s[n + 1])
