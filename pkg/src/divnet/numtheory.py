"""Multiplicative building blocks for divisibility-network analytics.

Everything downstream (closed-form degrees, clustering decompositions, band
structure) reduces to three sieved tables over 1..limit and one summatory
function:

* ``spf``  -- smallest prime factor, with ``spf[1] = 1`` as a sentinel so the
  factorization loop needs no special case for the empty product.
* ``s``    -- number of divisors.
* ``d3``   -- sum of ``s(m)`` over the divisors ``m`` of ``n`` (equivalently
  the number of ordered triples ``a*b*c = n``).
* ``divisor_summatory`` -- ``D(x) = sum_{j<=x} floor(x/j)``, evaluated in
  ``O(sqrt(x))`` by the hyperbola split.

All values are exact integers; the tables are immutable once built.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import backend


@dataclass(frozen=True, eq=False)
class SieveTables:
    """Immutable sieved tables over ``1..limit``.

    Index 0 of every array is unused padding so that index ``n`` refers to
    the integer ``n``. Arrays are int64 and write-protected.
    """

    limit: int
    spf: np.ndarray
    s: np.ndarray
    d3: np.ndarray

    def is_prime(self, n: int) -> bool:
        self._check_range(n)
        return n >= 2 and int(self.spf[n]) == n

    def _check_range(self, n: int) -> None:
        if not 1 <= n <= self.limit:
            raise ValueError(f"n={n} outside sieve range 1..{self.limit}")


@dataclass(frozen=True)
class FactoredInteger:
    """Prime factorization ``n = prod p_i**e_i`` with ascending primes."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def divisor_count(self) -> int:
        out = 1
        for _, e in self.factors:
            out *= e + 1
        return out


def build_sieve(limit: int) -> SieveTables:
    """Sieve smallest prime factors, divisor counts, and divisor-count sums.

    Parameters
    ----------
    limit : int
        Largest integer covered, at least 1.

    Returns
    -------
    SieveTables
        Tables with ``spf[1] = 1``, ``s[1] = 1``, ``d3[1] = 1``.

    Notes
    -----
    The divisor-count and divisor-count-sum tables are built by Dirichlet
    convolution passes (add ``1`` resp. ``s(d)`` at every multiple of ``d``),
    O(limit log limit) total. Values are exact; the backend kernel guards
    against int64 overflow by bounding ``limit``.
    """
    if limit < 1:
        raise ValueError("sieve limit must be >= 1")
    spf, s, d3 = backend.kernels.sieve_tables(limit)
    for arr in (spf, s, d3):
        arr.setflags(write=False)
    return SieveTables(limit=limit, spf=spf, s=s, d3=d3)


def factorize(n: int, tables: SieveTables) -> FactoredInteger:
    """Factor ``n`` by repeated division by its sieved smallest prime factor.

    ``factorize(1)`` returns the empty factorization.
    """
    tables._check_range(n)
    spf = tables.spf
    factors = []
    m = n
    while m > 1:
        p = int(spf[m])
        e = 0
        while m % p == 0:
            m //= p
            e += 1
        factors.append((p, e))
    return FactoredInteger(n=n, factors=tuple(factors))


def list_divisors(factored: FactoredInteger) -> list[int]:
    """All divisors of the factored integer, ascending. ``len == s(n)``."""
    divisors = [1]
    for p, e in factored.factors:
        pk = 1
        extended = list(divisors)
        for _ in range(e):
            pk *= p
            extended.extend(d * pk for d in divisors)
        divisors = extended
    return sorted(divisors)


def floor_div(numerator: int, n: int):
    """``floor(numerator / n)`` for positive integers.

    Kept as a named operation because the analytic layer leans on its band
    structure: as ``n`` sweeps ``1..numerator`` the value is non-increasing
    and takes at most ``2*floor(sqrt(numerator))`` distinct values.
    """
    if numerator < 1:
        raise ValueError("numerator must be a positive integer")
    if n < 1:
        raise ValueError("divisor must be a positive integer")
    return numerator // n


def divisor_summatory(x: int) -> int:
    """``D(x) = sum_{j=1..x} floor(x/j)`` via the hyperbola method.

    Runs in ``O(sqrt(x))``: pairs the divisor hyperbola's two symmetric
    halves, so ``D(x) = 2 * sum_{j<=sqrt(x)} floor(x/j) - floor(sqrt(x))**2``.
    Exact for any non-negative ``x`` (Python integers, no overflow).
    """
    if x < 0:
        raise ValueError("x must be non-negative")
    if x == 0:
        return 0
    r = math.isqrt(x)
    total = 0
    for j in range(1, r + 1):
        total += x // j
    return 2 * total - r * r
