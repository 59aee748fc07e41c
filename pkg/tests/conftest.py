"""Shared fixtures and independent brute-force oracles.

The oracle helpers here are deliberately naive (trial division, O(N^2) pair
scans, literal shortest-path enumeration) and share no code with the
package, so test agreement means two unrelated computations concur.
"""

from fractions import Fraction

import pytest

import divnet


@pytest.fixture(scope="session")
def tables_100():
    return divnet.build_sieve(100)


@pytest.fixture(scope="session")
def tables_2000():
    return divnet.build_sieve(2000)


@pytest.fixture(scope="session")
def tables_10k():
    return divnet.build_sieve(10_000)


@pytest.fixture(scope="session")
def graph_100():
    return divnet.build_graph(100)


def brute_edges(size):
    """All divisibility edges by trial division, as a set of (i, j), i < j."""
    return {
        (i, j)
        for i in range(1, size + 1)
        for j in range(i + 1, size + 1)
        if j % i == 0
    }


def brute_adjacency(size):
    adj = {n: set() for n in range(1, size + 1)}
    for i, j in brute_edges(size):
        adj[i].add(j)
        adj[j].add(i)
    return adj


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_clustering(adj, n):
    nb = sorted(adj[n])
    k = len(nb)
    if k < 2:
        return Fraction(0)
    links = sum(
        1
        for x in range(k)
        for y in range(x + 1, k)
        if nb[y] in adj[nb[x]]
    )
    return Fraction(links, k * (k - 1) // 2)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """Echo the acceptance criterion lines after the usual summary."""
    try:
        from test_acceptance import CRITERION_LINES
    except ImportError:
        return
    if CRITERION_LINES:
        terminalreporter.write_sep("=", "acceptance criteria")
        for line in sorted(CRITERION_LINES):
            terminalreporter.write_line(line)


def brute_betweenness(adj):
    """Exact betweenness by literal shortest-path enumeration.

    For every ordered pair (s, t), finds d(s, t) by BFS, enumerates every
    shortest path, and credits each interior node its share. Normalized by
    (n-1)(n-2). Exponential in the worst case; only for tiny graphs.
    """
    nodes = sorted(adj)
    size = len(nodes)
    score = {n: Fraction(0) for n in nodes}

    def all_shortest_paths(s, t):
        dist = {s: 0}
        frontier = [s]
        while frontier and t not in dist:
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if w not in dist:
                        dist[w] = dist[v] + 1
                        nxt.append(w)
            frontier = nxt
        if t not in dist:
            return []
        paths = []

        def walk(v, acc):
            if v == s:
                paths.append(acc)
                return
            for u in adj[v]:
                if dist.get(u, -1) == dist[v] - 1:
                    walk(u, acc + [u])

        walk(t, [t])
        return paths

    for s in nodes:
        for t in nodes:
            if s == t:
                continue
            paths = all_shortest_paths(s, t)
            if not paths:
                continue
            share = Fraction(1, len(paths))
            for path in paths:
                for v in path[1:-1]:
                    score[v] += share
    norm = Fraction(1, (size - 1) * (size - 2))
    return {n: score[n] * norm for n in nodes}
