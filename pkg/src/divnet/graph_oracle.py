"""Brute-force route: measures recomputed from an explicit graph.

Everything here works from stored adjacency, never from divisor formulas, so
agreement with divnet.analytic is evidence rather than tautology. Adjacency
stays sparse (CSR) throughout; a dense matrix is never materialized.

Betweenness comes in two independent flavors:

* ``betweenness_matrix*`` scans non-adjacent pairs and splits each pair's
  unit of flow across its common neighbors. Valid because the network has
  diameter at most 2 (node 1 is adjacent to everything), where every
  shortest s-t path is s-v-t through a common neighbor v.
* ``betweenness_brandes`` counts shortest paths by BFS and makes no
  diameter assumption.

Both normalize by the (size-1)(size-2) ordered pair count, so a star center
scores exactly 1.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from . import backend


@dataclass(frozen=True, eq=False)
class DivisibilityGraph:
    """Undirected divisibility network on nodes 1..size, CSR adjacency.

    Neighbor lists are sorted ascending; each edge is stored in both
    directions. Index 0 of indptr bookkeeping is unused padding.
    """

    size: int
    indptr: np.ndarray
    indices: np.ndarray

    def neighbors(self, n: int) -> np.ndarray:
        self._check(n)
        return self.indices[self.indptr[n] : self.indptr[n + 1]]

    def has_edge(self, a: int, b: int) -> bool:
        self._check(a)
        self._check(b)
        nb = self.neighbors(a)
        pos = int(np.searchsorted(nb, b))
        return pos < nb.size and int(nb[pos]) == b

    @property
    def edge_count(self) -> int:
        return int(self.indices.size) // 2

    def _check(self, n: int) -> None:
        if not 1 <= n <= self.size:
            raise ValueError(f"node {n} outside 1..{self.size}")


def build_graph(size: int) -> DivisibilityGraph:
    """Materialize the network on 1..size: i ~ j iff i != j and i | j or j | i."""
    if size < 1:
        raise ValueError("graph size must be >= 1")
    indptr, indices = backend.kernels.divisibility_csr(size)
    indptr.setflags(write=False)
    indices.setflags(write=False)
    return DivisibilityGraph(size=size, indptr=indptr, indices=indices)


def degree_oracle(graph: DivisibilityGraph, n: int) -> int:
    return int(graph.neighbors(n).size)


def degree_profile_oracle(graph: DivisibilityGraph) -> np.ndarray:
    """Stored-adjacency degrees, int64 array indexed by node (entry 0 unused)."""
    return (graph.indptr[1:] - graph.indptr[:-1]).astype(np.int64)


def link_density_oracle(graph: DivisibilityGraph) -> Fraction:
    """Counted edges over C(size, 2), exact."""
    if graph.size < 2:
        raise ValueError("link density needs at least 2 nodes")
    return Fraction(graph.edge_count, graph.size * (graph.size - 1) // 2)


def common_neighbor_count(graph: DivisibilityGraph, a: int, b: int) -> int:
    """|N(a) ∩ N(b)|. At least 1 for distinct non-adjacent nodes: node 1
    neighbors everything, so the network has diameter <= 2."""
    if a == b:
        raise ValueError("nodes must be distinct")
    return int(np.intersect1d(graph.neighbors(a), graph.neighbors(b)).size)


def clustering_oracle(graph: DivisibilityGraph, n: int) -> Fraction:
    """Clustering of one node by counting edges among its stored neighbors."""
    nb = graph.neighbors(n)
    k = int(nb.size)
    if k < 2:
        return Fraction(0)
    # each edge inside the neighborhood is seen from both endpoints
    twice = 0
    for u in nb:
        twice += int(np.intersect1d(graph.neighbors(int(u)), nb).size)
    return Fraction(twice // 2, k * (k - 1) // 2)


def clustering_profile_oracle(graph: DivisibilityGraph) -> list[Fraction]:
    """Clustering of every node, list indexed by node (entry 0 unused)."""
    links = backend.kernels.triangle_edge_counts(graph.indptr, graph.indices)
    degrees = degree_profile_oracle(graph)
    out = [Fraction(0)] * (graph.size + 1)
    for n in range(1, graph.size + 1):
        k = int(degrees[n])
        if k >= 2:
            out[n] = Fraction(int(links[n]), k * (k - 1) // 2)
    return out


def _neighbor_sets(graph: DivisibilityGraph) -> list[set]:
    sets: list[set] = [set()]
    for n in range(1, graph.size + 1):
        sets.append(set(graph.neighbors(n).tolist()))
    return sets


def betweenness_matrix(graph: DivisibilityGraph, n: int) -> Fraction:
    """Exact betweenness of one node via the common-neighbor pair scan.

    Only pairs drawn from N(n) can route flow through n, so the scan runs
    over that neighborhood; cost grows with degree(n) squared.
    """
    if graph.size < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    nb = graph.neighbors(n).tolist()
    lookup = {v: set(graph.neighbors(v).tolist()) for v in nb}
    total = Fraction(0)
    for i, a in enumerate(nb):
        set_a = lookup[a]
        for b in nb[i + 1 :]:
            if b in set_a:
                continue
            total += Fraction(2, len(set_a & lookup[b]))
    return total / ((graph.size - 1) * (graph.size - 2))


def betweenness_matrix_profile(graph: DivisibilityGraph, exact: bool = False):
    """Pair-scan betweenness for every node.

    Float64 array from the kernel backend by default; with ``exact=True`` a
    pure rational scan returns a list of Fractions (slow, meant for sizes in
    the hundreds).
    """
    if graph.size < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    if not exact:
        return backend.kernels.betweenness_pair_scan(graph.indptr, graph.indices)
    sets = _neighbor_sets(graph)
    score = [Fraction(0)] * (graph.size + 1)
    for a in range(1, graph.size):
        set_a = sets[a]
        for b in range(a + 1, graph.size + 1):
            if b in set_a:
                continue
            common = set_a & sets[b]
            if not common:
                continue
            share = Fraction(2, len(common))
            for v in common:
                score[v] += share
    norm = Fraction(1, (graph.size - 1) * (graph.size - 2))
    return [x * norm for x in score]


def betweenness_brandes(graph: DivisibilityGraph, exact: bool | None = None):
    """Shortest-path betweenness by Brandes' BFS accumulation.

    ``exact=None`` picks rationals for sizes up to 2000 and float64 above;
    pass an explicit flag to override. Exact mode returns a list of
    Fractions, float mode a float64 array.
    """
    size = graph.size
    if size < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    if exact is None:
        exact = size <= 2000
    if not exact:
        return backend.kernels.brandes_betweenness(graph.indptr, graph.indices)
    adj = [graph.neighbors(n).tolist() if n else [] for n in range(size + 1)]
    score = [Fraction(0)] * (size + 1)
    for src in range(1, size + 1):
        dist = [-1] * (size + 1)
        sigma = [0] * (size + 1)
        order = []
        dist[src] = 0
        sigma[src] = 1
        queue = deque([src])
        while queue:
            v = queue.popleft()
            order.append(v)
            dv = dist[v]
            for w in adj[v]:
                if dist[w] < 0:
                    dist[w] = dv + 1
                    queue.append(w)
                if dist[w] == dv + 1:
                    sigma[w] += sigma[v]
        delta = [Fraction(0)] * (size + 1)
        for w in reversed(order[1:]):
            coeff = (1 + delta[w]) / sigma[w]
            dw = dist[w]
            for v in adj[w]:
                if dist[v] == dw - 1:
                    delta[v] += sigma[v] * coeff
            score[w] += delta[w]
    norm = Fraction(1, (size - 1) * (size - 2))
    return [x * norm for x in score]


def write_edge_list(graph: DivisibilityGraph, target) -> int:
    """Write one ``i j`` line per edge (i < j, sorted), return the line count.

    ``target`` is a path or an open text file.
    """
    if hasattr(target, "write"):
        return _write_edges(graph, target)
    with open(target, "w", encoding="ascii", newline="\n") as fh:
        return _write_edges(graph, fh)


def _write_edges(graph: DivisibilityGraph, fh) -> int:
    written = 0
    for i in range(1, graph.size + 1):
        nb = graph.neighbors(i)
        for j in nb[np.searchsorted(nb, i + 1) :]:
            fh.write(f"{i} {int(j)}\n")
            written += 1
    return written
