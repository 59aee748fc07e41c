"""Pure-Python/numpy kernel twins.

Same contracts as the compiled extension (see divnet.backend docstring), kept
deliberately independent in algorithm so cross-backend equality tests check
real redundancy: sieves via numpy stride slices, neighbor-set intersections
via packed big-integer bitsets instead of sorted merges, Brandes via
vectorized frontier expansion instead of scalar BFS.
"""

import math

import numpy as np

# int64-safe sieve bound; d3 stays far below 2**63 for any limit this allows.
MAX_SIEVE_LIMIT = 2**31 - 2
# CSR uses int64 positions; cap node count so 2*edge_count fits comfortably.
MAX_GRAPH_NODES = 2**26


def sieve_tables(limit):
    if limit < 1:
        raise ValueError("sieve limit must be >= 1")
    if limit > MAX_SIEVE_LIMIT:
        raise ValueError(f"sieve limit {limit} exceeds supported max {MAX_SIEVE_LIMIT}")
    spf = np.arange(limit + 1, dtype=np.int64)
    spf[0] = 0
    for p in range(2, math.isqrt(limit) + 1):
        if spf[p] == p:
            m = np.arange(p * p, limit + 1, p, dtype=np.int64)
            fresh = m[spf[m] == m]
            spf[fresh] = p
    s = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        s[d::d] += 1
    d3 = np.zeros(limit + 1, dtype=np.int64)
    for d in range(1, limit + 1):
        d3[d::d] += s[d]
    return spf, s, d3


def divisibility_csr(n_max):
    if n_max < 1:
        raise ValueError("graph size must be >= 1")
    if n_max > MAX_GRAPH_NODES:
        raise ValueError(f"graph size {n_max} exceeds supported max {MAX_GRAPH_NODES}")
    deg = np.zeros(n_max + 1, dtype=np.int64)
    for i in range(1, n_max // 2 + 1):
        deg[i] += n_max // i - 1
        deg[2 * i :: i] += 1
    indptr = np.zeros(n_max + 2, dtype=np.int64)
    np.cumsum(deg, out=indptr[1:])
    indices = np.empty(int(indptr[-1]), dtype=np.int64)
    cursor = indptr[:-1].copy()
    # Ascending i keeps every per-node list sorted: proper divisors of j are
    # <= j/2, so all divisor entries land before j's own multiples block.
    for i in range(1, n_max // 2 + 1):
        js = np.arange(2 * i, n_max + 1, i, dtype=np.int64)
        indices[cursor[js]] = i
        cursor[js] += 1
        c = int(cursor[i])
        indices[c : c + js.size] = js
        cursor[i] += js.size
    return indptr, indices


def _neighbor_bitsets(indptr, indices, n_max):
    """Big-integer bitmask per node; bit v set iff v is a neighbor."""
    width = 8 * ((n_max + 8) // 8)
    masks = [0] * (n_max + 1)
    chunk = max(1, (1 << 25) // width)  # ~4 MB of unpacked rows per block
    for lo in range(1, n_max + 1, chunk):
        hi = min(lo + chunk, n_max + 1)
        block = np.zeros((hi - lo, width), dtype=bool)
        for n in range(lo, hi):
            block[n - lo, indices[indptr[n] : indptr[n + 1]]] = True
        packed = np.packbits(block, axis=1, bitorder="little")
        raw = packed.tobytes()
        row_bytes = packed.shape[1]
        for n in range(lo, hi):
            off = (n - lo) * row_bytes
            masks[n] = int.from_bytes(raw[off : off + row_bytes], "little")
    return masks


def triangle_edge_counts(indptr, indices):
    n_max = len(indptr) - 2
    masks = _neighbor_bitsets(indptr, indices, n_max)
    out = np.zeros(n_max + 1, dtype=np.int64)
    for n in range(1, n_max + 1):
        mine = masks[n]
        total = 0
        for u in indices[indptr[n] : indptr[n + 1]]:
            total += (masks[u] & mine).bit_count()
        out[n] = total // 2  # each neighbor-neighbor edge seen from both ends
    return out


def betweenness_pair_scan(indptr, indices):
    n_max = len(indptr) - 2
    if n_max < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    masks = _neighbor_bitsets(indptr, indices, n_max)
    neighbor_sets = [
        set(indices[indptr[n] : indptr[n + 1]].tolist()) for n in range(n_max + 1)
    ]
    score = np.zeros(n_max + 1, dtype=np.float64)
    for a in range(1, n_max):
        mask_a = masks[a]
        set_a = neighbor_sets[a]
        for b in range(a + 1, n_max + 1):
            if b in set_a:
                continue
            common = mask_a & masks[b]
            count = common.bit_count()
            if count == 0:
                continue  # disconnected pair carries no shortest paths
            share = 2.0 / count  # both pair orders
            while common:
                low = common & -common
                score[low.bit_length() - 1] += share
                common ^= low
    score /= (n_max - 1) * (n_max - 2)
    return score


def brandes_betweenness(indptr, indices):
    n_max = len(indptr) - 2
    if n_max < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    score = np.zeros(n_max + 1, dtype=np.float64)
    dist = np.empty(n_max + 1, dtype=np.int64)
    sigma = np.empty(n_max + 1, dtype=np.float64)
    delta = np.empty(n_max + 1, dtype=np.float64)
    for src in range(1, n_max + 1):
        dist.fill(-1)
        sigma.fill(0.0)
        dist[src] = 0
        sigma[src] = 1.0
        frontier = np.array([src], dtype=np.int64)
        level = 0
        tree_edges = []  # (parents, children) arrays, one pair per BFS level
        while frontier.size:
            counts = indptr[frontier + 1] - indptr[frontier]
            total = int(counts.sum())
            offsets = np.concatenate(([0], np.cumsum(counts)[:-1]))
            gather = np.repeat(indptr[frontier] - offsets, counts) + np.arange(total)
            children = indices[gather]
            parents = np.repeat(frontier, counts)
            undiscovered = dist[children] == -1
            next_frontier = np.unique(children[undiscovered])
            dist[next_frontier] = level + 1
            on_tree = dist[children] == level + 1
            p, c = parents[on_tree], children[on_tree]
            np.add.at(sigma, c, sigma[p])
            tree_edges.append((p, c))
            frontier = next_frontier
            level += 1
        delta.fill(0.0)
        for p, c in reversed(tree_edges):
            np.add.at(delta, p, sigma[p] / sigma[c] * (1.0 + delta[c]))
        delta[src] = 0.0
        score += delta
    score /= (n_max - 1) * (n_max - 2)
    return score
