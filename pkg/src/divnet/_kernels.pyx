# cython: language_level=3
"""Compiled kernel core.

Contracts are documented in divnet.backend; divnet._kernels_py is the
behavior-identical fallback. Scalar loop style throughout: the pure twin
leans on numpy slicing and bitsets instead, so agreement between the two is
a real cross-check rather than shared code.
"""

import numpy as np

MAX_SIEVE_LIMIT = 2**31 - 2
MAX_GRAPH_NODES = 2**26


def sieve_tables(long long limit):
    if limit < 1:
        raise ValueError("sieve limit must be >= 1")
    if limit > MAX_SIEVE_LIMIT:
        raise ValueError(f"sieve limit {limit} exceeds supported max {MAX_SIEVE_LIMIT}")
    spf_arr = np.arange(limit + 1, dtype=np.int64)
    s_arr = np.zeros(limit + 1, dtype=np.int64)
    d3_arr = np.zeros(limit + 1, dtype=np.int64)
    cdef long long[::1] spf = spf_arr
    cdef long long[::1] s = s_arr
    cdef long long[::1] d3 = d3_arr
    cdef long long p, m, d, sd
    spf[0] = 0
    p = 2
    while p * p <= limit:
        if spf[p] == p:
            m = p * p
            while m <= limit:
                if spf[m] == m:
                    spf[m] = p
                m += p
        p += 1
    for d in range(1, limit + 1):
        m = d
        while m <= limit:
            s[m] += 1
            m += d
    for d in range(1, limit + 1):
        sd = s[d]
        m = d
        while m <= limit:
            d3[m] += sd
            m += d
    return spf_arr, s_arr, d3_arr


def divisibility_csr(long long n_max):
    if n_max < 1:
        raise ValueError("graph size must be >= 1")
    if n_max > MAX_GRAPH_NODES:
        raise ValueError(f"graph size {n_max} exceeds supported max {MAX_GRAPH_NODES}")
    indptr_arr = np.zeros(n_max + 2, dtype=np.int64)
    cdef long long[::1] indptr = indptr_arr
    cdef long long i, j
    for i in range(1, n_max // 2 + 1):
        indptr[i + 1] += n_max // i - 1
        j = 2 * i
        while j <= n_max:
            indptr[j + 1] += 1
            j += i
    for i in range(1, n_max + 2):
        indptr[i] += indptr[i - 1]
    indices_arr = np.empty(int(indptr_arr[n_max + 1]), dtype=np.int64)
    cdef long long[::1] indices = indices_arr
    cursor_arr = indptr_arr[:-1].copy()
    cdef long long[::1] cursor = cursor_arr
    # Ascending i keeps every list sorted: divisor entries of a node are all
    # written before the node's own multiples block, and each side ascends.
    for i in range(1, n_max // 2 + 1):
        j = 2 * i
        while j <= n_max:
            indices[cursor[j]] = i
            cursor[j] += 1
            indices[cursor[i]] = j
            cursor[i] += 1
            j += i
    return indptr_arr, indices_arr


cdef inline long long _count_common(
    const long long[::1] indices,
    long long astart, long long aend,
    long long bstart, long long bend,
) noexcept:
    """|A ∩ B| for two sorted runs of indices.

    Merges when the runs are comparable; binary-searches the short run into
    the long one when they are lopsided (a hub's list vs a leaf's list).
    """
    cdef long long da = aend - astart
    cdef long long db = bend - bstart
    cdef long long tmp, k, v, lo, hi, mid, count
    if da > db:
        tmp = astart; astart = bstart; bstart = tmp
        tmp = aend; aend = bend; bend = tmp
        tmp = da; da = db; db = tmp
    count = 0
    if db > 16 * da:
        for k in range(astart, aend):
            v = indices[k]
            lo = bstart
            hi = bend
            while lo < hi:
                mid = (lo + hi) // 2
                if indices[mid] < v:
                    lo = mid + 1
                elif indices[mid] > v:
                    hi = mid
                else:
                    count += 1
                    break
        return count
    while astart < aend and bstart < bend:
        if indices[astart] < indices[bstart]:
            astart += 1
        elif indices[astart] > indices[bstart]:
            bstart += 1
        else:
            count += 1
            astart += 1
            bstart += 1
    return count


def triangle_edge_counts(indptr_arr, indices_arr):
    cdef const long long[::1] indptr = np.ascontiguousarray(indptr_arr, dtype=np.int64)
    cdef const long long[::1] indices = np.ascontiguousarray(indices_arr, dtype=np.int64)
    cdef long long n_max = indptr.shape[0] - 2
    out_arr = np.zeros(n_max + 1, dtype=np.int64)
    cdef long long[::1] out = out_arr
    cdef long long n, u, k, total
    for n in range(1, n_max + 1):
        total = 0
        for k in range(indptr[n], indptr[n + 1]):
            u = indices[k]
            total += _count_common(
                indices, indptr[n], indptr[n + 1], indptr[u], indptr[u + 1]
            )
        out[n] = total // 2
    return out_arr


cdef inline long long _collect_common(
    const long long[::1] indices,
    long long astart, long long aend,
    long long bstart, long long bend,
    long long[::1] out,
) noexcept:
    """Writes A ∩ B into out, returns the member count.  Same adaptive
    strategy as _count_common."""
    cdef long long da = aend - astart
    cdef long long db = bend - bstart
    cdef long long tmp, k, v, lo, hi, mid, count
    if da > db:
        tmp = astart; astart = bstart; bstart = tmp
        tmp = aend; aend = bend; bend = tmp
        tmp = da; da = db; db = tmp
    count = 0
    if db > 16 * da:
        for k in range(astart, aend):
            v = indices[k]
            lo = bstart
            hi = bend
            while lo < hi:
                mid = (lo + hi) // 2
                if indices[mid] < v:
                    lo = mid + 1
                elif indices[mid] > v:
                    hi = mid
                else:
                    out[count] = v
                    count += 1
                    break
        return count
    while astart < aend and bstart < bend:
        if indices[astart] < indices[bstart]:
            astart += 1
        elif indices[astart] > indices[bstart]:
            bstart += 1
        else:
            out[count] = indices[astart]
            count += 1
            astart += 1
            bstart += 1
    return count


def betweenness_pair_scan(indptr_arr, indices_arr):
    cdef const long long[::1] indptr = np.ascontiguousarray(indptr_arr, dtype=np.int64)
    cdef const long long[::1] indices = np.ascontiguousarray(indices_arr, dtype=np.int64)
    cdef long long n_max = indptr.shape[0] - 2
    if n_max < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    score_arr = np.zeros(n_max + 1, dtype=np.float64)
    cdef double[::1] score = score_arr
    cdef long long a, b, k, aend, lo, hi, mid, count, max_deg
    cdef double share
    cdef bint adjacent
    max_deg = 0
    for a in range(1, n_max + 1):
        if indptr[a + 1] - indptr[a] > max_deg:
            max_deg = indptr[a + 1] - indptr[a]
    common_arr = np.empty(max(max_deg, 1), dtype=np.int64)
    cdef long long[::1] common = common_arr
    for a in range(1, n_max):
        aend = indptr[a + 1]
        for b in range(a + 1, n_max + 1):
            lo = indptr[a]
            hi = aend
            adjacent = False
            while lo < hi:
                mid = (lo + hi) // 2
                if indices[mid] < b:
                    lo = mid + 1
                elif indices[mid] > b:
                    hi = mid
                else:
                    adjacent = True
                    break
            if adjacent:
                continue
            count = _collect_common(
                indices, indptr[a], aend, indptr[b], indptr[b + 1], common
            )
            if count == 0:
                continue
            share = 2.0 / count
            for k in range(count):
                score[common[k]] += share
    score_arr /= float((n_max - 1) * (n_max - 2))
    return score_arr


def brandes_betweenness(indptr_arr, indices_arr):
    cdef const long long[::1] indptr = np.ascontiguousarray(indptr_arr, dtype=np.int64)
    cdef const long long[::1] indices = np.ascontiguousarray(indices_arr, dtype=np.int64)
    cdef long long n_max = indptr.shape[0] - 2
    if n_max < 3:
        raise ValueError("betweenness needs at least 3 nodes")
    score_arr = np.zeros(n_max + 1, dtype=np.float64)
    cdef double[::1] score = score_arr
    dist_arr = np.empty(n_max + 1, dtype=np.int64)
    sigma_arr = np.empty(n_max + 1, dtype=np.float64)
    delta_arr = np.empty(n_max + 1, dtype=np.float64)
    order_arr = np.empty(n_max + 1, dtype=np.int64)
    cdef long long[::1] dist = dist_arr
    cdef double[::1] sigma = sigma_arr
    cdef double[::1] delta = delta_arr
    cdef long long[::1] order = order_arr
    cdef long long src, v, w, k, head, tail, idx
    cdef double coeff
    for src in range(1, n_max + 1):
        for v in range(n_max + 1):
            dist[v] = -1
            sigma[v] = 0.0
            delta[v] = 0.0
        head = 0
        tail = 0
        order[tail] = src
        tail += 1
        dist[src] = 0
        sigma[src] = 1.0
        while head < tail:
            v = order[head]
            head += 1
            for k in range(indptr[v], indptr[v + 1]):
                w = indices[k]
                if dist[w] < 0:
                    dist[w] = dist[v] + 1
                    order[tail] = w
                    tail += 1
                if dist[w] == dist[v] + 1:
                    sigma[w] += sigma[v]
        # reverse BFS order: every node is handled before its predecessors
        for idx in range(tail - 1, 0, -1):
            w = order[idx]
            coeff = (1.0 + delta[w]) / sigma[w]
            for k in range(indptr[w], indptr[w + 1]):
                v = indices[k]
                if dist[v] == dist[w] - 1:
                    delta[v] += sigma[v] * coeff
            score[w] += delta[w]
    score_arr /= float((n_max - 1) * (n_max - 2))
    return score_arr
