"""Compiled bulk kernel for unweighted path counting.

numba is imported lazily by centrality.py so that small-graph calls
never pay the JIT startup cost. All counters are unsigned 64-bit with
explicit overflow checks before every add or multiply; on overflow the
kernel bails out and the caller raises.
"""

from __future__ import annotations

import numpy as np
from numba import njit

U64 = np.uint64(0xFFFFFFFFFFFFFFFF)


@njit(cache=True, nogil=True)
def bulk_counts(indptr, nbrs, s_lo, s_hi, ups):
    """Accumulate upsilon for sources in [s_lo, s_hi) into ups.

    Returns (total_paths_from_these_sources, overflow_flag). BFS from
    each source, path multiplicities down the level DAG, then reverse
    settle-order accumulation of continuation counts.
    """
    n = indptr.shape[0] - 1
    dist = np.empty(n, np.int64)
    sigma = np.empty(n, np.uint64)
    g = np.empty(n, np.uint64)
    order = np.empty(n, np.int64)
    total = np.uint64(0)
    zero = np.uint64(0)
    one = np.uint64(1)
    for s in range(s_lo, s_hi):
        for i in range(n):
            dist[i] = -1
            sigma[i] = zero
            g[i] = zero
        dist[s] = 0
        sigma[s] = one
        order[0] = s
        head = 0
        tail = 1
        while head < tail:
            v = order[head]
            head += 1
            dv1 = dist[v] + 1
            for k in range(indptr[v], indptr[v + 1]):
                w = nbrs[k]
                if dist[w] < 0:
                    dist[w] = dv1
                    order[tail] = w
                    tail += 1
                if dist[w] == dv1:
                    if sigma[w] > U64 - sigma[v]:
                        return total, 1
                    sigma[w] += sigma[v]
        for idx in range(tail - 1, -1, -1):
            v = order[idx]
            dv1 = dist[v] + 1
            acc = zero
            for k in range(indptr[v], indptr[v + 1]):
                w = nbrs[k]
                if dist[w] == dv1:
                    if g[w] >= U64 - acc:
                        return total, 1
                    acc += g[w] + one
            g[v] = acc
            if v != s and acc > zero:
                if sigma[v] > U64 // acc:
                    return total, 1
                prod = sigma[v] * acc
                if ups[v] > U64 - prod:
                    return total, 1
                ups[v] += prod
        if total > U64 - g[s]:
            return total, 1
        total += g[s]
    return total, 0
