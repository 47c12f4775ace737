"""Path-count betweenness: the ratio of shortest paths through a vertex.

The measure here is count-based, not the per-pair-fraction (Freeman)
betweenness: upsilon(i) counts every shortest path whose interior
contains i, and bet(i) divides by the total number of shortest paths
between all ordered pairs. Ordered pairs are used throughout; on an
undirected graph both upsilon and the total double relative to the
unordered convention, so every ratio is convention-independent.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .errors import DegenerateGraphError, OverflowLimitError, SizeLimitError
from .graph import Graph
from .paths import U64_MAX, _checked_add, _close, downstream_path_counts, sssp

# below this size the JIT compile cost dwarfs the work; use pure python
_BULK_THRESHOLD = 512
_CHUNK = 256

BRUTE_FORCE_MAX_N = 14


@dataclass(frozen=True)
class PathCounts:
    """Per-vertex interior path counts and the global path total.

    upsilon[i] <= total_paths always; on graphs where every pair is
    adjacent (complete graphs) every upsilon is 0.
    """

    upsilon: list[int]
    total_paths: int
    pair_convention: str = "ordered"


@dataclass(frozen=True)
class BetweennessVector:
    """bet[i] = upsilon[i] / total_paths, each entry in [0, 1]."""

    bet: list[float]
    counts: PathCounts = field(repr=False)


def _count_range_python(g: Graph, s_lo: int, s_hi: int) -> tuple[list[int], int]:
    """Exact per-source accumulation for sources in [s_lo, s_hi)."""
    ups = [0] * g.n
    total = 0
    for s in range(s_lo, s_hi):
        r = sssp(g, s)
        cont = downstream_path_counts(r)
        sigma = r.sigma
        for i in r.settle_order:
            if i == s:
                continue
            c = cont[i]
            if c:
                prod = sigma[i] * c
                if prod > U64_MAX:
                    raise OverflowLimitError(
                        f"path count through vertex {g.label(i)!r} exceeds 64-bit range"
                    )
                ups[i] = _checked_add(ups[i], prod)
        total = _checked_add(total, cont[s])
    return ups, total


def _count_range_bulk(csr, s_lo: int, s_hi: int) -> tuple[list[int], int]:
    import numpy as np

    from ._kernels import bulk_counts

    indptr, nbrs = csr
    ups = np.zeros(indptr.shape[0] - 1, dtype=np.uint64)
    total, overflow = bulk_counts(indptr, nbrs, s_lo, s_hi, ups)
    if overflow:
        raise OverflowLimitError("path count exceeds 64-bit range")
    return [int(x) for x in ups], int(total)


def _csr(g: Graph):
    import numpy as np

    indptr = np.zeros(g.n + 1, dtype=np.int64)
    for i in range(g.n):
        indptr[i + 1] = indptr[i] + len(g.neighbors(i))
    nbrs = np.empty(int(indptr[-1]), dtype=np.int64)
    k = 0
    for i in range(g.n):
        for w, _ in g.neighbors(i):
            nbrs[k] = w
            k += 1
    return indptr, nbrs


def path_counts(g: Graph, threads: int = 1) -> PathCounts:
    """Count shortest paths through every vertex, plus the global total.

    One accumulation pass per source; sources are independent, so with
    threads > 1 the source range is chunked across a thread pool. The
    merged counts are integer sums and therefore identical for every
    thread count. threads = 0 picks the machine's CPU count. Large
    unweighted graphs run on a compiled kernel that releases the GIL;
    weighted or small graphs use the exact python engine.

    Raises OverflowLimitError if any count exceeds the unsigned 64-bit
    range, and DegenerateGraphError on an empty vertex set.
    """
    if g.n == 0:
        raise DegenerateGraphError("path counts undefined on an empty graph")
    if threads == 0:
        threads = os.cpu_count() or 1
    use_bulk = not g.is_weighted and g.n >= _BULK_THRESHOLD
    if use_bulk:
        csr = _csr(g)
        run = lambda lo, hi: _count_range_bulk(csr, lo, hi)  # noqa: E731
    else:
        run = lambda lo, hi: _count_range_python(g, lo, hi)  # noqa: E731

    chunks = [(lo, min(lo + _CHUNK, g.n)) for lo in range(0, g.n, _CHUNK)]
    if threads == 1 or len(chunks) == 1:
        parts = [run(lo, hi) for lo, hi in chunks]
    else:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(lambda c: run(*c), chunks))

    ups = [0] * g.n
    total = 0
    for part_ups, part_total in parts:
        for i, u in enumerate(part_ups):
            ups[i] = _checked_add(ups[i], u)
        total = _checked_add(total, part_total)
    return PathCounts(ups, total)


def betweenness(g: Graph, counts: PathCounts | None = None, threads: int = 1) -> BetweennessVector:
    """bet(i) = upsilon(i) / total ordered shortest paths.

    Raises DegenerateGraphError when the graph has no shortest path
    between any pair of distinct vertices (edgeless graphs).
    """
    if counts is None:
        counts = path_counts(g, threads=threads)
    if counts.total_paths == 0:
        raise DegenerateGraphError(
            "no shortest paths between distinct vertices; betweenness undefined"
        )
    t = counts.total_paths
    return BetweennessVector([u / t for u in counts.upsilon], counts)


# ---------------------------------------------------------------------------
# brute-force oracle


def _all_pairs_floyd_warshall(g: Graph) -> list[list[float]]:
    from .paths import INF

    n = g.n
    d = [[INF] * n for _ in range(n)]
    for i in range(n):
        d[i][i] = 0.0
        for w, wt in g.neighbors(i):
            if wt < d[i][w]:
                d[i][w] = wt
    for k in range(n):
        dk = d[k]
        for i in range(n):
            dik = d[i][k]
            if dik == INF:
                continue
            di = d[i]
            for j in range(n):
                alt = dik + dk[j]
                if alt < di[j]:
                    di[j] = alt
    return d


def brute_force_path_counts(g: Graph, pair_convention: str = "ordered") -> PathCounts:
    """Exhaustive shortest-path enumeration; the testing oracle.

    Distances come from Floyd-Warshall and every shortest path is
    walked by depth-first search, so the algorithm family is disjoint
    from the production engine. Limited to n <= 14.
    """
    from .paths import INF

    if g.n > BRUTE_FORCE_MAX_N:
        raise SizeLimitError(
            f"brute-force enumeration limited to n <= {BRUTE_FORCE_MAX_N}, got {g.n}"
        )
    if pair_convention not in ("ordered", "unordered"):
        raise ValueError(f"unknown pair convention {pair_convention!r}")
    if g.n == 0:
        raise DegenerateGraphError("path counts undefined on an empty graph")
    d = _all_pairs_floyd_warshall(g)
    n = g.n
    ups = [0] * n
    total = 0

    def walk(v: int, t: int, interior: list[int]) -> int:
        """Count shortest v->t continuations, crediting interior visits."""
        if v == t:
            for i in interior:
                ups[i] += 1
            return 1
        cnt = 0
        for w, wt in g.neighbors(v):
            if d[w][t] != INF and _close(d[v][t], wt + d[w][t]):
                if w != t:
                    interior.append(w)
                    cnt += walk(w, t, interior)
                    interior.pop()
                else:
                    cnt += walk(w, t, interior)
        return cnt

    for s in range(n):
        for t in range(n):
            if s == t or d[s][t] == INF:
                continue
            if pair_convention == "unordered" and s > t:
                continue
            total += walk(s, t, [])
    return PathCounts(ups, total, pair_convention)
