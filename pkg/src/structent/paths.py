"""Single-source shortest paths with path multiplicities.

Unweighted graphs use BFS with exact integer distances; weighted graphs
use Dijkstra with a relative tie tolerance of 1e-9 on path lengths,
since floating-point sums of weights rarely compare exactly. Path
counts are exact integers, capped at the unsigned 64-bit maximum with
explicit overflow detection.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass
from heapq import heappop, heappush

from .errors import OverflowLimitError
from .graph import Graph

U64_MAX = 2**64 - 1
TIE_RTOL = 1e-9

INF = math.inf


def _close(a: float, b: float) -> bool:
    """Equality of two path lengths under the relative tie tolerance."""
    if a == b:
        return True
    if math.isinf(a) or math.isinf(b):
        return False
    return abs(a - b) <= TIE_RTOL * max(a, b, 1.0)


@dataclass(frozen=True)
class SsspResult:
    """Shortest-path DAG from one source.

    Fields:
        source: source vertex index.
        dist: per-vertex length of a shortest path (inf if unreachable).
        sigma: per-vertex count of distinct shortest paths from source;
            sigma[source] = 1, unreachable vertices get 0.
        dag_succ: per-vertex successor indices w with
            dist[w] = dist[v] + weight(v, w) up to tie tolerance.
        settle_order: vertices in nondecreasing dist order; reversing it
            gives a topological order of the DAG.
    """

    source: int
    dist: list[float]
    sigma: list[int]
    dag_succ: list[list[int]]
    settle_order: list[int]


def _checked_add(a: int, b: int) -> int:
    c = a + b
    if c > U64_MAX:
        raise OverflowLimitError(
            f"shortest-path count exceeds 64-bit range ({c} > {U64_MAX})"
        )
    return c


def _bfs(g: Graph, s: int) -> tuple[list[float], list[int], list[int]]:
    n = g.n
    dist = [INF] * n
    sigma = [0] * n
    dist[s] = 0.0
    sigma[s] = 1
    order = [s]
    q = deque([s])
    while q:
        v = q.popleft()
        dv1 = dist[v] + 1.0
        for w, _ in g.neighbors(v):
            if dist[w] == INF:
                dist[w] = dv1
                q.append(w)
                order.append(w)
            if dist[w] == dv1:
                sigma[w] = _checked_add(sigma[w], sigma[v])
    return dist, sigma, order


def _dijkstra(g: Graph, s: int) -> tuple[list[float], list[int], list[int]]:
    n = g.n
    dist = [INF] * n
    sigma = [0] * n
    dist[s] = 0.0
    sigma[s] = 1
    order: list[int] = []
    done = [False] * n
    # heap entries carry the vertex index as tie-breaker for determinism
    heap: list[tuple[float, int]] = [(0.0, s)]
    while heap:
        d, v = heappop(heap)
        if done[v]:
            continue
        done[v] = True
        order.append(v)
        for w, wt in g.neighbors(v):
            if done[w]:
                continue
            nd = d + wt
            if _close(nd, dist[w]):
                sigma[w] = _checked_add(sigma[w], sigma[v])
            elif nd < dist[w]:
                dist[w] = nd
                sigma[w] = sigma[v]
                heappush(heap, (nd, w))
    return dist, sigma, order


def sssp(g: Graph, s: int) -> SsspResult:
    """Distances, path multiplicities, and the shortest-path DAG from s.

    The DAG successor lists are rebuilt from final distances, so they
    are deterministic regardless of relaxation order.
    """
    if not 0 <= s < g.n:
        raise IndexError(f"source index {s} out of range 0..{g.n - 1}")
    if g.is_weighted:
        dist, sigma, order = _dijkstra(g, s)
    else:
        dist, sigma, order = _bfs(g, s)
    dag_succ: list[list[int]] = [[] for _ in range(g.n)]
    for v in order:
        dv = dist[v]
        succ = dag_succ[v]
        for w, wt in g.neighbors(v):
            if dist[w] != INF and not _close(dist[w], dv) and _close(dv + wt, dist[w]):
                succ.append(w)
    return SsspResult(s, dist, sigma, dag_succ, order)


def downstream_path_counts(r: SsspResult) -> list[int]:
    """Count g_s(v) of shortest-path continuations below each vertex.

    g_s(v) = sum over DAG successors w of (1 + g_s(w)): every shortest
    path from s arriving at v extends to each successor subtree, and
    the +1 counts the path that stops at w itself. At the source,
    g_s(s) equals the total number of shortest paths from s to all
    other vertices. For v != s, sigma[v] * g_s(v) is the number of
    s-rooted shortest paths that pass through v and continue beyond.
    """
    g = [0] * len(r.dist)
    for v in reversed(r.settle_order):
        acc = 0
        for w in r.dag_succ[v]:
            acc = _checked_add(acc, 1 + g[w])
        g[v] = acc
    return g
