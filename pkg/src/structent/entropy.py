"""Structure entropies over per-vertex probability distributions.

Three distributions are supported: degree fractions, partition cell
fractions (degree partition by default), and interior path-count
fractions. All entropies are natural-log (nats) with 0 ln 0 := 0 and
the Boltzmann-style constant fixed to 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import groupby
from typing import Sequence

from .centrality import PathCounts, path_counts
from .errors import (
    DegenerateGraphError,
    InvalidDistributionError,
    InvalidPartitionError,
    SizeLimitError,
)
from .graph import Graph, degrees

DISTRIBUTION_SUM_TOL = 1e-9

ORBIT_ORACLE_MAX_N = 10


def shannon(p: Sequence[float]) -> float:
    """H = -sum p_i ln p_i in nats, with 0 ln 0 := 0.

    Raises InvalidDistributionError if the entries are negative or do
    not sum to 1 within 1e-9.
    """
    total = 0.0
    for x in p:
        if x < 0:
            raise InvalidDistributionError(f"negative probability {x}")
        total += x
    if abs(total - 1.0) > DISTRIBUTION_SUM_TOL:
        raise InvalidDistributionError(f"probabilities sum to {total!r}, not 1")
    # + 0.0 turns the -0.0 of one-point distributions into plain 0.0
    return -sum(x * math.log(x) for x in p if x > 0.0) + 0.0


@dataclass(frozen=True)
class Partition:
    """Disjoint nonempty cells of vertex indices covering 0..n-1."""

    cells: tuple[tuple[int, ...], ...]

    def sizes(self) -> list[int]:
        return [len(c) for c in self.cells]


def _validate_partition(part: Partition, n: int) -> None:
    seen: set[int] = set()
    for cell in part.cells:
        if not cell:
            raise InvalidPartitionError("empty cell")
        for v in cell:
            if not 0 <= v < n:
                raise InvalidPartitionError(f"vertex index {v} outside 0..{n - 1}")
            if v in seen:
                raise InvalidPartitionError(f"vertex index {v} in two cells")
            seen.add(v)
    if len(seen) != n:
        missing = sorted(set(range(n)) - seen)
        raise InvalidPartitionError(f"cells do not cover vertices {missing}")


def _degree_distribution(g: Graph) -> list[float]:
    degs = degrees(g)
    total = sum(degs)
    if total == 0:
        raise DegenerateGraphError("edgeless graph: degree entropy undefined")
    return [d / total for d in degs]


def degree_entropy(g: Graph) -> float:
    """Entropy of p_j = degree(j) / sum of degrees.

    Vertices of degree zero contribute nothing; a graph with no edges
    at all has no distribution and raises DegenerateGraphError.
    """
    return shannon(_degree_distribution(g))


def degree_partition(g: Graph) -> Partition:
    """Vertices grouped by equal degree, cells in ascending degree order."""
    degs = degrees(g)
    order = sorted(range(g.n), key=lambda v: (degs[v], v))
    cells = tuple(tuple(grp) for _, grp in groupby(order, key=lambda v: degs[v]))
    return Partition(cells)


def partition_entropy(g: Graph, part: Partition | None = None) -> float:
    """Entropy of cell-size fractions p = |cell| / n.

    Defaults to the degree partition, the coarsening the source tables
    use in place of true orbits. Raises InvalidPartitionError if the
    given cells overlap or leave a vertex uncovered.
    """
    if part is None:
        part = degree_partition(g)
    _validate_partition(part, g.n)
    n = g.n
    return shannon([len(c) / n for c in part.cells])


def _betweenness_distribution(
    g: Graph, counts: PathCounts | None = None, threads: int = 1
) -> list[float]:
    if counts is None:
        counts = path_counts(g, threads=threads)
    total = sum(counts.upsilon)
    if total == 0:
        raise DegenerateGraphError(
            "no shortest path has an interior vertex; betweenness entropy undefined"
        )
    return [u / total for u in counts.upsilon]


def betweenness_entropy(
    g: Graph, counts: PathCounts | None = None, threads: int = 1
) -> float:
    """Entropy of p_i = upsilon(i) / sum of upsilon.

    The normalizer is the upsilon sum itself, not the global path
    total, so the ratio-level convention (ordered vs unordered pairs)
    cancels. Raises DegenerateGraphError when every upsilon is zero
    (complete graphs, edgeless graphs): no distribution exists.
    """
    return shannon(_betweenness_distribution(g, counts, threads))


@dataclass(frozen=True)
class EntropyReport:
    """The three entropies plus the distributions that produced them.

    A measure that was not requested, or whose distribution is
    degenerate on this graph, stores None; ``notes`` records the reason
    for every None that stems from degeneracy.
    """

    h_deg: float | None = None
    h_bet: float | None = None
    h_partition: float | None = None
    p_deg: list[float] | None = None
    p_bet: list[float] | None = None
    p_partition: list[float] | None = None
    notes: dict[str, str] = field(default_factory=dict)


KINDS = ("deg", "bet", "partition")


def entropy_report(
    g: Graph, kinds: Sequence[str] = KINDS, threads: int = 1
) -> EntropyReport:
    """Compute the requested entropies, marking degenerate ones in notes."""
    vals: dict[str, float | None] = {}
    vecs: dict[str, list[float] | None] = {}
    notes: dict[str, str] = {}
    for kind in kinds:
        if kind not in KINDS:
            raise ValueError(f"unknown entropy kind {kind!r}")
    if "deg" in kinds:
        try:
            vecs["deg"] = _degree_distribution(g)
            vals["deg"] = shannon(vecs["deg"])
        except DegenerateGraphError as e:
            vals["deg"], vecs["deg"], notes["deg"] = None, None, str(e)
    if "bet" in kinds:
        try:
            vecs["bet"] = _betweenness_distribution(g, threads=threads)
            vals["bet"] = shannon(vecs["bet"])
        except DegenerateGraphError as e:
            vals["bet"], vecs["bet"], notes["bet"] = None, None, str(e)
    if "partition" in kinds:
        part = degree_partition(g)
        vecs["partition"] = [len(c) / g.n for c in part.cells]
        vals["partition"] = shannon(vecs["partition"])
    return EntropyReport(
        h_deg=vals.get("deg"),
        h_bet=vals.get("bet"),
        h_partition=vals.get("partition"),
        p_deg=vecs.get("deg"),
        p_bet=vecs.get("bet"),
        p_partition=vecs.get("partition"),
        notes=notes,
    )


# ---------------------------------------------------------------------------
# exact orbit oracle (test-only; exponential search)


def orbit_partition_oracle(g: Graph) -> Partition:
    """True automorphism orbits by exhaustive backtracking search.

    For every same-degree vertex pair (i, j) not yet known equivalent,
    search for an automorphism pinned to map i -> j; orbits are the
    transitive closure of the successes. Every orbit lies inside one
    degree cell, so this partition refines (or equals) the degree
    partition. Weighted graphs must match edge weights exactly.
    Limited to n <= 10.
    """
    n = g.n
    if n > ORBIT_ORACLE_MAX_N:
        raise SizeLimitError(
            f"orbit oracle limited to n <= {ORBIT_ORACLE_MAX_N}, got {n}"
        )
    adj = [set(w for w, _ in g.neighbors(v)) for v in range(n)]
    wadj = [{w: wt for w, wt in g.neighbors(v)} for v in range(n)]
    degs = [len(a) for a in adj]

    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a: int, b: int) -> None:
        parent[find(a)] = find(b)

    def consistent(perm: dict[int, int], v: int, img: int) -> bool:
        if degs[v] != degs[img]:
            return False
        for u, iu in perm.items():
            u_adj = v in adj[u]
            i_adj = img in adj[iu]
            if u_adj != i_adj:
                return False
            if u_adj and wadj[u][v] != wadj[iu][img]:
                return False
        return True

    def search(order: list[int], pos: int, perm: dict[int, int], used: set[int]) -> bool:
        if pos == len(order):
            return True
        v = order[pos]
        for img in range(n):
            if img in used or not consistent(perm, v, img):
                continue
            perm[v] = img
            used.add(img)
            if search(order, pos + 1, perm, used):
                return True
            del perm[v]
            used.remove(img)
        return False

    for i in range(n):
        for j in range(i + 1, n):
            if find(i) == find(j) or degs[i] != degs[j]:
                continue
            order = [i] + [v for v in range(n) if v != i]
            perm = {i: j}
            if search(order, 1, perm, {j}):
                for a, b in perm.items():
                    if a != b:
                        union(a, b)

    groups: dict[int, list[int]] = {}
    for v in range(n):
        groups.setdefault(find(v), []).append(v)
    cells = tuple(tuple(sorted(vs)) for vs in sorted(groups.values(), key=min))
    return Partition(cells)
