"""Shared test helpers: seeded random graphs and tie-friendly weights."""

from __future__ import annotations

import random

from hypothesis import HealthCheck, settings

from structent import Graph

settings.register_profile(
    "default",
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("default")

# dyadic weights: every sum of a handful of these is exact in binary
# floating point, so weighted shortest-path ties are exact, not fuzzy
DYADIC_WEIGHTS = (0.25, 0.5, 0.75, 1.0, 1.25, 1.5, 2.0)


def random_connected_graph(
    rng: random.Random, n: int, weighted: bool, extra_edges: int | None = None
) -> Graph:
    """Random spanning tree plus chords; weights drawn from DYADIC_WEIGHTS."""
    labels = [str(i) for i in range(n)]
    order = list(range(n))
    rng.shuffle(order)
    edges: set[tuple[int, int]] = set()
    for i in range(1, n):
        a, b = order[i], order[rng.randrange(i)]
        edges.add((min(a, b), max(a, b)))
    if extra_edges is None:
        extra_edges = rng.randint(0, n)
    for _ in range(extra_edges):
        a, b = rng.sample(range(n), 2)
        edges.add((min(a, b), max(a, b)))
    if weighted:
        es = [
            (labels[a], labels[b], rng.choice(DYADIC_WEIGHTS)) for a, b in sorted(edges)
        ]
    else:
        es = [(labels[a], labels[b]) for a, b in sorted(edges)]
    return Graph.from_edges(es, nodes=labels)


def diamond_chain(k: int) -> Graph:
    """Chain of k diamonds; shortest-path multiplicity doubles per diamond.

    End-to-end sigma is 2**k, so k > 64 overflows unsigned 64-bit counts.
    Vertex count is 3k + 1.
    """
    edges = []
    prev = "j0"
    for i in range(1, k + 1):
        a, b, j = f"a{i}", f"b{i}", f"j{i}"
        edges += [(prev, a), (prev, b), (a, j), (b, j)]
        prev = j
    return Graph.from_edges(edges)
