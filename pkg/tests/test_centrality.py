"""Interior path counts, the betweenness vector, and the brute-force oracle."""

from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from structent import (
    DegenerateGraphError,
    Graph,
    OverflowLimitError,
    SizeLimitError,
    betweenness,
    brute_force_path_counts,
    karate,
    path_counts,
)

from conftest import diamond_chain, random_connected_graph


def cycle(n: int) -> Graph:
    return Graph.from_edges([(str(i), str((i + 1) % n)) for i in range(n)])


class TestPathCounts:
    def test_path_graph(self):
        g = Graph.from_edges([("a", "b"), ("b", "c")])
        pc = path_counts(g)
        assert pc.upsilon == [0, 2, 0]
        assert pc.total_paths == 6
        assert pc.pair_convention == "ordered"

    def test_four_cycle(self):
        pc = path_counts(cycle(4))
        assert pc.upsilon == [2, 2, 2, 2]
        assert pc.total_paths == 16

    def test_complete_graph_has_no_interior(self):
        g = Graph.from_edges(
            [("a", "b"), ("a", "c"), ("a", "d"), ("b", "c"), ("b", "d"), ("c", "d")]
        )
        pc = path_counts(g)
        assert pc.upsilon == [0, 0, 0, 0]
        assert pc.total_paths == 12

    def test_star_center(self):
        g = Graph.from_edges([("c", "x"), ("c", "y"), ("c", "z")])
        pc = path_counts(g)
        assert pc.upsilon[0] == 6
        assert pc.total_paths == 12

    def test_weighted_tie_triangle(self):
        g = Graph.from_edges([("a", "b", 1.0), ("a", "c", 0.5), ("c", "b", 0.5)])
        pc = path_counts(g)
        assert pc.upsilon == [0, 0, 2]
        assert pc.total_paths == 8

    def test_disconnected_pairs_do_not_count(self):
        g = Graph.from_edges([("a", "b"), ("c", "d")])
        pc = path_counts(g)
        assert pc.total_paths == 4

    def test_karate_totals(self):
        pc = path_counts(karate())
        assert pc.total_paths == 3112
        assert pc.upsilon[0] == 1686  # vertex 1
        assert pc.upsilon[33] == 1254  # vertex 34
        assert pc.upsilon[11] == 0  # vertex 12 is a leaf


class TestBetweenness:
    def test_star_center_is_half(self):
        g = Graph.from_edges([("c", "x"), ("c", "y"), ("c", "z")])
        b = betweenness(g)
        assert b.bet == [0.5, 0.0, 0.0, 0.0]

    def test_four_cycle_uniform(self):
        assert betweenness(cycle(4)).bet == [0.125] * 4

    def test_reuses_given_counts(self):
        g = cycle(5)
        pc = path_counts(g)
        assert betweenness(g, counts=pc).counts is pc

    def test_no_interior_paths_gives_zero_vector(self):
        # K2 has paths, just none with an interior; that is not degenerate
        g = Graph.from_edges([("a", "b")])
        assert betweenness(g).bet == [0.0, 0.0]

    def test_degenerate_when_no_paths_at_all(self):
        g = Graph.from_edges([], nodes=["a", "b"])
        with pytest.raises(DegenerateGraphError):
            betweenness(g)

    def test_relabeling_invariance(self):
        rng = random.Random(7)
        g = random_connected_graph(rng, 9, weighted=True)
        perm = list(g.labels)
        rng.shuffle(perm)
        mapping = dict(zip(g.labels, perm))
        h = Graph.from_edges(
            [(mapping[u], mapping[v], w) for u, v, w in g.edges()],
            nodes=[mapping[x] for x in g.labels],
        )
        bg, bh = betweenness(g), betweenness(h)
        assert bg.bet == bh.bet  # same order because nodes= pinned it

    def test_weight_scaling_invariance(self):
        rng = random.Random(11)
        g = random_connected_graph(rng, 10, weighted=True)
        a = betweenness(g).bet
        b = betweenness(g.scaled(7.3)).bet
        assert all(abs(x - y) <= 1e-12 for x, y in zip(a, b))


class TestBruteForceOracle:
    def test_small_exacts(self):
        g = Graph.from_edges([("a", "b"), ("b", "c")])
        bf = brute_force_path_counts(g)
        assert bf.upsilon == [0, 2, 0] and bf.total_paths == 6

    def test_unordered_convention_halves(self):
        g = cycle(4)
        o = brute_force_path_counts(g, pair_convention="ordered")
        u = brute_force_path_counts(g, pair_convention="unordered")
        assert u.total_paths * 2 == o.total_paths
        assert [x * 2 for x in u.upsilon] == o.upsilon

    def test_bad_convention(self):
        with pytest.raises(ValueError):
            brute_force_path_counts(cycle(4), pair_convention="diagonal")

    def test_size_limit(self):
        g = cycle(15)
        with pytest.raises(SizeLimitError):
            brute_force_path_counts(g)

    @given(st.integers(min_value=0, max_value=100_000))
    @settings(max_examples=80)
    def test_production_matches_oracle(self, seed):
        rng = random.Random(seed)
        g = random_connected_graph(rng, rng.randint(4, 12), rng.random() < 0.5)
        pc = path_counts(g)
        bf = brute_force_path_counts(g)
        assert pc.upsilon == bf.upsilon
        assert pc.total_paths == bf.total_paths


class TestEngines:
    def test_bulk_and_python_engines_agree(self):
        # a graph past the bulk threshold, counted by the compiled kernel;
        # the same graph viewed as weighted goes through the Dijkstra route
        rng = random.Random(99)
        n = 600
        edges = [(str(i), str((i + 1) % n)) for i in range(n)]
        seen = set()
        while len(seen) < 120:
            a, b = rng.sample(range(n), 2)
            seen.add((min(a, b), max(a, b)))
        edges += [(str(a), str(b)) for a, b in sorted(seen)]
        g = Graph.from_edges(edges, nodes=[str(i) for i in range(n)])

        fast = path_counts(g)
        slow = path_counts(g.as_weighted())
        assert fast.upsilon == slow.upsilon
        assert fast.total_paths == slow.total_paths

    def test_thread_counts_are_bit_identical(self):
        rng = random.Random(5)
        g = random_connected_graph(rng, 40, weighted=False, extra_edges=30)
        base = path_counts(g, threads=1)
        for t in (2, 4, 0):
            pc = path_counts(g, threads=t)
            assert pc.upsilon == base.upsilon
            assert pc.total_paths == base.total_paths


class TestOverflowPaths:
    def test_python_engine_overflow(self):
        with pytest.raises(OverflowLimitError):
            path_counts(diamond_chain(70))

    def test_bulk_engine_overflow(self):
        g = diamond_chain(200)
        assert g.n >= 512
        with pytest.raises(OverflowLimitError):
            path_counts(g)
