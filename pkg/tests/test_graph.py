from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcsgap import (
    DegenerateGraphError,
    FormatError,
    Graph,
    ParameterError,
    dense_subgraph_peel,
    density,
    dks_brute_force,
    erdos_renyi,
    plant_clique,
    subset_density,
)
from lcsgap.graph import format_graph, parse_graph

from conftest import max_clique_size


def complete(n):
    return Graph.from_edges(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


C5 = Graph.from_edges(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])


class TestDensity:
    def test_triangle(self):
        assert density(complete(3)) == 1

    def test_empty_five(self):
        assert density(Graph.from_edges(5, [])) == 0

    def test_path_four(self):
        p4 = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4)])
        assert density(p4) == Fraction(1, 2)

    def test_rejects_single_vertex(self):
        with pytest.raises(DegenerateGraphError):
            density(Graph.from_edges(1, []))

    def test_relabeling_invariance(self, rng):
        for trial in range(60):
            n = int(rng.integers(2, 10))
            g = erdos_renyi(n, float(rng.random()), seed=trial)
            perm = list(rng.permutation(n) + 1)
            relab = {v: perm[v - 1] for v in range(1, n + 1)}
            h = Graph.from_edges(n, [(relab[u], relab[v]) for u, v in g.edges])
            assert density(g) == density(h)


class TestGraphType:
    def test_rejects_self_loop(self):
        with pytest.raises(ParameterError):
            Graph.from_edges(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ParameterError):
            Graph.from_edges(3, [(1, 4)])

    def test_neighbor_partitions(self):
        g = Graph.from_edges(4, [(1, 3), (2, 3), (3, 4)])
        assert g.neighbors_below(3) == (1, 2)
        assert g.neighbors_above(3) == (4,)
        assert g.neighbors_below(1) == ()


class TestDksBruteForce:
    def test_k5_yes(self):
        v = dks_brute_force(complete(5), 3, Fraction(1, 4))
        assert v.kind == "YES"
        assert v.best_density == 1
        assert subset_density(complete(5), v.witness) == 1

    def test_empty_no(self):
        v = dks_brute_force(Graph.from_edges(6, []), 3, Fraction(1, 4))
        assert v.kind == "NO"
        assert v.best_density == 0

    def test_c5_undecided(self):
        # no triangle, but a path-of-3 subset has density 2/3 > 1/4
        v = dks_brute_force(C5, 3, Fraction(1, 4))
        assert v.kind == "UNDECIDED"
        assert v.best_density == Fraction(2, 3)

    def test_rejects_small_k(self):
        with pytest.raises(ParameterError):
            dks_brute_force(C5, 1, Fraction(1, 4))

    def test_budget(self):
        from lcsgap import BudgetError

        with pytest.raises(BudgetError):
            dks_brute_force(erdos_renyi(24, 0.5, seed=0), 12, Fraction(1, 4), budget=10)

    def test_yes_iff_max_clique(self, rng):
        for trial in range(80):
            n = int(rng.integers(3, 13))
            g = erdos_renyi(n, float(rng.random()), seed=trial + 1000)
            k = int(rng.integers(2, n + 1))
            v = dks_brute_force(g, k, Fraction(1, 4))
            assert (v.kind == "YES") == (max_clique_size(g) >= k)


class TestPlantClique:
    def test_p_zero_full(self):
        g, clique = plant_clique(5, 5, 0.0, seed=1)
        assert clique == (1, 2, 3, 4, 5)
        assert len(g.edges) == 10

    def test_singleton(self):
        g, clique = plant_clique(10, 1, 0.0, seed=1)
        assert len(clique) == 1 and len(g.edges) == 0

    def test_witness_edges_present(self):
        g, clique = plant_clique(8, 4, 0.2, seed=7)
        for i, u in enumerate(clique):
            for v in clique[i + 1:]:
                assert g.has_edge(u, v)

    def test_deterministic(self):
        assert plant_clique(9, 3, 0.4, seed=5) == plant_clique(9, 3, 0.4, seed=5)

    def test_rejects_bad_k(self):
        with pytest.raises(ParameterError):
            plant_clique(8, 9, 0.0, seed=0)


class TestPeel:
    def test_complete(self):
        kept = dense_subgraph_peel(complete(6), 3)
        assert subset_density(complete(6), kept) == 1

    def test_star(self):
        star = Graph.from_edges(6, [(1, leaf) for leaf in range(2, 7)])
        kept = dense_subgraph_peel(star, 2)
        assert kept == (1, 6)  # leaves 2..5 peel first by label
        assert subset_density(star, kept) == 1 >= density(star)

    def test_c5_trace(self):
        # degrees all 2: remove 1, then endpoint 2, keeping the path 3-4-5
        assert dense_subgraph_peel(C5, 3) == (3, 4, 5)
        assert subset_density(C5, (3, 4, 5)) == Fraction(2, 3) >= density(C5)

    def test_never_decreases_density(self, rng):
        for trial in range(300):
            n = int(rng.integers(2, 16))
            g = erdos_renyi(n, float(rng.random()), seed=trial + 2000)
            k = int(rng.integers(2, n + 1))
            kept = dense_subgraph_peel(g, k)
            assert len(kept) == k
            assert subset_density(g, kept) >= density(g)


@given(st.integers(2, 9), st.floats(0, 1), st.integers(0, 10_000))
@settings(max_examples=60, deadline=None)
def test_peel_density_property(n, p, seed):
    g = erdos_renyi(n, p, seed)
    kept = dense_subgraph_peel(g, 2)
    assert subset_density(g, kept) >= density(g)


class TestGraphFile:
    def test_round_trip(self, rng):
        for trial in range(40):
            g = erdos_renyi(int(rng.integers(1, 15)), float(rng.random()), seed=trial)
            text = format_graph(g)
            assert parse_graph(text) == g
            assert format_graph(parse_graph(text)) == text

    def test_rejects_duplicate_edge(self):
        with pytest.raises(FormatError):
            parse_graph("p 3 2\ne 1 2\ne 1 2\n")

    def test_rejects_self_loop_and_order(self):
        with pytest.raises(FormatError):
            parse_graph("p 3 1\ne 2 1\n")

    def test_rejects_bad_count(self):
        with pytest.raises(FormatError):
            parse_graph("p 3 2\ne 1 2\n")
