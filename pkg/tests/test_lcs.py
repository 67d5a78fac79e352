import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcsgap import (
    BudgetError,
    Graph,
    ParameterError,
    StructureError,
    embed,
    heuristic_multi_lcs,
    is_common_subsequence,
    jiang_li,
    lcs_len,
    lcs_pair,
    multi_lcs_once_per_symbol,
    multi_lcs_product_dp,
    multi_lcs_subset_enum,
    single_symbol_approx,
)
from lcsgap.lcs import Solver

from conftest import brute_lcs, ed_indel, max_clique_size, random_graph


def chars(s):
    return [ord(c) for c in s]


K3 = jiang_li(Graph.from_edges(3, [(1, 2), (1, 3), (2, 3)]))


class TestLcsPair:
    def test_identical(self):
        length, al = lcs_pair(chars("abc"), chars("abc"))
        assert length == 3
        assert al.mapping == (0, 1, 2)
        assert al.check(chars("abc"), chars("abc"))

    def test_reversal(self):
        assert lcs_pair(chars("abc"), chars("cba"))[0] == 1

    def test_k3_cross(self):
        # X_1 vs X'_2 of the triangle instance
        length, al = lcs_pair([2, 3, 1, 2, 3], [1, 2, 1, 3])
        assert length == 3
        assert al.check([2, 3, 1, 2, 3], [1, 2, 1, 3])

    def test_empty_inputs(self):
        assert lcs_pair([], [])[0] == 0
        length, al = lcs_pair([], chars("abc"))
        assert length == 0 and al.mapping == ()
        assert lcs_pair(chars("abc"), [])[0] == 0

    def test_symmetry_and_brute(self, rng):
        for _ in range(120):
            a = rng.integers(0, 4, int(rng.integers(0, 8))).tolist()
            b = rng.integers(0, 4, int(rng.integers(0, 8))).tolist()
            l1, al = lcs_pair(a, b)
            assert l1 == lcs_pair(b, a)[0]
            assert l1 == brute_lcs(a, b)
            assert al.check(a, b)
            assert sum(1 for x in al.mapping if x is not None) == l1

    def test_lcs_edit_distance_identity(self, rng):
        # indel-only edit distance determines the LCS: ED = |a| + |b| - 2|LCS|,
        # checked against a separate DP
        for _ in range(150):
            a = rng.integers(0, 5, int(rng.integers(0, 30))).tolist()
            b = rng.integers(0, 5, int(rng.integers(0, 30))).tolist()
            assert ed_indel(a, b) == len(a) + len(b) - 2 * lcs_len(a, b)


@given(
    st.lists(st.integers(0, 3), max_size=12),
    st.lists(st.integers(0, 3), max_size=12),
)
@settings(max_examples=150, deadline=None)
def test_lcs_ed_identity_property(a, b):
    assert ed_indel(a, b) == len(a) + len(b) - 2 * lcs_len(a, b)


class TestVerifier:
    def test_empty_always(self):
        assert is_common_subsequence([], [chars("xyz"), []])

    def test_k3_witness(self):
        assert is_common_subsequence([1, 2, 3], K3.all_strings)

    def test_order_matters(self):
        assert not is_common_subsequence([2, 1], [[1, 2], [1, 2]])


class TestEmbed:
    def test_identity(self):
        al = embed(chars("ab"), chars("ab"))
        assert al.mapping == (0, 1)

    def test_leftmost(self):
        assert embed(chars("ab"), chars("aabb")).mapping == (0, 2)

    def test_empty(self):
        assert embed([], chars("anything")).mapping == ()

    def test_not_subsequence(self):
        from lcsgap import WitnessError

        with pytest.raises(WitnessError):
            embed([2, 1], [1, 2])


class TestProductDp:
    def test_matches_pairwise(self, rng):
        for _ in range(500):
            a = rng.integers(0, 5, int(rng.integers(0, 12))).tolist()
            b = rng.integers(0, 5, int(rng.integers(0, 12))).tolist()
            assert multi_lcs_product_dp([a, b]).length == lcs_len(a, b)

    def test_triple(self):
        r = multi_lcs_product_dp([chars("ab")] * 3)
        assert r.length == 2 and r.exact and r.solver == Solver.PRODUCT_DP

    def test_k3_instance(self):
        r = multi_lcs_product_dp(K3.all_strings)
        assert r.length == 3
        assert r.witness == (1, 2, 3)

    def test_budget_error(self):
        with pytest.raises(BudgetError):
            multi_lcs_product_dp([[1] * 40] * 8, budget=10**6)

    def test_witness_is_lex_smallest(self):
        # both (1,3) and (2,3) realize the optimum; expect the smaller
        r = multi_lcs_product_dp([[1, 2, 3], [2, 1, 3]])
        assert r.length == 2
        assert r.witness == (1, 3)

    def test_witness_always_verifies(self, rng):
        for _ in range(60):
            strs = [
                rng.integers(0, 4, int(rng.integers(0, 8))).tolist()
                for _ in range(int(rng.integers(1, 4)))
            ]
            r = multi_lcs_product_dp(strs)
            assert is_common_subsequence(r.witness, strs)
            assert len(r.witness) == r.length


class TestSubsetEnum:
    def test_k3(self):
        r = multi_lcs_subset_enum(K3)
        assert r.length == 3 and r.witness == (1, 2, 3)

    def test_empty_graph_n4(self):
        inst = jiang_li(Graph.from_edges(4, []))
        assert multi_lcs_subset_enum(inst).length == 1
        assert multi_lcs_product_dp(inst.all_strings).length == 1

    def test_equals_max_clique(self, rng):
        for trial in range(60):
            g = random_graph(rng, n_max=10, trial=trial)
            inst = jiang_li(g)
            assert multi_lcs_subset_enum(inst).length == max_clique_size(g)

    def test_requires_increasing_spine(self):
        with pytest.raises(StructureError):
            multi_lcs_subset_enum([[2, 1], [2, 1]])

    def test_lex_smallest_among_ties(self):
        # two disjoint edges: {1,2} and {3,4} both realize length 2
        inst = jiang_li(Graph.from_edges(4, [(1, 2), (3, 4)]))
        assert multi_lcs_subset_enum(inst).witness == (1, 2)

    def test_budget(self):
        inst = jiang_li(Graph.from_edges(25, []))
        with pytest.raises(BudgetError):
            multi_lcs_subset_enum(inst, max_n=20)


class TestOncePerSymbol:
    def test_identical_permutations(self):
        r = multi_lcs_once_per_symbol([[3, 1, 2]] * 4)
        assert r.length == 3 and r.witness == (3, 1, 2)

    def test_reversal(self):
        assert multi_lcs_once_per_symbol([[1, 2, 3], [3, 2, 1]]).length == 1

    def test_matches_product_dp(self, rng):
        for _ in range(200):
            n = int(rng.integers(1, 9))
            strs = [(rng.permutation(n) + 1).tolist() for _ in range(3)]
            r = multi_lcs_once_per_symbol(strs)
            assert r.length == multi_lcs_product_dp(strs).length
            assert is_common_subsequence(r.witness, strs)

    def test_rejects_repeats(self):
        with pytest.raises(StructureError):
            multi_lcs_once_per_symbol([[1, 1, 2]])

    def test_rejects_mismatched_sets(self):
        with pytest.raises(StructureError):
            multi_lcs_once_per_symbol([[1, 2], [1, 3]])

    def test_lex_smallest_among_ties(self):
        # chains (1,2) and (3,4) both have length 2; expect the smaller
        r = multi_lcs_once_per_symbol([[1, 2, 3, 4], [3, 4, 1, 2]])
        assert r.length == 2 and r.witness == (1, 2)


class TestSingleSymbol:
    def test_counting(self):
        r = single_symbol_approx([chars("aab"), chars("aba")], 2)
        assert r.length == 2
        assert r.witness == (ord("a"), ord("a"))

    def test_single_string(self):
        assert single_symbol_approx([chars("abc")], 3).length == 1

    def test_k3_equality_case(self):
        # exact is 3 over a 3-symbol alphabet; the bound holds with equality
        r = single_symbol_approx(K3.all_strings, 3)
        assert r.length == 1
        assert r.length * 3 >= 3

    def test_guarantee_against_exact(self, rng):
        for _ in range(100):
            sigma = int(rng.integers(1, 5))
            strs = [
                rng.integers(0, sigma, int(rng.integers(1, 8))).tolist()
                for _ in range(int(rng.integers(1, 4)))
            ]
            exact = multi_lcs_product_dp(strs).length
            approx = single_symbol_approx(strs, sigma)
            assert approx.length * sigma >= exact
            assert is_common_subsequence(approx.witness, strs)


class TestHeuristic:
    def test_never_beats_exact(self, rng):
        for trial in range(30):
            strs = [
                rng.integers(0, 4, int(rng.integers(1, 10))).tolist()
                for _ in range(int(rng.integers(1, 4)))
            ]
            exact = multi_lcs_product_dp(strs).length
            h = heuristic_multi_lcs(strs, effort=2000, seed=trial)
            assert h.length <= exact
            assert not h.exact
            assert is_common_subsequence(h.witness, strs)

    def test_identical_strings_full_length(self):
        s = chars("abcabc")
        h = heuristic_multi_lcs([s, s, s], effort=5000, seed=0)
        assert h.length == len(s)

    def test_effort_zero_is_baseline(self):
        strs = [chars("aab"), chars("aba")]
        base = single_symbol_approx(strs, 2)
        h = heuristic_multi_lcs(strs, effort=0, seed=1)
        assert h.length >= base.length

    def test_deterministic(self):
        strs = [chars("abacada"), chars("badacaa"), chars("acadaba")]
        a = heuristic_multi_lcs(strs, effort=3000, seed=9)
        b = heuristic_multi_lcs(strs, effort=3000, seed=9)
        assert a == b


class TestSolverAgreement:
    def test_product_vs_subset_on_instances(self, rng):
        for trial in range(200):
            g = random_graph(rng, n_max=4, trial=trial)
            inst = jiang_li(g)
            assert (
                multi_lcs_product_dp(inst.all_strings).length
                == multi_lcs_subset_enum(inst).length
            )
