"""Shared fixtures and independent oracles.

The oracles here deliberately re-derive quantities by different means
than the library (clique search instead of subsequence enumeration,
subsequence enumeration instead of DP, insertion/deletion edit distance
instead of LCS) so agreement is meaningful.
"""

import itertools

import numpy as np
import pytest

from lcsgap import Graph, erdos_renyi, plant_clique


def max_clique_size(g: Graph) -> int:
    """Branch-and-bound clique search; independent of any LCS machinery."""
    best = 0
    adj = g.adjacency

    def grow(cands, size):
        nonlocal best
        if size + len(cands) <= best:
            return
        if not cands:
            best = max(best, size)
            return
        for i, v in enumerate(cands):
            grow([u for u in cands[i + 1:] if u in adj[v]], size + 1)

    grow(list(range(1, g.n + 1)), 0)
    return best


def brute_lcs(a, b) -> int:
    """LCS by enumerating subsequences of the shorter string (tiny inputs)."""
    a, b = (list(a), list(b)) if len(a) <= len(b) else (list(b), list(a))
    for r in range(len(a), 0, -1):
        for comb in itertools.combinations(range(len(a)), r):
            sub = [a[i] for i in comb]
            it = iter(b)
            if all(any(x == y for y in it) for x in sub):
                return r
    return 0


def ed_indel(a, b) -> int:
    """Insertion/deletion-only edit distance, straight DP."""
    a, b = list(a), list(b)
    la, lb = len(a), len(b)
    dp = list(range(lb + 1))
    for i in range(1, la + 1):
        prev_diag = dp[0]
        dp[0] = i
        for j in range(1, lb + 1):
            cur = dp[j]
            if a[i - 1] == b[j - 1]:
                dp[j] = prev_diag
            else:
                dp[j] = 1 + min(dp[j], dp[j - 1])
            prev_diag = cur
    return dp[lb]


def random_graph(rng, n_max=12, planted_every=3, trial=0) -> Graph:
    """Mixed ER densities and planted cliques, n in [2, n_max]."""
    n = int(rng.integers(2, n_max + 1))
    if trial % planted_every == planted_every - 1:
        k = int(rng.integers(1, n + 1))
        g, _ = plant_clique(n, k, float(rng.random() * 0.5), seed=trial)
        return g
    return erdos_renyi(n, float(rng.random()), seed=trial)


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
