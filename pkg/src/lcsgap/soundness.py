"""Executable soundness machinery for block instances.

Given a verified common subsequence L of a block instance, this module
decomposes it along the block windows of the last string (which is the
plain concatenation S_1..S_n), keeps the heavy blocks, prunes stretches
where heavy blocks are sparse, and extracts a size-k vertex set whose
exact density is reported together with a verdict.

The underlying argument quantifies over an arbitrary alignment; the
artifact fixes the greedy-leftmost embedding so every quantity is
computable.  The dense-case inequalities are therefore diagnostic probes,
not guaranteed invariants, on arbitrary decompositions.  All threshold
comparisons (beta*m, 2*alpha/beta, 2*beta*m*n, (gamma/2)^2) are exact
rationals, and the half-fraction alignment constant is 1/2 throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import ParameterError
from .graph import subset_density
from .lcs import embed, is_common_subsequence
from .reduction import BlockInstance, ReductionParams

EPSILON = Fraction(1, 2)

CONSISTENT = "CONSISTENT"
SOUNDNESS_WITNESS = "SOUNDNESS_WITNESS"


@dataclass(frozen=True)
class BlockDecomposition:
    z_blocks: tuple  # n symbol tuples, concatenating to L
    heavy_set: tuple  # ascending block indices with |Z_i| >= beta*m
    l1_length: int


@dataclass(frozen=True)
class IntervalCount:
    """Counts of heavy indices inside 1-based inclusive intervals."""

    prefix: tuple

    @classmethod
    def from_heavy(cls, heavy, n: int) -> "IntervalCount":
        hs = set(heavy)
        pref = [0] * (n + 1)
        for t in range(1, n + 1):
            pref[t] = pref[t - 1] + (1 if t in hs else 0)
        return cls(tuple(pref))

    def count(self, i: int, j: int) -> int:
        if j < i:
            return 0
        return self.prefix[j] - self.prefix[i - 1]


@dataclass(frozen=True)
class ExtractionReport:
    v_h: tuple
    v_h_pruned: tuple
    t_removed: tuple
    density_vh: Fraction
    density_pruned: Fraction
    padded_subset: tuple
    padded_density: Fraction
    verdict: str
    witness_length: int
    ell_no: Fraction
    density_threshold: Fraction

    def to_record(self) -> dict:
        def pair(f):
            return [f.numerator, f.denominator]

        return {
            "v_h": list(self.v_h),
            "v_h_pruned": list(self.v_h_pruned),
            "t_removed": list(self.t_removed),
            "density_vh": pair(self.density_vh),
            "density_pruned": pair(self.density_pruned),
            "padded_subset": list(self.padded_subset),
            "padded_density": pair(self.padded_density),
            "verdict": self.verdict,
            "witness_length": self.witness_length,
            "ell_no": pair(self.ell_no),
            "density_threshold": pair(self.density_threshold),
        }


def _require_params(inst: BlockInstance) -> ReductionParams:
    if inst.params is None:
        raise ParameterError("block instance carries no reduction params")
    if not (0 < inst.params.alpha < Fraction(1, 8)):
        raise ParameterError(f"alpha={inst.params.alpha} outside (0, 1/8)")
    return inst.params


def decompose(L, inst: BlockInstance) -> BlockDecomposition:
    """Partition L along the block windows of the concatenation string.

    L must verify as a common subsequence of all 2n strings.  The
    greedy-leftmost embedding into Y_n = S_1..S_n assigns each symbol of L
    to one m-wide window; Z_i collects the symbols landing in window i.
    """
    params = _require_params(inst)
    seq = tuple(int(x) for x in L)
    if not is_common_subsequence(seq, inst.all_strings):
        raise ParameterError("L is not a common subsequence of the instance")
    n, m = inst.n, inst.m
    y_n = inst.y_strings[n - 1]
    if len(y_n) != n * m:
        raise AssertionError("last block string is not the plain concatenation")
    positions = embed(seq, y_n).mapping
    blocks = [[] for _ in range(n)]
    for sym, pos in zip(seq, positions):
        blocks[pos // m].append(sym)
    z_blocks = tuple(tuple(b) for b in blocks)
    threshold = params.beta * m
    heavy = tuple(
        t for t in range(1, n + 1) if Fraction(len(z_blocks[t - 1])) >= threshold
    )
    l1 = sum(len(z_blocks[t - 1]) for t in heavy)
    return BlockDecomposition(z_blocks, heavy, l1)


def prune_sparse(dec: BlockDecomposition, params: ReductionParams):
    """Three-step sparse-stretch removal.

    Starting from an empty removal set, sweep the heavy indices in
    ascending order; for each i find the largest j > i whose interval
    [i, j] contains heavy blocks at linear density <= 2*alpha/beta and
    mark every heavy index inside.  Returns (t_removed, v_h_pruned), both
    ascending vertex tuples.
    """
    if not (0 < params.alpha < Fraction(1, 8)):
        raise ParameterError(f"alpha={params.alpha} outside (0, 1/8)")
    n = len(dec.z_blocks)
    heavy = list(dec.heavy_set)
    counts = IntervalCount.from_heavy(heavy, n)
    thr = 2 * params.alpha / params.beta
    removed = set()
    for i in heavy:
        for j in range(n, i, -1):
            if Fraction(counts.count(i, j)) <= thr * (j - i + 1):
                removed.update(t for t in heavy if i <= t <= j)
                break
    pruned = tuple(t for t in heavy if t not in removed)
    return tuple(sorted(removed)), pruned


def _greedy_pad(g, pool, k):
    chosen = set(pool)
    while len(chosen) < k:
        best_v, best_gain = None, -1
        for v in range(1, g.n + 1):
            if v in chosen:
                continue
            gain = sum(1 for u in g.adjacency[v] if u in chosen)
            if gain > best_gain:
                best_v, best_gain = v, gain
        chosen.add(best_v)
    return chosen


def _peel_protected(g, pool, k, protected):
    alive = set(pool)
    deg = {v: sum(1 for u in g.adjacency[v] if u in alive) for v in alive}
    while len(alive) > k:
        removable = [v for v in alive if v not in protected]
        victim = min(removable, key=lambda v: (deg[v], v))
        alive.remove(victim)
        for u in g.adjacency[victim]:
            if u in alive:
                deg[u] -= 1
    return alive


def extract_dense_subgraph(L, inst: BlockInstance) -> ExtractionReport:
    """Decompose, prune, and produce a size-k vertex set with its exact density.

    The heavy-block vertices are padded up to k greedily (smallest-label
    vertices maximizing marginal edges) when too few, or peeled down by
    min-degree removal when too many (keeping the pruned set whenever it
    fits, so the report's padded set always contains it).  The verdict is
    SOUNDNESS_WITNESS iff |L| exceeds the no-side threshold AND the padded
    set reaches density (gamma/2)^2 -- the configuration that cannot occur
    on a genuine NO instance.
    """
    params = _require_params(inst)
    dec = decompose(L, inst)
    t_removed, v_h_pruned = prune_sparse(dec, params)
    v_h = dec.heavy_set
    g = inst.symbolic.source
    k = params.k

    def dens(vs):
        return subset_density(g, vs) if len(vs) >= 2 else Fraction(0)

    pool = set(v_h)
    if len(pool) < k:
        pool = _greedy_pad(g, pool, k)
    if len(pool) > k:
        protected = set(v_h_pruned) if len(v_h_pruned) <= k else set()
        pool = _peel_protected(g, pool, k, protected)
    padded = tuple(sorted(pool))
    padded_density = dens(padded)
    threshold = (params.gamma / 2) ** 2
    length = len(tuple(L))
    verdict = (
        SOUNDNESS_WITNESS
        if Fraction(length) > params.ell_no and padded_density >= threshold
        else CONSISTENT
    )
    return ExtractionReport(
        v_h=v_h,
        v_h_pruned=v_h_pruned,
        t_removed=t_removed,
        density_vh=dens(v_h),
        density_pruned=dens(v_h_pruned),
        padded_subset=padded,
        padded_density=padded_density,
        verdict=verdict,
        witness_length=length,
        ell_no=params.ell_no,
        density_threshold=threshold,
    )


def check_dense_case_bounds(dec: BlockDecomposition, inst: BlockInstance, i: int) -> bool:
    """Diagnostic probe of the two dense-case neighbor-count inequalities
    at heavy index i:

        |V_H^{>i} & N_>(v_i)| + (beta/2alpha)|V_H^{>i} \\ N_>(v_i)| <= 2(n-i)+1
        |V_H^{<i} & N_<(v_i)| + (beta/2alpha)|V_H^{<i} \\ N_<(v_i)| <= 2i-1

    Guaranteed only under the dense-case alignment preconditions, so this
    returns whether both hold rather than asserting them.
    """
    params = _require_params(inst)
    heavy = set(dec.heavy_set)
    if i not in heavy:
        raise ParameterError(f"index {i} is not in the heavy set")
    g = inst.symbolic.source
    n = inst.n
    coef = params.beta / (2 * params.alpha)
    above = {t for t in heavy if t > i}
    below = {t for t in heavy if t < i}
    na = set(g.neighbors_above(i))
    nb = set(g.neighbors_below(i))
    lhs_fwd = Fraction(len(above & na)) + coef * len(above - na)
    lhs_back = Fraction(len(below & nb)) + coef * len(below - nb)
    return lhs_fwd <= 2 * (n - i) + 1 and lhs_back <= 2 * i - 1


def epsilon_aligned_sides(positions, lo: int, hi: int, eps: Fraction = EPSILON):
    """Which half of a block's matched positions lands inside [lo, hi).

    Returns (first_ok, last_ok) for the first/last ceil(eps*|Z|) matched
    positions; the extraction pipeline records both rather than fixing a
    side.  Empty position lists are vacuously aligned on both sides.
    """
    pts = [int(p) for p in positions]
    z = len(pts)
    if z == 0:
        return True, True
    eps = Fraction(eps)
    cnt = -((-eps.numerator * z) // eps.denominator)  # ceil(eps * z)
    first_ok = all(lo <= p < hi for p in pts[:cnt])
    last_ok = all(lo <= p < hi for p in pts[-cnt:])
    return first_ok, last_ok
