"""LCS engines: pairwise DP, exact multi-string solvers, the trivial
single-symbol approximation, heuristic search, and subsequence/alignment
verification.

Symbol sequences are any iterables of ints; they are converted to int64
arrays at the kernel boundary.  All solvers are pure functions and safe
for concurrent use.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np

from . import kernels
from .errors import BudgetError, ParameterError, StructureError, WitnessError
from .seeds import HEURISTIC_STREAM, rng_for

STAR = None


def as_symbols(seq) -> np.ndarray:
    """Coerce a symbol sequence to a 1-D int64 array."""
    arr = np.asarray(seq, dtype=np.int64)
    if arr.ndim != 1:
        raise ParameterError("symbol sequence must be one-dimensional")
    return arr


class Solver(str, Enum):
    PRODUCT_DP = "PRODUCT_DP"
    SUBSET_ENUM = "SUBSET_ENUM"
    ONCE_PER_SYMBOL = "ONCE_PER_SYMBOL"
    SINGLE_SYMBOL_APPROX = "SINGLE_SYMBOL_APPROX"
    HEURISTIC = "HEURISTIC"


@dataclass(frozen=True)
class Alignment:
    """Monotone partial matching from positions of a source string into a
    target string; unmatched positions map to STAR (None)."""

    source_len: int
    mapping: tuple

    def matched(self):
        return [(i, j) for i, j in enumerate(self.mapping) if j is not STAR]

    def check(self, source, target) -> bool:
        """Invariants: matched symbols equal, targets strictly increasing."""
        s = list(source)
        t = list(target)
        if self.source_len != len(s) or len(self.mapping) != len(s):
            return False
        last = -1
        for i, j in enumerate(self.mapping):
            if j is STAR:
                continue
            if not (0 <= j < len(t)) or s[i] != t[j] or j <= last:
                return False
            last = j
        return True


@dataclass(frozen=True)
class MultiLcsResult:
    length: int
    witness: tuple
    exact: bool
    solver: Solver
    elapsed_ms: Optional[int] = None

    def to_record(self) -> dict:
        return {
            "length": self.length,
            "witness": list(self.witness),
            "exact": self.exact,
            "solver": self.solver.value,
            "elapsed_ms": self.elapsed_ms,
        }


def lcs_len(s1, s2) -> int:
    return kernels.lcs_len(as_symbols(s1), as_symbols(s2))


def lcs_pair(s1, s2):
    """Exact pairwise LCS length plus an alignment realizing it."""
    a, b = as_symbols(s1), as_symbols(s2)
    table = kernels.lcs_table(a, b)
    length = int(table[-1, -1])
    mapping = [STAR] * a.shape[0]
    i, j = a.shape[0], b.shape[0]
    while i > 0 and j > 0:
        if a[i - 1] == b[j - 1] and table[i, j] == table[i - 1, j - 1] + 1:
            mapping[i - 1] = j - 1
            i -= 1
            j -= 1
        elif table[i - 1, j] >= table[i, j - 1]:
            i -= 1
        else:
            j -= 1
    return length, Alignment(a.shape[0], tuple(mapping))


def is_common_subsequence(s, strings) -> bool:
    sub = as_symbols(s)
    return all(kernels.is_subsequence(sub, as_symbols(t)) for t in strings)


def embed(sub, target, policy: str = "leftmost") -> Alignment:
    """Greedy leftmost embedding of a known subsequence; deterministic."""
    if policy != "leftmost":
        raise ParameterError(f"unknown embed policy {policy!r}")
    a = as_symbols(sub)
    pos = kernels.embed_positions(a, as_symbols(target))
    if a.shape[0] and pos[-1] < 0:
        raise WitnessError("sequence does not embed in target")
    return Alignment(a.shape[0], tuple(int(p) for p in pos))


def _verify_result(witness, arrs):
    w = as_symbols(witness)
    for t in arrs:
        if not kernels.is_subsequence(w, t):
            raise AssertionError("solver produced an invalid witness")


# ---------------------------------------------------------------------------
# exact solvers
# ---------------------------------------------------------------------------

def multi_lcs_product_dp(strings, budget: int = 10**8) -> MultiLcsResult:
    """Exact multi-string LCS by DP over the product of prefix positions.

    Raises BudgetError when prod(1+len_i) exceeds ``budget``; callers fall
    back to subset enumeration or heuristic search.
    """
    arrs = [as_symbols(s) for s in strings]
    if not arrs:
        raise ParameterError("need at least one string")
    total = math.prod(len(a) + 1 for a in arrs)
    if total > budget:
        raise BudgetError(f"product DP needs {total} states, budget is {budget}")
    lens = np.array([len(a) for a in arrs], dtype=np.int64)
    sizes = lens + 1
    strides = np.empty(len(arrs), dtype=np.int64)
    acc = 1
    for i in range(len(arrs) - 1, -1, -1):
        strides[i] = acc
        acc *= int(sizes[i])
    flat = np.concatenate(arrs)
    starts = np.zeros(len(arrs), dtype=np.int64)
    np.cumsum(lens[:-1], out=starts[1:])
    dp = kernels.product_dp_suffix(flat, starts, lens, strides, total)
    witness = _walk_product_witness(dp, arrs, strides, lens)
    _verify_result(witness, arrs)
    return MultiLcsResult(len(witness), tuple(witness), True, Solver.PRODUCT_DP)


def _walk_product_witness(dp, arrs, strides, lens):
    """Greedy forward walk over the suffix DP, taking the smallest feasible
    symbol first; yields the lexicographically smallest optimal witness."""
    r = len(arrs)
    p = [0] * r
    remaining = int(dp[0])
    out = []
    while remaining > 0:
        for a in sorted(set(arrs[0][p[0]:].tolist())):
            q = []
            for i in range(r):
                ai = arrs[i]
                j = p[i]
                top = int(lens[i])
                while j < top and ai[j] != a:
                    j += 1
                if j == top:
                    break
                q.append(j)
            else:
                nf = sum((q[i] + 1) * int(strides[i]) for i in range(r))
                if int(dp[nf]) == remaining - 1:
                    out.append(int(a))
                    p = [x + 1 for x in q]
                    remaining -= 1
                    break
        else:
            raise AssertionError("suffix DP inconsistent with witness walk")
    return out


def multi_lcs_subset_enum(strings, max_n: int = 20) -> MultiLcsResult:
    """Exact multi-LCS for instances containing a strictly increasing string.

    Any common subsequence is then an increasing sequence over that
    string's symbols, so DFS over increasing symbol subsets (pruned by
    subsequence monotonicity: a failing prefix cannot extend to a common
    subsequence) enumerates every candidate.  Accepts a plain list of
    strings or an object exposing x_strings / x_prime_strings.
    """
    if hasattr(strings, "x_strings"):
        strings = list(strings.x_strings) + list(strings.x_prime_strings)
    arrs = [as_symbols(s) for s in strings]
    if not arrs:
        raise ParameterError("need at least one string")
    spine = None
    for a in arrs:
        if len(a) == 0 or np.all(a[1:] > a[:-1]):
            if spine is None or len(a) < len(spine):
                spine = a
    if spine is None:
        raise StructureError("no strictly increasing string to bound the search")
    universe = [int(x) for x in spine]
    if len(universe) > max_n:
        raise BudgetError(f"universe of {len(universe)} symbols exceeds limit {max_n}")
    best: list = []

    def extend(prefix, start):
        nonlocal best
        for t in range(start, len(universe)):
            cand = prefix + [universe[t]]
            if is_common_subsequence(cand, arrs):
                if len(cand) > len(best):
                    best = cand
                extend(cand, t + 1)

    extend([], 0)
    _verify_result(best, arrs)
    return MultiLcsResult(len(best), tuple(best), True, Solver.SUBSET_ENUM)


def multi_lcs_once_per_symbol(strings) -> MultiLcsResult:
    """Exact multi-LCS when every symbol occurs exactly once in every string.

    Each string is then a permutation of a common symbol set, and the LCS
    is a longest chain in the intersection of the position orders (a
    multi-dimensional longest increasing subsequence).
    """
    arrs = [as_symbols(s) for s in strings]
    if not arrs:
        raise ParameterError("need at least one string")
    base = set(int(x) for x in arrs[0])
    if len(base) != len(arrs[0]):
        raise StructureError("symbols repeat within a string")
    pos = []
    for a in arrs:
        syms = set(int(x) for x in a)
        if len(syms) != len(a) or syms != base:
            raise StructureError("strings are not permutations of one symbol set")
        pos.append({int(v): i for i, v in enumerate(a)})
    if not base:
        return MultiLcsResult(0, (), True, Solver.ONCE_PER_SYMBOL)

    def before(a, b):
        return all(p[a] < p[b] for p in pos)

    # longest chain starting at each symbol, filled in reverse order of the
    # first string so successors are ready
    f: dict = {}
    for a in (int(x) for x in arrs[0][::-1]):
        best = 0
        for b, fb in f.items():
            if fb > best and before(a, b):
                best = fb
        f[a] = 1 + best
    total = max(f.values())
    witness = []
    prev = None
    rem = total
    ordered = sorted(base)
    while rem > 0:
        for a in ordered:
            if f[a] == rem and (prev is None or before(prev, a)):
                witness.append(a)
                prev = a
                rem -= 1
                break
        else:
            raise AssertionError("chain reconstruction failed")
    _verify_result(witness, arrs)
    return MultiLcsResult(total, tuple(witness), True, Solver.ONCE_PER_SYMBOL)


# ---------------------------------------------------------------------------
# approximation and heuristic search
# ---------------------------------------------------------------------------

def single_symbol_approx(strings, sigma: int) -> MultiLcsResult:
    """Best constant-symbol common subsequence: for each symbol take the
    minimum count over the strings, return the maximum.  Guarantees a
    1/sigma fraction of the exact length for alphabets of size sigma."""
    arrs = [as_symbols(s) for s in strings]
    if not arrs:
        raise ParameterError("need at least one string")
    best_sym, best_cnt = None, 0
    for a in sorted(set(int(x) for x in arrs[0])):
        cnt = min(int(np.count_nonzero(arr == a)) for arr in arrs)
        if cnt > best_cnt:
            best_sym, best_cnt = a, cnt
    witness = tuple([best_sym] * best_cnt) if best_sym is not None else ()
    return MultiLcsResult(best_cnt, witness, False, Solver.SINGLE_SYMBOL_APPROX)


class _Frontier:
    """Per-string occurrence lists keyed by symbol, for next-match queries."""

    def __init__(self, arrs):
        self.tables = []
        for a in arrs:
            positions: dict = {}
            for idx, sym in enumerate(a.tolist()):
                positions.setdefault(sym, []).append(idx)
            self.tables.append(positions)

    def next_at(self, string_idx, symbol, start):
        seg = self.tables[string_idx].get(symbol)
        if seg is None:
            return -1
        j = bisect.bisect_left(seg, start)
        return seg[j] if j < len(seg) else -1


def heuristic_multi_lcs(strings, effort: int, seed: int) -> MultiLcsResult:
    """Randomized greedy rollouts with a verified witness; never exact.

    effort counts (candidate symbol, string) frontier lookups.  effort=0
    degenerates to the single-symbol baseline.  Restart r draws from the
    (seed, HEURISTIC_STREAM, r) stream.
    """
    arrs = [as_symbols(s) for s in strings]
    if not arrs:
        raise ParameterError("need at least one string")
    sigma_seen = int(np.unique(np.concatenate(arrs)).shape[0])
    base = single_symbol_approx(strings, max(sigma_seen, 1))
    best = list(base.witness)
    frontier = _Frontier(arrs)
    r = len(arrs)
    budget = int(effort)
    restart = 0
    window = 6
    while budget > 0:
        rng = rng_for(seed, HEURISTIC_STREAM, restart)
        restart += 1
        spent_before = budget
        p = [0] * r
        seq = []
        while budget > 0:
            pool = set()
            for i, a in enumerate(arrs):
                pool.update(a[p[i]:p[i] + window].tolist())
            feasible = []
            for sym in sorted(pool):
                adv = []
                for i in range(r):
                    budget -= 1
                    nxt = frontier.next_at(i, sym, p[i])
                    if nxt < 0:
                        adv = None
                        break
                    adv.append(nxt)
                if adv is not None:
                    worst = max(
                        (adv[i] - p[i]) / (len(arrs[i]) - p[i] + 1) for i in range(r)
                    )
                    feasible.append((worst, sym, adv))
            if not feasible:
                break
            feasible.sort()
            if rng.random() < 0.75 or len(feasible) == 1:
                _, sym, adv = feasible[0]
            else:
                _, sym, adv = feasible[int(rng.integers(1, min(3, len(feasible))))]
            seq.append(sym)
            p = [x + 1 for x in adv]
        if len(seq) > len(best) and is_common_subsequence(seq, arrs):
            best = seq
        if budget == spent_before:
            break
    _verify_result(best, arrs)
    return MultiLcsResult(len(best), tuple(best), False, Solver.HEURISTIC)
