"""Families of n length-m strings over a small alphabet with a certified
pairwise-LCS bound alpha*m, plus a long-distance synchronization-string
verifier and the alternate-block extraction that turns a verified string
into such a family.

Certification is always by explicit pairwise DP over all C(n,2) pairs,
never by a probabilistic argument: downstream soundness analysis consumes
the bound as a hard guarantee.  Symbols are integers 0..sigma_prime-1.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from . import kernels
from .errors import BudgetError, CertificationError, FormatError, ParameterError
from .seeds import FAMILY_STREAM, GREEDY_STREAM, rng_for


@dataclass(frozen=True)
class StringFamily:
    n: int
    m: int
    sigma_prime: int
    strings: tuple  # n tuples of m ints
    alpha: Fraction
    certified: bool

    def matrix(self) -> np.ndarray:
        return np.array(self.strings, dtype=np.int64).reshape(self.n, self.m)


@dataclass(frozen=True)
class SyncStringReport:
    is_valid: bool
    violating_quadruple: Optional[tuple]  # (i, j, i', j'), 1-based inclusive
    c: Fraction
    epsilon: Fraction


def _validate_family_params(n, alpha, sigma_prime, m):
    if n < 1:
        raise ParameterError("family size must be >= 1")
    if sigma_prime < 2:
        raise ParameterError("alphabet size must be >= 2")
    if m < 1:
        raise ParameterError("string length must be >= 1")
    if not (0 <= alpha <= 1):
        raise ParameterError("alpha must lie in [0, 1]")


def worst_pair(mat: np.ndarray):
    """Max pairwise LCS over the rows of mat: (value, (i, j)) with i<j 1-based."""
    n = mat.shape[0]
    if n < 2:
        return 0, None
    vals = kernels.pairwise_lcs(mat)
    arg = int(np.argmax(vals))
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            if idx == arg:
                return int(vals[arg]), (i + 1, j + 1)
            idx += 1
    raise AssertionError("unreachable")


def certify(mat: np.ndarray, alpha: Fraction, m: int):
    """(ok, worst_value, worst_pair) for the bound max LCS <= alpha*m."""
    value, pair = worst_pair(mat)
    return Fraction(value) <= alpha * m, value, pair


def _family_from_matrix(mat, sigma_prime, alpha, certified):
    n, m = mat.shape
    strings = tuple(tuple(int(x) for x in row) for row in mat)
    return StringFamily(n, m, sigma_prime, strings, alpha, certified)


def random_family(
    n: int,
    alpha: Fraction,
    sigma_prime: int,
    m: int,
    seed: int,
    max_retries: int = 8,
) -> StringFamily:
    """Uniform i.i.d. strings, certified by exhaustive pairwise DP.

    The whole family is resampled on certification failure, up to
    max_retries attempts; exhaustion raises CertificationError carrying
    the worst observed pair (the bound was too aggressive for this
    alphabet and length).
    """
    _validate_family_params(n, alpha, sigma_prime, m)
    if max_retries < 1:
        raise ParameterError("max_retries must be >= 1")
    alpha = Fraction(alpha)
    worst_seen = (-1, None)
    for attempt in range(max_retries):
        rng = rng_for(seed, FAMILY_STREAM, attempt)
        mat = rng.integers(0, sigma_prime, size=(n, m), dtype=np.int64)
        ok, value, pair = certify(mat, alpha, m)
        if ok:
            return _family_from_matrix(mat, sigma_prime, alpha, True)
        if value > worst_seen[0]:
            worst_seen = (value, pair)
    raise CertificationError(
        f"no family certified at alpha={alpha} after {max_retries} attempts; "
        f"worst pair {worst_seen[1]} had LCS {worst_seen[0]} > {alpha * m}",
        worst_pair=worst_seen[1],
        worst_lcs=worst_seen[0],
    )


def greedy_family(
    n: int,
    alpha: Fraction,
    sigma_prime: int,
    m: int,
    candidate_budget: Optional[int] = None,
) -> StringFamily:
    """Deterministic accept/reject construction.

    Candidate t comes from the fixed (0, GREEDY_STREAM, t) stream and is
    accepted iff its LCS against every accepted string is <= alpha*m.
    Same inputs always give the same family.
    """
    _validate_family_params(n, alpha, sigma_prime, m)
    alpha = Fraction(alpha)
    budget = candidate_budget if candidate_budget is not None else 64 * n
    accepted = np.empty((n, m), dtype=np.int64)
    count = 0
    for t in range(budget):
        if count == n:
            break
        cand = rng_for(0, GREEDY_STREAM, t).integers(0, sigma_prime, size=m, dtype=np.int64)
        ok = all(
            Fraction(kernels.lcs_len(accepted[i], cand)) <= alpha * m
            for i in range(count)
        )
        if ok:
            accepted[count] = cand
            count += 1
    if count < n:
        raise BudgetError(
            f"greedy construction accepted only {count}/{n} strings "
            f"within {budget} candidates (alpha={alpha}, sigma'={sigma_prime}, m={m})"
        )
    mat = accepted[:n]
    ok, value, pair = certify(mat, alpha, m)
    if not ok:
        raise AssertionError(f"greedy family failed re-certification at pair {pair}")
    return _family_from_matrix(mat, sigma_prime, alpha, True)


# ---------------------------------------------------------------------------
# long-distance synchronization strings
# ---------------------------------------------------------------------------

def _indicator_table(n: int, c: Fraction):
    """ind[t] = 1 iff t > c*log2(n), decided exactly: 2^(t*q) > n^p for c=p/q."""
    p, q = c.numerator, c.denominator
    ind = np.zeros(2 * n + 1, dtype=np.int8)
    for t in range(2 * n + 1):
        if 2 ** (t * q) > n**p:
            ind[t] = 1
    return ind


def verify_sync_string(
    s,
    c: Fraction,
    epsilon: Fraction,
    budget: int = 200_000_000,
    scanner: str = "forward",
) -> SyncStringReport:
    """Exhaustive check of the long-distance synchronization property.

    Scans every interval quadruple 1 <= i < j <= i' < j' <= n that is
    constrained (always, when the combined interval length j+j'-i-i'
    exceeds c*log2 n; otherwise only touching pairs with j = i') and
    requires LCS(s[i,j], s[i',j']) <= epsilon*(j+j'-i-i').  The log base
    is 2 and the side condition is decided in exact integer arithmetic.

    ``scanner`` selects one of two independently organized scans
    ("forward": anchored at interval starts; "reverse": anchored at ends);
    both return the lexicographically smallest violating quadruple.
    """
    arr = np.asarray(s, dtype=np.int64)
    n = arr.shape[0]
    if n < 2:
        raise ParameterError("synchronization check needs |s| >= 2")
    c = Fraction(c)
    epsilon = Fraction(epsilon)
    if c < 0:
        raise ParameterError("c must be non-negative")
    if not (0 < epsilon < 1):
        raise ParameterError("epsilon must lie in (0, 1)")
    if n**4 // 24 > budget:
        raise BudgetError(f"|s|={n} needs ~{n**4 // 24} DP cells, budget is {budget}")
    ind = _indicator_table(n, c)
    if scanner == "forward":
        quad = kernels.sync_scan_fwd(arr, epsilon.numerator, epsilon.denominator, ind)
    elif scanner == "reverse":
        quad = kernels.sync_scan_rev(arr, epsilon.numerator, epsilon.denominator, ind)
    else:
        raise ParameterError(f"unknown scanner {scanner!r}")
    if quad[0] < 0:
        return SyncStringReport(True, None, c, epsilon)
    one_based = tuple(int(x) + 1 for x in quad)
    return SyncStringReport(False, one_based, c, epsilon)


def check_sync_block_params(alpha: Fraction, n: int, m: int) -> bool:
    """Exact test of m > 2*alpha^-2*log2(n), the block length needed for the
    alternate-block extraction to inherit the pairwise bound."""
    alpha = Fraction(alpha)
    if alpha <= 0:
        raise ParameterError("alpha must be positive")
    a, b = alpha.numerator, alpha.denominator
    if n == 1:
        return True
    # m > 2 (b/a)^2 log2(n)  <=>  2^(m a^2) > n^(2 b^2)
    return 2 ** (m * a * a) > n ** (2 * b * b)


def alternate_blocks(s, n: int, m: int, alpha: Optional[Fraction] = None) -> StringFamily:
    """Family of every other m-length block of s: block t covers positions
    (2t-2)m+1 .. (2t-1)m (1-based).

    The pairwise bound is established by explicit DP regardless of where s
    came from; with alpha=None the tightest certifiable bound is used.
    """
    arr = np.asarray(s, dtype=np.int64)
    if n < 1 or m < 1:
        raise ParameterError("need n >= 1 and m >= 1")
    if arr.shape[0] < (2 * n - 1) * m:
        raise ParameterError(
            f"string of length {arr.shape[0]} too short for {n} alternating "
            f"blocks of length {m} (needs {(2 * n - 1) * m})"
        )
    mat = np.stack([arr[(2 * t - 2) * m:(2 * t - 1) * m] for t in range(1, n + 1)])
    sigma_prime = max(2, int(mat.max()) + 1 if mat.size else 2)
    value, _ = worst_pair(mat)
    if alpha is None:
        alpha_eff = Fraction(value, m)
        certified = True
    else:
        alpha_eff = Fraction(alpha)
        certified = Fraction(value) <= alpha_eff * m
    return _family_from_matrix(mat, sigma_prime, alpha_eff, certified)


# ---------------------------------------------------------------------------
# family file format: header
#   family <n> <m> <sigma_prime> <alpha_num>/<alpha_den> <certified>
# then n lines of m space-separated integer symbols.
# ---------------------------------------------------------------------------

def format_family(fam: StringFamily) -> str:
    head = (
        f"family {fam.n} {fam.m} {fam.sigma_prime} "
        f"{fam.alpha.numerator}/{fam.alpha.denominator} "
        f"{'true' if fam.certified else 'false'}"
    )
    lines = [head]
    lines.extend(" ".join(str(x) for x in row) for row in fam.strings)
    return "\n".join(lines) + "\n"


def parse_family(text: str) -> StringFamily:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("family "):
        raise FormatError("family file must start with a 'family' header")
    parts = lines[0].split()
    if len(parts) != 6:
        raise FormatError(f"bad family header {lines[0]!r}")
    try:
        n, m, sigma_prime = int(parts[1]), int(parts[2]), int(parts[3])
        num, den = parts[4].split("/")
        alpha = Fraction(int(num), int(den))
        certified = {"true": True, "false": False}[parts[5]]
    except (ValueError, KeyError) as exc:
        raise FormatError(f"bad family header {lines[0]!r}") from exc
    if len(lines) - 1 != n:
        raise FormatError(f"header promises {n} strings, file has {len(lines) - 1}")
    strings = []
    for ln in lines[1:]:
        row = tuple(int(x) for x in ln.split())
        if len(row) != m:
            raise FormatError(f"string of length {len(row)}, header says {m}")
        if any(x < 0 or x >= sigma_prime for x in row):
            raise FormatError("symbol outside alphabet range")
        strings.append(row)
    return StringFamily(n, m, sigma_prime, tuple(strings), alpha, certified)


def write_family(fam: StringFamily, path) -> None:
    with open(path, "w", encoding="ascii") as fh:
        fh.write(format_family(fam))


def read_family(path) -> StringFamily:
    with open(path, "r", encoding="ascii") as fh:
        return parse_family(fh.read())
