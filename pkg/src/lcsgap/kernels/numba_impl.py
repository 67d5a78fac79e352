"""JIT-compiled hot kernels (selected unless LCSGAP_PURE_NUMPY=1).

Every function here has a drop-in twin in ``numpy_impl`` with identical
semantics; the dispatcher in ``__init__`` picks one at import time.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def _lcs_len_core(a, b, prev, cur):
    la = a.shape[0]
    lb = b.shape[0]
    for j in range(lb + 1):
        prev[j] = 0
    for i in range(la):
        cur[0] = 0
        ai = a[i]
        for j in range(1, lb + 1):
            if ai == b[j - 1]:
                v = prev[j - 1] + 1
            else:
                v = prev[j]
                if cur[j - 1] > v:
                    v = cur[j - 1]
            cur[j] = v
        for j in range(lb + 1):
            prev[j] = cur[j]
    return prev[lb]


@njit(cache=True)
def lcs_len(a, b):
    lb = b.shape[0]
    prev = np.empty(lb + 1, np.int32)
    cur = np.empty(lb + 1, np.int32)
    return int(_lcs_len_core(a, b, prev, cur))


@njit(cache=True)
def lcs_table(a, b):
    la = a.shape[0]
    lb = b.shape[0]
    t = np.zeros((la + 1, lb + 1), np.int32)
    for i in range(1, la + 1):
        ai = a[i - 1]
        for j in range(1, lb + 1):
            if ai == b[j - 1]:
                t[i, j] = t[i - 1, j - 1] + 1
            else:
                x = t[i - 1, j]
                y = t[i, j - 1]
                t[i, j] = x if x >= y else y
    return t


@njit(cache=True)
def pairwise_lcs(mat):
    """Condensed vector of LCS lengths over all row pairs (i<j) of mat."""
    n, m = mat.shape
    out = np.empty(n * (n - 1) // 2, np.int64)
    prev = np.empty(m + 1, np.int32)
    cur = np.empty(m + 1, np.int32)
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            out[idx] = _lcs_len_core(mat[i], mat[j], prev, cur)
            idx += 1
    return out


@njit(cache=True)
def is_subsequence(sub, target):
    p = 0
    ls = sub.shape[0]
    if ls == 0:
        return True
    for t in range(target.shape[0]):
        if target[t] == sub[p]:
            p += 1
            if p == ls:
                return True
    return False


@njit(cache=True)
def embed_positions(sub, target):
    """Leftmost-greedy embedding; positions[i] = -1 past the failure point."""
    ls = sub.shape[0]
    pos = np.full(ls, -1, np.int64)
    p = 0
    for t in range(target.shape[0]):
        if p == ls:
            break
        if target[t] == sub[p]:
            pos[p] = t
            p += 1
    return pos


@njit(cache=True)
def product_dp_suffix(flat, starts, lens, strides, total):
    """Suffix-anchored LCS DP over the product of string positions.

    dp[state] = LCS of the suffixes starting at the decoded position
    vector.  States are flat indices over prod(lens+1); digit i is the
    position in string i.
    """
    r = starts.shape[0]
    dp = np.zeros(total, np.int32)
    for st in range(total - 2, -1, -1):
        rem = st
        best = 0
        exhausted = False
        allmatch = True
        sym0 = np.int64(0)
        for i in range(r):
            d = rem // strides[i]
            rem = rem % strides[i]
            if d == lens[i]:
                exhausted = True
                break
            s = flat[starts[i] + d]
            if i == 0:
                sym0 = s
            elif s != sym0:
                allmatch = False
            v = dp[st + strides[i]]
            if v > best:
                best = v
        if exhausted:
            continue
        if allmatch:
            adv = st
            for i in range(r):
                adv += strides[i]
            w = dp[adv] + 1
            if w > best:
                best = w
        dp[st] = best
    return dp


@njit(cache=True)
def sync_scan_fwd(s, eps_num, eps_den, ind):
    """Interval-quadruple scan anchored at interval starts.

    For each start pair (i, ip) one suffix-vs-suffix DP yields every
    LCS(s[i..j], s[ip..jp]) with j in (i, ip] and jp > ip.  A quadruple is
    constrained when ind[t]=1 (t = (j-i)+(jp-ip)) or when j == ip.
    Returns the lexicographically smallest violating (i, j, ip, jp),
    0-based inclusive, or (-1,-1,-1,-1).
    """
    n = s.shape[0]
    bi, bj, bp, bq = np.int64(-1), np.int64(-1), np.int64(-1), np.int64(-1)
    prev = np.empty(n + 1, np.int32)
    cur = np.empty(n + 1, np.int32)
    for i in range(n - 2):
        for ip in range(i + 1, n - 1):
            w = n - ip
            for x in range(w + 1):
                prev[x] = 0
            for a in range(i, ip + 1):
                cur[0] = 0
                ca = s[a]
                for bx in range(1, w + 1):
                    if ca == s[ip + bx - 1]:
                        v = prev[bx - 1] + 1
                    else:
                        v = prev[bx]
                        if cur[bx - 1] > v:
                            v = cur[bx - 1]
                    cur[bx] = v
                    if a > i and bx >= 2:
                        b = ip + bx - 1
                        t = (a - i) + (b - ip)
                        if ind[t] == 1 or a == ip:
                            if v * eps_den > eps_num * t:
                                if (
                                    bi < 0
                                    or i < bi
                                    or (i == bi and (a < bj
                                        or (a == bj and (ip < bp
                                            or (ip == bp and b < bq)))))
                                ):
                                    bi, bj, bp, bq = i, a, ip, b
                for x in range(w + 1):
                    prev[x] = cur[x]
    return bi, bj, bp, bq


@njit(cache=True)
def sync_scan_rev(s, eps_num, eps_den, ind):
    """Independent re-scan anchored at interval ends.

    For each end pair (j, jp) one reverse DP yields every
    LCS(s[i..j], s[ip..jp]) with i < j and ip in [j, jp).  Must agree with
    sync_scan_fwd exactly.
    """
    n = s.shape[0]
    bi, bj, bp, bq = np.int64(-1), np.int64(-1), np.int64(-1), np.int64(-1)
    nxt = np.empty(n + 2, np.int32)
    cur = np.empty(n + 2, np.int32)
    for j in range(1, n - 1):
        for jp in range(j + 1, n):
            # cur[x] holds LCS(s[ia..j], s[j+x-1..jp]) for the row being built
            w = jp - j + 1
            for x in range(w + 2):
                nxt[x] = 0
            for ia in range(j, -1, -1):
                cur[w + 1] = 0
                ca = s[ia]
                for x in range(w, 0, -1):
                    ib = j + x - 1
                    if ca == s[ib]:
                        v = nxt[x + 1] + 1
                    else:
                        v = nxt[x]
                        if cur[x + 1] > v:
                            v = cur[x + 1]
                    cur[x] = v
                    if ia < j and ib < jp:
                        t = (j - ia) + (jp - ib)
                        if ind[t] == 1 or ib == j:
                            if v * eps_den > eps_num * t:
                                if (
                                    bi < 0
                                    or ia < bi
                                    or (ia == bi and (j < bj
                                        or (j == bj and (ib < bp
                                            or (ib == bp and jp < bq)))))
                                ):
                                    bi, bj, bp, bq = ia, j, ib, jp
                for x in range(w + 2):
                    nxt[x] = cur[x]
    return bi, bj, bp, bq
