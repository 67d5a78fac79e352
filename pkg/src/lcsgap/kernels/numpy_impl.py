"""Pure-numpy fallbacks for the hot kernels.

Same contracts as ``numba_impl``; selected when LCSGAP_PURE_NUMPY=1 or
when numba is not importable.  Row updates use the running-max identity

    dp[i][j] = max(dp[i-1][j], max_{j'<=j, b[j'-1]==a[i-1]} dp[i-1][j'-1]+1)

which turns each DP row into a handful of vector operations.
"""

import numpy as np


def _row_update(prev, a_sym, b):
    w = b.shape[0]
    cand = np.where(b == a_sym, prev[:w] + 1, 0).astype(np.int32)
    np.maximum.accumulate(cand, out=cand)
    cur = np.empty(w + 1, np.int32)
    cur[0] = 0
    np.maximum(prev[1:], cand, out=cur[1:])
    return cur


def lcs_len(a, b):
    if a.shape[0] == 0 or b.shape[0] == 0:
        return 0
    prev = np.zeros(b.shape[0] + 1, np.int32)
    for i in range(a.shape[0]):
        prev = _row_update(prev, a[i], b)
    return int(prev[-1])


def lcs_table(a, b):
    la, lb = a.shape[0], b.shape[0]
    t = np.zeros((la + 1, lb + 1), np.int32)
    for i in range(1, la + 1):
        t[i] = _row_update(t[i - 1], a[i - 1], b)
    return t


def pairwise_lcs(mat):
    n = mat.shape[0]
    out = np.empty(n * (n - 1) // 2, np.int64)
    idx = 0
    for i in range(n):
        for j in range(i + 1, n):
            out[idx] = lcs_len(mat[i], mat[j])
            idx += 1
    return out


def _positions_by_symbol(target):
    order = np.argsort(target, kind="stable")
    return order, target[order]


def embed_positions(sub, target):
    """Leftmost-greedy embedding via per-symbol position lists."""
    ls = sub.shape[0]
    pos = np.full(ls, -1, np.int64)
    if ls == 0:
        return pos
    order, skeys = _positions_by_symbol(target)
    lo = np.searchsorted(skeys, sub, side="left")
    hi = np.searchsorted(skeys, sub, side="right")
    cur = -1
    for k in range(ls):
        seg = order[lo[k]:hi[k]]
        j = np.searchsorted(seg, cur + 1)
        if j == seg.shape[0]:
            return pos
        cur = int(seg[j])
        pos[k] = cur
    return pos


def is_subsequence(sub, target):
    if sub.shape[0] == 0:
        return True
    pos = embed_positions(sub, target)
    return pos[-1] >= 0


def product_dp_suffix(flat, starts, lens, strides, total):
    r = starts.shape[0]
    sizes = lens + 1
    dp = np.zeros(total, np.int32)
    idx = np.arange(total, dtype=np.int64)
    ds = np.zeros(total, dtype=np.int64)
    for i in range(r):
        ds += (idx // strides[i]) % sizes[i]
    del idx
    order = np.argsort(ds, kind="stable")
    top = int(lens.sum())
    counts = np.bincount(ds, minlength=top + 1)
    bounds = np.concatenate(([0], np.cumsum(counts)))
    stride_sum = int(strides.sum())
    for ssum in range(top - 1, -1, -1):
        layer = order[bounds[ssum]:bounds[ssum + 1]]
        digs = [(layer // strides[i]) % sizes[i] for i in range(r)]
        alive = np.ones(layer.shape[0], dtype=bool)
        for i in range(r):
            alive &= digs[i] < lens[i]
        if not alive.any():
            continue
        live = layer[alive]
        best = np.zeros(live.shape[0], np.int32)
        allmatch = np.ones(live.shape[0], dtype=bool)
        sym0 = None
        for i in range(r):
            np.maximum(best, dp[live + strides[i]], out=best)
            si = flat[starts[i] + digs[i][alive]]
            if i == 0:
                sym0 = si
            else:
                allmatch &= si == sym0
        adv = (dp[live + stride_sum] + 1).astype(np.int32)
        np.maximum(best, np.where(allmatch, adv, 0).astype(np.int32), out=best)
        dp[live] = best
    return dp


def sync_scan_fwd(s, eps_num, eps_den, ind):
    n = s.shape[0]
    best = None
    indb = ind.astype(bool)
    for i in range(n - 2):
        for ip in range(i + 1, n - 1):
            bseg = s[ip:]
            w = bseg.shape[0]
            prev = np.zeros(w + 1, np.int32)
            bvals = np.arange(ip + 1, n)
            for a in range(i, ip + 1):
                cur = _row_update(prev, s[a], bseg)
                if a > i and w >= 2:
                    t = (a - i) + (bvals - ip)
                    side = indb[t]
                    if a == ip:
                        side = side | True
                    viol = side & (cur[2:].astype(np.int64) * eps_den > eps_num * t)
                    hits = np.nonzero(viol)[0]
                    if hits.size:
                        q = (i, a, ip, int(ip + 1 + hits[0]))
                        if best is None or q < best:
                            best = q
                prev = cur
    return best if best is not None else (-1, -1, -1, -1)


def sync_scan_rev(s, eps_num, eps_den, ind):
    n = s.shape[0]
    best = None
    indb = ind.astype(bool)
    for j in range(1, n - 1):
        for jp in range(j + 1, n):
            seg = s[j:jp + 1]
            w = seg.shape[0]
            nxt = np.zeros(w + 1, np.int32)
            ibv = np.arange(j, jp)
            for ia in range(j, -1, -1):
                cand = np.where(seg == s[ia], nxt[1:] + 1, 0).astype(np.int32)
                cand = np.maximum.accumulate(cand[::-1])[::-1]
                cur = np.empty(w + 1, np.int32)
                cur[w] = 0
                np.maximum(nxt[:w], cand, out=cur[:w])
                if ia < j:
                    t = (j - ia) + (jp - ibv)
                    side = indb[t].copy()
                    side[0] = True
                    viol = side & (cur[:w - 1].astype(np.int64) * eps_den > eps_num * t)
                    hits = np.nonzero(viol)[0]
                    if hits.size:
                        q = (ia, j, int(j + hits[0]), jp)
                        if best is None or q < best:
                            best = q
                nxt = cur
    return best if best is not None else (-1, -1, -1, -1)
