#!/usr/bin/env python3
"""Benchmark the hot kernels under the JIT backend and the pure-numpy
fallback.

Runs itself in a subprocess per backend (the backend is fixed at import
time by LCSGAP_PURE_NUMPY), checks the two paths return identical
results, and prints a timing table.

    python benchmarks/bench_kernels.py            # both backends
    python benchmarks/bench_kernels.py --child    # internal: one backend
"""

import argparse
import json
import os
import subprocess
import sys
import time

import numpy as np


def run_cases():
    from lcsgap import kernels

    rng = np.random.default_rng(0)
    results = {"backend": kernels.BACKEND}

    # pairwise certification workload: 780 pairs of length-256 strings
    mat = rng.integers(0, 256, (40, 256), dtype=np.int64)
    kernels.pairwise_lcs(mat[:3])  # warm any JIT
    t0 = time.perf_counter()
    vals = kernels.pairwise_lcs(mat)
    results["pairwise_lcs_40x256_s"] = time.perf_counter() - t0
    results["pairwise_checksum"] = int(vals.sum())

    # product DP: 6 strings of length 10 (11^6 ~ 1.77M states)
    strings = [rng.integers(0, 4, 10).astype(np.int64) for _ in range(6)]
    lens = np.array([len(a) for a in strings], dtype=np.int64)
    strides = np.empty(6, dtype=np.int64)
    acc = 1
    for i in range(5, -1, -1):
        strides[i] = acc
        acc *= int(lens[i]) + 1
    flat = np.concatenate(strings)
    starts = np.zeros(6, dtype=np.int64)
    np.cumsum(lens[:-1], out=starts[1:])
    warm = np.array([1, 2, 3, 4], dtype=np.int64)
    kernels.product_dp_suffix(
        warm, np.zeros(1, np.int64), np.array([4], np.int64), np.ones(1, np.int64), 5
    )
    t0 = time.perf_counter()
    dp = kernels.product_dp_suffix(flat, starts, lens, strides, acc)
    results["product_dp_1p77m_states_s"] = time.perf_counter() - t0
    results["product_dp_root"] = int(dp[0])

    # synchronization scan: |s| = 100 over 64 symbols
    s = rng.integers(0, 64, 100, dtype=np.int64)
    ind = np.ones(201, dtype=np.int8)
    kernels.sync_scan_fwd(s[:10], 1, 2, ind)
    t0 = time.perf_counter()
    quad = kernels.sync_scan_fwd(s, 1, 2, ind)
    results["sync_scan_100_s"] = time.perf_counter() - t0
    results["sync_quad"] = [int(x) for x in quad]

    # leftmost subsequence scan: 2k-symbol witness into 20k-symbol target
    target = rng.integers(0, 32, 20_000, dtype=np.int64)
    sub = target[:: 10].copy()
    kernels.is_subsequence(sub[:5], target)
    t0 = time.perf_counter()
    ok = kernels.is_subsequence(sub, target)
    results["subseq_scan_20k_s"] = time.perf_counter() - t0
    results["subseq_ok"] = bool(ok)
    return results


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--child", action="store_true")
    args = parser.parse_args()

    if args.child:
        print(json.dumps(run_cases()))
        return 0

    records = {}
    for backend, env_val in (("numba", "0"), ("numpy", "1")):
        env = dict(os.environ, LCSGAP_PURE_NUMPY=env_val)
        proc = subprocess.run(
            [sys.executable, os.path.abspath(__file__), "--child"],
            env=env,
            capture_output=True,
            text=True,
        )
        if proc.returncode != 0:
            print(proc.stderr, file=sys.stderr)
            return 1
        records[backend] = json.loads(proc.stdout.strip().splitlines()[-1])

    if records["numba"]["backend"] == "numpy":
        print("note: numba unavailable, both runs used the numpy fallback")
    for key in ("pairwise_checksum", "product_dp_root", "sync_quad", "subseq_ok"):
        assert records["numba"][key] == records["numpy"][key], f"backends disagree on {key}"

    timing_keys = [k for k in records["numba"] if k.endswith("_s")]
    width = max(len(k) for k in timing_keys)
    print(f"{'kernel':<{width}}  {'numba':>10}  {'numpy':>10}  {'speedup':>8}")
    for k in timing_keys:
        tn, tp = records["numba"][k], records["numpy"][k]
        print(f"{k:<{width}}  {tn:>9.4f}s  {tp:>9.4f}s  {tp / tn:>7.1f}x")
    return 0


if __name__ == "__main__":
    sys.exit(main())
