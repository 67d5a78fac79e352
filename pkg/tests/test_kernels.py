"""Backend equivalence: the JIT kernels and the pure-numpy fallbacks must
be interchangeable, and the env flag must actually switch them."""

import json
import os
import subprocess
import sys

import numpy as np
import pytest

from lcsgap import kernels
from lcsgap.kernels import numba_impl, numpy_impl

from conftest import brute_lcs


def _product_dp_inputs(strings):
    arrs = [np.asarray(s, dtype=np.int64) for s in strings]
    lens = np.array([len(a) for a in arrs], dtype=np.int64)
    strides = np.empty(len(arrs), dtype=np.int64)
    acc = 1
    for i in range(len(arrs) - 1, -1, -1):
        strides[i] = acc
        acc *= int(lens[i]) + 1
    flat = np.concatenate(arrs)
    starts = np.zeros(len(arrs), dtype=np.int64)
    np.cumsum(lens[:-1], out=starts[1:])
    return flat, starts, lens, strides, acc


class TestBackendAgreement:
    def test_lcs_len_vs_brute(self, rng):
        for _ in range(150):
            a = rng.integers(0, 4, int(rng.integers(0, 9))).astype(np.int64)
            b = rng.integers(0, 4, int(rng.integers(0, 9))).astype(np.int64)
            expected = brute_lcs(a.tolist(), b.tolist())
            assert numba_impl.lcs_len(a, b) == expected
            assert numpy_impl.lcs_len(a, b) == expected

    def test_tables_and_embeddings(self, rng):
        for _ in range(100):
            a = rng.integers(0, 5, int(rng.integers(0, 30))).astype(np.int64)
            b = rng.integers(0, 5, int(rng.integers(0, 30))).astype(np.int64)
            assert np.array_equal(numba_impl.lcs_table(a, b), numpy_impl.lcs_table(a, b))
            s = rng.integers(0, 5, int(rng.integers(0, 6))).astype(np.int64)
            assert numba_impl.is_subsequence(s, a) == numpy_impl.is_subsequence(s, a)
            assert np.array_equal(
                numba_impl.embed_positions(s, a), numpy_impl.embed_positions(s, a)
            )

    def test_pairwise(self, rng):
        mat = rng.integers(0, 8, (12, 20)).astype(np.int64)
        assert np.array_equal(numba_impl.pairwise_lcs(mat), numpy_impl.pairwise_lcs(mat))

    def test_product_dp(self, rng):
        for _ in range(60):
            r = int(rng.integers(1, 5))
            strings = [
                rng.integers(0, 4, int(rng.integers(0, 7))).tolist() for _ in range(r)
            ]
            inputs = _product_dp_inputs(strings)
            assert np.array_equal(
                numba_impl.product_dp_suffix(*inputs), numpy_impl.product_dp_suffix(*inputs)
            )

    def test_sync_scans_all_four(self, rng):
        for _ in range(40):
            n = int(rng.integers(2, 30))
            s = rng.integers(0, int(rng.integers(2, 6)), n).astype(np.int64)
            num, den = int(rng.integers(1, 4)), 4
            cp = int(rng.integers(0, 3))
            ind = np.zeros(2 * n + 1, dtype=np.int8)
            for t in range(2 * n + 1):
                if 2**t > n**cp:
                    ind[t] = 1
            quads = {
                tuple(int(x) for x in f(s, num, den, ind))
                for f in (
                    numba_impl.sync_scan_fwd,
                    numba_impl.sync_scan_rev,
                    numpy_impl.sync_scan_fwd,
                    numpy_impl.sync_scan_rev,
                )
            }
            assert len(quads) == 1, (s.tolist(), quads)


class TestDispatch:
    def test_default_backend_known(self):
        assert kernels.BACKEND in ("numba", "numpy")

    def test_env_flag_forces_numpy(self):
        code = (
            "import json, numpy as np\n"
            "from lcsgap import kernels\n"
            "a = np.array([2,3,1,2,3], dtype=np.int64)\n"
            "b = np.array([1,2,1,3], dtype=np.int64)\n"
            "print(json.dumps({'backend': kernels.BACKEND, 'lcs': kernels.lcs_len(a, b)}))\n"
        )
        env = dict(os.environ, LCSGAP_PURE_NUMPY="1")
        out = subprocess.run(
            [sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True
        )
        rec = json.loads(out.stdout.strip().splitlines()[-1])
        assert rec == {"backend": "numpy", "lcs": 3}
