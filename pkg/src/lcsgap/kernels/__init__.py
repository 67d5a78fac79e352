"""Kernel dispatch.

The JIT backend is used by default; set LCSGAP_PURE_NUMPY=1 to force the
vectorized-numpy fallback (also selected automatically when numba is not
installed).  ``BACKEND`` records the active choice so callers and the
benchmark can report it.
"""

import os

_force = os.environ.get("LCSGAP_PURE_NUMPY", "").strip() not in ("", "0")

if _force:
    from . import numpy_impl as _impl

    BACKEND = "numpy"
else:
    try:
        from . import numba_impl as _impl

        BACKEND = "numba"
    except ImportError:
        from . import numpy_impl as _impl

        BACKEND = "numpy"

lcs_len = _impl.lcs_len
lcs_table = _impl.lcs_table
pairwise_lcs = _impl.pairwise_lcs
is_subsequence = _impl.is_subsequence
embed_positions = _impl.embed_positions
product_dp_suffix = _impl.product_dp_suffix
sync_scan_fwd = _impl.sync_scan_fwd
sync_scan_rev = _impl.sync_scan_rev
