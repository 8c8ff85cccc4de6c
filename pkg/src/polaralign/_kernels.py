"""Low-level numeric kernels, numba-accelerated when available.

Set ``POLARALIGN_PURE_NUMPY=1`` to force the pure-numpy implementations
(platforms without a working numba, or for benchmarking the two paths
against each other).
"""

import os

import numpy as np

_FORCE_NUMPY = os.environ.get("POLARALIGN_PURE_NUMPY", "").lower() in ("1", "true", "yes")

try:
    if _FORCE_NUMPY:
        raise ImportError("pure-numpy path forced")
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - exercised via env flag
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        # jit-disabling shim with the same call shapes as numba.njit
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


@njit(cache=True)
def _merge_sorted_jit(keys, w0, w1, tol):
    n = keys.shape[0]
    out0 = np.empty(n, np.float64)
    out1 = np.empty(n, np.float64)
    m = 0
    i = 0
    while i < n:
        acc0 = w0[i]
        acc1 = w1[i]
        j = i + 1
        # chained merge: each element joins while adjacent keys stay close
        while j < n and keys[j] - keys[j - 1] <= tol:
            acc0 += w0[j]
            acc1 += w1[j]
            j += 1
        out0[m] = acc0
        out1[m] = acc1
        m += 1
        i = j
    return out0[:m], out1[:m]


def _merge_sorted_np(keys, w0, w1, tol):
    if keys.size == 0:
        return w0[:0], w1[:0]
    starts = np.concatenate(([0], np.flatnonzero(np.diff(keys) > tol) + 1))
    return np.add.reduceat(w0, starts), np.add.reduceat(w1, starts)


if HAVE_NUMBA:
    merge_sorted = _merge_sorted_jit
else:
    merge_sorted = _merge_sorted_np
