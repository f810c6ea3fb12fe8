# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled DP kernel for bias counting (int64 fast path).

The caller must verify that every count fits in int64 (see the bound
check in ``counter``); exact big-integer tables go through
``_kernel_py`` instead.
"""

import numpy as np

cimport numpy as cnp


def diff_bounds(parts, roles, n):
    r_parts = [p for p, role in zip(parts, roles) if role > 0]
    s_parts = [p for p, role in zip(parts, roles) if role < 0]
    dmax = n // min(r_parts) if r_parts else 0
    dmin = -(n // min(s_parts)) if s_parts else 0
    return dmin, dmax


def bias_tables(parts, roles, int n):
    """Same contract as ``_kernel_py.bias_tables`` (exact int64 counts)."""
    dmin, dmax = diff_bounds(parts, roles, n)
    cdef int width = dmax - dmin + 1
    cdef int off = -dmin
    cdef cnp.int64_t[:, ::1] dp = np.zeros((n + 1, width), dtype=np.int64)
    cdef int p, role, a, d
    dp[0, off] = 1
    for p_obj, role_obj in zip(parts, roles):
        p = p_obj
        role = role_obj
        if role > 0:
            for a in range(p, n + 1):
                for d in range(1, width):
                    dp[a, d] += dp[a - p, d - 1]
        elif role < 0:
            for a in range(p, n + 1):
                for d in range(0, width - 1):
                    dp[a, d] += dp[a - p, d + 1]
        else:
            for a in range(p, n + 1):
                for d in range(width):
                    dp[a, d] += dp[a - p, d]
    arr = np.asarray(dp)
    total = [int(x) for x in arr.sum(axis=1)]
    greater = [int(x) for x in arr[:, off + 1:].sum(axis=1)]
    less = [int(x) for x in arr[:, :off].sum(axis=1)]
    equal = [int(x) for x in arr[:, off]]
    return total, greater, less, equal
