"""Fallback DP kernel for bias counting (numpy, no compiled extension).

Same contract as the Cython kernel in ``_kernel.pyx``.  With
``exact=True`` the table is built on Python integers (object dtype) so
counts never overflow; with ``exact=False`` it runs on int64 and the
caller is responsible for checking the overflow bound first.
"""

from __future__ import annotations

import numpy as np


def diff_bounds(parts, roles, n):
    """Range [dmin, dmax] of the signed #R - #S difference axis."""
    r_parts = [p for p, role in zip(parts, roles) if role > 0]
    s_parts = [p for p, role in zip(parts, roles) if role < 0]
    dmax = n // min(r_parts) if r_parts else 0
    dmin = -(n // min(s_parts)) if s_parts else 0
    return dmin, dmax


def bias_tables(parts, roles, n, exact=True):
    """DP over (amount, #R - #S) for unbounded multiplicities.

    Returns four lists of length n+1: total, greater, less, equal
    counts for every amount 0..n.
    """
    dmin, dmax = diff_bounds(parts, roles, n)
    width = dmax - dmin + 1
    off = -dmin
    dtype = object if exact else np.int64
    dp = np.zeros((n + 1, width), dtype=dtype)
    dp[0, off] = 1
    for p, role in zip(parts, roles):
        if role > 0:
            dst = slice(1, width)
            src = slice(0, width - 1)
        elif role < 0:
            dst = slice(0, width - 1)
            src = slice(1, width)
        else:
            dst = slice(0, width)
            src = dst
        for a in range(p, n + 1):
            dp[a, dst] += dp[a - p, src]
    total = [int(x) for x in dp.sum(axis=1)]
    greater = [int(x) for x in dp[:, off + 1:].sum(axis=1)]
    less = [int(x) for x in dp[:, :off].sum(axis=1)]
    equal = [int(x) for x in dp[:, off]]
    return total, greater, less, equal
