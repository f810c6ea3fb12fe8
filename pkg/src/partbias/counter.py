"""Exact partition counting and bias classification.

Two independent code paths exist on purpose: the DP (``count_bias``,
backed by the compiled kernel when available) and the brute-force
enumerator (``brute_force_oracle``).  They must agree; the test suite
leans on that.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import _kernel_py
from .core import PartSystem
from .errors import BudgetExceeded

try:
    from . import _kernel as _compiled
except ImportError:  # extension not built
    _compiled = None

HAVE_COMPILED_KERNEL = _compiled is not None

# Largest a-priori count bound for which the int64 kernel is safe.
_INT64_SAFE = 2 ** 62


@dataclass(frozen=True)
class BiasCount:
    """All four exact counts for one n."""

    n: int
    total: int
    greater: int
    less: int
    equal: int

    def __post_init__(self):
        assert self.greater + self.less + self.equal == self.total

    @property
    def ratio(self) -> Optional[Fraction]:
        """greater/total, or None when no partition of n exists."""
        if self.total == 0:
            return None
        return Fraction(self.greater, self.total)


def count_restricted(parts: Sequence[int], n: int) -> int:
    """Number of multisets over ``parts`` summing to n (exact)."""
    parts = sorted(set(parts))
    dp = [0] * (n + 1)
    dp[0] = 1
    for p in parts:
        for a in range(p, n + 1):
            dp[a] += dp[a - p]
    return dp[n]


def count_bound(parts: Sequence[int], n: int) -> int:
    """Upper bound on any DP cell: product of (n // p + 1)."""
    bound = 1
    for p in parts:
        bound *= n // p + 1
    return bound


def bias_tables(sys: PartSystem, n: int):
    """Per-amount (total, greater, less, equal) tables for 0..n.

    Dispatches to the compiled int64 kernel when it is importable and
    provably overflow-free, otherwise to the numpy fallback (exact
    big-integer mode when needed).
    """
    parts = sys.parts
    roles = tuple([1] * len(sys.r) + [-1] * len(sys.s) + [0] * len(sys.i))
    safe = count_bound(parts, n) < _INT64_SAFE
    if safe and _compiled is not None:
        return _compiled.bias_tables(parts, roles, n)
    return _kernel_py.bias_tables(parts, roles, n, exact=not safe)


def count_bias(sys: PartSystem, n: int) -> BiasCount:
    """Counts of partitions of n classified by sign of #R - #S."""
    total, greater, less, equal = bias_tables(sys, n)
    return BiasCount(n, total[n], greater[n], less[n], equal[n])


def ratio_table(sys: PartSystem, n_values: Sequence[int]):
    """List of (n, greater/total) pairs; ratio is None when total = 0.

    One DP run up to max(n_values) serves every requested n.
    """
    if not n_values:
        return []
    n_max = max(n_values)
    total, greater, _, _ = bias_tables(sys, n_max)
    out = []
    for n in n_values:
        ratio = Fraction(greater[n], total[n]) if total[n] > 0 else None
        out.append((n, ratio))
    return out


def bias_counts_upto(sys: PartSystem, n_max: int) -> list[BiasCount]:
    """All BiasCounts for n = 0..n_max from a single DP run."""
    total, greater, less, equal = bias_tables(sys, n_max)
    return [BiasCount(n, total[n], greater[n], less[n], equal[n])
            for n in range(n_max + 1)]


def brute_force_oracle(sys: PartSystem, n: int,
                       node_budget: int = 5_000_000) -> BiasCount:
    """Exhaustive enumeration of multiplicity vectors; no DP, no sharing.

    Walks parts in order, choosing each multiplicity explicitly, and
    classifies complete vectors by the sign of #R - #S.  Raises
    BudgetExceeded past ``node_budget`` recursion nodes.
    """
    parts = sys.parts
    signs = [1] * len(sys.r) + [-1] * len(sys.s) + [0] * len(sys.i)
    counts = [0, 0, 0]  # greater, less, equal
    nodes = 0

    def walk(idx: int, remaining: int, diff: int) -> None:
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded(
                f"oracle exceeded {node_budget} enumeration nodes")
        if idx == len(parts):
            if remaining == 0:
                if diff > 0:
                    counts[0] += 1
                elif diff < 0:
                    counts[1] += 1
                else:
                    counts[2] += 1
            return
        p = parts[idx]
        sign = signs[idx]
        mult = 0
        while mult * p <= remaining:
            walk(idx + 1, remaining - mult * p, diff + sign * mult)
            mult += 1

    walk(0, n, 0)
    greater, less, equal = counts
    return BiasCount(n, greater + less + equal, greater, less, equal)
