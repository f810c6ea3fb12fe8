"""Arithmetic-progression part sets and the truncated bias ratios C_{n,N}.

Exact limits come from the alternating finite sum; the Beta closed form
(s = m), the double-integral quadrature and the log-Gamma form are
cross-checks at different scales.  The conjecture harness only
tabulates: the double-limit interchange is open and nothing here
asserts it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import numpy as np

from . import counter
from .core import PartSystem, falling_product, validate_system
from .errors import (BudgetExceeded, InvalidProgression,
                     QuadratureNotConverged)


@dataclass(frozen=True)
class ProgressionSpec:
    """(r, s, m, N): truncations R_N, S_N of two residue progressions."""

    r: int
    s: int
    m: int
    n_terms: int

    def __post_init__(self):
        if self.r < 1 or self.s < 1 or self.m < 2 or self.n_terms < 1:
            raise InvalidProgression(
                "need r, s >= 1, m >= 2 and at least one term")
        if (self.r - self.s) % self.m == 0:
            raise InvalidProgression(
                f"r={self.r} and s={self.s} agree mod m={self.m}")
        if math.gcd(self.r, self.s, self.m) != 1:
            raise InvalidProgression("gcd(r, s, m) must be 1")


def build_sets(spec: ProgressionSpec) -> PartSystem:
    """R_N, S_N and the filler set I_N covering [max(r,s) + m(N-1)]."""
    r, s, m, n_terms = spec.r, spec.s, spec.m, spec.n_terms
    r_set = {r + m * i for i in range(n_terms)}
    s_set = {s + m * i for i in range(n_terms)}
    top = max(r, s) + m * (n_terms - 1)
    i_set = set(range(1, top + 1)) - r_set - s_set
    return validate_system(r_set, s_set, i_set)


def c_limit_exact(spec: ProgressionSpec) -> Fraction:
    """lim_n C_{n,N} as an exact rational (alternating finite sum)."""
    r, s, m, n_terms = spec.r, spec.s, spec.m, spec.n_terms
    rm = Fraction(r, m)
    srm = Fraction(s + r, m)
    c = Fraction(0)
    for i in range(1, n_terms + 1):
        den = (math.factorial(n_terms - i) * math.factorial(i - 1)
               * falling_product(srm + n_terms + i - 2, n_terms)
               * (rm + i - 1))
        c += Fraction((-1) ** (i - 1)) / den
    return (c * falling_product(rm + n_terms - 1, n_terms)
            * falling_product(Fraction(s, m) + n_terms - 1, n_terms))


def c_limit_beta(r: int, m: int, n_terms: int) -> Fraction:
    """s = m specialization through the Beta function at (r/m, 2N).

    B(r/m, 2N) is rational because the second argument is a positive
    integer: (2N-1)! / prod_{j<2N} (r/m + j).
    """
    if math.gcd(r, m) != 1 or r % m == 0:
        raise InvalidProgression("need gcd(r, m) = 1 and r not 0 mod m")
    rm = Fraction(r, m)
    den = Fraction(1)
    for j in range(2 * n_terms):
        den *= rm + j
    beta = Fraction(math.factorial(2 * n_terms - 1)) / den
    c = beta / (math.factorial(n_terms) * math.factorial(n_terms - 1))
    return (c * falling_product(rm + n_terms - 1, n_terms)
            * math.factorial(n_terms))


def gamma_form(r: int, m: int, n_terms: int) -> float:
    """Gamma(r/m+N) Gamma(2N) / (Gamma(N) Gamma(r/m+2N)) via log-Gamma.

    Usable far beyond exact-rational range (N ~ 1e6); tends to
    2^(-r/m) as N grows.
    """
    rm = r / m
    n = n_terms
    return math.exp(math.lgamma(rm + n) + math.lgamma(2 * n)
                    - math.lgamma(n) - math.lgamma(rm + 2 * n))


def c_limit_quadrature(spec: ProgressionSpec, tol: float = 1e-10,
                       max_nodes: int = 4096) -> float:
    """lim_n C_{n,N} by numerical integration of the double integral.

    The endpoint singularities x^(s/m-1), t^(r/m-1) are removed by the
    substitutions x = w^m, t = v^m, which make both integrands
    polynomial (r and s are integers).  Gauss-Legendre with doubling
    node counts until two successive refinements agree to ``tol``.
    """
    r, s, m, n_terms = spec.r, spec.s, spec.m, spec.n_terms

    def value_at(nodes: int) -> float:
        x, w = np.polynomial.legendre.leggauss(nodes)
        # outer nodes mapped to [0, 1]
        wo = 0.5 * (x + 1.0)
        outer_w = 0.5 * w
        inner = np.empty_like(wo)
        for idx, upper in enumerate(wo):
            v = 0.5 * upper * (x + 1.0)
            fv = m * v ** (r - 1) * (1.0 - v ** m) ** (n_terms - 1)
            inner[idx] = 0.5 * upper * np.dot(w, fv)
        fo = m * wo ** (s - 1) * (1.0 - wo ** m) ** (n_terms - 1) * inner
        return float(np.dot(outer_w, fo))

    prefactor = float(
        falling_product(Fraction(r, m) + n_terms - 1, n_terms)
        * falling_product(Fraction(s, m) + n_terms - 1, n_terms)
        / math.factorial(n_terms - 1) ** 2)

    nodes = max(16, m * n_terms + r + s)
    prev = value_at(nodes)
    while nodes <= max_nodes:
        nodes *= 2
        cur = value_at(nodes)
        if abs(cur - prev) <= tol * max(1.0, abs(cur)):
            return prefactor * cur
        prev = cur
    raise QuadratureNotConverged(
        f"no convergence to {tol} within {max_nodes} nodes")


# ---------------------------------------------------------------------------
# Conjecture exploration harness


@dataclass(frozen=True)
class Cell:
    n: int
    n_terms: int
    count: Optional[counter.BiasCount]
    ratio: Optional[Fraction]


@dataclass
class ConvergenceTable:
    r: int
    s: int
    m: int
    rows: list[Cell] = field(default_factory=list)
    limits: dict[int, Fraction] = field(default_factory=dict)
    target: Optional[float] = None


def conjecture_target(r: int, s: int, m: int) -> Optional[float]:
    """Known double-limit value: 2^(-r/m) when s = m, else open."""
    if s == m:
        return 2.0 ** (-r / m)
    return None


def conjecture_table(r: int, s: int, m: int, n_grid: Sequence[int],
                     N_grid: Sequence[int],
                     state_budget: int = 50_000_000) -> ConvergenceTable:
    """Exact C_{n,N} cells over a grid, plus per-N exact limits.

    Purely descriptive: cells that blow the DP state budget are left
    undefined, and no claim about the double limit is asserted.
    """
    table = ConvergenceTable(r=r, s=s, m=m, target=conjecture_target(r, s, m))
    for n_terms in sorted(set(N_grid)):
        spec = ProgressionSpec(r, s, m, n_terms)
        table.limits[n_terms] = c_limit_exact(spec)
        sys = build_sets(spec)
        for n in sorted(set(n_grid)):
            states = (n + 1) * (2 * n + 1) * len(sys.parts)
            if states > state_budget:
                table.rows.append(Cell(n, n_terms, None, None))
                continue
            bc = counter.count_bias(sys, n)
            table.rows.append(Cell(n, n_terms, bc, bc.ratio))
    table.rows.sort(key=lambda c: (c.n_terms, c.n))
    return table


def conjecture_report(table: ConvergenceTable) -> dict:
    """Diagnostics: gaps of cells and limits to the target, trend flags."""
    out: dict = {"target": table.target}
    ns = sorted(table.limits)
    limits = [float(table.limits[k]) for k in ns]
    if table.target is not None:
        gaps = [abs(v - table.target) for v in limits]
        out["limit_gaps"] = dict(zip(ns, gaps))
        out["limits_monotone_toward_target"] = all(
            b <= a for a, b in zip(gaps, gaps[1:]))
        out["cell_gaps"] = {
            (c.n, c.n_terms): abs(float(c.ratio) - table.target)
            for c in table.rows if c.ratio is not None}
    else:
        diffs = [b - a for a, b in zip(limits, limits[1:])]
        out["limits_monotone"] = (all(d >= 0 for d in diffs)
                                  or all(d <= 0 for d in diffs))
    return out


@dataclass(frozen=True)
class BiasDirectionReport:
    spec: ProgressionSpec
    rows: list[tuple[int, int, int]]  # (n, greater, less)
    holds_at_n: bool
    stable_from: Optional[int]


def bias_direction_scan(spec: ProgressionSpec, n: int,
                        n_min: int = 1) -> BiasDirectionReport:
    """Check greater > less over n_min..n for a progression with r < s.

    Reports the first n0 after which greater > less held at every
    tested point.  Descriptive; the caller decides what to assert.
    """
    if spec.r >= spec.s:
        raise InvalidProgression("scan requires r < s")
    sys = build_sets(spec)
    counts = counter.bias_counts_upto(sys, n)
    rows = [(k, counts[k].greater, counts[k].less)
            for k in range(n_min, n + 1)]
    stable_from = None
    for k, g, l in reversed(rows):
        if g > l:
            stable_from = k
        else:
            break
    return BiasDirectionReport(
        spec=spec, rows=rows,
        holds_at_n=rows[-1][1] > rows[-1][2] if rows else False,
        stable_from=stable_from)
