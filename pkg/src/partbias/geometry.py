"""Lattice bijection and polytope volume calculus behind the limit formula.

Covers: the triangular lattice basis for the hyperplane sum(e_i x_i)=0,
the partition <-> k-vector bijection, the V-form volume recursion with
its closed form and complement identity, the bias volume, and Ehrhart
dilation counting.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import PartSystem, gcd_chain
from .errors import (BudgetExceeded, DegenerateDenominator,
                     InconsistentInput)


def _ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b); minimal-size x, y."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def bezout_vector(e: Sequence[int]) -> tuple[int, ...]:
    """Integer coefficients c with sum(c_i e_i) = gcd(e)."""
    coeffs = [1]
    g = e[-1]
    for v in reversed(e[:-1]):
        g2, x, y = _ext_gcd(v, g)
        coeffs = [x] + [y * c for c in coeffs]
        g = g2
    return tuple(coeffs)


@dataclass(frozen=True)
class LatticeBasis:
    """Triangular basis of the rank l+m-1 lattice {x : x . e = 0}.

    Row i is zero before position i and its entry at position i is the
    i-th gcd-chain value.  Any rows meeting those two constraints are a
    valid basis; the constructor checks them.
    """

    e: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        chain = gcd_chain(self.e)
        if len(self.rows) != len(self.e) - 1:
            raise ValueError("need len(e) - 1 rows")
        for i, row in enumerate(self.rows):
            if len(row) != len(self.e):
                raise ValueError("row length mismatch")
            if sum(a * b for a, b in zip(row, self.e)) != 0:
                raise ValueError(f"row {i} not orthogonal to e")
            if any(row[j] != 0 for j in range(i)) or row[i] != chain[i]:
                raise ValueError(f"row {i} violates triangular structure")

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(row[i] for i, row in enumerate(self.rows))


def lattice_basis(e: Sequence[int]) -> LatticeBasis:
    """Construct a triangular basis via extended gcd on each suffix.

    Row i realizes leading entry d_i = g_{i+1}/g_i by cancelling
    d_i * e_i against a Bezout combination of the suffix.
    """
    e = tuple(int(v) for v in e)
    chain = gcd_chain(e)
    suffix_gcd = [math.gcd(*e[i:]) for i in range(len(e))]
    rows = []
    for i, d in enumerate(chain):
        tail = e[i + 1:]
        coeffs = bezout_vector(tail)
        # d * e[i] + sum(v_j e_j) = 0 with v_j = -c_j * e[i] / g_i
        scale = e[i] // suffix_gcd[i]
        row = [0] * i + [d] + [-c * scale for c in coeffs]
        rows.append(tuple(row))
    return LatticeBasis(e, tuple(rows))


def _anchor(sys: PartSystem, bezout: Sequence[int], n: int) -> list[int]:
    if sys.i:
        raise InconsistentInput("bijection requires I to be empty")
    e = sys.r + sys.s
    if sum(c * v for c, v in zip(bezout, e)) != 1:
        raise InconsistentInput("Bezout vector does not combine to 1")
    return [n * c for c in bezout]


def partition_to_k(sys: PartSystem, basis: LatticeBasis,
                   bezout: Sequence[int], n: int,
                   multiplicities: Sequence[int]) -> tuple[int, ...]:
    """Map a partition's multiplicity vector to its unique k-vector.

    Solves w_n + sum(k_i v_i) = (c, f) by forward substitution down the
    triangular rows.
    """
    e = sys.r + sys.s
    if sum(m * v for m, v in zip(multiplicities, e)) != n:
        raise InconsistentInput("multiplicities do not sum to n")
    w = _anchor(sys, bezout, n)
    target = [m - wv for m, wv in zip(multiplicities, w)]
    ks = []
    for i, row in enumerate(basis.rows):
        d = row[i]
        if target[i] % d != 0:
            raise InconsistentInput("target not in the lattice")
        k = target[i] // d
        ks.append(k)
        for j in range(i, len(target)):
            target[j] -= k * row[j]
    if any(target):
        raise InconsistentInput("residual after triangular solve")
    return tuple(ks)


def k_to_partition(sys: PartSystem, basis: LatticeBasis,
                   bezout: Sequence[int], n: int,
                   k: Sequence[int]) -> tuple[int, ...]:
    """Inverse of :func:`partition_to_k`."""
    w = _anchor(sys, bezout, n)
    out = list(w)
    for ki, row in zip(k, basis.rows):
        for j, vj in enumerate(row):
            out[j] += ki * vj
    return tuple(out)


def _enumerate_multiplicities(parts: Sequence[int], n: int,
                              budget: list[int]):
    """Yield all nonnegative vectors m with sum(m_i parts_i) = n."""
    vec = [0] * len(parts)

    def rec(idx: int, remaining: int):
        budget[0] -= 1
        if budget[0] < 0:
            raise BudgetExceeded("enumeration budget exhausted")
        if idx == len(parts) - 1:
            if remaining % parts[idx] == 0:
                vec[idx] = remaining // parts[idx]
                yield tuple(vec)
            return
        p = parts[idx]
        for mult in range(remaining // p + 1):
            vec[idx] = mult
            yield from rec(idx + 1, remaining - mult * p)

    yield from rec(0, n)


def enumerate_k_vectors(sys: PartSystem, basis: LatticeBasis,
                        bezout: Sequence[int], n: int,
                        budget: int = 10_000_000) -> list[tuple[int, ...]]:
    """All k-vectors of partitions of n, via the multiplicity coordinates.

    The change of variables is unimodular-triangular, so this is the
    same point set as direct k-space enumeration with bounds that are
    much easier to state.
    """
    box = [budget]
    out = []
    for mult in _enumerate_multiplicities(sys.r + sys.s, n, box):
        out.append(partition_to_k(sys, basis, bezout, n, mult))
    return out


# ---------------------------------------------------------------------------
# V-form volume calculus


@dataclass(frozen=True)
class VForm:
    """Names the volume of {u >= 0, a.u_A + b.u_B <= 1, sum u_A < sum u_B}.

    Entries may go negative mid-recursion; the recursion is then used as
    an algebraic identity only.
    """

    a: tuple[int, ...]
    b: tuple[int, ...]

    @property
    def dimension(self) -> int:
        return len(self.a) + len(self.b)


def vform_reduce(f: VForm) -> VForm:
    """One step of the variable-elimination identity: same volume,
    shape (|A|, |B|) -> (|B|-1, |A|+1)."""
    if not f.b:
        raise ValueError("cannot reduce an empty-B form")
    s1 = f.b[0]
    return VForm(tuple(s - s1 for s in f.b[1:]),
                 (s1,) + tuple(a + s1 for a in f.a))


def vform_volume(f: VForm) -> Fraction:
    """Combined recursion: simplex term minus the transformed form.

    Terminates in |B| steps; V_{A, empty} = 0.
    """
    a, b = f.a, f.b
    dim = len(a) + len(b)
    fact = math.factorial(dim)
    total = Fraction(0)
    sign = 1
    while b:
        s1 = b[0]
        den = s1
        for ai in a:
            den *= ai + s1
        for sj in b[1:]:
            den *= sj - s1
        if den == 0:
            raise DegenerateDenominator(
                f"zero denominator at step with s1={s1}")
        total += Fraction(sign, fact * den)
        a = (s1,) + tuple(ai + s1 for ai in a)
        b = tuple(sj - s1 for sj in b[1:])
        sign = -sign
    return total


def vform_closed_form(f: VForm) -> Fraction:
    """Explicit alternating sum over the B entries; equals the recursion."""
    total = Fraction(0)
    for j, sj in enumerate(f.b):
        den = sj
        for si in f.b[j + 1:]:
            den *= si - sj
        for st in f.b[:j]:
            den *= sj - st
        for ak in f.a:
            den *= ak + sj
        if den == 0:
            raise DegenerateDenominator(
                f"repeated or degenerate entry at s={sj}")
        total += Fraction((-1) ** j, den)
    return total / math.factorial(f.dimension)


def complement_identity_check(a: Sequence[int],
                              b: Sequence[int]) -> tuple[Fraction, Fraction, Fraction]:
    """(V_{A,B}, V_{B,A}, simplex total); the two volumes sum to the total."""
    a = tuple(a)
    b = tuple(b)
    v_ab = vform_volume(VForm(a, b))
    v_ba = vform_volume(VForm(b, a))
    total = Fraction(
        1, math.factorial(len(a) + len(b)) * math.prod(a) * math.prod(b))
    return v_ab, v_ba, total


def bias_volume(r: Iterable[int], s: Iterable[int]) -> Fraction:
    """Volume of the greater-bias region (closed alternating form).

    The greater-count grows like (V / s_m) * n^(l+m-1).
    """
    r = tuple(sorted(r))
    s = tuple(sorted(s))
    s_max = s[-1]
    dim = len(r) + len(s) - 1
    total = Fraction(0)
    for i, ri in enumerate(r):
        den = ri
        for rj in r[i + 1:]:
            den *= rj - ri
        for rt in r[:i]:
            den *= ri - rt
        for sk in s:
            den *= sk + ri
        if den == 0:
            raise DegenerateDenominator(f"repeated part {ri}")
        total += Fraction((-1) ** i * s_max, den)
    return total / math.factorial(dim)


def bias_volume_decomposed(r: Iterable[int], s: Iterable[int]) -> Fraction:
    """Same volume via simplex total minus the two complement V-forms."""
    r = tuple(sorted(r))
    s = tuple(sorted(s))
    s_max = s[-1]
    s_rest = s[:-1]
    dim = len(r) + len(s) - 1
    simplex = Fraction(
        1, math.factorial(dim) * math.prod(r) * math.prod(s_rest))
    v1 = vform_volume(VForm(r, s_rest))
    v2 = vform_volume(VForm(tuple(si - s_max for si in s_rest),
                            tuple(ri + s_max for ri in r)))
    return simplex - v1 - v2


@dataclass(frozen=True)
class EhrhartEstimate:
    count: int
    dilation: int
    dimension: int

    @property
    def estimate(self) -> Fraction:
        """count / t^d; tends to the polytope volume as t grows."""
        return Fraction(self.count, self.dilation ** self.dimension)


def ehrhart_estimate(r: Iterable[int], s: Iterable[int], t: int,
                     budget: int = 10_000_000) -> EhrhartEstimate:
    """Integer points of the t-dilated bijection polytope, by enumeration.

    Counted in multiplicity coordinates (equivalent to k-space up to a
    unimodular-triangular map); the count equals the number of
    restricted partitions of t.
    """
    parts = tuple(sorted(r)) + tuple(sorted(s))
    dim = len(parts) - 1
    box = [budget]
    count = sum(1 for _ in _enumerate_multiplicities(parts, t, box))
    return EhrhartEstimate(count=count, dilation=t, dimension=dim)
