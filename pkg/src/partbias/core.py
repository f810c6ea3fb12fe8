"""Part-set systems and shared exact-arithmetic helpers.

Exact rationals are plain :class:`fractions.Fraction` values: they are
always reduced, keep a positive denominator and have a canonical zero,
which is everything the rest of the package relies on.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DisjointnessViolation, EmptyRS, NonPositivePart

Rational = Union[int, Fraction]


@dataclass(frozen=True)
class PartSystem:
    """A triple (R, S, I) of pairwise disjoint sets of positive parts.

    ``gcd_all`` is the gcd of R union S only; I does not enter the
    hypothesis of the limit formula.  ``theorem_gated`` flags systems
    where the closed-form limit is not applicable (gcd > 1) while exact
    counting still is.
    """

    r: tuple[int, ...]
    s: tuple[int, ...]
    i: tuple[int, ...]
    gcd_all: int

    @property
    def theorem_gated(self) -> bool:
        return self.gcd_all != 1

    @property
    def parts(self) -> tuple[int, ...]:
        return self.r + self.s + self.i

    @property
    def dimension(self) -> int:
        """l + m - 1, the degree of polynomial growth of the counts."""
        return len(self.r) + len(self.s) - 1


def _as_sorted_parts(values: Iterable[int], label: str) -> tuple[int, ...]:
    out = []
    for v in values:
        v = int(v)
        if v < 1:
            raise NonPositivePart(f"{label} contains {v}; parts must be >= 1")
        out.append(v)
    return tuple(sorted(set(out)))


def validate_system(r: Iterable[int], s: Iterable[int],
                    i: Iterable[int] = ()) -> PartSystem:
    """Canonicalize raw part sets into a :class:`PartSystem`.

    Raises on overlap, empty R/S or non-positive parts.  A gcd larger
    than 1 is allowed (counting still works) but sets ``theorem_gated``.
    """
    rt = _as_sorted_parts(r, "R")
    st = _as_sorted_parts(s, "S")
    it = _as_sorted_parts(i, "I")
    if not rt or not st:
        raise EmptyRS("R and S must both be nonempty")
    seen: dict[int, str] = {}
    for label, vals in (("R", rt), ("S", st), ("I", it)):
        for v in vals:
            if v in seen:
                raise DisjointnessViolation(
                    f"part {v} appears in both {seen[v]} and {label}")
            seen[v] = label
    return PartSystem(rt, st, it, math.gcd(*rt, *st))


def gcd_chain(e: Sequence[int]) -> tuple[int, ...]:
    """Leading entries d_i of the triangular lattice basis for e.

    d_i = gcd(e_{i+1},...,e_k) / gcd(e_i,...,e_k), for i = 1..k-1.
    """
    if len(e) < 2:
        raise ValueError("need at least two entries")
    k = len(e)
    suffix = [0] * (k + 1)
    for idx in range(k - 1, -1, -1):
        suffix[idx] = math.gcd(e[idx], suffix[idx + 1])
    return tuple(suffix[i + 1] // suffix[i] for i in range(k - 1))


def falling_product(a: Rational, n: int) -> Fraction:
    """(a)_n = prod_{i=0}^{n-1} (a - i); the empty product is 1."""
    out = Fraction(1)
    a = Fraction(a)
    for i in range(n):
        out *= a - i
    return out
