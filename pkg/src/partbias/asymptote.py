"""Closed-form evaluation of the limiting bias ratio.

The alternating sum cancels catastrophically in floating point, so
everything here is exact Fraction arithmetic.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import PartSystem, validate_system
from .errors import DegenerateDenominator, GcdHypothesisViolated

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class AsymptoticReport:
    ratio_limit: Fraction
    lead_total: Fraction
    lead_greater: Fraction
    dimension: int


def raw_alternating_sum(r_seq: Sequence[int], s_seq: Sequence[int]) -> Fraction:
    """The order-sensitive alternating sum over R, exactly as written.

    sum_i (-1)^(i-1) / [r_i * prod_{j>i}(r_j - r_i) * prod_{t<i}(r_i - r_t)
    * prod_k (s_k + r_i)].  Evaluated on the sequences in the order
    given; its value is order-independent (it is a volume), which the
    property tests exercise by permuting the input.
    """
    total = Fraction(0)
    for i, ri in enumerate(r_seq):
        den = ri
        for rj in r_seq[i + 1:]:
            den *= rj - ri
        for rt in r_seq[:i]:
            den *= ri - rt
        for sk in s_seq:
            den *= sk + ri
        if den == 0:
            raise DegenerateDenominator(
                f"repeated part {ri} makes a denominator vanish")
        total += Fraction((-1) ** i, den)
    return total


def _checked(r: Iterable[int], s: Iterable[int]) -> PartSystem:
    sys = validate_system(r, s)
    if sys.gcd_all != 1:
        raise GcdHypothesisViolated(
            f"gcd(R u S) = {sys.gcd_all}; the limit formula needs gcd 1")
    return sys


def leading_coefficient_total(r: Iterable[int], s: Iterable[int]) -> Fraction:
    """Coefficient of n^(l+m-1)/(l+m-1)! in the total count: 1/(prod R * prod S)."""
    sys = _checked(r, s)
    return Fraction(1, math.prod(sys.r) * math.prod(sys.s))


def leading_coefficient_greater(r: Iterable[int], s: Iterable[int]) -> Fraction:
    """Coefficient of n^(l+m-1)/(l+m-1)! in the greater-count."""
    sys = _checked(r, s)
    return raw_alternating_sum(sys.r, sys.s)


def asymptotic_ratio(r: Iterable[int], s: Iterable[int]) -> Fraction:
    """Exact limit of greater/total as n grows; always in [0, 1]."""
    sys = _checked(r, s)
    value = (math.prod(sys.r) * math.prod(sys.s)
             * raw_alternating_sum(sys.r, sys.s))
    return Fraction(value)


def ratio_for_system(sys: PartSystem) -> Fraction:
    """Limit ratio for a full system; I does not move the limit."""
    if sys.i:
        log.debug("ignoring I=%s: finite fillers do not change the limit",
                  sys.i)
    return asymptotic_ratio(sys.r, sys.s)


def report(r: Iterable[int], s: Iterable[int]) -> AsymptoticReport:
    sys = _checked(r, s)
    lead_total = Fraction(1, math.prod(sys.r) * math.prod(sys.s))
    lead_greater = raw_alternating_sum(sys.r, sys.s)
    return AsymptoticReport(
        ratio_limit=lead_greater / lead_total,
        lead_total=lead_total,
        lead_greater=lead_greater,
        dimension=sys.dimension,
    )
