"""Acceptance suite: one test per criterion, one PASS line each.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines.
"""

import itertools
import math
import random
from fractions import Fraction

from partbias.asymptote import asymptotic_ratio
from partbias.core import validate_system
from partbias.counter import (bias_counts_upto, brute_force_oracle,
                              count_bias, count_restricted, ratio_table)
from partbias.geometry import (LatticeBasis, VForm, bias_volume,
                               complement_identity_check, ehrhart_estimate,
                               enumerate_k_vectors, vform_closed_form,
                               vform_volume)
from partbias.progression import (ProgressionSpec, build_sets, c_limit_beta,
                                  c_limit_exact, c_limit_quadrature,
                                  conjecture_report, conjecture_table,
                                  gamma_form)


def report(criterion, text):
    print(f"ACCEPTANCE {criterion}: PASS ({text})")


def test_criterion_01_oracle_equivalence():
    """DP equals brute force for all systems with parts in 1..8, n <= 40."""
    systems = 0
    for k in range(2, 5):
        for parts in itertools.combinations(range(1, 9), k):
            for roles in itertools.product((1, -1, 0), repeat=k):
                if 1 not in roles or -1 not in roles:
                    continue
                sys = validate_system(
                    [p for p, r in zip(parts, roles) if r == 1],
                    [p for p, r in zip(parts, roles) if r == -1],
                    [p for p, r in zip(parts, roles) if r == 0])
                table = bias_counts_upto(sys, 40)
                for n in range(41):
                    assert brute_force_oracle(sys, n) == table[n], (sys, n)
                # spot-check the single-n entry point against the table
                assert count_bias(sys, 17) == table[17]
                systems += 1
    report(1, f"{systems} systems x 41 n-values, all four fields equal")


def test_criterion_02_corollary1_convergence():
    sys = validate_system({1}, {2})
    (_, ratio), = ratio_table(sys, [2000])
    assert ratio == Fraction(667, 1001)
    gap = abs(ratio - Fraction(2, 3))
    assert gap < Fraction(5, 1000)
    report(2, f"ratio(2000) = 667/1001, |gap to 2/3| = {float(gap):.2e}")


def test_criterion_03_corollary3_convergence():
    sys = validate_system({1, 2}, {3})
    (_, ratio), = ratio_table(sys, [3000])
    gap = abs(ratio - Fraction(9, 10))
    assert gap < Fraction(1, 100)
    report(3, f"|ratio(3000) - 9/10| = {float(gap):.2e}")


def test_criterion_04_paper_volume():
    value = vform_volume(VForm((2, 3), (6, 10)))
    expected = (Fraction(1, math.factorial(4) * 4 * 6 * 8 * 9)
                - Fraction(1, math.factorial(4) * 4 * 10 * 12 * 13))
    assert value == expected
    report(4, f"V_(2,3),(6,10) = {value}")


def test_criterion_05_identity_suite():
    rng = random.Random(20240817)
    for trial in range(200):
        na = rng.randint(1, 6)
        nb = rng.randint(1, 7 - na)
        vals = rng.sample(range(1, 31), na + nb)
        a, b = tuple(vals[:na]), tuple(vals[na:])
        f = VForm(a, b)
        v = vform_volume(f)
        assert v == vform_closed_form(f), f
        v_ab, v_ba, total = complement_identity_check(a, b)
        assert v_ab == v and v_ab + v_ba == total, f
        pa, pb = list(a), list(b)
        rng.shuffle(pa)
        rng.shuffle(pb)
        assert vform_volume(VForm(tuple(pa), tuple(pb))) == v, f
    report(5, "200 random (A,B): recursion = closed form, complement "
              "identity, permutation invariance (all exact)")


def test_criterion_06_cross_module_exactness():
    rng = random.Random(6)
    checked = 0
    while checked < 50:
        size_r = rng.randint(1, 3)
        size_s = rng.randint(1, 3)
        pool = rng.sample(range(1, 25), size_r + size_s)
        r, s = sorted(pool[:size_r]), sorted(pool[size_r:])
        if math.gcd(*r, *s) != 1:
            continue
        dim = len(r) + len(s) - 1
        lhs = asymptotic_ratio(r, s)
        rhs = (bias_volume(r, s) / s[-1] * math.factorial(dim)
               * math.prod(r) * math.prod(s))
        assert lhs == rhs, (r, s)
        checked += 1
    report(6, "50 random (R,S): limit formula = scaled bias volume, exact")


def test_criterion_07_bijection_and_ehrhart():
    sys = validate_system({2, 3, 6}, {10, 15})
    basis = LatticeBasis((2, 3, 6, 10, 15),
                         ((1, -4, 0, 1, 0), (0, 1, -3, 0, 1),
                          (0, 0, 5, -3, 0), (0, 0, 0, 3, -2)))
    bezout = (-1, 1, 0, 0, 0)
    for n in range(61):
        ks = enumerate_k_vectors(sys, basis, bezout, n)
        assert len(set(ks)) == len(ks)
        assert len(ks) == count_restricted((2, 3, 6, 10, 15), n), n

    t = 3000
    est = ehrhart_estimate({1}, {2}, t)
    value = est.count * math.factorial(1) / t
    assert abs(value - 0.5) / 0.5 < 0.02
    report(7, f"k-enumeration = counts for n <= 60; "
              f"Ehrhart coefficient at t=3000: {value:.5f} vs 0.5")


def test_criterion_08_progression_exactness():
    for r, m in ((1, 2), (1, 3), (2, 3), (3, 4)):
        for n_terms in range(1, 51):
            assert c_limit_beta(r, m, n_terms) \
                == c_limit_exact(ProgressionSpec(r, m, m, n_terms)), (r, m)
    for r, s, m in ((1, 2, 2), (2, 3, 4), (1, 3, 3)):
        for n_terms in range(1, 11):
            spec = ProgressionSpec(r, s, m, n_terms)
            gap = abs(c_limit_quadrature(spec) - float(c_limit_exact(spec)))
            assert gap < 1e-8, (spec, gap)
    for r, s, m in ((1, 2, 2), (1, 3, 3), (2, 3, 4), (1, 5, 3)):
        for n_terms in range(1, 6):
            spec = ProgressionSpec(r, s, m, n_terms)
            sys = build_sets(spec)
            assert c_limit_exact(spec) == asymptotic_ratio(sys.r, sys.s)
    report(8, "beta = exact (N<=50), quadrature within 1e-8 (N<=10), "
              "limit-formula identity (N<=5)")


def test_criterion_09_lemma3_limit():
    for r, m in ((1, 2), (1, 3), (2, 3)):
        target = 2.0 ** (-r / m)
        gap_gamma = abs(gamma_form(r, m, 10 ** 6) - target)
        assert gap_gamma < 1e-5, (r, m, gap_gamma)
        gap_beta = abs(float(c_limit_beta(r, m, 500)) - target)
        assert gap_beta < 1e-2, (r, m, gap_beta)
    report(9, "gamma form at N=1e6 within 1e-5 and exact beta at N=500 "
              "within 1e-2 of 2^(-r/m)")


def test_criterion_10_conjecture_diagnostics():
    # exploratory by design: exact cell + diagnostics, no gap bound asserted
    table = conjecture_table(1, 2, 2, [400], list(range(1, 7)))
    cell = next(c for c in table.rows if c.n == 400 and c.n_terms == 6)
    assert cell.ratio is not None
    assert cell.count.greater + cell.count.less + cell.count.equal \
        == cell.count.total
    diag = conjecture_report(table)
    assert diag["target"] is not None
    gap = diag["cell_gaps"][(400, 6)]
    assert "limits_monotone_toward_target" in diag
    report(10, f"exact C(400,6) = {float(cell.ratio):.6f}, gap to 2^-1/2 = "
               f"{gap:.4f}, monotone trend flag = "
               f"{diag['limits_monotone_toward_target']}")


def test_criterion_11_bias_direction_remark():
    for r, s, m, n_terms in ((1, 2, 2, 2), (1, 3, 3, 1)):
        sys = build_sets(ProgressionSpec(r, s, m, n_terms))
        counts = bias_counts_upto(sys, 200)
        for n in range(50, 201):
            assert counts[n].greater > counts[n].less, (r, s, m, n_terms, n)
    report(11, "greater > less for all 50 <= n <= 200 on both progressions")
