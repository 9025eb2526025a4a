"""Acceptance suite: every criterion at its stated range, exact equality only.

Each test prints one pass line (visible with ``pytest -s`` or on failure);
tolerances are zero everywhere, so the asserts are plain ``==`` on Fractions,
polynomials, and field elements.
"""

import math
import random
from fractions import Fraction

from qmzv.cyclo import cyclo_ctx, cyclotomic_poly, product_one_minus_powers
from qmzv.exactnum import UniPoly, det_fraction_free, det_hessenberg
from qmzv.qstirling import (
    RootOfUnityQ,
    SymbolicQ,
    orthogonality_check,
    stirling1,
    stirling1_closed,
    stirling2,
    stirling2_iterated,
)
from qmzv.seqlib import (
    bell_complete,
    bell_partition_sum,
    norlund,
    seq_transform_forward,
    seq_transform_inverse,
)
from qmzv.zeta import (
    REFERENCE_CONSTANT_TERMS,
    REFERENCE_POLYNOMIALS,
    _zeta_multi,
    _zeta_single,
    harmonic_bernoulli_identity_check,
    harmonic_decomposition_check,
    logf_identity_check,
    zeta_1s_det,
    zeta_1s_degenerate_bernoulli,
    zeta_bell,
    zeta_brute,
    zeta_det,
    zeta_m1_closed,
    zeta_m2_closed,
    zeta_m2_rstirling,
    zeta_m3_closed,
    zeta_poly_in_n,
    zeta_row_from_column,
    zeta_via_stirling,
)

F = Fraction


def _report(number, label):
    print(f"[acceptance] criterion {number:2d} ({label}): PASS")


def test_criterion_01_single_level_binomial_row():
    for n in range(2, 26):
        for m in range(0, n):
            assert _zeta_multi(n, m, 1) == zeta_m1_closed(n, m), (n, m)
    for n in range(2, 13):
        for m in range(0, n):
            assert zeta_brute(n, m, 1).value == zeta_m1_closed(n, m), (n, m)
    _report(1, "Z(zeta; m, 1) = C(n-1, m)/(m+1), n <= 25, brute-checked n <= 12")


def test_criterion_02_level_two_closed_form():
    for n in range(2, 26):
        for m in range(1, 13):
            closed = zeta_m2_closed(n, m)
            assert closed == _zeta_multi(n, m, 2), (n, m)
            via_rst, via_tuples = zeta_m2_rstirling(n, m)
            assert via_rst == closed and via_tuples == closed, (n, m)
    for m in range(1, 5):
        assert zeta_poly_in_n(m, 2) == REFERENCE_POLYNOMIALS[(m, 2)], m
    _report(2, "s = 2 closed form + both r-Stirling variants, n <= 25, m <= 12")


def test_criterion_03_level_three_closed_form():
    for n in range(2, 19):
        for m in range(1, 7):
            assert zeta_m3_closed(n, m) == _zeta_multi(n, m, 3), (n, m)
    for m in range(1, 5):
        assert zeta_poly_in_n(m, 3) == REFERENCE_POLYNOMIALS[(m, 3)], m
    _report(3, "s = 3 closed form, n <= 18, m <= 6, incl. the degree-8 factor")


def test_criterion_04_single_row_polynomials_and_constants():
    for s in range(2, 10):
        assert zeta_poly_in_n(1, s) == REFERENCE_POLYNOMIALS[(1, s)], s
    for s in range(1, 10):
        const = REFERENCE_POLYNOMIALS[(1, s)].coeff(0)
        assert const == F((-1) ** (s - 1)) * norlund(s) / math.factorial(s), s
        if s <= len(REFERENCE_CONSTANT_TERMS):
            assert const == REFERENCE_CONSTANT_TERMS[s - 1], s
    _report(4, "Z(zeta; 1, s) polynomials s = 2..9; constants = +-B_s^(s)/s!")


def test_criterion_05_level_four_displays():
    assert zeta_poly_in_n(1, 4) == REFERENCE_POLYNOMIALS[(1, 4)]
    assert zeta_poly_in_n(2, 4) == REFERENCE_POLYNOMIALS[(2, 4)]
    _report(5, "s = 4 displays for m = 1 and m = 2")


def test_criterion_06_degenerate_bernoulli_family():
    for n in range(2, 21):
        for s in range(1, 9):
            assert zeta_1s_degenerate_bernoulli(n, s) == zeta_brute(n, 1, s).value, (n, s)
        for j in range(1, 7):
            assert harmonic_bernoulli_identity_check(n, j).passed, (n, j)
        for s in range(1, 9):
            assert harmonic_decomposition_check(n, s).passed, (n, s)
    _report(6, "degenerate-Bernoulli value, in-field link, and decomposition, n <= 20")


def test_criterion_07_determinant_and_bell_routes():
    for n in range(2, 15):
        for s in range(1, 4):
            for m in range(1, 9):
                ref = _zeta_multi(n, m, s)
                assert zeta_bell(n, m, s).value == ref, ("bell", n, m, s)
                assert zeta_det(n, m, s).value == ref, ("det", n, m, s)
                assert zeta_via_stirling(n, m, s).value == ref, ("stirling", n, m, s)
                assert zeta_row_from_column(n, m, s) == _zeta_single(n, m * s), (n, m, s)
            assert zeta_1s_det(n, s) == _zeta_single(n, s), (n, s)
    _report(7, "Bell/determinant/inverse-determinant routes, n <= 14, m <= 8, s <= 3")


def test_criterion_08_orthogonality():
    for r in (1, 2, 3):
        for s in (1, 2, 3):
            res = orthogonality_check(10, r=r, s=s, q=SymbolicQ())
            assert res.passed, (r, s, res.first_failure())
            res = orthogonality_check(10, r=r, s=s, q=RootOfUnityQ(7))
            assert res.passed, (r, s, res.first_failure())
    _report(8, "both orthogonality sums, n, m <= 10, (r, s) in {1,2,3}^2, symbolic and zeta_7")


def test_criterion_09_sequence_transform_equivalences():
    rng = random.Random(2024)
    for trial in range(50):
        length = rng.randint(1, 8)
        a = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(length)]
        b = []
        for m in range(1, length + 1):
            vals = {
                route: seq_transform_forward(a, m, route=route)
                for route in ("recurrence", "determinant", "partition")
            }
            assert len(set(vals.values())) == 1, (trial, m, vals)
            b.append(vals["recurrence"])
        for n in range(1, length + 1):
            det = seq_transform_inverse(b, n, route="determinant")
            rec = seq_transform_inverse(b, n, route="recurrence")
            assert det == rec == a[n - 1], (trial, n)
    _report(9, "all five transform routes agree on 50 random sequences; round trip")


def test_criterion_10_log_generating_identity():
    for s in (1, 2, 3):
        res = logf_identity_check(s, 12)
        assert res.passed, (s, res.first_failure())
    _report(10, "bivariate log identity, s = 1, 2, 3, truncation 12")


def test_criterion_11_stirling_closed_forms():
    sym = SymbolicQ()
    for r in (1, 2, 3):
        for s in (1, 2, 3):
            for n in range(r + 1, 11):
                for m in range(r, n):
                    a, b = stirling1_closed(n, m, r, s, sym)
                    want = stirling1(n, m, r, s, sym)
                    assert a == want and b == want, ("first", r, s, n, m)
                for k in range(r + 1, n + 1):
                    a, b = stirling2_iterated(n, k, r, s, sym)
                    want = stirling2(n, k, r, s, sym)
                    assert a == want and b == want, ("second", r, s, n, k)
    _report(11, "subset-sum and iterated-sum closed forms, n <= 10, r, s <= 3, symbolic q")


def test_criterion_12_infrastructure():
    for n in range(1, 41):
        prod = UniPoly((1,))
        for d in range(1, n + 1):
            if n % d == 0:
                prod = prod * cyclotomic_poly(d)
        assert prod == UniPoly((-1,) + (0,) * (n - 1) + (1,)), n

    rng = random.Random(9)
    for n in range(2, 31):
        ctx = cyclo_ctx(n)
        for _ in range(4):
            a = ctx.element(
                [F(rng.randint(-5, 5), rng.randint(1, 5)) for _ in range(ctx.degree)]
            )
            if not a.is_zero():
                assert a * a.inverse() == 1, n

    for n in range(2, 41):
        assert product_one_minus_powers(cyclo_ctx(n)) == n, n

    for n in range(0, 11):
        xs = [F(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(n)]
        assert bell_complete(n, xs) == bell_partition_sum(n, xs), n

    for d in range(1, 9):
        for _ in range(4):
            m = [
                [F(rng.randint(-9, 9), rng.randint(1, 9)) if j <= i + 1 else F(0) for j in range(d)]
                for i in range(d)
            ]
            assert det_hessenberg(m) == det_fraction_free(m), d
    _report(12, "cyclotomic, Bell, and determinant infrastructure properties")
