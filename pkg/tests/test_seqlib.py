import math
import random
from fractions import Fraction
from itertools import combinations

import pytest

from qmzv.exactnum import UniPoly
from qmzv.qstirling import rstirling1
from qmzv.seqlib import (
    InsufficientInput,
    UnsupportedLambda,
    bell_complete,
    bell_partition_sum,
    bernoulli_order,
    degen_bernoulli,
    degen_bernoulli_poly,
    elem_from_power_sums,
    harmonic,
    hyperharmonic,
    norlund,
    seq_transform_forward,
    seq_transform_inverse,
)

F = Fraction


def rand_frac(rng):
    return F(rng.randint(-9, 9), rng.randint(1, 9))


def bernoulli_classic(k):
    bs = [F(1)]
    for m in range(1, k + 1):
        acc = F(0)
        for j in range(m):
            acc += math.comb(m + 1, j) * bs[j]
        bs.append(-acc / (m + 1))
    return bs


# ------------------------------------------------------------------- Bell


def test_bell_base_cases():
    assert bell_complete(0, []) == 1
    assert bell_partition_sum(0, []) == 1
    assert bell_complete(1, [F(5)]) == 5


def test_bell_three_matches_hand_formula():
    rng = random.Random(3)
    for _ in range(10):
        x1, x2, x3 = (rand_frac(rng) for _ in range(3))
        want = x1 ** 3 + 3 * x1 * x2 + x3
        assert bell_complete(3, [x1, x2, x3]) == want
        assert bell_partition_sum(3, [x1, x2, x3]) == want


def test_bell_recurrence_equals_partition_sum():
    rng = random.Random(5)
    for n in range(0, 11):
        xs = [rand_frac(rng) for _ in range(n)]
        assert bell_complete(n, xs) == bell_partition_sum(n, xs), n


def test_bell_insufficient_input():
    with pytest.raises(InsufficientInput):
        bell_complete(3, [F(1)])
    with pytest.raises(InsufficientInput):
        bell_partition_sum(2, [F(1)])


def test_bell_generating_function():
    # exp(sum x_m t^m / m!) coefficient check for a fixed input
    from qmzv.exactnum import TruncSeries, series_exp

    xs = [F(1), F(-2), F(3), F(1, 2), F(0), F(7)]
    n = len(xs)
    inner = TruncSeries(n + 1, [F(0)] + [xs[m - 1] / math.factorial(m) for m in range(1, n + 1)])
    e = series_exp(inner)
    for k in range(n + 1):
        assert e.coeffs[k] * math.factorial(k) == bell_complete(k, xs)


# ------------------------------------------------- elementary from power sums


def test_elem_from_power_sums_pair():
    rng = random.Random(7)
    for _ in range(10):
        a, b = rand_frac(rng), rand_frac(rng)
        assert elem_from_power_sums([a + b, a * a + b * b], 2) == a * b


def test_elem_from_power_sums_explicit():
    g = [F(6), F(14), F(36)]  # power sums of {1, 2, 3}
    assert elem_from_power_sums(g, 2) == 11
    assert elem_from_power_sums(g, 0) == 1


def test_elem_from_power_sums_random_multisets():
    rng = random.Random(11)
    for _ in range(15):
        vals = [rand_frac(rng) for _ in range(rng.randint(1, 6))]
        g = [sum(v ** j for v in vals) for j in range(1, len(vals) + 1)]
        for k in range(len(vals) + 1):
            direct = sum(
                (math.prod(c) for c in combinations(vals, k)),
                start=F(0),
            ) if k else F(1)
            assert elem_from_power_sums(g, k) == direct


# -------------------------------------------------------- sequence transform


def test_transform_small_cases():
    assert seq_transform_forward([F(1), F(0)], 2, route="determinant") == F(1, 2)
    rng = random.Random(13)
    a = [rand_frac(rng) for _ in range(4)]
    for route in ("recurrence", "determinant", "partition"):
        assert seq_transform_forward(a, 1, route=route) == a[0]
    b = [rand_frac(rng) for _ in range(3)]
    assert seq_transform_inverse(b, 1) == b[0]


def test_transform_routes_agree():
    rng = random.Random(17)
    for _ in range(20):
        a = [rand_frac(rng) for _ in range(rng.randint(1, 6))]
        for m in range(1, len(a) + 1):
            vals = {
                seq_transform_forward(a, m, route=r)
                for r in ("recurrence", "determinant", "partition")
            }
            assert len(vals) == 1


def test_transform_inverse_routes_agree():
    rng = random.Random(19)
    for _ in range(20):
        b = [rand_frac(rng) for _ in range(rng.randint(1, 6))]
        for n in range(1, len(b) + 1):
            d = seq_transform_inverse(b, n, route="determinant")
            r = seq_transform_inverse(b, n, route="recurrence")
            assert d == r


def test_transform_round_trip():
    a = [F(2), F(3), F(5), F(-7), F(1, 3)]
    b = [seq_transform_forward(a, m) for m in range(1, len(a) + 1)]
    for n in range(1, len(a) + 1):
        assert seq_transform_inverse(b, n) == a[n - 1]


def test_transform_newton_identity_semantics():
    # with a_i the power sums of a value multiset, b_m is elementary symmetric
    vals = [F(1), F(-2), F(3, 2)]
    a = [sum(v ** i for v in vals) for i in range(1, 4)]
    for m in range(1, 4):
        direct = sum((math.prod(c) for c in combinations(vals, m)), start=F(0))
        assert seq_transform_forward(a, m) == direct


# ------------------------------------------------------- harmonic numbers


def test_harmonic_values():
    assert harmonic(1) == 1
    assert harmonic(3) == F(11, 6)


def test_hyperharmonic_values():
    assert hyperharmonic(2, 2) == F(5, 2)
    assert hyperharmonic(3, 1) == harmonic(3)
    # closed form h_n^(k) = C(n+k-1, k-1) (H_{n+k-1} - H_{k-1})
    for n in range(1, 8):
        for k in range(2, 6):
            want = math.comb(n + k - 1, k - 1) * (harmonic(n + k - 1) - harmonic(k - 1))
            assert hyperharmonic(n, k) == want


def test_hyperharmonic_rstirling_bridge():
    assert rstirling1(4, 3, 2) == 2 * hyperharmonic(2, 2) == 5
    # the hyperharmonic factor carries (m+1)!, which collapses to m+1 only
    # in the m = 1 case above
    for m in range(1, 9):
        lhs = rstirling1(2 * m + 2, m + 2, m + 1)
        mid = F(math.factorial(2 * m + 1), math.factorial(m)) * (
            harmonic(2 * m + 1) - harmonic(m)
        )
        rhs = math.factorial(m + 1) * hyperharmonic(m + 1, m + 1)
        assert lhs == mid == rhs, m


# ------------------------------------------------- degenerate Bernoulli


def test_degen_bernoulli_poly_displays():
    lam = UniPoly((F(0), F(1)))
    assert degen_bernoulli_poly(0) == UniPoly((F(1),))
    assert degen_bernoulli_poly(1) == (lam - 1) / 2
    assert degen_bernoulli_poly(2) == -(lam * lam - 1) / 6
    assert degen_bernoulli_poly(3) == (lam ** 3 - lam) / 4
    assert degen_bernoulli_poly(4) == -(19 * lam ** 4 - 20 * lam ** 2 + 1) / 30
    # beta_5 pinned by an independent oracle: at lambda = 1/2 the generating
    # function is exactly 1/(1 + t/4), so beta_5(1/2) = 5! (-1/4)^5
    assert degen_bernoulli_poly(5) == (9 * lam ** 5 - 10 * lam ** 3 + lam) / 4
    assert degen_bernoulli_poly(5)(F(1, 2)) == math.factorial(5) * F(-1, 4) ** 5
    assert degen_bernoulli_poly(5)(F(1)) == 0


def test_degen_bernoulli_rational_mode():
    assert degen_bernoulli(2, F(1, 3)) == F(4, 27)
    assert degen_bernoulli(0, F(1, 2)) == 1
    # lambda = 1 collapses the generating function to the constant 1
    assert degen_bernoulli(3, 1) == 0


def test_degen_bernoulli_rational_vs_poly():
    for k in range(0, 9):
        p = degen_bernoulli_poly(k)
        for n in (1, 2, 3, 5, 12):
            assert degen_bernoulli(k, F(1, n)) == p(F(1, n)), (k, n)


def test_degen_bernoulli_at_zero_is_classical():
    bs = bernoulli_classic(12)
    for k in range(13):
        assert degen_bernoulli_poly(k)(F(0)) == bs[k], k


def test_degen_bernoulli_unsupported_lambda():
    with pytest.raises(UnsupportedLambda):
        degen_bernoulli(3, F(2, 3))
    with pytest.raises(UnsupportedLambda):
        degen_bernoulli(3, 0)


# ----------------------------------------- higher-order Bernoulli / Norlund


def test_bernoulli_order_first_values():
    bs = bernoulli_classic(8)
    for n in range(9):
        assert bernoulli_order(n, 1) == bs[n]
    assert bernoulli_order(1, 1) == F(-1, 2)
    assert bernoulli_order(2, 2) == F(5, 6)


def test_norlund_values():
    assert [norlund(n) for n in range(5)] == [1, F(-1, 2), F(5, 6), F(-9, 4), F(251, 30)]
    assert F((-1) ** 6) * norlund(7) / math.factorial(7) == F(-5257, 17280)


def test_norlund_equals_diagonal_order():
    for n in range(13):
        assert norlund(n) == bernoulli_order(n, n), n


def test_listed_constant_sequence():
    listed = [
        F(-1, 2), F(-5, 12), F(-3, 8), F(-251, 720),
        F(-95, 288), F(-19087, 60480), F(-5257, 17280),
    ]
    for s, want in enumerate(listed, start=1):
        assert F((-1) ** (s - 1)) * norlund(s) / math.factorial(s) == want
