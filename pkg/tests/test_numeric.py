import math

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from dzrel import numeric
from dzrel.numeric import (
    Precision, c_constant, certified_below, double_zeta, restricted_ratio, restricted_sum,
    verify_numeric, zeta, zeta_minus_one,
)
from dzrel.relation import Relation

P = Precision(1e-13)
mp = mpmath.mp


def _encloses(rep, lo, hi):
    return lo - rep.bound <= rep.value <= hi + rep.bound


def test_zeta2_against_direct_sum():
    N = 200000
    head = math.fsum(1.0 / n**2 for n in range(1, N + 1))
    # tail of 1/n^2 past N lies in [1/(N+1), 1/N]
    lo, hi = head + 1 / (N + 1) - 1e-12, head + 1 / N + 1e-12
    assert _encloses(zeta(2, P), lo, hi)
    assert abs(zeta(2, P).value - mpmath.pi**2 / 6) < 1e-13


def test_zeta_high_weight():
    assert zeta_minus_one(40, P).value < 1e-12
    z = zeta(40, P)
    assert 1 < z.value < 1 + 1e-11


def test_sum_of_zeta_minus_one():
    total = mpmath.fsum(zeta_minus_one(j, P).value for j in range(2, 60))
    # remaining terms j >= 60 are below 2^-58
    assert abs(total - 1) < 1e-12


def test_zeta21_equals_zeta3():
    a, b = double_zeta(2, 1, P), zeta(3, P)
    assert abs(a.value - b.value) <= a.bound + b.bound + 1e-14


def test_zeta21_brute_force_enclosure():
    M = 4000
    s = 0.0
    H = 0.0
    for m in range(2, M + 1):
        H += 1.0 / (m - 1)
        s += H / (m * m)
    # tail sum_{m>M} H_{m-1}/m^2 is positive and below (2 + ln M)/M
    v = double_zeta(2, 1, P)
    assert s - 1e-9 <= v.value <= s + (2 + math.log(M)) / M


@pytest.mark.parametrize("r, s", [(2, 2), (3, 2), (5, 3), (4, 1)])
def test_against_hurwitz_series(r, s):
    with mp.workdps(30):
        ref = mpmath.nsum(lambda n: n ** (-s) * mpmath.zeta(r, n + 1), [1, mpmath.inf])
    v = double_zeta(r, s, P)
    assert abs(v.value - ref) < v.bound + 1e-15


def test_stuffle():
    for r, s in [(2, 3), (3, 3), (5, 4), (7, 2)]:
        a, b = double_zeta(r, s, P), double_zeta(s, r, P)
        res = a.value + b.value - zeta(r, P).value * zeta(s, P).value + zeta(r + s, P).value
        assert abs(res) < 1e-11


def test_sum_formula_numeric():
    rep = verify_numeric(Relation(8, {r: 1 for r in range(2, 8)}, 1), P)
    assert certified_below(rep, 1e-10)


def test_verify_numeric_rejects_false_relation():
    rep = verify_numeric(Relation(11, {8: 28, 6: 20, 4: -42}, -2), P)
    assert not certified_below(rep, 1e-3)
    rep = verify_numeric(Relation(11, {8: 28, 6: 20, 4: -42}, -3), P)
    assert certified_below(rep, 1e-10)


def test_z1_realized_by_kappa():
    rel = Relation(5, {1: 1}, 0)
    assert verify_numeric(rel, P, kappa=0.5).value == pytest.approx(0.5)


@settings(max_examples=15, deadline=None)
@given(st.integers(2, 9), st.integers(2, 9))
def test_bracket_bound(r, s):
    # the n = 1 slice of the double sum is zeta(r) - 1; the rest is below (zeta(r)-1)(zeta(s)-1)
    v = double_zeta(r, s, P).value
    zr1 = zeta_minus_one(r, P).value
    zs1 = zeta_minus_one(s, P).value
    assert 0 < v - zr1 < zr1 * zs1


def test_c_constants():
    c = c_constant(2, 0, P)
    assert abs(c.value - mpmath.mpf(3) / 4) < 1e-12
    assert c.bound < 1e-12
    assert abs(c_constant(1, 0, P).value - 1) < 1e-12


@pytest.mark.parametrize("d", [2, 3, 4])
def test_restricted_sums_partition(d):
    k = 14
    total = mpmath.fsum(restricted_sum(k, d, i, P).value for i in range(d))
    assert abs(total - zeta(k, P).value) < 1e-11


def test_d2_even_ratio():
    for k in (8, 12, 20):
        assert abs(restricted_ratio(k, 2, 0, P).value - mpmath.mpf(3) / 4) < 1e-11
    assert abs(restricted_ratio(9, 1, 0, P).value - 1) < 1e-11


def test_convergence_d3():
    C = c_constant(3, 0, P).value
    errs = [abs(restricted_ratio(k, 3, 0, P).value - C) for k in (15, 25, 35)]
    assert errs[0] > errs[1] > errs[2]
    assert errs[2] < 1e-9


def test_invalid_inputs():
    with pytest.raises(ValueError):
        zeta(1)
    with pytest.raises(ValueError):
        double_zeta(1, 3)
    with pytest.raises(ValueError):
        c_constant(3, 3)
    with pytest.raises(ValueError):
        Precision(0)
    with pytest.raises(ValueError):
        Precision(1e-60)
