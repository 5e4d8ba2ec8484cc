from fractions import Fraction
from math import factorial

import pytest
from hypothesis import given, settings, strategies as st

from dzrel.exact import (
    EPS, IDENTITY, S, T, TP, U, HomPoly, Mat2, QMatrix, act, beta_integral, binom,
    dehomogenize, homogenize, integrate_on_segment, kernel, left_kernel, partial_x,
    partial_y, primitive, rank, rref, solve, span_equal,
)

small_int = st.integers(-5, 5)
mats = st.tuples(small_int, small_int, small_int, small_int).filter(
    lambda t: t[0] * t[3] - t[1] * t[2] != 0
).map(lambda t: Mat2(*t))


@st.composite
def polys(draw, degree=None):
    d = draw(st.integers(0, 8)) if degree is None else degree
    cs = draw(st.lists(st.integers(-20, 20), min_size=d + 1, max_size=d + 1))
    return HomPoly(d, cs)


def test_binom_examples():
    assert binom(4, 2) == 6
    assert binom(10, 8) == 45
    assert binom(9, 3) == 84
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0


def test_act_on_period_polynomial_shift():
    # p(x+1) for the weight 12 odd period polynomial, homogenized to degree 10
    p = homogenize([0, 4, 0, -25, 0, 42, 0, -25, 0, 4, 0], 10)
    q = act(p, T)
    # ascending powers of 4x^9 + 36x^8 + 119x^7 + 161x^6 + 21x^5 - 161x^4 - 144x^3 - 36x^2
    expected = homogenize([0, 0, -36, -144, -161, 21, 161, 119, 36, 4, 0], 10)
    assert q == expected


def test_act_simple_cases():
    X = HomPoly.monomial(1, 0)
    Y = HomPoly.monomial(0, 1)
    assert act(X, T) == X + Y
    assert act(Y, T) == Y
    assert act(X * Y, S) == -(X * Y)
    assert act(X * X, EPS) == Y * Y


def test_partial_derivatives():
    P = HomPoly.from_terms(4, {3: 5, 1: 2})  # 5X^3Y + 2XY^3
    assert partial_x(P) == HomPoly.from_terms(3, {2: 15, 0: 2})
    assert partial_y(P) == HomPoly.from_terms(3, {3: 5, 1: 6})


def test_homogenize():
    assert homogenize([0, 1], 3) == HomPoly.monomial(1, 2)
    with pytest.raises(ValueError):
        homogenize([0, 0, 0, 1], 2)
    assert dehomogenize(homogenize([1, 2, 3], 4)) == [1, 2, 3, 0, 0]


def test_beta_integral_examples():
    assert beta_integral(2, 3) == Fraction(1, 60)
    assert beta_integral(0, 0) == 1


@given(st.integers(0, 20), st.integers(0, 20))
def test_beta_integral_termwise(a, b):
    # expand t^a (1-t)^b and integrate term by term
    termwise = sum(Fraction((-1) ** j * binom(b, j), a + j + 1) for j in range(b + 1))
    assert beta_integral(a, b) == termwise
    assert beta_integral(a, b) == Fraction(factorial(a) * factorial(b), factorial(a + b + 1))


def test_integrate_on_segment():
    # X*Y on (t, 1-t) integrates to 1/6
    assert integrate_on_segment(HomPoly.monomial(1, 1)) == Fraction(1, 6)


def test_linear_algebra_examples():
    M = QMatrix.from_rows([[1, 2, 3], [0, 1, 1]], 3)
    assert rank(M) == 2
    ker = kernel(M)
    assert len(ker) == 1
    assert primitive(ker[0], lead=0)[0] in ([-1, -1, 1], [1, 1, -1])
    assert all(x == 0 for x in M.apply(ker[0]))
    R, piv = rref(M)
    assert piv == [0, 1]
    assert solve(M, [6, 2]) is not None
    sing = QMatrix.from_rows([[1, 1], [1, 1]], 2)
    assert solve(sing, [1, 2]) is None
    assert left_kernel(QMatrix.identity(3)) == []


def test_primitive():
    v, f = primitive([Fraction(1, 2), Fraction(-3, 4)])
    assert v == [2, -3]
    assert f == 4


def test_singular_mat2_rejected():
    with pytest.raises(ValueError):
        Mat2(1, 2, 2, 4)


def test_named_matrices():
    assert S * S == Mat2(-1, 0, 0, -1)
    assert U ** 3 == Mat2(-1, 0, 0, -1)
    assert S * TP == Mat2(-1, -1, 1, 0)
    assert EPS * EPS == IDENTITY


@settings(max_examples=60)
@given(polys(), mats, mats)
def test_right_action(P, g, h):
    assert act(act(P, g), h) == act(P, g * h)


@given(st.integers(0, 5).map(lambda n: 2 * n).flatmap(polys))
def test_s_squared_trivial_on_even_degree(P):
    assert act(act(P, S), S) == P


@given(st.integers(0, 6).flatmap(lambda d: st.tuples(polys(d), polys(d))))
def test_partial_x_leibniz(pair):
    P, Q = pair
    lhs = partial_x(P * Q)
    if P.degree == 0 and Q.degree == 0:
        return
    rhs = None
    if P.degree:
        rhs = partial_x(P) * Q
    if Q.degree:
        term = P * partial_x(Q)
        rhs = term if rhs is None else rhs + term
    assert lhs == rhs


@given(st.integers(1, 5), st.integers(1, 6), st.data())
def test_rank_nullity(nr, nc, data):
    rows = data.draw(st.lists(st.lists(st.integers(-3, 3), min_size=nc, max_size=nc), min_size=nr, max_size=nr))
    M = QMatrix.from_rows(rows, nc)
    ker = kernel(M)
    assert rank(M) + len(ker) == nc
    for v in ker:
        assert not any(M.apply(v))
    assert span_equal(ker, ker[::-1], nc)


@given(polys())
def test_hompoly_json_round_trip(P):
    assert HomPoly.from_json(P.to_json()) == P
