import pytest

from dzrel.exact import HomPoly, act, S, U
from dzrel.period import (
    dim_cusp_forms, dim_modular_forms, is_period_polynomial, period_poly_from_x, period_space_basis,
)


def _gen_count(k):
    # independent oracle: dim M_k = #{(a, b) : 4a + 6b = k}
    return sum(1 for a in range(k // 4 + 1) for b in range(k // 6 + 1) if 4 * a + 6 * b == k)


def test_w12_plus():
    (p,) = period_space_basis(12, "+")
    assert p == period_poly_from_x([0, 4, 0, -25, 0, 42, 0, -25, 0, 4, 0], 12)


def test_w12_minus():
    b = period_space_basis(12, "-")
    assert len(b) == 2
    assert b[0] == period_poly_from_x([-1] + [0] * 9 + [1], 12)
    assert b[1] == period_poly_from_x([0, 0, -1, 0, 3, 0, -3, 0, 1, 0, 0], 12)


def test_w16_minus_second_element():
    b = period_space_basis(16, "-")
    assert b[1] == period_poly_from_x([0, 0, -2, 0, 7, 0, -11, 0, 11, 0, -7, 0, 2, 0, 0], 16)


def test_small_plus_spaces_are_empty():
    for k in (4, 6, 8, 10, 14):
        assert len(period_space_basis(k, "+")) == 0


@pytest.mark.parametrize("k", range(4, 41, 2))
def test_dimensions(k):
    assert dim_modular_forms(k) == _gen_count(k)
    assert len(period_space_basis(k, "+")) == dim_cusp_forms(k)
    assert len(period_space_basis(k, "-")) == dim_modular_forms(k)


def test_dim_cusp_examples():
    assert dim_cusp_forms(12) == 1
    assert dim_cusp_forms(14) == 0
    assert dim_cusp_forms(36) == 3
    with pytest.raises(ValueError):
        dim_cusp_forms(13)


def test_basis_members_are_period_polynomials():
    for k in (12, 16, 18, 22):
        for sign in "+-":
            for p in period_space_basis(k, sign):
                assert is_period_polynomial(p, sign)
                assert (p + act(p, S)).is_zero()
                assert (p + act(p, U) + act(p, U * U)).is_zero()


def test_is_period_polynomial_examples():
    assert is_period_polynomial(HomPoly.from_terms(10, {10: 1, 0: -1}), "-")
    assert not is_period_polynomial(HomPoly.from_terms(10, {10: 1, 0: -1}), "+")
    assert not is_period_polynomial(HomPoly.monomial(10, 0))
    assert not is_period_polynomial(HomPoly.monomial(1, 0))


def test_basis_is_deterministic():
    assert period_space_basis(24, "+") == period_space_basis(24, "+")
    for p in period_space_basis(24, "+"):
        lead = next(c for c in reversed(p.coeffs) if c)
        assert lead > 0
        assert all(c.denominator == 1 for c in p.coeffs)


def test_bad_weights():
    for k in (2, 11):
        with pytest.raises(ValueError):
            period_space_basis(k, "+")
    with pytest.raises(ValueError):
        period_space_basis(12, "sideways")
