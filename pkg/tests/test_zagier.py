from fractions import Fraction
from math import comb

import pytest

from dzrel.exact import QMatrix, left_kernel
from dzrel.formal import build_space, holds_with
from dzrel.period import period_space_basis
from dzrel.relation import TYPE_I, TYPE_II, Relation, raw_relation, type1_relation, type2_relation
from dzrel.zagier import (
    canonical_relation, combine_kernel_element, expected_rank, relation_rank, renorm_matrices,
    renormalized_vector, zagier_matrix, zagier_submatrix,
)

F = Fraction

B5 = [
    [-2, -4, -6, -8, 27],
    [0, -4, -20, -84, F(329, 2)],
    [0, 0, -21, -126, F(461, 2)],
    [0, -6, -15, -36, 82],
    [-1, -1, -1, -1, 5],
]


def test_b5():
    assert zagier_matrix(5).entries.to_rows() == [[F(x) for x in row] for row in B5]


def test_b6_direct():
    K = 6
    want = []
    for r in range(2, 2 * K + 1, 2):
        m = (2 * K - r) // 2
        row = []
        for n in range(1, K + 1):
            e = (n == m) + (n == K) - comb(2 * n, 2 * m) - (comb(2 * n, 2 * K - 2 * m - 1) if 2 * K - 2 * m - 1 >= 0 else 0)
            row.append(F(e) * (F(-1, 2) if n == K else 1))
        want.append(row)
    assert zagier_matrix(K).entries.to_rows() == want


def test_left_kernels():
    sub = zagier_submatrix(5)
    assert not any(sub.left_apply([0, -42, 20, 28]))
    assert left_kernel(QMatrix.identity(4)) == []
    # weight 13 relation (zeta(2,11) slot first) annihilates B_6^(1)
    assert not any(zagier_submatrix(6).left_apply([0, -36, -10, 28, 24]))
    with pytest.raises(ValueError):
        zagier_matrix(1)


def test_canonical_examples():
    assert canonical_relation(5) == Relation(5, {4: 6, 2: -3}, F(-3, 2))
    assert canonical_relation(9) == Relation(9, {8: 14, 6: 3, 4: -1, 2: -7}, F(-9, 2))
    assert canonical_relation(15) == Relation(
        15, {14: 26, 12: 9, 10: 5, 8: 1, 6: -3, 4: -7, 2: -13}, -9)
    with pytest.raises(ValueError):
        canonical_relation(8)


def test_canonical_weight7():
    # the formula gives +1 on zeta(4,3); that sign is what the oracle accepts
    rel = canonical_relation(7)
    assert rel.coeffs == {6: 10, 4: 1, 2: -5}
    sp = build_space(7)
    assert holds_with(sp, rel)
    assert not holds_with(sp, Relation(7, {6: 10, 4: -1, 2: -5}, -3))


@pytest.mark.parametrize("k", range(5, 30, 2))
def test_canonical_passes_oracle(k):
    assert holds_with(build_space(k), canonical_relation(k))


def test_kernel_element_weight11():
    v, info = combine_kernel_element(type2_relation(period_space_basis(12, "-")[1]))
    assert v in ([3, -27, 13, 17, -6], [-3, 27, -13, -17, 6])
    assert info["novel"]
    with pytest.raises(ValueError):
        combine_kernel_element(Relation(11, {}, 0))


@pytest.mark.parametrize("k", range(11, 30, 2))
def test_kernel_elements_annihilate_B(k):
    B = zagier_matrix((k - 1) // 2).entries
    rels = [type1_relation(p) for p in period_space_basis(k - 1, "+")]
    rels += [r for r in (type2_relation(p) for p in period_space_basis(k + 1, "-")) if not r.is_zero()]
    assert rels
    for rel in rels:
        v, _ = combine_kernel_element(rel)
        assert any(v)
        assert not any(B.left_apply(v))


def test_renorm_weight12():
    r2 = renorm_matrices(12, 2)
    assert r2.D == QMatrix.diagonal([F(1, 9), F(1, 84), F(1, 126), F(1, 36)])
    assert r2.apply([4, -9, 6, -1]) == [0, F(1, 3), F(-10, 63), F(-2, 9)]
    r1 = renorm_matrices(12, 1)
    assert r1.apply([4, -25, 42, -25, 4]) == [0, F(-12, 11), F(-10, 33), F(28, 33), F(8, 11)]
    with pytest.raises(ValueError):
        renorm_matrices(11, 1)


def test_renorm_shared_between_kinds():
    for N in range(5, 42, 2):
        a, b = renorm_matrices(N - 1, 1), renorm_matrices(N + 1, 2)
        assert a.D == b.D and a.B == b.B


@pytest.mark.parametrize("k", [12, 16, 18, 20, 24, 28])
def test_renormalized_vector_is_the_relation(k):
    for kind, sign, tag in ((1, "+", TYPE_I), (2, "-", TYPE_II)):
        for p in period_space_basis(k, sign):
            rel = raw_relation(p, tag)
            vec = renormalized_vector(p, kind)
            for i, x in enumerate(vec, start=1):
                r = 2 * i
                assert r <= rel.weight - 3
                assert x == rel.coefficient(r)


@pytest.mark.parametrize("k, want", [(11, 1), (17, 2), (35, 5)])
def test_ranks(k, want):
    assert relation_rank(k) == want == expected_rank(k)


def test_rank_domain():
    with pytest.raises(ValueError):
        relation_rank(8)
