"""Zagier's matrix B_K for odd weight k = 2K + 1, canonical relations, and
the renormalization matrices linking period polynomials to relation vectors.

Row order follows the printed B_5: zeta(2, k-2), zeta(4, k-4), ..., zeta(k-1, 1).
Column n (1..K) is zeta(2n+1) zeta(k-2n-1); the last column carries the
factor zeta(0) = -1/2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import HomPoly, QMatrix, binom, left_kernel, partial_x, primitive, rank
from .period import MINUS, PLUS, dim_cusp_forms, period_space_basis
from .relation import (
    CANONICAL,
    TYPE_I,
    TYPE_II,
    Relation,
    _require,
    raw_relation,
    type1_relation,
    type2_relation,
)

ZETA_ZERO = Fraction(-1, 2)


@dataclass(frozen=True)
class ZagierMatrix:
    K: int
    entries: QMatrix
    row_labels: tuple[str, ...]
    col_labels: tuple[str, ...]

    @property
    def weight(self) -> int:
        return 2 * self.K + 1

    def to_json(self) -> dict:
        return {
            "K": self.K,
            "weight": self.weight,
            "rows": list(self.row_labels),
            "cols": list(self.col_labels),
            "matrix": self.entries.to_json(),
        }


def bracket(K: int, m: int, n: int) -> int:
    """delta_{n,m} + delta_{n,K} - C(2n, 2m) - C(2n, 2K-2m-1)."""
    return int(n == m) + int(n == K) - binom(2 * n, 2 * m) - binom(2 * n, 2 * K - 2 * m - 1)


def row_firsts(K: int) -> list[int]:
    """First arguments r of the rows: 2, 4, ..., 2K."""
    return list(range(2, 2 * K + 1, 2))


def unfolded_matrix(K: int) -> QMatrix:
    """The bare brackets, without the zeta(0) factor in the last column."""
    k = 2 * K + 1
    rows = []
    for r in row_firsts(K):
        m = (k - 1 - r) // 2
        rows.append([bracket(K, m, n) for n in range(1, K + 1)])
    return QMatrix.from_rows(rows, K)


def zagier_matrix(K: int) -> ZagierMatrix:
    if K < 2:
        raise ValueError(f"K must be >= 2, got {K}")
    k = 2 * K + 1
    raw = unfolded_matrix(K)
    rows = [r[:-1] + [r[-1] * ZETA_ZERO] for r in raw.to_rows()]
    row_labels = tuple(f"zeta({r},{k - r})" for r in row_firsts(K))
    col_labels = tuple(f"zeta({k - 2 * n - 1})zeta({2 * n + 1})" for n in range(1, K)) + (f"zeta({k})",)
    return ZagierMatrix(K, QMatrix.from_rows(rows, K), row_labels, col_labels)


def zagier_submatrix(K: int) -> QMatrix:
    """B_K^(1): drop the zeta(k-1, 1) row and the zeta(k) column."""
    B = zagier_matrix(K).entries
    return B.submatrix(range(K - 1), range(K - 1))


def relation_row_vector(rel: Relation, K: int | None = None) -> list[Fraction]:
    """Embed a relation's coefficients into B_K row coordinates.

    Coordinates are the even first arguments 2, 4, ..., 2K; any odd-r
    coefficient is rejected.
    """
    if K is None:
        K = (rel.weight - 1) // 2
    if rel.weight != 2 * K + 1:
        raise ValueError(f"relation weight {rel.weight} does not match K={K}")
    bad = [r for r in rel.coeffs if r % 2]
    if bad:
        raise ValueError(f"relation has odd first arguments {bad}")
    return [rel.coefficient(r) for r in row_firsts(K)]


def canonical_relation(k: int) -> Relation:
    """2(k-2) Z_{k-1,1} + sum_{4<=r<=k-3, r even} (r-s) Z_{r,s} - (k-2) Z_{2,k-2} = -3(k-3)/4 Z_k."""
    if k % 2 == 0 or k < 5:
        raise ValueError(f"canonical relations need odd k >= 5, got {k}")
    coeffs = {k - 1: 2 * (k - 2), 2: -(k - 2)}
    for r in range(4, k - 2, 2):
        coeffs[r] = r - (k - r)
    return Relation(k, coeffs, Fraction(-3 * (k - 3), 4), {"kind": CANONICAL})


def combine_kernel_element(rel: Relation) -> tuple[list[Fraction], dict]:
    """Cancel Z_k between the canonical relation and ``rel``.

    Returns a primitive vector over (zeta(2,k-2), ..., zeta(k-1,1)) lying in
    the left kernel of B_K, together with provenance notes.
    """
    k = rel.weight
    if k % 2 == 0:
        raise ValueError("weight must be odd")
    if not rel.coeffs:
        raise ValueError("cannot eliminate zeta(k) with the zero relation")
    K = (k - 1) // 2
    canon = canonical_relation(k)
    a = relation_row_vector(rel, K)
    c = relation_row_vector(canon, K)
    info = {"kind": "kernel-element", "weight": k}
    if rel.lam == 0:
        # rel already has no zeta(k) term
        v = a
        info["novel"] = False
    else:
        v = [rel.lam * ci - canon.lam * ai for ai, ci in zip(a, c)]
        info["novel"] = True
    v, _ = primitive(v)
    B = zagier_matrix(K).entries
    if any(B.left_apply(v)):
        raise ArithmeticError(f"combined vector {v} is not in the left kernel of B_{K}")
    return v, info


# ---------------------------------------------------------------------------
# renormalization matrices


@dataclass(frozen=True)
class RenormMatrices:
    kind: int
    weight: int
    D: QMatrix
    B: QMatrix

    @property
    def size(self) -> int:
        return self.D.rows

    def apply(self, vec) -> list[Fraction]:
        return (self.D @ self.B).apply(vec)


def renorm_matrices(k: int, kind: int) -> RenormMatrices:
    """D^{-1} = diag C(k-1, 2i-1) (kind 1) or C(k-3, 2i-1) (kind 2); B_ij = C(2j, 2i-1)."""
    if k % 2:
        raise ValueError(f"weight must be even, got {k}")
    if kind == 1:
        n, top = (k - 2) // 2, k - 1
    elif kind == 2:
        n, top = (k - 4) // 2, k - 3
    else:
        raise ValueError(f"kind must be 1 or 2, got {kind}")
    D = QMatrix.diagonal([Fraction(1, binom(top, 2 * i - 1)) for i in range(1, n + 1)])
    B = QMatrix.from_rows([[binom(2 * j, 2 * i - 1) for j in range(1, n + 1)] for i in range(1, n + 1)], n)
    return RenormMatrices(kind, k, D, B)


def odd_vector(p: HomPoly, kind: int) -> list[Fraction]:
    """alpha (kind 1, from p) or beta (kind 2, from dp/dX).

    Entry j is the coefficient of Y^(2j-1) (kind 1) or Y^(2j) (kind 2),
    j = 1, 2, ...
    """
    k = p.degree + 2
    if kind == 1:
        _require(p, k, PLUS)
        return [p[k - 1 - 2 * j] for j in range(1, (k - 2) // 2 + 1)]
    _require(p, k, MINUS)
    d = partial_x(p)
    return [d[k - 3 - 2 * j] for j in range(1, (k - 4) // 2 + 1)]


def renormalized_vector(p: HomPoly, kind: int) -> list[Fraction]:
    """D B applied to the odd-power vector: entry i is the coefficient of Z_{2i, *}."""
    return renorm_matrices(p.degree + 2, kind).apply(odd_vector(p, kind))


def kind_relation(p: HomPoly, kind: int) -> Relation:
    return raw_relation(p, TYPE_I if kind == 1 else TYPE_II)


# ---------------------------------------------------------------------------
# rank of the generated relations


def generated_relations(k: int) -> list[Relation]:
    """Type I relations from W_{k-1}^+ and Type II relations from W_{k+1}^-."""
    out = [type1_relation(p) for p in period_space_basis(k - 1, PLUS)]
    out += [type2_relation(p) for p in period_space_basis(k + 1, MINUS)]
    return out


def relation_rank(k: int) -> int:
    if k % 2 == 0 or k < 7:
        raise ValueError(f"weight must be odd and >= 7, got {k}")
    rels = generated_relations(k)
    rs = list(range(4, k - 2, 2))
    rows = [r.vector(rs) for r in rels]
    if not rows:
        return 0
    return rank(QMatrix.from_rows(rows, len(rs)))


def expected_rank(k: int) -> int:
    return dim_cusp_forms(k - 1) + dim_cusp_forms(k + 1)


__all__ = [
    "ZagierMatrix",
    "RenormMatrices",
    "zagier_matrix",
    "zagier_submatrix",
    "unfolded_matrix",
    "left_kernel",
    "canonical_relation",
    "combine_kernel_element",
    "renorm_matrices",
    "renormalized_vector",
    "odd_vector",
    "relation_rank",
    "expected_rank",
    "generated_relations",
    "relation_row_vector",
]
