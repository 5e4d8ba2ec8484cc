"""Period polynomial spaces W_k, W_k^+ and W_k^- for SL2(Z) in even weight."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exact import EPS, IDENTITY, S, U, HomPoly, Mat2, QMatrix, act, homogenize, kernel, normalize_basis

PLUS = "+"
MINUS = "-"


def parse_sign(sign) -> str:
    s = str(sign).strip().lower()
    if s in ("+", "plus", "odd", "1", "+1"):
        return PLUS
    if s in ("-", "minus", "even", "-1"):
        return MINUS
    raise ValueError(f"unknown sign {sign!r}; use plus or minus")


@dataclass(frozen=True)
class PeriodBasis:
    weight: int
    sign: str
    basis: tuple[HomPoly, ...]

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i: int) -> HomPoly:
        return self.basis[i]

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "sign": "plus" if self.sign == PLUS else "minus",
            "dimension": len(self.basis),
            "basis": [p.to_json() for p in self.basis],
        }


def _check_weight(k: int) -> None:
    if k % 2 or k < 4:
        raise ValueError(f"weight must be an even integer >= 4, got {k}")


def action_matrix(degree: int, terms: list[tuple[int, Mat2]]) -> QMatrix:
    """Matrix of P -> sum c * P|g on coefficient vectors (columns = monomials)."""
    n = degree + 1
    cols = []
    for i in range(n):
        mono = HomPoly.monomial(i, degree - i)
        img = HomPoly(degree)
        for c, g in terms:
            img = img + c * act(mono, g)
        cols.append(img.coeffs)
    return QMatrix(n, n, (cols[j][i] for i in range(n) for j in range(n)))


def period_relations(k: int, sign: str | None = None) -> QMatrix:
    """Stacked linear conditions cutting out W_k (or W_k^sign) inside V_k."""
    d = k - 2
    M = action_matrix(d, [(1, IDENTITY), (1, S)])
    M = M.vstack(action_matrix(d, [(1, IDENTITY), (1, U), (1, U * U)]))
    if sign is not None:
        M = M.vstack(action_matrix(d, [(1, IDENTITY), (-1 if sign == PLUS else 1, EPS)]))
    return M


def period_space_basis(k: int, sign) -> PeriodBasis:
    """Normalized basis of W_k^+ (sign '+') or W_k^- (sign '-').

    The basis is the reduced echelon form of the kernel taken with the
    highest X-power first, scaled to primitive integer polynomials with
    positive leading coefficient.
    """
    _check_weight(k)
    sign = parse_sign(sign)
    d = k - 2
    vecs = kernel(period_relations(k, sign))
    # re-echelon in descending X-power order
    desc = normalize_basis([list(reversed(v)) for v in vecs], d + 1)
    return PeriodBasis(k, sign, tuple(HomPoly(d, reversed(v)) for v in desc))


def is_period_polynomial(P: HomPoly, sign=None) -> bool:
    """Whether P|(1+S) = 0, P|(1+U+U^2) = 0 and P|eps = +-P."""
    if P.degree % 2:
        return False
    if not (P + act(P, S)).is_zero():
        return False
    if not (P + act(P, U) + act(P, U * U)).is_zero():
        return False
    if sign is None:
        return True
    sign = parse_sign(sign)
    swapped = act(P, EPS)
    return swapped == (P if sign == PLUS else -P)


def dim_modular_forms(k: int) -> int:
    if k % 2:
        raise ValueError(f"weight must be even, got {k}")
    if k < 0 or k == 2:
        return 0
    if k == 0:
        return 1
    return k // 12 + (0 if k % 12 == 2 else 1)


def dim_cusp_forms(k: int) -> int:
    if k % 2:
        raise ValueError(f"weight must be even, got {k}")
    if k < 12:
        return 0
    return dim_modular_forms(k) - 1


def period_poly_from_x(coeffs, k: int) -> HomPoly:
    """Homogenize a one-variable period polynomial p(x) into V_k."""
    return homogenize([Fraction(c) for c in coeffs], k - 2)
