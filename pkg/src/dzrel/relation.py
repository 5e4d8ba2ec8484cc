"""Linear relations among double zeta symbols, and their construction from
period polynomials.

A :class:`Relation` of weight N stands for ``sum_r a_r Z_{r,N-r} = lam Z_N``.

Type I takes p in W_k^+ to a relation of weight k + 1, Type II takes p in
W_k^- to one of weight k - 1. Both go through an auxiliary polynomial f
with f|ST' = f, so that f - f|S = H|T' - H with the symmetric H = f|S.
The constant lam then comes from ``(N-1)/2 * int_0^1 H(t, 1-t) dt``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .exact import (
    EPS,
    S,
    TP,
    HomPoly,
    Mat2,
    QMatrix,
    T,
    act,
    binom,
    format_rational,
    integrate_on_segment,
    parse_rational,
    partial_x,
    primitive,
    solve,
)
from .period import MINUS, PLUS, is_period_polynomial

TYPE_I = "type1"
TYPE_II = "type2"
CANONICAL = "canonical"
CUSTOM = "custom"


class ConstructionError(RuntimeError):
    """An identity that the construction guarantees failed to hold."""


@dataclass(frozen=True)
class Relation:
    weight: int
    coeffs: dict[int, Fraction]
    lam: Fraction = Fraction(0)
    provenance: dict = field(default_factory=dict, compare=False)

    def __post_init__(self):
        if self.weight < 3:
            raise ValueError(f"weight must be >= 3, got {self.weight}")
        clean = {}
        for r, a in self.coeffs.items():
            r = int(r)
            if not 1 <= r <= self.weight - 1:
                raise ValueError(f"index r={r} out of range for weight {self.weight}")
            a = Fraction(a)
            if a:
                clean[r] = clean.get(r, Fraction(0)) + a
        object.__setattr__(self, "coeffs", {r: clean[r] for r in sorted(clean, reverse=True) if clean[r]})
        object.__setattr__(self, "lam", Fraction(self.lam))

    def coefficient(self, r: int) -> Fraction:
        return self.coeffs.get(r, Fraction(0))

    def is_zero(self) -> bool:
        return not self.coeffs and not self.lam

    def vector(self, rs) -> list[Fraction]:
        return [self.coefficient(r) for r in rs]

    def scaled(self, c) -> "Relation":
        c = Fraction(c)
        return Relation(self.weight, {r: a * c for r, a in self.coeffs.items()}, self.lam * c, dict(self.provenance))

    def normalized(self) -> "Relation":
        """Primitive integer coefficients, coefficient of the largest r positive."""
        if not self.coeffs:
            if not self.lam:
                return self
            return Relation(self.weight, {}, 1, {**self.provenance, "scale": format_rational(1 / self.lam)})
        rs = sorted(self.coeffs, reverse=True)
        vec = [self.coeffs[r] for r in rs]
        _, factor = primitive(vec + [self.lam], lead=0)
        prov = dict(self.provenance)
        prev = parse_rational(prov.get("scale", "1"))
        prov["scale"] = format_rational(prev * factor)
        out = self.scaled(factor)
        return Relation(out.weight, out.coeffs, out.lam, prov)

    def proportional_to(self, other: "Relation") -> bool:
        """Equal up to a nonzero scalar, lambda included."""
        if self.weight != other.weight:
            return False
        keys = set(self.coeffs) | set(other.coeffs)
        a = [self.coefficient(r) for r in sorted(keys)] + [self.lam]
        b = [other.coefficient(r) for r in sorted(keys)] + [other.lam]
        return primitive(a)[0] == primitive(b)[0]

    def to_json(self) -> dict:
        return {
            "weight": self.weight,
            "coeffs": {str(r): format_rational(a) for r, a in self.coeffs.items()},
            "lambda": format_rational(self.lam),
            "provenance": self.provenance,
        }

    @classmethod
    def from_json(cls, data: dict) -> "Relation":
        return cls(
            int(data["weight"]),
            {int(r): parse_rational(a) for r, a in data.get("coeffs", {}).items()},
            parse_rational(data.get("lambda", "0")),
            dict(data.get("provenance", {})),
        )

    def __str__(self) -> str:
        lhs = " + ".join(f"{format_rational(a)}*Z({r},{self.weight - r})" for r, a in self.coeffs.items())
        return f"{lhs or '0'} = {format_rational(self.lam)}*Z({self.weight})".replace("+ -", "- ")


@dataclass(frozen=True)
class CoeffTable:
    kind: str
    weight: int
    entries: dict[int, Fraction]

    def __getitem__(self, r: int) -> Fraction:
        return self.entries[r]

    def scaled(self, c) -> dict[int, Fraction]:
        c = Fraction(c)
        return {r: v * c for r, v in self.entries.items()}


def _require(p: HomPoly, k: int, sign: str) -> None:
    if p.degree != k - 2:
        raise ValueError(f"expected degree {k - 2}, got {p.degree}")
    if not is_period_polynomial(p, sign):
        name = "W_%d^%s" % (k, sign)
        raise ValueError(f"polynomial is not in {name}: {p}")


def _weight_of(p: HomPoly) -> int:
    k = p.degree + 2
    if k % 2 or k < 4:
        raise ValueError(f"period polynomials need even weight >= 4, got degree {p.degree}")
    return k


# ---------------------------------------------------------------------------
# coefficient tables


def b_coeffs(p: HomPoly) -> CoeffTable:
    """b_{r,s} (r + s = k + 1) from p(X+Y, Y) = sum C(k-1, r-1) b_{r,s} X^{r-1} Y^{s-2}."""
    k = _weight_of(p)
    _require(p, k, PLUS)
    q = act(p, T)
    return CoeffTable("b", k, {r: q[r - 1] / binom(k - 1, r - 1) for r in range(1, k)})


def c_coeffs(p: HomPoly) -> CoeffTable:
    """c_{r,s} (r + s = k - 1) from d/dX p(X+Y, Y) = sum C(k-3, r-1) c_{r,s} X^{r-1} Y^{s-1}."""
    k = _weight_of(p)
    _require(p, k, MINUS)
    q = act(partial_x(p), T)
    return CoeffTable("c", k, {r: q[r - 1] / binom(k - 3, r - 1) for r in range(1, k - 1)})


# ---------------------------------------------------------------------------
# generating functions and symmetric H


def generating_function(rel: Relation) -> HomPoly:
    """A(X, Y) = sum C(N-2, r-1) a_{r,s} X^{r-1} Y^{s-1}."""
    N = rel.weight
    return HomPoly.from_terms(N - 2, {r - 1: binom(N - 2, r - 1) * a for r, a in rel.coeffs.items()})


def coefficients_from_A(A: HomPoly) -> dict[int, Fraction]:
    """Inverse of :func:`generating_function` on the coefficient part."""
    N = A.degree + 2
    return {i + 1: c / binom(N - 2, i) for i, c in enumerate(A.coeffs) if c}


def symmetric_basis(degree: int) -> list[HomPoly]:
    """X^i Y^(d-i) + X^(d-i) Y^i for i <= d/2 (the middle monomial once)."""
    out = []
    for i in range(degree // 2 + 1):
        j = degree - i
        terms = {i: 1} if i == j else {i: 1, j: 1}
        out.append(HomPoly.from_terms(degree, terms))
    return out


def _t_prime_difference_matrix(degree: int) -> tuple[QMatrix, list[HomPoly]]:
    basis = symmetric_basis(degree)
    images = [act(h, TP) - h for h in basis]
    n = degree + 1
    M = QMatrix(n, len(basis), (images[j][i] for i in range(n) for j in range(len(basis))))
    return M, basis


def find_symmetric_H(A: HomPoly) -> HomPoly | None:
    """A symmetric H with H(X, X+Y) - H(X, Y) = A, or None.

    For positive degree the solution is unique (a T'-invariant symmetric
    form must be constant), so free variables never arise there.
    """
    M, basis = _t_prime_difference_matrix(A.degree)
    x = solve(M, A.coeffs)
    if x is None:
        return None
    H = HomPoly(A.degree)
    for c, h in zip(x, basis):
        if c:
            H = H + c * h
    return H


def lambda_from_H(H: HomPoly, dzv_weight: int) -> Fraction:
    """lam = (N-1)/2 * int_0^1 H(t, 1-t) dt with N the weight of the relation."""
    if H.swap() != H:
        raise ValueError("H must be symmetric in X and Y")
    if H.degree != dzv_weight - 2:
        raise ValueError(f"H has degree {H.degree}, expected {dzv_weight - 2}")
    return Fraction(dzv_weight - 1, 2) * integrate_on_segment(H)


def relation_from_A(A: HomPoly) -> Relation | None:
    """Relation with generating function A, when A = H|T' - H for symmetric H."""
    H = find_symmetric_H(A)
    if H is None:
        return None
    N = A.degree + 2
    return Relation(N, coefficients_from_A(A), lambda_from_H(H, N), {"kind": CUSTOM, "via": "symmetric-H"})


# ---------------------------------------------------------------------------
# Type I / Type II constructions

ST = S * TP
EST = EPS * S * TP


@dataclass(frozen=True)
class Construction:
    """Intermediate polynomials of a Type I or Type II construction."""

    kind: str
    weight: int
    p: HomPoly
    q: HomPoly
    f: HomPoly

    @property
    def H(self) -> HomPoly:
        return act(self.f, S)

    @property
    def A(self) -> HomPoly:
        return self.f - self.H

    @property
    def relation_weight(self) -> int:
        return self.A.degree + 2


def construct(p: HomPoly, kind: str) -> Construction:
    """q and f for Type I (f = qY - q|eps X, q = p|T) or Type II (f = q - q|eps, q = p'|T)."""
    k = _weight_of(p)
    if kind == TYPE_I:
        _require(p, k, PLUS)
        q = act(p, T)
        Y = HomPoly.monomial(0, 1)
        X = HomPoly.monomial(1, 0)
        f = q * Y - act(q, EPS) * X
    elif kind == TYPE_II:
        _require(p, k, MINUS)
        q = act(partial_x(p), T)
        f = q - act(q, EPS)
    else:
        raise ValueError(f"unknown construction {kind!r}")
    if act(f, ST) != f:
        raise ConstructionError(f"f|ST' != f for {kind} construction on {p}")
    return Construction(kind, k, p, q, f)


def _build_relation(p: HomPoly, kind: str) -> Relation:
    con = construct(p, kind)
    N = con.relation_weight
    H = con.H
    if H.swap() != H:
        raise ConstructionError("f|S is not symmetric")
    A = con.A
    coeffs = coefficients_from_A(A)
    lo, hi = (4, N - 3)
    stray = [r for r in coeffs if r % 2 or not lo <= r <= hi]
    if stray:
        raise ConstructionError(f"unexpected terms r={stray} in f - f|S")
    lam = lambda_from_H(H, N)
    # f - f|S carries twice the antisymmetrized table; halve the identity
    rel = Relation(N, {r: a / 2 for r, a in coeffs.items()}, lam / 2, {"kind": kind, "source_weight": con.weight})
    return rel


def raw_relation(p: HomPoly, kind: str) -> Relation:
    """Relation with coefficients exactly b_{r,s} - b_{s,r} (or c), before normalization."""
    return _build_relation(p, kind)


def type1_relation(p: HomPoly, normalize: bool = True) -> Relation:
    """Weight k + 1 relation from p in W_k^+."""
    rel = _build_relation(p, TYPE_I)
    return rel.normalized() if normalize else rel


def type2_relation(p: HomPoly, normalize: bool = True) -> Relation:
    """Weight k - 1 relation from p in W_k^-."""
    rel = _build_relation(p, TYPE_II)
    return rel.normalized() if normalize else rel


def table_relation(p: HomPoly, kind: str) -> Relation:
    """The same relation read off the b/c tables directly (no lambda)."""
    if kind == TYPE_I:
        tab = b_coeffs(p)
        N = tab.weight + 1
        rs = range(4, N - 2, 2)
    else:
        tab = c_coeffs(p)
        N = tab.weight - 1
        rs = range(4, N - 2, 2)
    return Relation(N, {r: tab[r] - tab[N - r] for r in rs}, 0, {"kind": kind, "from": "table"})


# ---------------------------------------------------------------------------
# closed forms L1, L2 and their alternates


def _x():
    return HomPoly.monomial(1, 0)


def _y():
    return HomPoly.monomial(0, 1)


def _sub(p: HomPoly, a: int, b: int, c: int, d: int) -> HomPoly:
    """p(aX + bY, cX + dY)."""
    return act(p, Mat2(a, b, c, d))


def L1(p: HomPoly) -> HomPoly:
    """(p(X+Y,Y)Y - p(X+Y,X)X - p(-X+Y,Y)Y - p(Y-X,-X)X) / 2."""
    _require(p, _weight_of(p), PLUS)
    X, Y = _x(), _y()
    total = (_sub(p, 1, 1, 0, 1) * Y - _sub(p, 1, 1, 1, 0) * X
             - _sub(p, -1, 1, 0, 1) * Y - _sub(p, -1, 1, -1, 0) * X)
    return total / 2


def L1_alt(p: HomPoly) -> HomPoly:
    """(p(Y, X+Y)(X+Y) - p(Y, -X+Y)(-X+Y)) / 2."""
    _require(p, _weight_of(p), PLUS)
    X, Y = _x(), _y()
    return (_sub(p, 0, 1, 1, 1) * (X + Y) - _sub(p, 0, 1, -1, 1) * (Y - X)) / 2


def L2(p: HomPoly) -> HomPoly:
    """(p'(X+Y,Y) - p'(X+Y,X) - p'(-X+Y,Y) + p'(Y-X,-X)) / 2 with p' = dp/dX."""
    _require(p, _weight_of(p), MINUS)
    d = partial_x(p)
    return (_sub(d, 1, 1, 0, 1) - _sub(d, 1, 1, 1, 0) - _sub(d, -1, 1, 0, 1) + _sub(d, -1, 1, -1, 0)) / 2


def L2_alt(p: HomPoly) -> HomPoly:
    """(p'(Y, X+Y) - p'(Y, -X+Y)) / 2."""
    _require(p, _weight_of(p), MINUS)
    d = partial_x(p)
    return (_sub(d, 0, 1, 1, 1) - _sub(d, 0, 1, -1, 1)) / 2


def proof_identities(p: HomPoly) -> dict[str, bool]:
    """The intermediate identities of the Type I construction for p in W_k^+."""
    con = construct(p, TYPE_I)
    q, f = con.q, con.f
    return {
        "f|ST' = f": act(f, ST) == f,
        "f|S symmetric": act(act(f, S), EPS) == act(f, S),
        "q|e + q|ST' + q|eST' = 0": (act(q, EPS) + act(q, ST) + act(q, EST)).is_zero(),
        "q|eST' - q = 0": (act(q, EST) - q).is_zero(),
    }


def relations_for_basis(basis, kind: str, normalize: bool = True) -> list[Relation]:
    fn = type1_relation if kind == TYPE_I else type2_relation
    return [fn(p, normalize=normalize) for p in basis]


__all__ = [
    "Relation",
    "CoeffTable",
    "ConstructionError",
    "b_coeffs",
    "c_coeffs",
    "type1_relation",
    "type2_relation",
    "raw_relation",
    "table_relation",
    "L1",
    "L1_alt",
    "L2",
    "L2_alt",
    "find_symmetric_H",
    "lambda_from_H",
    "generating_function",
    "relation_from_A",
    "proof_identities",
]
