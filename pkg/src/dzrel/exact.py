"""Exact rational substrate: binomials, homogeneous polynomials in X and Y,
the 2x2 integer matrix action on them, and dense Gauss-Jordan over Q.

Scalars are :class:`fractions.Fraction` throughout.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import comb, factorial, gcd, lcm
from typing import Iterable, Sequence

Rational = Fraction


def binom(n: int, k: int) -> int:
    """C(n, k), zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return comb(n, k)


def format_rational(x) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(s) -> Fraction:
    if isinstance(s, (int, Fraction)):
        return Fraction(s)
    return Fraction(str(s).strip())


def primitive(vec: Sequence, lead: int | None = None) -> tuple[list[Fraction], Fraction]:
    """Scale ``vec`` to a primitive integer vector.

    The sign is fixed so the entry at index ``lead`` is positive; by default
    that is the first nonzero entry. Returns ``(scaled, factor)`` with
    ``scaled == factor * vec``.
    """
    vec = [Fraction(v) for v in vec]
    nz = [i for i, v in enumerate(vec) if v]
    if not nz:
        return vec, Fraction(1)
    den = reduce(lcm, (v.denominator for v in vec), 1)
    num = reduce(gcd, (abs(v.numerator * (den // v.denominator)) for v in vec), 0)
    factor = Fraction(den, num)
    pivot = nz[0] if lead is None else lead
    if vec[pivot] < 0:
        factor = -factor
    return [v * factor for v in vec], factor


# ---------------------------------------------------------------------------
# Homogeneous polynomials


class HomPoly:
    """Homogeneous polynomial of fixed degree in X, Y over Q.

    ``coeffs[i]`` is the coefficient of ``X**i * Y**(degree - i)``.
    """

    __slots__ = ("degree", "coeffs")

    def __init__(self, degree: int, coeffs: Iterable | None = None):
        if degree < 0:
            raise ValueError("degree must be non-negative")
        if coeffs is None:
            c = (Fraction(0),) * (degree + 1)
        else:
            c = tuple(Fraction(x) for x in coeffs)
            if len(c) != degree + 1:
                raise ValueError(f"expected {degree + 1} coefficients, got {len(c)}")
        object.__setattr__(self, "degree", degree)
        object.__setattr__(self, "coeffs", c)

    def __setattr__(self, name, value):
        raise AttributeError("HomPoly is immutable")

    @classmethod
    def zero(cls, degree: int) -> "HomPoly":
        return cls(degree)

    @classmethod
    def monomial(cls, i: int, j: int, c=1) -> "HomPoly":
        """``c * X**i * Y**j``."""
        coeffs = [0] * (i + j + 1)
        coeffs[i] = c
        return cls(i + j, coeffs)

    @classmethod
    def from_terms(cls, degree: int, terms: dict[int, object]) -> "HomPoly":
        """Build from ``{x_power: coefficient}``."""
        coeffs = [0] * (degree + 1)
        for i, c in terms.items():
            coeffs[i] = c
        return cls(degree, coeffs)

    def __getitem__(self, i: int) -> Fraction:
        """Coefficient of ``X**i Y**(degree-i)``; zero out of range."""
        if 0 <= i <= self.degree:
            return self.coeffs[i]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def _check(self, other: "HomPoly"):
        if not isinstance(other, HomPoly):
            return NotImplemented
        if other.degree != self.degree:
            raise ValueError(f"degree mismatch: {self.degree} vs {other.degree}")
        return None

    def __add__(self, other: "HomPoly") -> "HomPoly":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return HomPoly(self.degree, (a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "HomPoly") -> "HomPoly":
        if self._check(other) is NotImplemented:
            return NotImplemented
        return HomPoly(self.degree, (a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "HomPoly":
        return HomPoly(self.degree, (-a for a in self.coeffs))

    def __mul__(self, other) -> "HomPoly":
        if isinstance(other, HomPoly):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[i + j] += a * b
            return HomPoly(self.degree + other.degree, out)
        if isinstance(other, (int, Fraction)):
            return HomPoly(self.degree, (a * other for a in self.coeffs))
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, c) -> "HomPoly":
        c = Fraction(c)
        return HomPoly(self.degree, (a / c for a in self.coeffs))

    def __eq__(self, other) -> bool:
        if not isinstance(other, HomPoly):
            return NotImplemented
        return self.degree == other.degree and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash((self.degree, self.coeffs))

    def __repr__(self) -> str:
        return f"HomPoly({self.degree}, [{', '.join(format_rational(c) for c in self.coeffs)}])"

    def __str__(self) -> str:
        terms = []
        for i in range(self.degree, -1, -1):
            c = self.coeffs[i]
            if not c:
                continue
            j = self.degree - i
            mono = "*".join(
                s for s in (
                    "" if i == 0 else ("X" if i == 1 else f"X^{i}"),
                    "" if j == 0 else ("Y" if j == 1 else f"Y^{j}"),
                ) if s
            )
            if not mono:
                terms.append(format_rational(c))
            elif c == 1:
                terms.append(mono)
            elif c == -1:
                terms.append("-" + mono)
            else:
                terms.append(f"{format_rational(c)}*{mono}")
        return " + ".join(terms).replace("+ -", "- ") or "0"

    def swap(self) -> "HomPoly":
        """P(Y, X)."""
        return HomPoly(self.degree, reversed(self.coeffs))

    def to_json(self) -> dict:
        return {"degree": self.degree, "coeffs": [format_rational(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "HomPoly":
        return cls(int(data["degree"]), [parse_rational(c) for c in data["coeffs"]])


def _linear_power(a: int, b: int, n: int) -> list[int]:
    """Coefficients (ascending X-power) of (a X + b Y)**n."""
    return [comb(n, i) * a**i * b ** (n - i) for i in range(n + 1)]


def act(P: HomPoly, g: "Mat2") -> HomPoly:
    """Right action ``(P|g)(X, Y) = P(aX + bY, cX + dY)``."""
    d = P.degree
    out = [Fraction(0)] * (d + 1)
    first = [_linear_power(g.a, g.b, i) for i in range(d + 1)]
    second = [_linear_power(g.c, g.d, i) for i in range(d + 1)]
    for i, coef in enumerate(P.coeffs):
        if not coef:
            continue
        u, v = first[i], second[d - i]
        for s, us in enumerate(u):
            if us:
                for t, vt in enumerate(v):
                    if vt:
                        out[s + t] += coef * us * vt
    return HomPoly(d, out)


def partial_x(P: HomPoly) -> HomPoly:
    if P.degree == 0:
        return HomPoly(0)
    return HomPoly(P.degree - 1, (i * P.coeffs[i] for i in range(1, P.degree + 1)))


def partial_y(P: HomPoly) -> HomPoly:
    if P.degree == 0:
        return HomPoly(0)
    d = P.degree
    return HomPoly(d - 1, ((d - i) * P.coeffs[i] for i in range(d)))


def homogenize(p: Sequence, target_degree: int) -> HomPoly:
    """Turn ``sum p[i] x**i`` into ``sum p[i] X**i Y**(target_degree - i)``."""
    p = list(p)
    while len(p) > target_degree + 1 and p[-1] == 0:
        p.pop()
    if len(p) > target_degree + 1:
        raise ValueError(f"polynomial of degree {len(p) - 1} exceeds target degree {target_degree}")
    return HomPoly(target_degree, p + [0] * (target_degree + 1 - len(p)))


def dehomogenize(P: HomPoly) -> list[Fraction]:
    """Set Y = 1; returns the full ascending list (length degree + 1)."""
    return list(P.coeffs)


def beta_integral(a: int, b: int) -> Fraction:
    """Integral of t**a (1-t)**b over [0, 1]."""
    return Fraction(factorial(a) * factorial(b), factorial(a + b + 1))


def integrate_on_segment(P: HomPoly) -> Fraction:
    """Integral of P(t, 1-t) over [0, 1]."""
    d = P.degree
    return sum((c * beta_integral(i, d - i) for i, c in enumerate(P.coeffs) if c), Fraction(0))


# ---------------------------------------------------------------------------
# 2x2 integer matrices


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.det == 0:
            raise ValueError("singular matrix")

    @property
    def det(self) -> int:
        return self.a * self.d - self.b * self.c

    def __mul__(self, other: "Mat2") -> "Mat2":
        if not isinstance(other, Mat2):
            return NotImplemented
        return Mat2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def __pow__(self, n: int) -> "Mat2":
        out = IDENTITY
        for _ in range(n):
            out = out * self
        return out


IDENTITY = Mat2(1, 0, 0, 1)
EPS = Mat2(0, 1, 1, 0)
S = Mat2(0, -1, 1, 0)
U = Mat2(1, -1, 1, 0)
T = Mat2(1, 1, 0, 1)
TP = Mat2(1, 0, 1, 1)


# ---------------------------------------------------------------------------
# Dense matrices over Q


class QMatrix:
    """Dense matrix over Q, stored row-major as tuples of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: Iterable):
        e = tuple(Fraction(x) for x in entries)
        if len(e) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(e)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", e)

    def __setattr__(self, name, value):
        raise AttributeError("QMatrix is immutable")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), cols, (x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls(n, n, (int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def diagonal(cls, diag: Sequence) -> "QMatrix":
        n = len(diag)
        return cls(n, n, (diag[i] if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[Fraction]:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self) -> list[list[Fraction]]:
        return [self.row(i) for i in range(self.rows)]

    def column(self, j: int) -> list[Fraction]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def transpose(self) -> "QMatrix":
        return QMatrix(self.cols, self.rows, (self[i, j] for j in range(self.cols) for i in range(self.rows)))

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        ocols = [other.column(j) for j in range(other.cols)]
        return QMatrix(
            self.rows,
            other.cols,
            (sum((a * b for a, b in zip(self.row(i), col) if a and b), Fraction(0))
             for i in range(self.rows) for col in ocols),
        )

    def apply(self, v: Sequence) -> list[Fraction]:
        """M v for a plain vector."""
        if len(v) != self.cols:
            raise ValueError("shape mismatch")
        return [sum((a * Fraction(b) for a, b in zip(self.row(i), v) if a and b), Fraction(0))
                for i in range(self.rows)]

    def left_apply(self, v: Sequence) -> list[Fraction]:
        """v M for a plain row vector."""
        if len(v) != self.rows:
            raise ValueError("shape mismatch")
        return [sum((Fraction(a) * b for a, b in zip(v, self.column(j)) if a and b), Fraction(0))
                for j in range(self.cols)]

    def vstack(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.cols:
            raise ValueError("shape mismatch")
        return QMatrix(self.rows + other.rows, self.cols, self.entries + other.entries)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "QMatrix":
        return QMatrix(len(rows), len(cols), (self[i, j] for i in rows for j in cols))

    def __eq__(self, other) -> bool:
        if not isinstance(other, QMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __hash__(self) -> int:
        return hash((self.rows, self.cols, self.entries))

    def __repr__(self) -> str:
        body = "; ".join(" ".join(format_rational(x) for x in r) for r in self.to_rows())
        return f"QMatrix({self.rows}x{self.cols}: {body})"

    def to_json(self) -> list[list[str]]:
        return [[format_rational(x) for x in r] for r in self.to_rows()]


def _rref_rows(rows: list[list[Fraction]], ncols: int) -> tuple[list[list[Fraction]], list[int]]:
    rows = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == len(rows):
            break
        p = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        pr = rows[r]
        nz = [j for j in range(c, ncols) if pr[j]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[i]
                for j in nz:
                    ri[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    return rows[:r], pivots


def rref(M: QMatrix) -> tuple[QMatrix, list[int]]:
    """Reduced row-echelon form (zero rows dropped) and the pivot columns."""
    rows, pivots = _rref_rows(M.to_rows(), M.cols)
    return QMatrix(len(rows), M.cols, (x for r in rows for x in r)), pivots


def rank(M: QMatrix) -> int:
    return len(rref(M)[1])


def normalize_basis(vectors: Sequence[Sequence], dim: int) -> list[list[Fraction]]:
    """Canonical basis of the span: RREF, then primitive integer rows."""
    if not vectors:
        return []
    rows, _ = _rref_rows([[Fraction(x) for x in v] for v in vectors], dim)
    return [primitive(r)[0] for r in rows]


def kernel(M: QMatrix) -> list[list[Fraction]]:
    """Basis of {v : M v = 0}, normalized as in :func:`normalize_basis`."""
    rows, pivots = _rref_rows(M.to_rows(), M.cols)
    free = [j for j in range(M.cols) if j not in set(pivots)]
    basis = []
    for f in free:
        v = [Fraction(0)] * M.cols
        v[f] = Fraction(1)
        for r, pc in zip(rows, pivots):
            v[pc] = -r[f]
        basis.append(v)
    return normalize_basis(basis, M.cols)


def left_kernel(M: QMatrix) -> list[list[Fraction]]:
    """Basis of {v : v M = 0}."""
    return kernel(M.transpose())


def solve(M: QMatrix, v: Sequence) -> list[Fraction] | None:
    """One solution x of M x = v (free variables set to zero), or None."""
    if len(v) != M.rows:
        raise ValueError("shape mismatch")
    aug = [row + [Fraction(b)] for row, b in zip(M.to_rows(), v)]
    rows, pivots = _rref_rows(aug, M.cols + 1)
    if pivots and pivots[-1] == M.cols:
        return None
    x = [Fraction(0)] * M.cols
    for r, pc in zip(rows, pivots):
        x[pc] = r[M.cols]
    return x


def in_row_space(M: QMatrix, v: Sequence) -> bool:
    return rank(M.vstack(QMatrix(1, M.cols, v))) == rank(M)


def span_equal(A: Sequence[Sequence], B: Sequence[Sequence], dim: int) -> bool:
    """Whether two lists of vectors span the same subspace of Q^dim."""
    return normalize_basis(A, dim) == normalize_basis(B, dim)
