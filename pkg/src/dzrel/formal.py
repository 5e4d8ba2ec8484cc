"""Brute-force membership oracle for the formal double zeta space D_k.

D_k is the Q-span of symbols Z_{r,s}, P_{r,s} (r + s = k, r, s >= 1) and Z_k
modulo

    Z_{r,s} + Z_{s,r} - P_{r,s} + Z_k = 0
    sum_r [C(r-1, i-1) + C(r-1, j-1)] Z_{r,k-r} - P_{i,j} = 0

P_{r,s} is unordered; both families are symmetric under the index swap.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .exact import QMatrix, _rref_rows, binom, format_rational
from .relation import Relation


@dataclass(frozen=True)
class CheckResult:
    holds: bool
    lam: Fraction | None
    lambda_unique: bool = True

    def to_json(self) -> dict:
        return {
            "holds": self.holds,
            "lambda": None if self.lam is None else format_rational(self.lam),
            "lambda_unique": self.lambda_unique,
        }


@dataclass(frozen=True)
class FormalSpace:
    weight: int
    symbols: tuple[str, ...]
    index: dict = field(repr=False, compare=False)
    matrix: QMatrix = field(repr=False)
    _echelon: tuple = field(repr=False, compare=False)

    @property
    def n_z(self) -> int:
        return self.weight - 1

    @property
    def n_p(self) -> int:
        return self.weight // 2

    def z(self, r: int) -> int:
        """Column of Z_{r, k-r}."""
        return self.index[("Z", r)]

    def p(self, i: int) -> int:
        """Column of the unordered P_{i, k-i}."""
        return self.index[("P", min(i, self.weight - i))]

    @property
    def zk(self) -> int:
        return self.index[("Zk",)]

    def reduce(self, v) -> list[Fraction]:
        """Remainder of v modulo the relation row space."""
        rows, pivots = self._echelon
        v = [Fraction(x) for x in v]
        for row, pc in zip(rows, pivots):
            if v[pc]:
                f = v[pc]
                v = [a - f * b for a, b in zip(v, row)]
        return v


def _symbols(k: int):
    syms, index = [], {}
    for r in range(1, k):
        index[("Z", r)] = len(syms)
        syms.append(f"Z{r},{k - r}")
    for i in range(1, k // 2 + 1):
        index[("P", i)] = len(syms)
        syms.append(f"P{i},{k - i}")
    index[("Zk",)] = len(syms)
    syms.append(f"Z{k}")
    return tuple(syms), index


@lru_cache(maxsize=None)
def build_space(k: int) -> FormalSpace:
    """Assemble the defining relation matrix of D_k (one row per instance)."""
    if k < 3:
        raise ValueError(f"weight must be >= 3, got {k}")
    syms, index = _symbols(k)
    n = len(syms)
    rows = []
    # Z_{r,s} + Z_{s,r} - P_{r,s} + Z_k = 0 over unordered {r, s}
    for r in range(1, k // 2 + 1):
        s = k - r
        row = [Fraction(0)] * n
        row[index[("Z", r)]] += 1
        row[index[("Z", s)]] += 1
        row[index[("P", r)]] -= 1
        row[index[("Zk",)]] += 1
        rows.append(row)
    # shuffle-type relations over unordered {i, j}
    for i in range(1, k // 2 + 1):
        j = k - i
        row = [Fraction(0)] * n
        for r in range(1, k):
            row[index[("Z", r)]] += binom(r - 1, i - 1) + binom(r - 1, j - 1)
        row[index[("P", i)]] -= 1
        rows.append(row)
    M = QMatrix.from_rows(rows, n)
    echelon = _rref_rows(rows, n)
    return FormalSpace(k, syms, index, M, echelon)


def relation_vector(space: FormalSpace, rel: Relation) -> list[Fraction]:
    """sum a_{r,s} Z_{r,s} as a coordinate vector (no Z_k term)."""
    if rel.weight != space.weight:
        raise ValueError(f"relation weight {rel.weight} != space weight {space.weight}")
    v = [Fraction(0)] * len(space.symbols)
    for r, a in rel.coeffs.items():
        if not 1 <= r <= space.weight - 1:
            raise ValueError(f"index r={r} out of range for weight {space.weight}")
        v[space.z(r)] += a
    return v


def check_relation(space: FormalSpace, rel: Relation) -> CheckResult:
    """Find lambda with sum a Z - lambda Z_k in the relation span, if any.

    The stored ``rel.lam`` is ignored; the oracle solves for it.
    """
    rv = space.reduce(relation_vector(space, rel))
    e = [Fraction(0)] * len(space.symbols)
    e[space.zk] = Fraction(1)
    re = space.reduce(e)
    if not any(re):
        # Z_k vanishes in D_k: lambda is arbitrary whenever the rest holds
        return CheckResult(not any(rv), None, lambda_unique=False)
    j = next(i for i, x in enumerate(re) if x)
    lam = rv[j] / re[j]
    ok = all(a == lam * b for a, b in zip(rv, re))
    return CheckResult(ok, lam if ok else None)


def holds_with(space: FormalSpace, rel: Relation) -> bool:
    """Whether rel holds with its own stored lambda."""
    res = check_relation(space, rel)
    return res.holds and (res.lam == rel.lam or not res.lambda_unique)


def relation_span(k: int) -> list[list[Fraction]]:
    """Basis of all (a_1, ..., a_{k-1}, lambda) with sum a_r Z_{r,k-r} = lambda Z_k in D_k.

    Computed as the row space intersected with {P-coordinates = 0}: echelon
    with the P columns first, then keep rows without a P pivot.
    """
    space = build_space(k)
    pcols = [space.p(i) for i in range(1, k // 2 + 1)]
    zcols = [space.z(r) for r in range(1, k)]
    order = pcols + zcols + [space.zk]
    rows = [[row[c] for c in order] for row in space.matrix.to_rows()]
    ech, piv = _rref_rows(rows, len(order))
    npc = len(pcols)
    out = []
    for row, pc in zip(ech, piv):
        if pc >= npc:
            a = row[npc:npc + len(zcols)]
            # row encodes sum a Z + c Z_k = 0, i.e. lambda = -c
            out.append(a + [-row[-1]])
    return out


def sum_formula_check(k: int) -> bool:
    """Even/odd-index sum formulas: 3/4 Z_k and 1/4 Z_k for even k."""
    if k % 2 or k <= 2:
        raise ValueError(f"weight must be even and > 2, got {k}")
    space = build_space(k)
    even = Relation(k, {r: 1 for r in range(2, k) if r % 2 == 0}, Fraction(3, 4), {"kind": "custom"})
    odd = Relation(k, {r: 1 for r in range(2, k) if r % 2 == 1}, Fraction(1, 4), {"kind": "custom"})
    return holds_with(space, even) and holds_with(space, odd)
