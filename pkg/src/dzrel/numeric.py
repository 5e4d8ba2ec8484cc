"""High-precision evaluation of zeta(s), double zeta values zeta(r, s),
relation residuals and the restricted-sum constants C_d^(i).

Every value comes with an explicit error bound. Power-sum tails are handled
by Euler-Maclaurin summation: for f(x) = x^-w all derivatives alternate in
sign, so the remainder is bounded by the first omitted correction term.

Working arithmetic is mpmath at a few dozen digits, which keeps rounding far
below any tolerance the bounds are asked to certify.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import mpmath
from mpmath import mp, mpf

from .relation import Relation

DEFAULT_EPS = 1e-12
MIN_EPS = 1e-40
WORK_DPS = 50
# cap on Euler-Maclaurin correction terms; beyond this the asymptotic series
# stops improving for the cut-off points used here
MAX_EM_TERMS = 30


@dataclass(frozen=True)
class Precision:
    eps: float = DEFAULT_EPS
    N: int | None = None
    terms: int | None = None

    def __post_init__(self):
        if not self.eps > 0:
            raise ValueError("eps must be positive")
        if self.eps < MIN_EPS:
            raise ValueError(f"requested eps {self.eps:g} is below the supported floor {MIN_EPS:g}")


@dataclass(frozen=True)
class NumericReport:
    value: mpf
    bound: mpf
    residual: mpf | None = None
    details: dict = field(default_factory=dict, compare=False)

    def to_json(self) -> dict:
        out = {"value": mpmath.nstr(self.value, 15), "bound": mpmath.nstr(self.bound, 3)}
        if self.residual is not None:
            out["residual"] = mpmath.nstr(self.residual, 3)
        out.update(self.details)
        return out

    def __float__(self) -> float:
        return float(self.value)


def _prec(prec) -> Precision:
    if prec is None:
        return Precision()
    if isinstance(prec, Precision):
        return prec
    return Precision(float(prec))


def _rounding_slack(count: int) -> mpf:
    return mpf(10) ** (-(WORK_DPS - 5)) * max(count, 1)


@lru_cache(maxsize=None)
def _bernoulli_ratio(j: int) -> mpf:
    """B_{2j} / (2j)!."""
    with mp.workdps(WORK_DPS):
        return mpmath.bernoulli(2 * j) / mpmath.factorial(2 * j)


def _rising(w, m: int) -> mpf:
    """w (w+1) ... (w+m-1)."""
    return mpmath.rf(w, m)


def power_tail(w, a: int, eps: float) -> tuple[mpf, mpf]:
    """Sum of n^-w over n >= a, with an error bound below ``eps`` when reachable.

    Returns ``(value, bound)``; raises if ``eps`` cannot be met at cut-off ``a``
    (callers move ``a`` further out).
    """
    if w <= 1:
        raise ValueError("power tail diverges for w <= 1")
    if a < 1:
        raise ValueError("cut-off must be >= 1")
    with mp.workdps(WORK_DPS):
        w = mpf(w)
        a_ = mpf(a)
        total = a_ ** (1 - w) / (w - 1) + a_ ** (-w) / 2
        prev = None
        for j in range(1, MAX_EM_TERMS + 2):
            term = _bernoulli_ratio(j) * _rising(w, 2 * j - 1) * a_ ** (-w - 2 * j + 1)
            if abs(term) < eps / 4 and j >= 2:
                # first omitted term bounds the remainder; doubled for margin
                return total, 2 * abs(term) + _rounding_slack(1)
            if prev is not None and abs(term) > abs(prev):
                break
            total += term
            prev = term
    raise _Unreachable(f"Euler-Maclaurin tail at a={a} cannot reach eps={eps:g} for w={w}")


class _Unreachable(ArithmeticError):
    pass


def _tail_with_cutoff(w, a: int, eps: float) -> tuple[mpf, mpf, int]:
    """power_tail, moving the cut-off out until eps is met."""
    while True:
        try:
            v, b = power_tail(w, a, eps)
            return v, b, a
        except _Unreachable:
            a *= 2
            if a > 10**6:
                raise


def zeta(s: int, prec=None) -> NumericReport:
    """zeta(s) for integer s >= 2: direct sum below a cut-off plus corrected tail."""
    p = _prec(prec)
    if s < 2:
        raise ValueError(f"zeta({s}) diverges; need s >= 2")
    a = p.N or 10
    with mp.workdps(WORK_DPS):
        tail, bound, a = _tail_with_cutoff(s, a, p.eps)
        head = mpmath.fsum(mpf(n) ** (-s) for n in range(1, a))
        value = head + tail
        bound = bound + _rounding_slack(a)
    return NumericReport(+value, bound, details={"N": a})


def zeta_minus_one(s: int, prec=None) -> NumericReport:
    """zeta(s) - 1 summed from n = 2, avoiding the leading 1."""
    p = _prec(prec)
    if s < 2:
        raise ValueError(f"zeta({s}) diverges; need s >= 2")
    with mp.workdps(WORK_DPS):
        tail, bound, a = _tail_with_cutoff(s, 10, p.eps)
        head = mpmath.fsum(mpf(n) ** (-s) for n in range(2, a))
        return NumericReport(head + tail, bound + _rounding_slack(a), details={"N": a})


def _inner_tail_expansion(r: int, J: int) -> list[tuple[mpf, int]]:
    """T_r(n) = sum_{m>n} m^-r ~ sum of coef * n^-e, as (coef, e) pairs.

    n^(1-r)/(r-1) - n^-r/2 + sum_j B_2j/(2j)! (r)_{2j-1} n^(-r-2j+1).
    """
    terms = [(mpf(1) / (r - 1), r - 1), (mpf(-1) / 2, r)]
    for j in range(1, J + 1):
        terms.append((_bernoulli_ratio(j) * _rising(r, 2 * j - 1), r + 2 * j - 1))
    return terms


def _inner_remainder_coef(r: int, J: int) -> mpf:
    return abs(_bernoulli_ratio(J + 1) * _rising(r, 2 * J + 1))


def double_zeta(r: int, s: int, prec=None) -> NumericReport:
    """zeta(r, s) = sum_{m > n > 0} m^-r n^-s for r >= 2, s >= 1.

    Written as sum_n n^-s T_r(n) with T_r(n) the tail of zeta(r) past n.
    Terms n <= N are summed directly; for n > N, T_r(n) is replaced by its
    Euler-Maclaurin expansion and each resulting power tail is summed in
    closed form.
    """
    p = _prec(prec)
    if r < 2:
        raise ValueError(f"zeta({r},{s}) diverges; need r >= 2")
    if s < 1:
        raise ValueError("need s >= 1")
    N = p.N or 40
    eps = p.eps
    with mp.workdps(WORK_DPS):
        inner = zeta(r, Precision(eps / 100))
        err = mpf(0)
        # direct part
        T = inner.value
        head = []
        for n in range(1, N + 1):
            T -= mpf(n) ** (-r)
            head.append(mpf(n) ** (-s) * T)
        head_sum = mpmath.fsum(head)
        harmonic = mpmath.fsum(mpf(n) ** (-s) for n in range(1, N + 1))
        err += inner.bound * harmonic
        # outer tail n > N
        J = p.terms or 1
        while True:
            rem = _inner_remainder_coef(r, J) * mpf(N) ** (-(r + s + 2 * J)) / (r + s + 2 * J)
            if rem < eps / 10 or J >= MAX_EM_TERMS:
                break
            J += 1
        if rem >= eps / 10:
            raise ArithmeticError(f"cannot certify zeta({r},{s}) to {eps:g} with N={N}")
        tail = mpf(0)
        expansion = _inner_tail_expansion(r, J)
        per_term = eps / (10 * len(expansion))
        for coef, e in expansion:
            w = s + e
            v, b, _ = _tail_with_cutoff(w, N + 1, float(per_term / max(abs(coef), 1)))
            tail += coef * v
            err += abs(coef) * b
        err += rem + _rounding_slack(2 * N)
        value = head_sum + tail
    return NumericReport(value, err, details={"N": N, "em_terms": J})


def realize(symbol: tuple, k: int, prec=None, kappa=0) -> NumericReport:
    """Image of a formal symbol under the double zeta realization.

    ``symbol`` is ("Z", r) for Z_{r,k-r}, ("P", i) for P_{i,k-i} or ("Zk",).
    Z_{1,s} maps to kappa; P with an index 1 maps to kappa + zeta(k-1,1) + zeta(k).
    """
    p = _prec(prec)
    kappa = mpf(kappa)
    kind = symbol[0]
    if kind == "Zk":
        return zeta(k, p)
    if kind == "Z":
        r = symbol[1]
        if r == 1:
            return NumericReport(kappa, mpf(0))
        return double_zeta(r, k - r, p)
    if kind == "P":
        i = symbol[1]
        j = k - i
        if i == 1 or j == 1:
            a = double_zeta(k - 1, 1, p)
            b = zeta(k, p)
            return NumericReport(kappa + a.value + b.value, a.bound + b.bound)
        a, b = zeta(i, p), zeta(j, p)
        bound = abs(a.value) * b.bound + abs(b.value) * a.bound + a.bound * b.bound
        return NumericReport(a.value * b.value, bound)
    raise ValueError(f"unknown symbol {symbol!r}")


def verify_numeric(rel: Relation, prec=None, kappa=0) -> NumericReport:
    """Residual sum a_r zeta(r, N-r) - lam zeta(N) with a certified bound.

    ``value`` and ``residual`` both hold the signed residual; ``bound``
    bounds its distance from the true residual.
    """
    p = _prec(prec)
    N = rel.weight
    weight_sum = sum(abs(a) for a in rel.coeffs.values()) + abs(rel.lam) + 1
    sub = Precision(p.eps / float(weight_sum))
    with mp.workdps(WORK_DPS):
        total = mpf(0)
        bound = mpf(0)
        for r, a in rel.coeffs.items():
            v = realize(("Z", r), N, sub, kappa)
            a = mpf(a.numerator) / a.denominator
            total += a * v.value
            bound += abs(a) * v.bound
        if rel.lam:
            z = zeta(N, sub)
            lam = mpf(rel.lam.numerator) / rel.lam.denominator
            total -= lam * z.value
            bound += abs(lam) * z.bound
    return NumericReport(total, bound, residual=abs(total), details={"weight": N})


def certified_below(report: NumericReport, tol: float) -> bool:
    """|true residual| < tol, using the reported bound."""
    return abs(report.value) + report.bound < tol


# ---------------------------------------------------------------------------
# restricted sums


def c_constant(d: int, i: int, prec=None) -> NumericReport:
    """C_d^(i): sum over j >= 2, j = i (mod d) of zeta(j) - 1."""
    p = _prec(prec)
    if d < 1:
        raise ValueError("d must be >= 1")
    if not 0 <= i < d:
        raise ValueError(f"i must lie in [0, {d - 1}], got {i}")
    eps = p.eps
    with mp.workdps(WORK_DPS):
        # zeta(j) - 1 <= 2 * 2^-j for j >= 3, so the tail past J is <= 2^(1-J)
        J = max(3, math.ceil(1 - math.log2(eps / 2)))
        js = [j for j in range(2, J + 1) if j % d == i]
        sub = Precision(eps / (2 * max(len(js), 1)))
        total = mpf(0)
        bound = mpf(2) ** (1 - J)
        for j in js:
            v = zeta_minus_one(j, sub)
            total += v.value
            bound += v.bound
    return NumericReport(total, bound, details={"d": d, "i": i, "last_j": J})


def restricted_sum(k: int, d: int, i: int, prec=None) -> NumericReport:
    """sum of zeta(r, k-r) over 2 <= r <= k-1 with r = i (mod d)."""
    p = _prec(prec)
    if k < 3:
        raise ValueError("k must be >= 3")
    if d < 1 or not 0 <= i < d:
        raise ValueError(f"need d >= 1 and 0 <= i < d, got d={d}, i={i}")
    rs = [r for r in range(2, k) if r % d == i]
    sub = Precision(p.eps / max(len(rs), 1))
    with mp.workdps(WORK_DPS):
        total = mpf(0)
        bound = mpf(0)
        for r in rs:
            v = double_zeta(r, k - r, sub)
            total += v.value
            bound += v.bound
    return NumericReport(total, bound, details={"k": k, "d": d, "i": i, "terms": len(rs)})


def restricted_ratio(k: int, d: int, i: int, prec=None) -> NumericReport:
    """zeta(k)^-1 times :func:`restricted_sum`."""
    p = _prec(prec)
    with mp.workdps(WORK_DPS):
        a = restricted_sum(k, d, i, p)
        b = zeta(k, p)
        value = a.value / b.value
        bound = (a.bound + abs(value) * b.bound) / (b.value - b.bound)
    return NumericReport(value, bound, details={"k": k, "d": d, "i": i})


def convergence_table(d: int, i: int, ks, prec=None) -> list[tuple[int, NumericReport]]:
    return [(k, restricted_ratio(k, d, i, prec)) for k in ks]
