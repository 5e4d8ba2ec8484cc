"""Golden checks against the published coefficient tables, matrices and
numerical constants. Used by ``dzrel selftest`` and the acceptance tests.

Each criterion returns a list of :class:`Check` results; a criterion passes
when all of its checks do.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import mpmath

from . import formal, numeric, period, relation, zagier
from .exact import TP, HomPoly, QMatrix, act, homogenize, in_row_space, primitive, span_equal
from .relation import Relation

NUMERIC_TOL = 1e-10


@dataclass
class Check:
    criterion: int
    label: str
    ok: bool
    detail: str = ""

    def to_json(self) -> dict:
        return {"criterion": self.criterion, "label": self.label, "ok": self.ok, "detail": self.detail}


def _proportional(u, v) -> bool:
    return primitive(u)[0] == primitive(v)[0] or primitive(u)[0] == [-x for x in primitive(v)[0]]


def _xpoly(coeffs_desc, k) -> HomPoly:
    """Homogenize a polynomial in x given by descending coefficients."""
    return homogenize(list(reversed(coeffs_desc)), k - 2)


# weight -> (coefficients on descending even r, lambda), as printed
PUBLISHED_RELATIONS = {
    "w11": (11, [8, 6, 4], [28, 20, -42], -3),
    "w13": (13, [10, 8, 6, 4], [24, 28, -10, -36], -3),
    "w15": (15, [12, 10, 8, 6, 4], [22, 30, 7, -20, -33], -3),
    "w17-I": (17, [14, 12, 10, 8, 6, 4], [156, 242, 153, -56, -215, -234], -23),
    "w17-II": (17, [14, 12, 10, 8, 6, 4], [4004, 6358, 4347, -1624, -5885, -6006], -597),
}

PUBLISHED_CANONICAL = {
    5: ({4: 6, 2: -3}, Fraction(-3, 2)),
    7: ({6: 10, 4: -1, 2: -5}, Fraction(-3)),
    9: ({8: 14, 6: 3, 4: -1, 2: -7}, Fraction(-9, 2)),
    11: ({10: 18, 8: 5, 6: 1, 4: -3, 2: -9}, Fraction(-6)),
    13: ({12: 22, 10: 7, 8: 3, 6: -1, 4: -5, 2: -11}, Fraction(-15, 2)),
    15: ({14: 26, 12: 9, 10: 5, 8: 1, 6: -3, 4: -7, 2: -13}, Fraction(-9)),
}

PUBLISHED_B5 = [
    [-2, -4, -6, -8, 27],
    [0, -4, -20, -84, Fraction(329, 2)],
    [0, 0, -21, -126, Fraction(461, 2)],
    [0, -6, -15, -36, 82],
    [-1, -1, -1, -1, 5],
]

PUBLISHED_TABLE = {
    (3, 0): "0.22168939", (3, 1): "0.09180726", (3, 2): "0.68650334",
    (4, 0): "0.08666297", (4, 1): "0.03906700", (4, 2): "0.66333702", (4, 3): "0.21093299",
}

EVEN_WEIGHT_IDENTITIES = {
    12: ({9: 28, 7: 150, 5: 168}, Fraction(5197, 691)),
    16: ({13: 66, 11: 375, 9: 686, 7: 675, 5: 396}, Fraction(78967, 3617)),
}


def generated_relation(name: str) -> Relation:
    if name == "w11":
        return relation.type2_relation(period.period_space_basis(12, "-")[1])
    if name == "w13":
        return relation.type1_relation(period.period_space_basis(12, "+")[0])
    if name == "w15":
        return relation.type2_relation(period.period_space_basis(16, "-")[1])
    if name == "w17-I":
        return relation.type1_relation(period.period_space_basis(16, "+")[0])
    if name == "w17-II":
        return relation.type2_relation(period.period_space_basis(18, "-")[1])
    raise KeyError(name)


def criterion_1() -> list[Check]:
    out = []
    b12p = period.period_space_basis(12, "+")
    target = _xpoly([4, 0, -25, 0, 42, 0, -25, 0, 4, 0], 12)
    out.append(Check(1, "W12+ proportional to 4x^9-25x^7+42x^5-25x^3+4x",
                     len(b12p) == 1 and _proportional(b12p[0].coeffs, target.coeffs)))
    b12m = period.period_space_basis(12, "-")
    spans = [_xpoly([1] + [0] * 9 + [-1], 12).coeffs, _xpoly([1, 0, -3, 0, 3, 0, -1, 0, 0], 12).coeffs]
    out.append(Check(1, "W12- spans {x^10-1, x^8-3x^6+3x^4-x^2}",
                     span_equal([p.coeffs for p in b12m], spans, 11)))
    b16m = period.period_space_basis(16, "-")
    g = _xpoly([2, 0, -7, 0, 11, 0, -11, 0, 7, 0, -2, 0, 0], 16)
    out.append(Check(1, "W16- contains 2x^12-7x^10+11x^8-11x^6+7x^4-2x^2",
                     in_row_space(QMatrix.from_rows([p.coeffs for p in b16m], 15), g.coeffs)))
    bad = []
    for k in range(4, 41, 2):
        dp = len(period.period_space_basis(k, "+"))
        dm = len(period.period_space_basis(k, "-"))
        if dp != period.dim_cusp_forms(k) or dm != period.dim_cusp_forms(k) + 1:
            bad.append(k)
    out.append(Check(1, "dim W_k+ = dim S_k, dim W_k- = dim S_k + 1 for even k in [4, 40]", not bad,
                     f"mismatch at {bad}" if bad else ""))
    return out


def criterion_2() -> list[Check]:
    p12 = period.period_space_basis(12, "+")[0]
    if p12 != _xpoly([4, 0, -25, 0, 42, 0, -25, 0, 4, 0], 12):
        return [Check(2, "W12+ basis element is the printed polynomial", False, str(p12))]
    b = relation.b_coeffs(p12)
    got_b = [b.scaled(330)[r] for r in range(10, 2, -1)]
    c12 = relation.c_coeffs(period.period_space_basis(12, "-")[1])
    got_c12 = [c12.scaled(63)[r] for r in range(8, 2, -1)]
    c16 = relation.c_coeffs(period.period_space_basis(16, "-")[1])
    got_c16 = [c16.scaled(Fraction(429, 2))[r] for r in range(12, 2, -1)]
    return [
        Check(2, "330 b (W12+)", got_b == [24, 72, 119, 115, 15, -161, -288, -216], str(got_b)),
        Check(2, "63 c (W12-)", got_c12 == [14, 42, 75, 95, 84, 42], str(got_c12)),
        Check(2, "429/2 c (W16-)", got_c16 == [66, 198, 375, 555, 686, 728, 675, 555, 396, 198], str(got_c16)),
    ]


def criterion_3() -> list[Check]:
    out = []
    for name, (w, rs, cs, lam) in PUBLISHED_RELATIONS.items():
        rel = generated_relation(name)
        printed = Relation(w, dict(zip(rs, cs)), lam)
        out.append(Check(3, f"relation {name} proportional (lambda included)",
                         rel.weight == w and rel.proportional_to(printed), str(rel)))
    return out


def _all_generated(weights=range(11, 22, 2)) -> list[Relation]:
    rels = []
    for N in weights:
        rels += [r for r in zagier.generated_relations(N) if not r.is_zero()]
    return rels


def criterion_4() -> list[Check]:
    out = []
    for rel in _all_generated():
        res = formal.check_relation(formal.build_space(rel.weight), rel)
        H = relation.find_symmetric_H(relation.generating_function(rel))
        lam_h = None if H is None else relation.lambda_from_H(H, rel.weight)
        ok = res.holds and res.lam == rel.lam and lam_h == rel.lam
        out.append(Check(4, f"weight {rel.weight} {rel.provenance.get('kind')} oracle + symmetric H", ok,
                         f"oracle={res.lam} H-lambda={lam_h} stored={rel.lam}"))
    return out


def criterion_5() -> list[Check]:
    B = zagier.zagier_matrix(5).entries
    printed = [[Fraction(x) for x in row] for row in PUBLISHED_B5]
    sub = zagier.zagier_submatrix(5)
    v, _ = zagier.combine_kernel_element(generated_relation("w11"))
    return [
        Check(5, "B_5 equals the printed matrix", B.to_rows() == printed),
        Check(5, "(0,-42,20,28) B_5^(1) = 0", not any(sub.left_apply([0, -42, 20, 28]))),
        Check(5, "weight-11 kernel element proportional to (3,-27,13,17,-6)",
              _proportional(v, [3, -27, 13, 17, -6]), str(v)),
        Check(5, "weight-11 kernel element annihilates B_5", not any(B.left_apply(v))),
    ]


def criterion_6() -> list[Check]:
    out = []
    for k, (coeffs, lam) in PUBLISHED_CANONICAL.items():
        rel = zagier.canonical_relation(k)
        printed = Relation(k, coeffs, lam)
        match = rel.coeffs == printed.coeffs and rel.lam == printed.lam
        space = formal.build_space(k)
        ok_rel = formal.holds_with(space, rel)
        ok_printed = formal.holds_with(space, printed)
        detail = "" if match else f"computed {rel} vs printed {printed}"
        out.append(Check(6, f"canonical k={k}: matches printed list and passes oracle",
                         match and ok_rel and ok_printed,
                         detail + ("" if ok_printed else "; printed list fails the oracle")))
    return out


def criterion_7() -> list[Check]:
    v2 = zagier.renorm_matrices(12, 2).apply([4, -9, 6, -1])
    v1 = zagier.renorm_matrices(12, 1).apply([4, -25, 42, -25, 4])
    bad = []
    for N in range(5, 42, 2):
        a, b = zagier.renorm_matrices(N - 1, 1), zagier.renorm_matrices(N + 1, 2)
        if a.D != b.D or a.B != b.B:
            bad.append(N)
    F = Fraction
    return [
        Check(7, "D2 B2 (4,-9,6,-1) = (0,1/3,-10/63,-2/9)", v2 == [0, F(1, 3), F(-10, 63), F(-2, 9)], str(v2)),
        Check(7, "D1 B1 (4,-25,42,-25,4) = (0,-12/11,-10/33,28/33,8/11)",
              v1 == [0, F(-12, 11), F(-10, 33), F(28, 33), F(8, 11)], str(v1)),
        Check(7, "D1^(N-1) = D2^(N+1), B1^(N-1) = B2^(N+1) for odd N <= 41", not bad, str(bad)),
    ]


def criterion_8() -> list[Check]:
    out = []
    for k in range(7, 30, 2):
        got, want = zagier.relation_rank(k), zagier.expected_rank(k)
        out.append(Check(8, f"rank k={k} = dim S_{k - 1} + dim S_{k + 1} = {want}", got == want, f"rank {got}"))
    return out


def _closed_form_and_construction_identities(kmax: int = 40) -> tuple[list[str], list[str]]:
    closed_bad, construction_bad = [], []
    for k in range(4, kmax + 1, 2):
        for p in period.period_space_basis(k, "+"):
            if relation.L1(p) != relation.L1_alt(p):
                closed_bad.append(f"L1 k={k}")
            ids = relation.proof_identities(p)
            construction_bad += [f"{name} k={k}" for name, ok in ids.items() if not ok]
        for p in period.period_space_basis(k, "-"):
            if relation.L2(p) != relation.L2_alt(p):
                closed_bad.append(f"L2 k={k}")
    return closed_bad, construction_bad


def criterion_9() -> list[Check]:
    closed_bad, construction_bad = _closed_form_and_construction_identities()
    return [
        Check(9, "L1 = L1', L2 = L2' on every basis element, k <= 40", not closed_bad, ", ".join(closed_bad)),
        Check(9, "construction identities (f|ST'=f, vanishing brackets, f|S symmetric), k <= 40",
              not construction_bad, ", ".join(construction_bad)),
    ]


def criterion_10() -> list[Check]:
    out = []
    prec = numeric.Precision(1e-13)

    def residual_check(label, rel):
        rep = numeric.verify_numeric(rel, prec)
        out.append(Check(10, label, numeric.certified_below(rep, NUMERIC_TOL),
                         f"residual {mpmath.nstr(rep.value, 3)} +- {mpmath.nstr(rep.bound, 3)}"))

    for name, (w, rs, cs, lam) in PUBLISHED_RELATIONS.items():
        residual_check(f"numeric relation {name}", Relation(w, dict(zip(rs, cs)), lam))
    for k, (coeffs, lam) in EVEN_WEIGHT_IDENTITIES.items():
        residual_check(f"numeric even-weight identity k={k}", Relation(k, coeffs, lam))

    worst = mpmath.mpf(0)
    for r in range(2, 19):
        for s in range(2, r + 1):
            if r + s > 20:
                continue
            a, b = numeric.double_zeta(r, s, prec), numeric.double_zeta(s, r, prec)
            zr, zs, zk = numeric.zeta(r, prec), numeric.zeta(s, prec), numeric.zeta(r + s, prec)
            res = a.value + b.value - zr.value * zs.value + zk.value
            bound = a.bound + b.bound + zr.bound * zs.value + zs.bound * zr.value + zr.bound * zs.bound + zk.bound
            worst = max(worst, abs(res) + bound)
    out.append(Check(10, "stuffle suite r + s <= 20", worst < NUMERIC_TOL, f"worst {mpmath.nstr(worst, 3)}"))

    worst = mpmath.mpf(0)
    for k in range(3, 21):
        rep = numeric.verify_numeric(Relation(k, {r: 1 for r in range(2, k)}, 1), prec)
        worst = max(worst, abs(rep.value) + rep.bound)
    out.append(Check(10, "sum formula k <= 20", worst < NUMERIC_TOL, f"worst {mpmath.nstr(worst, 3)}"))

    for i, want in ((0, mpmath.mpf(3) / 4), (1, mpmath.mpf(1) / 4)):
        c = numeric.c_constant(2, i, prec)
        out.append(Check(10, f"C_2^({i}) = {mpmath.nstr(want, 2)}", abs(c.value - want) + c.bound < NUMERIC_TOL,
                         mpmath.nstr(c.value, 15)))
    for (d, i), printed in PUBLISHED_TABLE.items():
        c = numeric.c_constant(d, i, prec)
        got = _truncate(c.value, 8)
        out.append(Check(10, f"C_{d}^({i}) to 8 decimals = {printed}", got == printed and c.bound < 1e-10,
                         mpmath.nstr(c.value, 15)))
    for d in range(1, 7):
        total = mpmath.mpf(0)
        bound = mpmath.mpf(0)
        for i in range(d):
            c = numeric.c_constant(d, i, prec)
            total += c.value
            bound += c.bound
        out.append(Check(10, f"sum_i C_{d}^(i) = 1", abs(total - 1) + bound < NUMERIC_TOL, mpmath.nstr(total, 15)))
    return out


def _truncate(x, places: int) -> str:
    """Decimal digits as printed with a trailing ellipsis (truncation, not rounding)."""
    scaled = int(mpmath.floor(x * 10**places))
    return f"{scaled // 10**places}.{scaled % 10**places:0{places}d}"


def criterion_11(k: int = 9) -> list[Check]:
    oracle = formal.relation_span(k)
    # image of h -> (a(h), lambda(h)) over symmetric H
    images = []
    for H in relation.symmetric_basis(k - 2):
        A = act(H, TP) - H
        coeffs = relation.coefficients_from_A(A)
        lam = relation.lambda_from_H(H, k)
        images.append([coeffs.get(r, Fraction(0)) for r in range(1, k)] + [lam])
    same = span_equal(oracle, images, k)
    # spot-check both directions elementwise
    forward = True
    for v in oracle:
        rel = Relation(k, dict(zip(range(1, k), v[:-1])), v[-1])
        back = relation.relation_from_A(relation.generating_function(rel))
        forward &= back is not None and back.lam == rel.lam
    space = formal.build_space(k)
    backward = all(
        formal.holds_with(space, Relation(k, dict(zip(range(1, k), v[:-1])), v[-1])) for v in images
    )
    return [
        Check(11, f"weight {k}: oracle relation span equals symmetric-H image", same,
              f"dims {len(oracle)} vs {len(images)}"),
        Check(11, "oracle relations admit symmetric H", forward),
        Check(11, "symmetric-H relations hold in D_k with their lambda", backward),
    ]


CRITERIA = {
    1: criterion_1,
    2: criterion_2,
    3: criterion_3,
    4: criterion_4,
    5: criterion_5,
    6: criterion_6,
    7: criterion_7,
    8: criterion_8,
    9: criterion_9,
    10: criterion_10,
    11: criterion_11,
}


def run_all(verbose: bool = True) -> list[Check]:
    results = []
    for n, fn in CRITERIA.items():
        checks = fn()
        results.extend(checks)
        if verbose:
            for c in checks:
                print(f"[{'PASS' if c.ok else 'FAIL'}] criterion {n}: {c.label}" + (f" ({c.detail})" if c.detail and not c.ok else ""))
    return results
