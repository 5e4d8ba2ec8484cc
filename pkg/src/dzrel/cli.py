"""Command-line front end.

Exit codes: 0 on success, 1 on a domain error, 2 on a usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

import mpmath

from . import formal, numeric, period, relation, zagier
from .exact import format_rational
from .relation import ConstructionError, Relation


class UsageError(Exception):
    pass


def _relation_kind(t: str) -> str:
    return relation.TYPE_I if t == "1" else relation.TYPE_II


def _source_basis(kind: str, weight: int):
    """Period basis feeding a relation of the given odd weight."""
    if kind == relation.TYPE_I:
        return period.period_space_basis(weight - 1, period.PLUS)
    return period.period_space_basis(weight + 1, period.MINUS)


def _generate(kind: str, K: int, index: int | None, by_source: bool) -> list[Relation]:
    """Relations of one type; ``K`` is the period weight when ``by_source``."""
    if by_source:
        sign = period.PLUS if kind == relation.TYPE_I else period.MINUS
        basis = period.period_space_basis(K, sign)
    else:
        basis = _source_basis(kind, K)
    fn = relation.type1_relation if kind == relation.TYPE_I else relation.type2_relation
    if index is not None:
        if not 0 <= index < len(basis):
            raise ValueError(f"index {index} out of range; basis has {len(basis)} element(s)")
        items = [(index, basis[index])]
    else:
        items = list(enumerate(basis))
    out = []
    for i, p in items:
        rel = fn(p)
        out.append(Relation(rel.weight, rel.coeffs, rel.lam, {**rel.provenance, "basis_index": i}))
    return out


def _load_relation(path: str) -> list[Relation]:
    with open(path, encoding="utf-8") if path != "-" else sys.stdin as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "relations" in data:
        data = data["relations"]
    if isinstance(data, list):
        return [Relation.from_json(d) for d in data]
    return [Relation.from_json(data)]


def _parse_ks(text: str) -> list[int]:
    ks = []
    for part in text.split(","):
        part = part.strip()
        if ":" in part:
            bits = [int(b) for b in part.split(":")]
            start, stop = bits[0], bits[1]
            step = bits[2] if len(bits) > 2 else 1
            ks.extend(range(start, stop + 1, step))
        elif part:
            ks.append(int(part))
    return ks


# ---------------------------------------------------------------------------
# subcommands; each returns a JSON-able object and optional CSV rows


def cmd_period_basis(args):
    return period.period_space_basis(args.weight, args.sign).to_json()


def cmd_relation(args):
    kind = _relation_kind(args.type)
    rels = _generate(kind, args.weight, args.index, by_source=True)
    if args.index is not None:
        return rels[0].to_json()
    return {"relations": [r.to_json() for r in rels]}


def cmd_verify(args):
    rels = _load_relation(args.relation)
    results = []
    for rel in rels:
        if args.mode == "formal":
            res = formal.check_relation(formal.build_space(rel.weight), rel)
            out = res.to_json()
            out["matches_lambda"] = res.holds and (res.lam == rel.lam or not res.lambda_unique)
        elif args.mode == "symmetric-h":
            A = relation.generating_function(rel)
            H = relation.find_symmetric_H(A)
            out = {"holds": H is not None}
            if H is not None:
                lam = relation.lambda_from_H(H, rel.weight)
                out.update({"lambda": format_rational(lam), "matches_lambda": lam == rel.lam, "H": H.to_json()})
        else:
            rep = numeric.verify_numeric(rel, args.prec, kappa=args.kappa)
            out = rep.to_json()
            out["passes"] = numeric.certified_below(rep, args.tol)
        results.append(out)
    return results[0] if len(results) == 1 else {"results": results}


def cmd_zagier(args):
    Z = zagier.zagier_matrix(args.K)
    out = Z.to_json()
    if args.sub or args.left_kernel:
        sub = zagier.zagier_submatrix(args.K)
        if args.sub:
            out = {**out, "submatrix": sub.to_json(), "sub_rows": out["rows"][:-1], "sub_cols": out["cols"][:-1]}
        if args.left_kernel:
            out["left_kernel_sub"] = [[format_rational(x) for x in v] for v in zagier.left_kernel(sub)]
            out["left_kernel"] = [[format_rational(x) for x in v] for v in zagier.left_kernel(Z.entries)]
    return out


def cmd_canonical(args):
    return zagier.canonical_relation(args.weight).to_json()


def cmd_kernel_element(args):
    kind = _relation_kind(args.type)
    rel = _generate(kind, args.weight, args.index, by_source=False)[0]
    v, info = zagier.combine_kernel_element(rel)
    K = (args.weight - 1) // 2
    return {
        "weight": args.weight,
        "labels": list(zagier.zagier_matrix(K).row_labels),
        "vector": [format_rational(x) for x in v],
        "relation": rel.to_json(),
        "provenance": info,
    }


def cmd_rank(args):
    return {
        "weight": args.weight,
        "rank": zagier.relation_rank(args.weight),
        "dim_cusp_sum": zagier.expected_rank(args.weight),
    }


def cmd_zeta(args):
    return {"s": args.s, **numeric.zeta(args.s, args.prec).to_json()}


def cmd_dzeta(args):
    return {"r": args.r, "s": args.s, **numeric.double_zeta(args.r, args.s, args.prec).to_json()}


def cmd_restricted_sum(args):
    ks = _parse_ks(args.k)
    rows = []
    for k in ks:
        rep = numeric.restricted_ratio(k, args.d, args.i, args.prec)
        rows.append({"k": k, **rep.to_json()})
    limit = numeric.c_constant(args.d, args.i, args.prec)
    out = {"d": args.d, "i": args.i, "limit": mpmath.nstr(limit.value, 15), "table": rows}
    return out if len(rows) > 1 else {**out, **rows[0]}


def cmd_c_const(args):
    return numeric.c_constant(args.d, args.i, args.prec).to_json()


def cmd_selftest(args):
    from .golden import run_all

    results = run_all(verbose=False)
    out = {"passed": all(r.ok for r in results), "checks": [r.to_json() for r in results]}
    return out


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dzrel", description="Period polynomial relations among double zeta values.")
    parser.add_argument("--format", choices=("json", "csv", "pretty"), default="json")
    parser.add_argument("--output", help="write to FILE instead of standard output")
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    def add(name, fn, help_):
        p = sub.add_parser(name, help=help_)
        p.set_defaults(func=fn)
        # allow global options after the subcommand too
        p.add_argument("--format", choices=("json", "csv", "pretty"), default=argparse.SUPPRESS)
        p.add_argument("--output", default=argparse.SUPPRESS)
        return p

    p = add("period-basis", cmd_period_basis, "basis of W_k^+ or W_k^-")
    p.add_argument("--weight", type=int, required=True)
    p.add_argument("--sign", choices=("plus", "minus"), required=True)

    p = add("relation", cmd_relation, "Type I/II relation(s) from a period basis of weight K")
    p.add_argument("--type", choices=("1", "2"), required=True)
    p.add_argument("--weight", type=int, required=True, help="even weight of the period polynomial space")
    p.add_argument("--index", type=int)

    p = add("verify", cmd_verify, "check a relation file formally, via symmetric H, or numerically")
    p.add_argument("--mode", choices=("formal", "symmetric-h", "numeric"), required=True)
    p.add_argument("--relation", required=True, help="JSON file ('-' for standard input)")
    p.add_argument("--prec", type=float, default=numeric.DEFAULT_EPS)
    p.add_argument("--tol", type=float, default=1e-10)
    p.add_argument("--kappa", type=float, default=0.0)

    p = add("zagier", cmd_zagier, "Zagier's matrix B_K")
    p.add_argument("--K", type=int, required=True)
    p.add_argument("--sub", action="store_true")
    p.add_argument("--left-kernel", action="store_true")

    p = add("canonical", cmd_canonical, "canonical relation in odd weight")
    p.add_argument("--weight", type=int, required=True)

    p = add("kernel-element", cmd_kernel_element, "left-kernel element of B_K from a generated relation")
    p.add_argument("--weight", type=int, required=True, help="odd weight of the relation")
    p.add_argument("--type", choices=("1", "2"), required=True)
    p.add_argument("--index", type=int, required=True)

    p = add("rank", cmd_rank, "rank of the generated relations in odd weight")
    p.add_argument("--weight", type=int, required=True)

    p = add("zeta", cmd_zeta, "zeta(s)")
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--prec", type=float, default=numeric.DEFAULT_EPS)

    p = add("dzeta", cmd_dzeta, "double zeta value zeta(r, s)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--s", type=int, required=True)
    p.add_argument("--prec", type=float, default=numeric.DEFAULT_EPS)

    p = add("restricted-sum", cmd_restricted_sum, "zeta(k)^-1 sum over r = i mod d of zeta(r, k-r)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--k", required=True, help="weight, comma list, or start:stop[:step]")
    p.add_argument("--prec", type=float, default=numeric.DEFAULT_EPS)

    p = add("c-const", cmd_c_const, "restricted-sum limit constant C_d^(i)")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--i", type=int, required=True)
    p.add_argument("--prec", type=float, default=numeric.DEFAULT_EPS)

    add("selftest", cmd_selftest, "run the golden checks against the published tables")
    return parser


def _render(result, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(result, indent=2)
    if fmt == "pretty":
        return _pretty(result)
    rows = result.get("table") if isinstance(result, dict) else None
    if rows is None:
        raise UsageError("csv output is only available for tables (restricted-sum with several k)")
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=list(rows[0]), extrasaction="ignore", lineterminator="\n")
    w.writeheader()
    w.writerows(rows)
    return buf.getvalue().rstrip("\n")


def _pretty(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        lines = []
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not all(isinstance(x, (str, int, float)) for x in v):
                lines.append(f"{pad}{k}:")
                lines.append(_pretty(v, indent + 1))
            elif isinstance(v, list):
                lines.append(f"{pad}{k}: " + " ".join(str(x) for x in v))
            else:
                lines.append(f"{pad}{k}: {v}")
        return "\n".join(lines)
    if isinstance(obj, list):
        return "\n".join(_pretty(x, indent) if isinstance(x, (dict, list)) else f"{pad}{x}" for x in obj)
    return f"{pad}{obj}"


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    if not getattr(args, "func", None):
        parser.print_help(sys.stderr)
        return 2
    try:
        result = args.func(args)
        text = _render(result, args.format)
    except UsageError as e:
        print(f"dzrel: error: {e}", file=sys.stderr)
        return 2
    except (ValueError, ArithmeticError, ConstructionError, OSError, KeyError) as e:
        print(f"dzrel: {e}", file=sys.stderr)
        return 1
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if args.command == "selftest" and not result["passed"]:
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
