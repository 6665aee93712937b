"""Command-line front end.

Subcommands: dim, macaulay, ghw, hierarchy, table, verify.  Exit codes:
0 success, 1 verification mismatch, 2 usage or validation error.  Big
numbers are serialized as decimal strings in JSON output so nothing is
ever squeezed through a double.
"""

from __future__ import annotations

import argparse
import json
import sys
from contextlib import contextmanager

from . import oracle, weights
from .dims import CodeParams, is_prime_power, rho, rho_binomial, rho_recursive
from .macaulay import INFINITY, decompose


def _parse_qparam(text: str):
    if text.lower() in ("inf", "infinity"):
        return INFINITY
    try:
        return int(text)
    except ValueError:
        raise ValueError(f"q must be an integer or 'inf', got {text!r}") from None


def _parse_range(text: str) -> range:
    """Parse '3' or '2..5' into an inclusive range."""
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    if hi < lo:
        raise ValueError(f"empty range {text!r}")
    return range(lo, hi + 1)


def _params_json(params: CodeParams) -> dict:
    return {"q": params.q, "d": params.d, "m": params.m}


@contextmanager
def _open_out(path):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w") as handle:
            yield handle


def cmd_dim(args, out) -> int:
    params = CodeParams(args.q, args.d, args.m)
    value = params.dimension
    if args.format == "json":
        doc = {"params": _params_json(params), "rho": str(value)}
        print(json.dumps(doc, indent=2), file=out)
    elif args.format == "csv":
        print("q,d,m,rho", file=out)
        print(f"{params.q},{params.d},{params.m},{value}", file=out)
    else:
        print(value, file=out)
    return 0


def cmd_macaulay(args, out) -> int:
    qparam = _parse_qparam(args.q)
    rep = decompose(args.n, args.d, qparam)
    terms = rep.term_values()
    if args.format == "json":
        doc = {
            "q": "inf" if qparam == INFINITY else qparam,
            "d": rep.d,
            "coeffs": list(rep.coeffs),
            "terms": [str(t) for t in terms],
            "sum": str(sum(terms)),
            "n": str(rep.n),
        }
        print(json.dumps(doc, indent=2), file=out)
    elif args.format == "csv":
        print("degree,coefficient,term", file=out)
        for i, c, t in zip(range(rep.d, 0, -1), rep.coeffs, terms):
            print(f"{i},{c},{t}", file=out)
    else:
        print("(" + ", ".join(str(c) for c in rep.coeffs) + ")", file=out)
    return 0


def cmd_ghw(args, out) -> int:
    params = CodeParams(args.q, args.d, args.m)
    eb = weights.e_bar(params, args.r)
    dr = params.length - eb
    if args.format == "json":
        doc = {
            "params": _params_json(params),
            "r": args.r,
            "e_bar": str(eb),
            "d_r": str(dr),
        }
        print(json.dumps(doc, indent=2), file=out)
    elif args.format == "csv":
        print("q,d,m,r,e_bar,d_r", file=out)
        print(f"{params.q},{params.d},{params.m},{args.r},{eb},{dr}", file=out)
    else:
        print(f"d_r = {dr} (e_bar = {eb})", file=out)
    return 0


def cmd_hierarchy(args, out) -> int:
    params = CodeParams(args.q, args.d, args.m)
    h = weights.hierarchy(params)
    if args.format == "json":
        doc = {
            "params": _params_json(params),
            "rho": str(len(h)),
            "weights": [str(w) for w in h],
        }
        print(json.dumps(doc, indent=2), file=out)
    elif args.format == "csv":
        print("r,d_r", file=out)
        for r, w in enumerate(h, start=1):
            print(f"{r},{w}", file=out)
    else:
        print(" ".join(str(w) for w in h), file=out)
    return 0


def cmd_table(args, out) -> int:
    q_range = _parse_range(args.q)
    m_range = _parse_range(args.m)
    d_range = _parse_range(args.d) if args.d is not None else None
    print("q,d,m,r,d_r", file=out)
    for q in q_range:
        if not is_prime_power(q):
            continue  # ranges like 2..5 pass through q = 6-style gaps
        for m in m_range:
            if m < 1:
                continue
            d_max = m * (q - 1)
            ds = range(1, d_max + 1) if d_range is None else (
                d for d in d_range if 1 <= d <= d_max
            )
            for d in ds:
                h = weights.hierarchy(CodeParams(q, d, m))
                for r, w in enumerate(h, start=1):
                    print(f"{q},{d},{m},{r},{w}", file=out)
    return 0


def _verify_lex(params: CodeParams, cap, fmt, out) -> int:
    k = params.dimension
    tuple_cap = cap if cap is not None else oracle.DEFAULT_TUPLE_CAP
    rows = []
    for r in range(1, k + 1):
        got = weights.e_bar(params, r)
        want = oracle.e_bar_lex(params, r, tuple_cap)
        rows.append((r, got, want))
    mismatches = [row for row in rows if row[1] != row[2]]
    if fmt == "json":
        doc = {
            "oracle": "lex",
            "status": "pass" if not mismatches else "fail",
            "checked": k,
            "mismatches": [
                {"r": r, "e_bar": str(a), "oracle": str(b)} for r, a, b in mismatches
            ],
        }
        print(json.dumps(doc, indent=2), file=out)
    elif fmt == "csv":
        print("r,e_bar,oracle,match", file=out)
        for r, a, b in rows:
            print(f"{r},{a},{b},{str(a == b).lower()}", file=out)
    else:
        for r, a, b in mismatches:
            print(f"MISMATCH r={r}: e_bar={a} oracle={b}", file=out)
        if mismatches:
            print(f"FAIL ({len(mismatches)} mismatches / {k} ranks)", file=out)
        else:
            print(f"PASS ({k} ranks checked)", file=out)
    return 1 if mismatches else 0


def _verify_exhaustive(params: CodeParams, r, cap, fmt, out) -> int:
    k = params.dimension
    subspace_cap = cap if cap is not None else oracle.DEFAULT_SUBSPACE_CAP
    if r is not None:
        ranks = [r]
    else:
        ranks = [
            s
            for s in range(1, k + 1)
            if oracle.gaussian_binomial(k, s, params.q) <= subspace_cap
        ]
        if not ranks:
            raise ValueError("no rank fits under the subspace cap; pass --r or raise --cap")
    rows = []
    for s in ranks:
        formula = weights.ghw(params, s)
        exhaustive = oracle.min_subspace_support(params, s, subspace_cap)
        rows.append((s, formula, exhaustive))
    mismatches = [row for row in rows if row[1] != row[2]]
    if fmt == "json":
        doc = {
            "oracle": "exhaustive",
            "status": "pass" if not mismatches else "fail",
            "checks": [
                {"r": s, "formula": str(a), "exhaustive": str(b), "match": a == b}
                for s, a, b in rows
            ],
        }
        print(json.dumps(doc, indent=2), file=out)
    elif fmt == "csv":
        print("r,formula,exhaustive,match", file=out)
        for s, a, b in rows:
            print(f"{s},{a},{b},{str(a == b).lower()}", file=out)
    else:
        for s, a, b in rows:
            if a == b:
                print(f"PASS d_{s} = {a}", file=out)
            else:
                print(f"MISMATCH d_{s}: formula={a} exhaustive={b}", file=out)
        if mismatches:
            print(f"FAIL ({len(mismatches)} mismatches / {len(rows)} ranks)", file=out)
    return 1 if mismatches else 0


def _verify_dims(params: CodeParams, cap, fmt, out) -> int:
    q, d, m = params.q, params.d, params.m
    tuple_cap = cap if cap is not None else oracle.DEFAULT_TUPLE_CAP
    values = {
        "formula": rho(q, d, m),
        "recursion": rho_recursive(q, d, m),
        "enumeration": oracle.count_reduced_monomials(q, d, m, tuple_cap),
    }
    if d <= q - 1:
        values["binomial"] = rho_binomial(q, d, m)
    agreed = len(set(values.values())) == 1
    if fmt == "json":
        doc = {
            "oracle": "dims",
            "status": "pass" if agreed else "fail",
            "values": {name: str(v) for name, v in values.items()},
        }
        print(json.dumps(doc, indent=2), file=out)
    elif fmt == "csv":
        print("method,rho", file=out)
        for name, v in values.items():
            print(f"{name},{v}", file=out)
    else:
        if agreed:
            some = next(iter(values.values()))
            print(f"PASS rho = {some} by {len(values)} methods", file=out)
        else:
            for name, v in values.items():
                print(f"{name} = {v}", file=out)
            print("FAIL (methods disagree)", file=out)
    return 0 if agreed else 1


def cmd_verify(args, out) -> int:
    params = CodeParams(args.q, args.d, args.m)
    if args.oracle == "lex":
        return _verify_lex(params, args.cap, args.format, out)
    if args.oracle == "exhaustive":
        return _verify_exhaustive(params, args.r, args.cap, args.format, out)
    return _verify_dims(params, args.cap, args.format, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rmweights",
        description="Dimensions and generalized Hamming weights of q-ary Reed-Muller codes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
        p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")

    p = sub.add_parser("dim", help="dimension rho_q(d, m) of RM(d, m)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_dim)

    p = sub.add_parser("macaulay", help="Macaulay representation of n with respect to q")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--q", required=True, help="prime power, or 'inf' for the classical mode")
    common(p)
    p.set_defaults(func=cmd_macaulay)

    p = sub.add_parser("ghw", help="r-th generalized Hamming weight of RM(d, m)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_ghw)

    p = sub.add_parser("hierarchy", help="full weight hierarchy of RM(d, m)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_hierarchy)

    p = sub.add_parser("table", help="stream hierarchies for parameter ranges as CSV")
    p.add_argument("--q", required=True, help="value or inclusive range like 2..4")
    p.add_argument("--m", required=True, help="value or inclusive range like 1..4")
    p.add_argument("--d", help="value or range; defaults to 1..m(q-1)")
    p.add_argument("--out", metavar="PATH", help="write output to PATH instead of stdout")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="compare closed forms against a brute-force oracle")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--oracle", choices=("lex", "exhaustive", "dims"), required=True)
    p.add_argument("--r", type=int, help="single rank to check (exhaustive oracle)")
    p.add_argument("--cap", type=int, help="enumeration cap override")
    common(p)
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        with _open_out(args.out) as out:
            return args.func(args, out)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
