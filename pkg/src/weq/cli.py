"""Command-line front end.

Exit codes: 0 on success, 1 when an analysis finds a violation or a
mismatch, 2 on parse or usage errors. Inputs that look like existing
paths are read as files, anything else is treated as literal text.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import analysis, search
from .encode import balanced_residual, check_solution_poly, is_balanced, s_vector, t_det
from .poly import MultiPoly, binomial_factors, format_poly
from .principal import principal_decompose
from .textio import (
    ParseError,
    parse_morphism,
    parse_poly,
    parse_system,
    render_equation,
    render_morphism,
)
from .words import is_solution


def _read_text(arg: str) -> str:
    if os.path.exists(arg):
        with open(arg, encoding="utf-8") as fh:
            return fh.read()
    return arg


def _emit_json(payload) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _factorization_json(fac) -> dict:
    return {
        "sign": fac.sign,
        "content": list(fac.content),
        "factors": [
            {"lambda": list(b.lam.entries), "multiplicity": m} for b, m in fac.factors
        ],
        "residual": format_poly(fac.residual),
    }


def _factorization_text(fac) -> str:
    parts = []
    if fac.sign < 0:
        parts.append("-1")
    if any(fac.content):
        parts.append(format_poly(MultiPoly.monomial(fac.n, fac.content)))
    for b, m in fac.factors:
        parts.append(f"({b})" + (f"^{m}" if m > 1 else ""))
    residual = format_poly(fac.residual)
    if residual != "1":
        parts.append(residual if len(fac.residual.terms) == 1 else f"({residual})")
    if not parts:
        parts.append("1")
    return " * ".join(parts)


def cmd_encode(args) -> int:
    system, names = parse_system(_read_text(args.input))
    payload = []
    for i, E in enumerate(system, 1):
        comps = [format_poly(p) for p in s_vector(E)]
        payload.append({"equation": render_equation(E, names), "s_vector": comps})
        if not args.json:
            print(f"E{i}: {render_equation(E, names)}")
            print(f"S(E{i}) = ({', '.join(comps)})")
    if args.json:
        _emit_json(payload)
    return 0


def cmd_det(args) -> int:
    system, names = parse_system(_read_text(args.input))
    if len(system) < 2:
        raise ParseError("determinants need two equations")
    E, Ep = system.equations[0], system.equations[1]
    n = E.n
    payload = []
    for j in range(n):
        for k in range(j + 1, n):
            det = t_det(E, Ep, j, k)
            payload.append(
                {"pair": [j + 1, k + 1], "determinant": format_poly(det)}
            )
            if not args.json:
                print(f"t{j + 1}{k + 1} = {format_poly(det)}")
    if args.json:
        _emit_json(payload)
    return 0


def cmd_factor(args) -> int:
    p = parse_poly(_read_text(args.poly).strip(), args.nvars)
    if not p:
        raise ParseError("cannot factor the zero polynomial")
    fac = binomial_factors(p)
    if args.json:
        _emit_json({"input": format_poly(p), **_factorization_json(fac)})
    else:
        print(f"{format_poly(p)} = {_factorization_text(fac)}")
    return 0


def cmd_balanced(args) -> int:
    system, names = parse_system(_read_text(args.input))
    payload = []
    for E in system:
        balanced = is_balanced(E)
        residual = balanced_residual(E)
        payload.append(
            {
                "equation": render_equation(E, names),
                "balanced": balanced,
                "residual": format_poly(residual),
            }
        )
        if not args.json:
            verdict = "balanced" if balanced else "not balanced"
            print(f"{render_equation(E, names)}: {verdict} (residual {format_poly(residual)})")
    if args.json:
        _emit_json(payload)
    return 0


def cmd_check(args) -> int:
    system, names = parse_system(_read_text(args.equations))
    h = parse_morphism(_read_text(args.morphism), names)
    rows = []
    agree = True
    for E in system:
        word_level = is_solution(h, E)
        poly_level = check_solution_poly(E, h)
        agree &= word_level == poly_level
        rows.append(
            {
                "equation": render_equation(E, names),
                "word_check": word_level,
                "poly_check": poly_level,
                "agree": word_level == poly_level,
            }
        )
    if args.json:
        _emit_json(rows)
    else:
        for row in rows:
            print(
                f"{row['equation']}: word={row['word_check']} "
                f"poly={row['poly_check']} agree={row['agree']}"
            )
    return 0 if agree else 1


def cmd_principal(args) -> int:
    system, names = parse_system(_read_text(args.equations))
    h = parse_morphism(_read_text(args.morphism), names)
    dec = principal_decompose(h, system)
    if args.json:
        _emit_json(
            {
                "g": [str(im) for im in dec.g.images],
                "theta": [str(im) for im in dec.theta.images],
                "trace": [list(step) for step in dec.trace],
            }
        )
    else:
        letter_names = [chr(ord("a") + i) for i in range(dec.theta.domain_size)]
        print("principal solution g:")
        print(render_morphism(dec.g, names))
        print("letter substitution theta:")
        print(render_morphism(dec.theta, letter_names))
        print(f"trace: {', '.join('/'.join(str(x) for x in step) for step in dec.trace) or '(none)'}")
    return 0


def cmd_hyperplanes(args) -> int:
    system, names = parse_system(_read_text(args.input))
    if len(system) < 2:
        raise ParseError("hyperplane analysis needs two equations")
    E, Ep = system.equations[0], system.equations[1]
    payload = analysis.pair_report_json(E, Ep, names)
    if args.json:
        _emit_json(payload)
        return 0
    print(f"status: {payload['status']}")
    if payload["pair"] is not None:
        print(f"primary pair: t{payload['pair'][0]}{payload['pair'][1]} = {payload['determinant']}")
        for c in payload["hyperplane_constraints"]:
            print(f"hyperplane: {c}")
        for note in payload["erasing_notes"]:
            print(note)
    b = payload["bounds"]
    print(f"bounds: sum={b['sum']} best={b['best']}")
    return 0


def cmd_bounds(args) -> int:
    system, names = parse_system(_read_text(args.input))
    if len(system) < 2:
        raise ParseError("bounds need at least two equations")
    if len(system) == 2:
        report = analysis.bounds(system.equations[0], system.equations[1])
    else:
        report = analysis.system_bounds(
            system, has_rank_n1_solution=args.assume_rank_solution
        )
    payload = {
        "status": report.status,
        "sum": report.sum_bound,
        "pairs": [
            {"pair": [j + 1, k + 1], "bound": b} for (j, k), b in report.pair_bounds
        ],
        "best": report.best,
    }
    if report.system_size_bound is not None:
        payload["system_size_bound"] = report.system_size_bound
    if args.json:
        _emit_json(payload)
    else:
        print(f"status: {report.status}")
        print(f"sum bound: {report.sum_bound}")
        for (j, k), b in report.pair_bounds:
            print(f"pair ({j + 1}, {k + 1}): {b}")
        print(f"best: {report.best}")
        if report.system_size_bound is not None:
            print(f"system size bound: {report.system_size_bound}")
    return 0


def cmd_search(args) -> int:
    if args.verify_encoding:
        report = search.verify_encoding(args.verify_encoding, args.seed)
        payload = {
            "cases": report.cases,
            "positives": report.positives,
            "discrepancies": list(report.discrepancies),
        }
        if args.json:
            _emit_json(payload)
        else:
            print(
                f"checked {report.cases} cases ({report.positives} solutions), "
                f"{len(report.discrepancies)} discrepancies"
            )
            for d in report.discrepancies:
                print(f"  counterexample: {d}")
        return 0 if report.ok else 1

    if args.input is None:
        raise ParseError("search needs equations (or --verify-encoding N)")
    system, names = parse_system(_read_text(args.input))
    cfg = search.SearchConfig(
        max_total_image_length=args.max_len,
        alphabet_size=args.alphabet,
        allow_erasing=not args.no_erasing,
    )
    if args.verify_bounds:
        if len(system) < 2:
            raise ParseError("--verify-bounds needs two equations")
        report = search.verify_bounds(
            system.equations[0], system.equations[1], cfg, workers=args.parallel
        )
        payload = {
            "status": report.status,
            "ok": report.ok,
            "classes": report.class_count,
            "erasing_classes": report.erasing_class_count,
            "counterexample": report.counterexample,
        }
        if args.json:
            _emit_json(payload)
        else:
            print(f"status: {report.status} ok: {report.ok} classes: {report.class_count}")
            if report.counterexample:
                print(f"counterexample: {report.counterexample}")
        return 0 if report.ok else 1

    catalog = search.enumerate_solutions(system, cfg, workers=args.parallel)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8") as fh:
            fh.write("length_type,rank,class\n")
            for lt, r, cid in catalog.csv_rows():
                fh.write(f"{lt},{r},{cid}\n")
    if args.json:
        _emit_json(catalog.to_json())
    else:
        print(f"solutions within budget: {len(catalog.solutions)}")
        for r, c in catalog.rank_counts().items():
            print(f"rank {r}: {c}")
        for i, cls in enumerate(catalog.classes):
            print(
                f"class {i}: normal {cls.normal} ({cls.normal.constraint_text(names)}), "
                f"{len(cls.members)} members"
            )
    return 0


_EXAMPLE_INPUT = "xyxz = zxyx\nxyxxz = zxxyx\n"

_EXAMPLE_EXPECTED = {
    "S(E1)": "(-X*Y*Z + X*Y - Z + 1, -X*Z + X, X^2*Y - 1)",
    "S(E2)": "(-X^2*Y*Z + X^2*Y + X*Y - X*Z - Z + 1, -X^2*Z + X, X^3*Y - 1)",
    "t23": "X^4*Y - X^3*Y - X^2*Z + X*Z",
    "t31": "X^3*Y^2 - X^3*Y - X*Y*Z + X*Z",
    "t12": "X^3*Y*Z - X^3*Y - X*Z^2 + X*Z",
    "t23 factored": "X * (X - 1) * (X^2*Y - Z)",
    "cofactor t": "X^3*Y - X*Z",
    "cofactor t factored": "X * (X^2*Y - Z)",
    "constraint": "2|h(x)| + |h(y)| = |h(z)|",
    "sum bound": "18",
    "best bound": "8",
}


def cmd_paper_example(args) -> int:
    system, names = parse_system(_EXAMPLE_INPUT)
    E1, E2 = system.equations
    got = {}
    for label, E in (("S(E1)", E1), ("S(E2)", E2)):
        got[label] = "(" + ", ".join(format_poly(p) for p in s_vector(E)) + ")"
    got["t23"] = format_poly(t_det(E1, E2, 1, 2))
    got["t31"] = format_poly(t_det(E1, E2, 2, 0))
    got["t12"] = format_poly(t_det(E1, E2, 0, 1))
    got["t23 factored"] = _factorization_text(binomial_factors(t_det(E1, E2, 1, 2)))
    t = analysis.cofactor_3vars(E1, E2)
    got["cofactor t"] = format_poly(t)
    got["cofactor t factored"] = _factorization_text(binomial_factors(t))
    hyper = analysis.solution_hyperplanes(E1, E2, names)
    got["constraint"] = "; ".join(hyper.constraints)
    breport = analysis.bounds(E1, E2)
    got["sum bound"] = str(breport.sum_bound)
    got["best bound"] = str(breport.best)

    failures = 0
    rows = []
    for key, expected in _EXAMPLE_EXPECTED.items():
        ok = got[key] == expected
        failures += not ok
        rows.append({"item": key, "value": got[key], "expected": expected, "ok": ok})
    if args.json:
        _emit_json(rows)
    else:
        print(f"E1: {render_equation(E1, names)}")
        print(f"E2: {render_equation(E2, names)}")
        for row in rows:
            mark = "ok" if row["ok"] else f"MISMATCH (expected {row['expected']})"
            print(f"{row['item']} = {row['value']}  [{mark}]")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="weq",
        description="Word equations through exact integer polynomial encodings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_json(p):
        p.add_argument("--json", action="store_true", help="emit JSON")

    p = sub.add_parser("encode", help="print the coefficient vector of each equation")
    p.add_argument("input", help="equations (file or literal)")
    add_json(p)
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("det", help="print the determinant grid of the first two equations")
    p.add_argument("input")
    add_json(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("factor", help="binomial factorization of a polynomial")
    p.add_argument("poly", help="polynomial (file or literal)")
    p.add_argument("--nvars", type=int, default=None, help="number of ring variables")
    add_json(p)
    p.set_defaults(func=cmd_factor)

    p = sub.add_parser("balanced", help="balancedness test per equation")
    p.add_argument("input")
    add_json(p)
    p.set_defaults(func=cmd_balanced)

    p = sub.add_parser("check", help="word-level vs polynomial-level solution check")
    p.add_argument("equations")
    p.add_argument("morphism")
    add_json(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("principal", help="principal decomposition of a solution")
    p.add_argument("equations")
    p.add_argument("morphism")
    add_json(p)
    p.set_defaults(func=cmd_principal)

    p = sub.add_parser("hyperplanes", help="hyperplane classification for an equation pair")
    p.add_argument("input")
    add_json(p)
    p.set_defaults(func=cmd_hyperplanes)

    p = sub.add_parser("bounds", help="class-count bounds for a pair or a system")
    p.add_argument("input")
    p.add_argument(
        "--assume-rank-solution",
        action="store_true",
        help="assume the full system has a rank-(n-1) solution",
    )
    add_json(p)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("search", help="exhaustive solution search and verifications")
    p.add_argument("input", nargs="?", default=None)
    p.add_argument("--max-len", type=int, default=6, help="total image length budget")
    p.add_argument("--alphabet", type=int, default=2, help="target alphabet size")
    p.add_argument("--no-erasing", action="store_true", help="skip erasing morphisms")
    p.add_argument("--parallel", type=int, default=1, metavar="THREADS")
    p.add_argument("--csv", default=None, help="also write (length type, rank, class) rows")
    p.add_argument(
        "--verify-bounds",
        action="store_true",
        help="check the class-count bounds for the first two equations",
    )
    p.add_argument(
        "--verify-encoding",
        type=int,
        default=0,
        metavar="CASES",
        help="fuzz the polynomial encoding against the word-level check",
    )
    p.add_argument("--seed", type=int, default=0, help="seed for randomized checks")
    add_json(p)
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("paper-example", help="reproduce the built-in worked example")
    add_json(p)
    p.set_defaults(func=cmd_paper_example)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
