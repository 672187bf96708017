"""Command-line entry point.

Exit codes: 0 when every requested verification or check passes, 1 when one
fails, 2 for invalid flags or parameters.
"""

import argparse
import json
import sys

from laurentdio.arith import parse_rational
from laurentdio.curves import CurveError, DegenerateConstructionError, ExceptionalPointError
from laurentdio.laurent import PLUS, SIGNS, parse_laurent
from laurentdio.search import (
    SearchConfig,
    reproduce_table1,
    search_integer_solutions,
    to_records,
    to_tsv,
)
from laurentdio.surfaces import Theorem2Params
from laurentdio.theorems import (
    DomainError,
    PipelineDegenerate,
    corollary13_map,
    format_value,
    theorem1_family,
    theorem1_identity_suite,
    theorem1_pipeline,
    theorem2_check_suite,
    theorem2_solve,
    verify_solution,
)

FORMATS = ("text", "tsv", "json")
DEFAULT_THM1 = ("1,1", "2,3", "-1,5")


def _rational(text):
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _laurent(text):
    try:
        return parse_laurent(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _pair(text):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError(f"expected two comma-separated values, got {text!r}")
    return tuple(_rational(p) for p in parts)


def _int_range(text):
    lo, hi = _pair(text)
    if lo.denominator != 1 or hi.denominator != 1 or lo > hi:
        raise argparse.ArgumentTypeError(f"expected LOW,HIGH integers with LOW <= HIGH, got {text!r}")
    return int(lo), int(hi)


def _positive(text):
    try:
        n = int(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from exc
    if n < 1:
        raise argparse.ArgumentTypeError("must be >= 1")
    return n


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default="text")
    p = argparse.ArgumentParser(prog="laurentdio",
                                description="Exact solutions of z^2 = f(x)^2 +- f(y)^2 for Laurent polynomials f.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("family", parents=[common], help="explicit solution over Q(T) for f = x + b + c/x")
    s.add_argument("--b", type=_rational, required=True)
    s.add_argument("--c", type=_rational, required=True)

    s = sub.add_parser("pipeline", parents=[common], help="solution over Q(T) from the m-th multiple")
    s.add_argument("--b", type=_rational, required=True)
    s.add_argument("--c", type=_rational, required=True)
    s.add_argument("--m", type=_positive, default=1)
    s.add_argument("--sign", choices=SIGNS, default=PLUS)

    s = sub.add_parser("solve2", parents=[common], help="rational solution for f = (x+b)(x-bk)(x+bk)/x")
    s.add_argument("--b", type=_rational, required=True)
    s.add_argument("--r", type=_rational, required=True)
    s.add_argument("--m", type=_positive, default=1)
    s.add_argument("--reciprocal", action="store_true", help="also print the x -> 1/x image")

    s = sub.add_parser("search", parents=[common], help="exhaustive integer search")
    s.add_argument("--f", type=_laurent, required=True)
    s.add_argument("--g", type=_laurent, default=None, help="separate Laurent polynomial for y")
    s.add_argument("--sign", choices=SIGNS, default=PLUS)
    s.add_argument("--bound", type=_positive, default=300)
    s.add_argument("--rational-z", action="store_true")
    s.add_argument("--all-orders", action="store_true", help="scan (x, y) and (y, x), not only x < y")
    s.add_argument("--workers", type=_positive, default=1)

    s = sub.add_parser("table1", parents=[common], help="reproduce the reference table for f = x + 1 + c/x")
    s.add_argument("--bound", type=_positive, default=300)
    s.add_argument("--workers", type=_positive, default=1)

    s = sub.add_parser("verify", parents=[common], help="certify one triple")
    s.add_argument("--f", type=_laurent, required=True)
    s.add_argument("--sign", choices=SIGNS, default=PLUS)
    s.add_argument("--x", type=_rational, required=True)
    s.add_argument("--y", type=_rational, required=True)
    s.add_argument("--z", type=_rational, required=True)

    s = sub.add_parser("checks", parents=[common], help="run the identity suites")
    s.add_argument("--thm1", type=_pair, action="append", metavar="B,C")
    s.add_argument("--thm2", type=_int_range, default=(-50, 50), metavar="LOW,HIGH")
    s.add_argument("--thm2-b", type=_rational, default=1)
    s.add_argument("--skip-order-test", action="store_true")
    return p


def _emit(out, fmt, rows, text=None):
    """``rows`` is a list of flat dicts; ``text`` overrides the text rendering."""
    if fmt == "json":
        out.write(json.dumps(rows) + "\n")
    elif fmt == "tsv":
        if rows:
            keys = list(rows[0])
            out.write("\t".join(keys) + "\n")
            for r in rows:
                out.write("\t".join(str(r[k]) for k in keys) + "\n")
    else:
        out.write((text if text is not None else "\n".join(
            "  ".join(f"{k}={v}" for k, v in r.items()) for r in rows)) + "\n")


def _solution_row(sol, var="T"):
    cert = sol.certificate()
    return {
        "f": sol.f.to_text(),
        "sign": sol.sign,
        "x": format_value(sol.x, var),
        "y": format_value(sol.y, var),
        "z": format_value(sol.z, var),
        "m": sol.multiple if sol.multiple is not None else "",
        "residual": format_value(cert.residual, var),
        "valid": cert.valid,
    }


def _solution_text(sol, var="T"):
    cert = sol.certificate()
    lines = [f"f = {sol.f.to_text()}  ({sol.sign})", sol.to_text(var)]
    if sol.provenance:
        lines.append(f"from {sol.provenance}")
    for m, why in sol.skipped:
        lines.append(f"skipped m={m}: {why}")
    for label, status, detail in sol.steps:
        lines.append(f"substitution {label}: {status} ({detail})")
    lines.append(f"residual = {format_value(cert.residual, var)}; nontrivial = {cert.nontrivial}")
    return "\n".join(lines)


def _run_solution(out, fmt, sol, var="T"):
    _emit(out, fmt, [_solution_row(sol, var)], _solution_text(sol, var))
    return 0 if sol.certificate().valid else 1


def cmd_family(args, out):
    return _run_solution(out, args.format, theorem1_family(args.b, args.c))


def cmd_pipeline(args, out):
    try:
        sol = theorem1_pipeline(args.b, args.c, args.m, sign=args.sign)
    except PipelineDegenerate as exc:
        rows = [{"substitution": a, "status": s, "detail": d} for a, s, d in exc.steps]
        _emit(out, args.format, rows)
        return 1
    return _run_solution(out, args.format, sol)


def cmd_solve2(args, out):
    sol = theorem2_solve(Theorem2Params(args.b, args.r), args.m)
    sols = [sol] + ([corollary13_map(sol)] if args.reciprocal else [])
    rows = [_solution_row(s) for s in sols]
    text = "\n\n".join(_solution_text(s) for s in sols)
    _emit(out, args.format, rows, text)
    return 0 if all(s.certificate().valid for s in sols) else 1


def cmd_search(args, out):
    cfg = SearchConfig(args.f, args.sign, args.bound, require_integer_z=not args.rational_z,
                       g=args.g, workers=args.workers, all_orders=args.all_orders)
    hits = search_integer_solutions(cfg)
    label = args.f.to_text()
    if args.format == "json":
        out.write(json.dumps(to_records(hits, label)) + "\n")
    elif args.format == "tsv":
        out.write(to_tsv(hits, label) + "\n")
    else:
        out.write(f"{len(hits)} solutions for {label} ({args.sign}, bound {args.bound})\n")
        for h in hits:
            out.write(f"({h.x}, {h.y}, {h.z})\n")
    return 0


def cmd_table1(args, out):
    rep = reproduce_table1(args.bound, workers=args.workers)
    records = []
    for e in rep.entries:
        ref = set(e.reference)
        for h in e.found:
            records.append({"c": e.c, "x": h.x, "y": h.y, "z": h.z,
                            "status": "table" if tuple(h) in ref else "beyond"})
        for row in e.out_of_bound:
            records.append({"c": e.c, "x": row[0], "y": row[1], "z": row[2], "status": "out of bound"})
    if args.format == "text":
        lines = []
        for e in rep.entries:
            lines.append(f"c={e.c}: {len(e.found)} found, {len(e.reference)} in table, "
                         f"{len(e.missing)} missing, {len(e.beyond)} beyond, {len(e.out_of_bound)} out of bound")
            for h in e.found:
                lines.append(f"  ({h.x}, {h.y}, {h.z})" + ("" if tuple(h) in set(e.reference) else "  beyond"))
        lines += rep.failures()
        out.write("\n".join(lines) + "\n")
    elif args.format == "tsv":
        out.write("c\tx\ty\tz\tstatus\n")
        for r in records:
            out.write("\t".join(str(r[k]) for k in ("c", "x", "y", "z", "status")) + "\n")
    else:
        out.write(json.dumps({"bound": rep.bound, "ok": rep.ok, "rows": records,
                              "failures": rep.failures()}) + "\n")
    return 0 if rep.ok else 1


def cmd_verify(args, out):
    cert = verify_solution(args.f, args.sign, args.x, args.y, args.z)
    row = {"residual": str(cert.residual), "f(x)": str(cert.f_x), "f(y)": str(cert.f_y),
           "nontrivial": cert.nontrivial, "valid": cert.valid}
    text = (f"{'valid' if cert.valid else 'invalid'}: residual = {cert.residual}, "
            f"f(x) = {cert.f_x}, f(y) = {cert.f_y}, nontrivial = {cert.nontrivial}")
    _emit(out, args.format, [row], text)
    return 0 if cert.valid else 1


def cmd_checks(args, out):
    pairs = args.thm1 or [_pair(p) for p in DEFAULT_THM1]
    reports = [theorem1_identity_suite(b, c) for b, c in pairs]
    reports.append(theorem2_check_suite(Theorem2Params(args.thm2_b, 2), scan=args.thm2,
                                        order_test=not args.skip_order_test))
    rows = [{"suite": r.title, "check": c.name, "status": "PASS" if c.passed else "FAIL",
             "witness": c.witness} for r in reports for c in r.checks]
    text = "\n".join(line for r in reports for line in r.lines())
    _emit(out, args.format, rows, text)
    return 0 if all(r.passed for r in reports) else 1


COMMANDS = {
    "family": cmd_family,
    "pipeline": cmd_pipeline,
    "solve2": cmd_solve2,
    "search": cmd_search,
    "table1": cmd_table1,
    "verify": cmd_verify,
    "checks": cmd_checks,
}


def main(argv=None, out=None):
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args, out)
    except (DegenerateConstructionError, ExceptionalPointError) as exc:
        out.write(f"construction failed: {exc}\n")
        return 1
    except (ValueError, CurveError, DomainError) as exc:
        # bad parameters (bc = 0, r = 1, a pole, ...) are usage errors
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
