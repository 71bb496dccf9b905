"""Command-line front end.

Subcommands cover polynomial division and evaluation, grid hypothesis
checks and witness search, and the restricted-sumset bound: single
instances, exhaustive or seeded-sample sweeps, the certificate
polynomials, and both constructions behind the bound.

Output is plain text by default; --json emits key-sorted two-space
indented JSON (byte-identical across runs, including --parallel), and
--csv emits a header-row table where a command produces one.

Exit codes: 0 success, 1 bad input, 2 hypotheses violated, 3 a checked
mathematical property failed (never expected; indicates a bug).
"""

from __future__ import annotations

import argparse
import csv
import json
import sys

from .additive import (
    SumsetInstance,
    build_proof_polynomials,
    cn_witness_for_eh,
    eh_sweep,
    verify_eh,
    verify_full_sumset,
)
from .errors import (
    CombnullError,
    HypothesesViolated,
    InternalContradiction,
    ParseError,
)
from .nullstellensatz import CNInstance, Grid, check_hypotheses, find_witness
from .poly import discover_variables, format_polynomial, parse_polynomial
from .ring import Ring, binom_mod

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_HYPOTHESES = 2
EXIT_VIOLATION = 3


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    return [int(part) for part in text.split(",")]


def _int_sets(text: str) -> list[list[int]]:
    return [_int_list(group) for group in text.split(";")]


def _name_list(text: str) -> list[str]:
    names = [part.strip() for part in text.split(",")]
    if any(not n for n in names):
        raise ValueError(f"bad variable list {text!r}")
    return names


def _emit_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True, indent=2))


def _csv_writer():
    return csv.writer(sys.stdout, lineterminator="\n")


def _poly_names(args) -> list[str]:
    if args.vars:
        return list(args.vars)
    return discover_variables(args.poly) or ["x"]


def _build_instance(args) -> CNInstance:
    ring = Ring(args.modulus)
    poly = parse_polynomial(args.poly, ring, _poly_names(args))
    return CNInstance(poly, tuple(args.k), Grid(ring, args.sets))


def _report_text(report) -> str:
    fields = report.as_dict()
    return "hypotheses: " + " ".join(f"{k}={v}" for k, v in fields.items())


def _eh_payload(report) -> dict:
    return {
        "p": report.p,
        "A": list(report.a_set),
        "B": list(report.b_set),
        "C": list(report.c_set),
        "bound": report.bound,
        "holds": report.holds,
    }


# ---------------------------------------------------------------------------
# Command handlers
# ---------------------------------------------------------------------------

def cmd_witness(args) -> int:
    inst = _build_instance(args)
    report = check_hypotheses(inst)
    if not report.overall:
        if args.json:
            _emit_json({"hypotheses": report.as_dict()})
        else:
            print(_report_text(report))
        return EXIT_HYPOTHESES
    wit = find_witness(inst)
    if args.json:
        _emit_json(
            {
                "hypotheses": report.as_dict(),
                "witness": {
                    "point": list(wit.residues()),
                    "value": wit.value.residue,
                    "recursion_depth": wit.recursion_depth,
                },
            }
        )
    else:
        print(_report_text(report))
        print(f"point: {wit.residues()}")
        print(f"value: {wit.value.residue}")
        print(f"recursion_depth: {wit.recursion_depth}")
    return EXIT_OK


def cmd_check(args) -> int:
    report = check_hypotheses(_build_instance(args))
    if args.json:
        _emit_json(report.as_dict())
    else:
        print(_report_text(report))
    return EXIT_OK if report.overall else EXIT_HYPOTHESES


def cmd_divide(args) -> int:
    ring = Ring(args.modulus)
    if args.vars:
        names = list(args.vars)
        if args.var not in names:
            raise ValueError(f"--var {args.var} is not in --vars {names}")
    else:
        names = discover_variables(args.poly)
        if args.var not in names:
            names.append(args.var)
    poly = parse_polynomial(args.poly, ring, names)
    result = poly.divide_by_linear(names.index(args.var), args.at)
    q_text = format_polynomial(result.quotient, names)
    r_text = format_polynomial(result.remainder, names)
    if args.json:
        _emit_json(
            {"Q": q_text, "R": r_text, "var": args.var, "at": result.point.residue}
        )
    else:
        print(f"Q: {q_text}")
        print(f"R: {r_text}")
    return EXIT_OK


def cmd_eval(args) -> int:
    ring = Ring(args.modulus)
    poly = parse_polynomial(args.poly, ring, _poly_names(args))
    value = poly.evaluate(args.at).residue
    if args.json:
        _emit_json({"point": list(args.at), "value": value})
    else:
        print(f"value: {value}")
    return EXIT_OK


def cmd_eh(args) -> int:
    report = verify_eh(SumsetInstance(args.p, args.a_set, args.b_set))
    if args.json:
        _emit_json(_eh_payload(report))
    else:
        print(f"p: {report.p}")
        print(f"A: {list(report.a_set)}")
        print(f"B: {list(report.b_set)}")
        print(f"C: {list(report.c_set)}")
        print(f"bound: {report.bound}")
        print(f"holds: {report.holds}")
    return EXIT_OK if report.holds else EXIT_VIOLATION


def cmd_eh_sweep(args) -> int:
    report = eh_sweep(
        args.primes, samples=args.sampled, seed=args.seed, parallel=args.parallel
    )
    if args.json:
        _emit_json(
            {
                "mode": report.mode,
                "samples": report.samples,
                "seed": report.seed,
                "entries": [
                    {
                        "p": e.p,
                        "pairs": e.pairs,
                        "violations": [_eh_payload(v) for v in e.violations],
                    }
                    for e in report.entries
                ],
                "total_pairs": report.total_pairs,
                "total_violations": report.total_violations,
            }
        )
    elif args.csv:
        writer = _csv_writer()
        writer.writerow(["p", "pairs", "violations"])
        for e in report.entries:
            writer.writerow([e.p, e.pairs, len(e.violations)])
    else:
        for e in report.entries:
            print(f"p={e.p} pairs={e.pairs} violations={len(e.violations)}")
        print(
            f"total pairs={report.total_pairs} violations={report.total_violations}"
        )
    return EXIT_OK if report.total_violations == 0 else EXIT_VIOLATION


def cmd_eh_poly(args) -> int:
    proof = build_proof_polynomials(args.d_set, args.p)
    ring = proof.p_poly.ring
    names = ["x", "y"]
    d = len(proof.d_set)
    table = []
    for i in range(d + 1):
        coeff = proof.p_poly.coefficient((i, d - i)).residue
        expected = binom_mod(d, i, ring).residue
        table.append(
            {"i": i, "coefficient": coeff, "binom": expected, "match": coeff == expected}
        )
    ok = all(row["match"] for row in table)
    p_text = format_polynomial(proof.p_poly, names)
    q_text = format_polynomial(proof.q_poly, names)
    if args.json:
        _emit_json(
            {"D": list(proof.d_set), "P": p_text, "Q": q_text, "coeff_table": table}
        )
    elif args.csv:
        writer = _csv_writer()
        writer.writerow(["i", "coefficient", "binom", "match"])
        for row in table:
            writer.writerow([row["i"], row["coefficient"], row["binom"], row["match"]])
    else:
        print(f"D: {list(proof.d_set)}")
        print(f"P: {p_text}")
        print(f"Q: {q_text}")
        for row in table:
            print(
                f"i={row['i']} coefficient={row['coefficient']}"
                f" binom={row['binom']} match={row['match']}"
            )
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_eh_witness(args) -> int:
    a, b = cn_witness_for_eh(args.a_set, args.b_set, args.d_set, args.p)
    if args.json:
        _emit_json(
            {
                "p": args.p,
                "A": sorted(v % args.p for v in args.a_set),
                "B": sorted(v % args.p for v in args.b_set),
                "D": sorted(v % args.p for v in args.d_set),
                "a": a,
                "b": b,
                "sum": (a + b) % args.p,
            }
        )
    else:
        print(f"a: {a}")
        print(f"b: {b}")
        print(f"sum: {(a + b) % args.p}")
    return EXIT_OK


def cmd_full_sumset(args) -> int:
    ok = verify_full_sumset(SumsetInstance(args.p, args.a_set, args.b_set))
    if args.json:
        _emit_json(
            {
                "p": args.p,
                "A": sorted(v % args.p for v in args.a_set),
                "B": sorted(v % args.p for v in args.b_set),
                "full": ok,
            }
        )
    else:
        print(f"full: {ok}")
    return EXIT_OK if ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# Parser assembly
# ---------------------------------------------------------------------------

def _add_output_flags(p, csv_ok: bool = False) -> None:
    group = p.add_mutually_exclusive_group()
    group.add_argument("--json", action="store_true", help="emit key-sorted JSON")
    if csv_ok:
        group.add_argument("--csv", action="store_true", help="emit a CSV table")


def _add_poly_flags(p) -> None:
    p.add_argument("-m", "--modulus", type=int, required=True, help="ring modulus, >= 2")
    p.add_argument("-P", "--poly", required=True, help="polynomial expression")
    p.add_argument(
        "--vars",
        type=_name_list,
        default=None,
        help="comma-separated variable names (default: discovered from the expression)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="combnull",
        description="Exact polynomial arithmetic over Z_m, grid witness search, "
        "and restricted-sumset verification over Z_p.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser(
        "witness", help="check grid hypotheses and search for a nonvanishing point"
    )
    _add_poly_flags(w)
    w.add_argument("-k", type=_int_list, required=True, help="target exponents, comma-separated")
    w.add_argument(
        "-A",
        "--sets",
        type=_int_sets,
        required=True,
        help="grid sets: ';' between variables, ',' within a set",
    )
    _add_output_flags(w)
    w.set_defaults(func=cmd_witness)

    c = sub.add_parser("check", help="report the grid hypotheses without searching")
    _add_poly_flags(c)
    c.add_argument("-k", type=_int_list, required=True, help="target exponents, comma-separated")
    c.add_argument("-A", "--sets", type=_int_sets, required=True, help="grid sets")
    _add_output_flags(c)
    c.set_defaults(func=cmd_check)

    d = sub.add_parser("divide", help="divide by a monic linear factor (var - at)")
    _add_poly_flags(d)
    d.add_argument("--var", required=True, help="variable of the linear factor")
    d.add_argument("--at", type=int, required=True, help="root of the linear factor")
    _add_output_flags(d)
    d.set_defaults(func=cmd_divide)

    e = sub.add_parser("eval", help="evaluate a polynomial at a point")
    _add_poly_flags(e)
    e.add_argument(
        "--at", type=_int_list, required=True, help="point coordinates, comma-separated"
    )
    _add_output_flags(e)
    e.set_defaults(func=cmd_eval)

    h = sub.add_parser("eh", help="restricted sumset of one (A, B) pair and its bound")
    h.add_argument("-p", type=int, required=True, help="prime modulus")
    h.add_argument("-A", dest="a_set", type=_int_list, required=True, help="set A")
    h.add_argument("-B", dest="b_set", type=_int_list, required=True, help="set B")
    _add_output_flags(h)
    h.set_defaults(func=cmd_eh)

    s = sub.add_parser("eh-sweep", help="bound check over many (A, B) pairs per prime")
    s.add_argument(
        "-p", dest="primes", type=_int_list, required=True, help="primes, comma-separated"
    )
    mode = s.add_mutually_exclusive_group(required=True)
    mode.add_argument(
        "--exhaustive", action="store_true", help="every pair of nonempty subsets"
    )
    mode.add_argument(
        "--sampled", type=int, metavar="N", default=None, help="N seeded samples per prime"
    )
    s.add_argument("--seed", type=int, default=None, help="seed for sampled mode")
    s.add_argument(
        "--parallel", action="store_true", help="distribute chunks over processes"
    )
    _add_output_flags(s, csv_ok=True)
    s.set_defaults(func=cmd_eh_sweep)

    ep = sub.add_parser(
        "eh-poly", help="expand the certificate polynomials and check coefficients"
    )
    ep.add_argument("-p", type=int, required=True, help="prime modulus")
    ep.add_argument(
        "-D", dest="d_set", type=_int_list, default=[], help="excluded sums (may be empty)"
    )
    _add_output_flags(ep, csv_ok=True)
    ep.set_defaults(func=cmd_eh_poly)

    ew = sub.add_parser(
        "eh-witness", help="find (a, b) with a in A, b in B, a != b, a+b outside D"
    )
    ew.add_argument("-p", type=int, required=True, help="prime modulus")
    ew.add_argument("-A", dest="a_set", type=_int_list, required=True, help="set A")
    ew.add_argument("-B", dest="b_set", type=_int_list, required=True, help="set B")
    ew.add_argument(
        "-D", dest="d_set", type=_int_list, default=[], help="excluded sums (may be empty)"
    )
    _add_output_flags(ew)
    ew.set_defaults(func=cmd_eh_witness)

    f = sub.add_parser(
        "full-sumset", help="verify C = Z_p by construction when |A|+|B|-3 >= p"
    )
    f.add_argument("-p", type=int, required=True, help="odd prime modulus")
    f.add_argument("-A", dest="a_set", type=_int_list, required=True, help="set A")
    f.add_argument("-B", dest="b_set", type=_int_list, required=True, help="set B")
    _add_output_flags(f)
    f.set_defaults(func=cmd_full_sumset)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INPUT
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except HypothesesViolated as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_HYPOTHESES
    except InternalContradiction as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (CombnullError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
