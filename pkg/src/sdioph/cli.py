"""Command-line front end: ``sdioph {search,verify,bounds,solve}``.

Output is JSON lines (one record per line) in canonical order. ``search``
also writes CSV. Exit codes: 0 success, 1 verification failure, 2 usage or
validation error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from fractions import Fraction

from .bounds import DEFAULT_DIGIT_BUDGET, bound_report
from .errors import BudgetExceeded, InvalidPrimeSet, SDiophError
from .smooth import factor_over, new_prime_set
from .solver import UnitEquation, solution_counts, solve_affine, solve_homogeneous_projective
from .system import (
    catalan_scan,
    check_product_identities,
    check_system,
    classify_degenerate,
    equation4_scan,
    find_vanishing_subsums,
    positivity_witness,
    recover_quadruple,
    sextuple_of,
    solution_vector,
)
from .tuples import SearchConfig, find_tuples, is_s_diophantine, tuple_record

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fraction_list(text: str) -> list[Fraction]:
    try:
        return [Fraction(x.strip()) for x in text.split(",") if x.strip()]
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _sign_list(text: str) -> list[int]:
    out = []
    for tok in text.split(","):
        tok = tok.strip()
        if tok in ("+", "+1", "1"):
            out.append(1)
        elif tok in ("-", "-1"):
            out.append(-1)
        else:
            raise argparse.ArgumentTypeError(f"bad sign {tok!r}")
    return out


def _emit(lines, args) -> None:
    out = open(args.output, "w", newline="") if args.output else sys.stdout
    try:
        for line in lines:
            out.write(line + "\n")
    finally:
        if args.output:
            out.close()


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(", ", ": "))


def _require(args, *names):
    missing = [n for n in names if getattr(args, n, None) is None]
    if missing:
        flags = ", ".join("--" + n.replace("_", "-") for n in missing)
        raise UsageError(f"missing required option(s): {flags}")


def _prime_set(primes):
    try:
        return new_prime_set(primes)
    except InvalidPrimeSet as e:
        raise UsageError(f"invalid prime set: {e}")


def cmd_search(args) -> int:
    _require(args, "primes", "max", "size")
    S = _prime_set(args.primes)
    try:
        cfg = SearchConfig(S, args.max, args.size, args.partitions)
    except ValueError as e:
        raise UsageError(str(e))
    found = find_tuples(cfg)
    if args.format == "csv":
        rows = [",".join(map(str, t)) for t in found]
        header = ",".join(f"a{i}" for i in range(1, args.size + 1))
        _emit([header] + rows, args)
    else:
        _emit((_dumps(tuple_record(S, args.size, args.max, t)) for t in found), args)
    return EXIT_OK


def verify_record(record: dict, default_primes=None) -> dict:
    """Annotate one {"tuple": [...], "s": [...]} record with the full quadruple analysis."""
    out = dict(record)
    try:
        q = record.get("tuple")
        primes = record.get("s", default_primes)
        if primes is None:
            raise ValueError("record has no prime list and no --primes default")
        S = new_prime_set(primes)
        if not isinstance(q, list) or not all(isinstance(x, int) for x in q):
            raise ValueError("tuple must be a list of integers")
        sx = sextuple_of(q, S)
    except (ValueError, TypeError, AttributeError, SDiophError) as e:
        out["error"] = str(e)
        out["verified"] = False
        return out
    smooth = is_s_diophantine(q, S)
    system_ok = check_system(sx)
    product = check_product_identities(sx)
    recovered = recover_quadruple(sx)
    out["sextuple"] = sx.to_json()
    out["s_diophantine"] = smooth
    if not smooth:
        out["non_smooth"] = [
            {"value": v, "s_free_part": factor_over(v, S)[1]} for v in sx.s if factor_over(v, S)[1] != 1
        ]
    out["system"] = system_ok
    out["product"] = product
    out["abcd"] = q[0] * q[1] * q[2] * q[3]
    if system_ok:
        report = find_vanishing_subsums(solution_vector(sx))
        out["vanishing_subsets"] = [list(s) for s in report.vanishing_subsets]
        out["classification"] = classify_degenerate(sx).value
        out["positivity_witness"] = positivity_witness(sx)
    out["recovered"] = list(recovered) if recovered else None
    out["round_trip"] = recovered == tuple(q)
    out["verified"] = bool(smooth and system_ok and product == out["abcd"] and out["round_trip"])
    return out


def _read_records(args):
    if args.tuple is not None:
        yield {"tuple": args.tuple, "s": args.primes}
        return
    stream = open(args.input) if args.input and args.input != "-" else sys.stdin
    try:
        for n, line in enumerate(stream, start=1):
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
                if not isinstance(rec, dict):
                    raise ValueError("record is not a JSON object")
            except ValueError as e:
                yield {"line": n, "error": f"malformed record: {e}"}
                continue
            yield rec
    finally:
        if stream is not sys.stdin:
            stream.close()


def cmd_verify(args) -> int:
    if args.format == "csv":
        raise UsageError("verify only writes json-lines")
    results = []
    for rec in _read_records(args):
        if "error" in rec and "tuple" not in rec:
            results.append({**rec, "verified": False})
        else:
            results.append(verify_record(rec, args.primes))
    _emit((_dumps(r) for r in results), args)
    return EXIT_OK if results and all(r["verified"] for r in results) else EXIT_VERIFY


def cmd_bounds(args) -> int:
    _require(args, "rank")
    if args.format == "csv":
        raise UsageError("bounds only writes json-lines")
    if args.rank < 1:
        raise UsageError("--rank must be >= 1")
    report = bound_report(args.rank, r_max=args.r_max, digit_budget=args.digit_budget)
    if args.special:
        report["selected"] = "theorem_special"
    if args.no_exact:
        for v in report.values():
            if isinstance(v, dict) and "exact" in v:
                v["exact"] = None
    _emit([_dumps(report)], args)
    return EXIT_OK


def cmd_solve(args) -> int:
    if args.format == "csv":
        raise UsageError("solve only writes json-lines")
    mode = args.mode
    if mode == "catalan":
        _require(args, "p", "max_exp")
        try:
            sols = catalan_scan(args.p, args.max_exp, args.partitions)
        except ValueError as e:
            raise UsageError(str(e))
        lines = [_dumps({"p": s.p, "x": s.x, "y": s.y, "sign": s.sign}) for s in sols]
        lines.append(_dumps({"summary": {"total": len(sols)}}))
    elif mode == "eq4":
        _require(args, "p", "max_exp")
        try:
            sols = equation4_scan(args.p, args.max_exp)
        except ValueError as e:
            raise UsageError(str(e))
        keys = ("a6", "b6", "a5", "b5", "a2", "b2")
        lines = [_dumps({"p": args.p, **dict(zip(keys, s))}) for s in sols]
        lines.append(_dumps({"summary": {"total": len(sols)}}))
    elif mode == "homogeneous":
        _require(args, "primes", "signs", "height")
        S = _prime_set(args.primes)
        try:
            sols = solve_homogeneous_projective(len(args.signs), args.signs, S, args.height, args.budget)
        except ValueError as e:
            raise UsageError(str(e))
        lines = [_dumps(s.to_json()) for s in sols]
        nondeg = sum(not s.degenerate for s in sols)
        lines.append(_dumps({"summary": {"total": len(sols), "nondegenerate": nondeg}}))
    else:
        _require(args, "primes", "coeffs", "height")
        S = _prime_set(args.primes)
        try:
            eq = UnitEquation(tuple(args.coeffs), S)
        except ValueError as e:
            raise UsageError(str(e))
        if args.height < 0:
            raise UsageError("--height must be >= 0")
        records = solve_affine(eq, args.height, args.budget, args.partitions)
        lines = [_dumps(r.to_json()) for r in records]
        nondeg = [r for r in records if not r.degenerate]
        lines.append(_dumps({"summary": {
            "total": len(records),
            "nondegenerate": len(nondeg),
            "nondegenerate_positive": sum(all(x.sign == 1 for x in r.values) for r in nondeg),
        }}))
    _emit(lines, args)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json-lines", "csv"), default=None)
    common.add_argument("--output", "-o", default=None, help="write here instead of stdout")
    common.add_argument("--config", default=None, help="JSON file with option defaults; flags win")
    common.add_argument("--partitions", type=int, default=None)
    common.add_argument("--budget", type=int, default=None,
                        help="grid/candidate ceiling (default: $SDIOPH_BUDGET or 1e9)")

    parser = argparse.ArgumentParser(prog="sdioph", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("search", parents=[common], help="find S-Diophantine m-tuples up to N")
    p.add_argument("--primes", type=_int_list)
    p.add_argument("--max", type=int, help="largest allowed element N")
    p.add_argument("--size", type=int, help="tuple size m")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("verify", parents=[common], help="analyse quadruple records (JSON lines)")
    p.add_argument("--input", "-i", default=None, help="JSON-lines file, '-' or omitted for stdin")
    p.add_argument("--primes", type=_int_list, help="default prime list for records without 's'")
    p.add_argument("--tuple", type=_int_list, help="verify a single quadruple instead of reading records")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", parents=[common], help="evaluate the bound calculus for rank r")
    p.add_argument("--rank", type=int)
    p.add_argument("--special", action="store_true", help="select A(5,r)A(3,r) (r = 2 or 2 not in S)")
    p.add_argument("--r-max", type=int, default=10, help="range for the corollary fit")
    p.add_argument("--digit-budget", type=int, default=DEFAULT_DIGIT_BUDGET)
    p.add_argument("--no-exact", action="store_true", help="omit exact decimal expansions")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser(
        "solve", parents=[common],
        help="exhaustive S-unit solving in a height window",
        description="Affine mode scans x1..x_{n-1} over signed S-units with every exponent in "
                    "[-H, H] and solves for xn: (2 (2H+1)^r)^(n-1) grid points, checked "
                    "against the budget.",
    )
    p.add_argument("--mode", choices=("affine", "homogeneous", "catalan", "eq4"), default=None)
    p.add_argument("--primes", type=_int_list)
    p.add_argument("--coeffs", type=_fraction_list, help="a1,...,an for a1 x1 + ... + an xn = 1")
    p.add_argument("--signs", type=_sign_list, help="homogeneous sign pattern, e.g. +,-,-,-,+,+")
    p.add_argument("--height", type=int)
    p.add_argument("--p", type=int, help="odd prime for catalan/eq4 scans")
    p.add_argument("--max-exp", type=int)
    p.set_defaults(func=cmd_solve)
    return parser


_DEFAULTS = {"format": "json-lines", "partitions": 1, "mode": "affine"}
_CONVERTERS = {"primes": _int_list, "coeffs": _fraction_list, "signs": _sign_list, "tuple": _int_list}


def _apply_config(args) -> None:
    if args.config:
        with open(args.config) as fh:
            cfg = json.load(fh)
        if not isinstance(cfg, dict):
            raise UsageError("config file must hold a JSON object")
        for key, value in cfg.items():
            key = key.replace("-", "_")
            if not hasattr(args, key) or getattr(args, key) is not None:
                continue
            if key in _CONVERTERS and isinstance(value, str):
                value = _CONVERTERS[key](value)
            elif key == "coeffs":
                value = [Fraction(v) for v in value]
            setattr(args, key, value)
    for key, value in _DEFAULTS.items():
        if getattr(args, key, None) is None:
            setattr(args, key, value)
    if args.partitions < 1:
        raise UsageError("--partitions must be >= 1")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        _apply_config(args)
        return args.func(args)
    except UsageError as e:
        print(f"sdioph {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as e:
        print(f"sdioph {args.command}: budget exceeded: {e}", file=sys.stderr)
        return EXIT_BUDGET
    except (OSError, json.JSONDecodeError, argparse.ArgumentTypeError) as e:
        print(f"sdioph {args.command}: error: {e}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
