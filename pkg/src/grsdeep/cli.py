"""Command-line entry point.

Exit codes: 0 success, 1 domain error, 2 budget exceeded, 3 engine mismatch
(always a bug), 64 usage error.
"""
from __future__ import annotations

import argparse
import csv
import json
import os
import sys

from .code import (
    DEFAULT_BUDGET,
    EvaluationSet,
    GrsCode,
    encode,
    interpolate_word,
)
from .census import CSV_HEADER, run_census
from .deephole import DeepHoleSpec, construct_deep_hole, verify_deep_hole, witness_polynomial
from .distance import ENGINES, NEAREST_CAP, error_distance
from .errors import BudgetExceeded, EngineMismatch, GrsError
from .gf import parse_field
from .poly import NEG_INF, Polynomial

EXIT_OK, EXIT_DOMAIN, EXIT_BUDGET, EXIT_MISMATCH, EXIT_USAGE = 0, 1, 2, 3, 64


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _ints(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _degree(d):
    return None if d == NEG_INF else d


def _eval_set(args) -> EvaluationSet:
    field = parse_field(args.field)
    if args.points is not None:
        if args.exclude:
            raise UsageError("--points and --exclude are mutually exclusive")
        return EvaluationSet.from_points(field, args.points)
    return EvaluationSet.punctured(field, args.exclude or [])


def _code(args) -> GrsCode:
    if args.k is None:
        raise UsageError("--k is required")
    return GrsCode(_eval_set(args), args.k)


def _emit(args, payload: dict, plain) -> None:
    text = str(plain) if args.plain else json.dumps(payload, indent=2)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)


# -- subcommands -------------------------------------------------------------

def cmd_field_info(args):
    F = parse_field(args.field)
    payload = {
        "field": F.spec,
        "p": F.p,
        "m": F.m,
        "q": F.q,
        "modulus": F.modulus_index,
        "modulus_coeffs": list(F.modulus) if F.modulus else None,
        "primitive": F.primitive,
    }
    _emit(args, payload, F.q)


def cmd_interp(args):
    D = _eval_set(args)
    f = interpolate_word(D, args.word)
    _emit(args, {"interpolation": f.to_csv(), "degree": _degree(f.degree)}, f.to_csv())


def cmd_encode(args):
    code = _code(args)
    word = encode(code, Polynomial(code.field, args.message))
    text = ",".join(map(str, word))
    _emit(args, {"word": text}, text)


def cmd_distance(args):
    code = _code(args)
    cert = error_distance(code, args.word, engine=args.engine, budget=args.budget,
                          nearest_cap=args.nearest_cap, workers=args.threads)
    _emit(args, cert.to_dict(), cert.distance)


def cmd_construct(args):
    code = _code(args)
    spec = DeepHoleSpec(code, args.j, args.lam, Polynomial(code.field, args.r))
    word = construct_deep_hole(spec)
    f = interpolate_word(code.eval_set, word)
    text = ",".join(map(str, word))
    _emit(args, {"word": text, "interpolation": f.to_csv(), "degree": _degree(f.degree)}, text)


def cmd_verify(args):
    code = _code(args)
    ok, cert = verify_deep_hole(code, args.word, budget=args.budget,
                                nearest_cap=args.nearest_cap, workers=args.threads)
    _emit(args, {"is_deep_hole": ok, "distance": cert.distance, "certificate": cert.to_dict()},
          "true" if ok else "false")


def cmd_witness(args):
    code = _code(args)
    w = witness_polynomial(code, args.j, args.c)
    _emit(args, w.to_dict(), w.g.to_csv())


def _truncate_csv(path: str, rows: int) -> None:
    with open(path, newline="", encoding="utf-8") as fh:
        kept = list(csv.reader(fh))[:rows + 1]
    with open(path, "w", newline="", encoding="utf-8") as fh:
        csv.writer(fh).writerows(kept)


def cmd_census(args):
    code = _code(args)
    resuming = bool(args.checkpoint and os.path.exists(args.checkpoint))
    csv_fh = writer = None
    if args.csv:
        if resuming and os.path.exists(args.csv):
            with open(args.checkpoint, encoding="utf-8") as fh:
                done = json.load(fh)["records"]
            _truncate_csv(args.csv, done)
            csv_fh = open(args.csv, "a", newline="", encoding="utf-8")
            writer = csv.writer(csv_fh)
        else:
            csv_fh = open(args.csv, "w", newline="", encoding="utf-8")
            writer = csv.writer(csv_fh)
            writer.writerow(CSV_HEADER)

    def on_record(rec):
        if writer:
            writer.writerow(rec.csv_row())
            csv_fh.flush()

    try:
        report = run_census(code, mode=args.mode, engine=args.engine, budget=args.budget,
                            on_record=on_record, checkpoint=args.checkpoint, workers=args.threads)
    finally:
        if csv_fh:
            csv_fh.close()
    data = report.to_dict(timing=args.timing)
    _emit(args, data, data["totals"]["deep_holes"])


def cmd_selftest(args):
    from .selftest import run_selftest

    result = run_selftest(seed=args.seed)
    _emit(args, result, "ok" if result["passed"] else "FAILED")
    if not result["passed"]:
        raise EngineMismatch("self-test failed")


# -- parser ----------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--plain", action="store_true", help="print a single value instead of JSON")
    common.add_argument("--out", help="write output to this file")

    fieldp = _Parser(add_help=False)
    fieldp.add_argument("--field", required=True, help='field spec: "p", "p^m" or "p^m/modulus-index"')

    codep = _Parser(add_help=False, parents=[fieldp])
    codep.add_argument("--exclude", type=_ints, default=[], help="excluded points a_1,...,a_l")
    codep.add_argument("--points", type=_ints, help="explicit evaluation points instead of --exclude")
    codep.add_argument("--k", type=int, help="code dimension")

    search = _Parser(add_help=False)
    search.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    search.add_argument("--nearest-cap", type=int, default=NEAREST_CAP)
    search.add_argument("--threads", type=int, default=1)

    parser = _Parser(prog="grsdeep", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("field-info", parents=[common, fieldp], help="describe a finite field")
    p.set_defaults(func=cmd_field_info)

    p = sub.add_parser("interp", parents=[common, codep], help="interpolate a word on D")
    p.add_argument("--word", type=_ints, required=True)
    p.set_defaults(func=cmd_interp)

    p = sub.add_parser("encode", parents=[common, codep], help="encode a message polynomial")
    p.add_argument("--message", type=_ints, required=True, help="coefficients, low degree first")
    p.set_defaults(func=cmd_encode)

    p = sub.add_parser("distance", parents=[common, codep, search], help="exact error distance")
    p.add_argument("--word", type=_ints, required=True)
    p.add_argument("--engine", choices=ENGINES, default="auto")
    p.set_defaults(func=cmd_distance)

    dh = sub.add_parser("deephole", help="deep-hole construction and checks")
    dsub = dh.add_subparsers(dest="action", required=True, parser_class=_Parser)

    p = dsub.add_parser("construct", parents=[common, codep], help="build lambda*(x-a_j)^(q-2) + r on D")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("--r", type=_ints, default=[], help="coefficients of r, low degree first")
    p.set_defaults(func=cmd_construct)

    p = dsub.add_parser("verify", parents=[common, codep, search], help="cross-checked deep-hole test")
    p.add_argument("--word", type=_ints, required=True)
    p.set_defaults(func=cmd_verify)

    p = dsub.add_parser("witness", parents=[common, codep], help="agreement witness polynomial")
    p.add_argument("--j", type=int, required=True)
    p.add_argument("--c", type=_ints, help="k distinct elements (default: smallest eligible)")
    p.set_defaults(func=cmd_witness)

    p = sub.add_parser("census", parents=[common, codep, search], help="classify every word of a code")
    p.add_argument("--mode", choices=("orbits", "full"), default="orbits")
    p.add_argument("--engine", choices=ENGINES, default=None)
    p.add_argument("--csv", help="per-orbit CSV output")
    p.add_argument("--checkpoint", help="resumable checkpoint file")
    p.add_argument("--timing", action="store_true", help="include wall-clock runtime in the report")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("selftest", parents=[common], help="run the invariant suite on small fields")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"grsdeep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except EngineMismatch as exc:
        print(f"grsdeep: internal mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except BudgetExceeded as exc:
        print(f"grsdeep: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except GrsError as exc:
        print(f"grsdeep: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
