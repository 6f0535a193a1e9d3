"""Command-line front end.

Commands: flag, hvec, toric (evaluate one expression or word), table
(all CD-words up to a dimension), basis (word flag vectors of one
degree), verify (the invariant suites).  JSON output is one record per
line with the fixed field order input/dim/flag/h/toric; all numbers are
exact integers.

Exit codes: 0 ok, 1 verify failure, 2 parse/usage error, 3 face-count
cap exceeded, 4 input outside the CD span.
"""

from __future__ import annotations

import argparse
import json
import sys

from .cdwords import cd_words, to_cd_basis, word_flag
from .errors import ExprParseError, FaceCountLimitError, NotInCDSpanError
from .flagvec import dim_subsets
from .hvector import h_of_cdvector, h_of_word, toric_h_of_word, toric_of_cdvector
from .lattice import (
    DEFAULT_FACE_CAP,
    Expr,
    Prod,
    eval_flag,
    face_count_bound,
    is_buildable,
    parse_expr,
)
from .verify import run_all

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_PARSE = 2
EXIT_RESOURCE = 3
EXIT_SPAN = 4


def format_dimset(S) -> str:
    return "{" + ",".join(map(str, S)) + "}"


def _check_products(e: Expr):
    if isinstance(e, Prod):
        if not is_buildable(e):
            raise ExprParseError("prod arguments must be buildable (no D operator)")
        return
    for name in ("body", "left", "right"):
        child = getattr(e, name, None)
        if child is not None:
            _check_products(child)


def _parse_input(text: str) -> Expr:
    expr = parse_expr(text)
    _check_products(expr)
    bound = face_count_bound(expr)
    if bound > DEFAULT_FACE_CAP:
        raise FaceCountLimitError(
            f"{text!r} needs about {bound} faces, over the cap of {DEFAULT_FACE_CAP}"
        )
    return expr


def full_record(input_str: str, expr: Expr) -> dict:
    flag = eval_flag(expr)
    cd = to_cd_basis(flag)
    h = h_of_cdvector(cd)
    toric = toric_of_cdvector(cd)
    return {
        "input": input_str,
        "dim": flag.dim,
        "flag": [[list(S), flag.get(S)] for S in dim_subsets(flag.dim)],
        "h": [[str(key), list(poly.coeffs)] for key, poly in h.items()],
        "toric": list(toric.coeffs),
    }


def word_record(w: str) -> dict:
    flag = word_flag(w)
    h = h_of_word(w)
    toric = toric_h_of_word(w)
    return {
        "input": f"{w}(pt)" if w else "pt",
        "dim": flag.dim,
        "flag": [[list(S), flag.get(S)] for S in dim_subsets(flag.dim)],
        "h": [[str(key), list(poly.coeffs)] for key, poly in h.items()],
        "toric": list(toric.coeffs),
    }


def _dump(record: dict) -> str:
    return json.dumps(record, separators=(",", ":"))


def _print_flag_text(expr: Expr, out):
    flag = eval_flag(expr)
    for S in dim_subsets(flag.dim):
        out.write(f"{format_dimset(S)}: {flag.get(S)}\n")


def _print_hvec_text(expr: Expr, out):
    h = h_of_cdvector(to_cd_basis(eval_flag(expr)))
    out.write(f"{h}\n")


def _print_toric_text(expr: Expr, out):
    toric = toric_of_cdvector(to_cd_basis(eval_flag(expr)))
    out.write(f"{toric.bracket()}\n")


def cmd_single(args, printer) -> int:
    expr = _parse_input(args.input)
    if args.format == "json":
        sys.stdout.write(_dump(full_record(args.input, expr)) + "\n")
    else:
        printer(expr, sys.stdout)
    return EXIT_OK


def cmd_table(args) -> int:
    out = sys.stdout
    for degree in range(args.max_dim + 1):
        for w in cd_words(degree):
            record = word_record(w)
            if args.format == "json":
                out.write(_dump(record) + "\n")
            else:
                out.write(f"input: {record['input']}\n")
                out.write(f"dim: {record['dim']}\n")
                out.write(
                    "flag: "
                    + "  ".join(f"{format_dimset(S)}: {v}" for S, v in record["flag"])
                    + "\n"
                )
                out.write(
                    "h: "
                    + "  ".join(
                        f"{key}: [{','.join(map(str, coeffs))}]"
                        for key, coeffs in record["h"]
                    )
                    + "\n"
                )
                out.write(f"toric: [{','.join(map(str, record['toric']))}]\n\n")
    return EXIT_OK


def cmd_basis(args) -> int:
    d = args.degree
    words = cd_words(d)
    cols = dim_subsets(d)
    matrix = [[word_flag(w).get(S) for S in cols] for w in words]
    if args.format == "json":
        payload = {
            "degree": d,
            "dimsets": [list(S) for S in cols],
            "words": [w if w else "pt" for w in words],
            "matrix": matrix,
        }
        sys.stdout.write(_dump(payload) + "\n")
    else:
        sys.stdout.write("dimsets: " + " ".join(format_dimset(S) for S in cols) + "\n")
        for w, row in zip(words, matrix):
            sys.stdout.write(f"{w if w else 'pt'}: " + " ".join(map(str, row)) + "\n")
    return EXIT_OK


def cmd_verify(args) -> int:
    failed = False
    for name, counterexample in run_all(args.max_dim):
        if counterexample is None:
            sys.stdout.write(f"PASS {name}\n")
        else:
            failed = True
            sys.stdout.write(f"FAIL {name}: {counterexample}\n")
    return EXIT_VERIFY if failed else EXIT_OK


def _bounded_int(low: int, high: int):
    def parse(text: str) -> int:
        value = int(text)
        if not low <= value <= high:
            raise argparse.ArgumentTypeError(f"must be in {low}..{high}")
        return value

    return parse


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polyhvec",
        description="Exact flag vectors and complete keyed h-vectors of polytopes.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument(
            "--format", choices=("text", "json"), default="text", help="output format"
        )

    p = sub.add_parser("flag", help="flag vector of an expression or word")
    p.add_argument("input")
    add_format(p)
    p.set_defaults(run=lambda a: cmd_single(a, _print_flag_text))

    p = sub.add_parser("hvec", help="keyed h-vector of an expression or word")
    p.add_argument("input")
    add_format(p)
    p.set_defaults(run=lambda a: cmd_single(a, _print_hvec_text))

    p = sub.add_parser("toric", help="toric h-vector of an expression or word")
    p.add_argument("input")
    add_format(p)
    p.set_defaults(run=lambda a: cmd_single(a, _print_toric_text))

    p = sub.add_parser("table", help="records for all CD-words up to a dimension")
    p.add_argument("--max-dim", type=_bounded_int(0, 10), default=10)
    add_format(p)
    p.set_defaults(run=cmd_table)

    p = sub.add_parser("basis", help="flag vectors of the CD-words of one degree")
    p.add_argument("degree", type=_bounded_int(0, 10))
    add_format(p)
    p.set_defaults(run=cmd_basis)

    p = sub.add_parser("verify", help="run the invariant suites")
    p.add_argument("--max-dim", type=_bounded_int(0, 8), default=6)
    p.set_defaults(run=cmd_verify)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except ExprParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except RecursionError:
        print("parse error: expression nested too deeply", file=sys.stderr)
        return EXIT_PARSE
    except FaceCountLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except NotInCDSpanError as exc:
        print(f"not in CD span: {exc}", file=sys.stderr)
        return EXIT_SPAN


if __name__ == "__main__":
    sys.exit(main())
