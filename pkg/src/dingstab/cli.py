"""Command-line interface: classify, theta, ding/jnorm, table.

All rationals are printed in the reduced p/q contract and field order is
fixed, so output is byte-identical across runs and suitable for golden
files.  Exit codes: 0 success, 2 malformed input (files, piece specs,
missing datasets), 3 non-Fano input without --orbifold, 4 table mismatch
under --diff.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .catalog import (
    DimensionMismatch,
    MissingDataset,
    NotReflexive,
    ParseError,
    load_polytope,
    parse_polytope,
    reproduce_table,
)
from .functions import PLConvexFunction
from .linalg import format_rational, parse_rational
from .moments import moment_data
from .polytope import DegeneratePolytope, VPolytope
from .stability import NotFano, classify, reduced_j_norm, relative_ding_invariant

_INPUT_ERRORS = (
    ParseError,
    DimensionMismatch,
    NotReflexive,
    DegeneratePolytope,
    MissingDataset,
    OSError,
    ValueError,
)


def _load(path: str) -> VPolytope:
    return load_polytope(parse_polytope(Path(path).read_text()))


def _fmt_vec(v) -> str:
    return " ".join(format_rational(x) for x in v)


def _classify_lines(report) -> list[str]:
    lines = [
        f"theta_a {_fmt_vec(report.theta.a)}",
        f"theta_c {format_rational(report.theta.c)}",
        f"mabuchi {format_rational(report.mabuchi)}",
        f"witness {_fmt_vec(report.witness_vertex)}",
        f"verdict {report.verdict.value}",
    ]
    if report.destabilizer is not None:
        for piece in report.destabilizer.pieces:
            lines.append(f"destabilizer_piece {_fmt_vec(piece.a)} {format_rational(piece.c)}")
    return lines


def cmd_classify(args) -> int:
    try:
        polytope = _load(args.file)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report = classify(polytope, orbifold=args.orbifold)
    except NotFano as exc:
        print(f"error: {exc} (use --orbifold for reflexive non-Delzant input)",
              file=sys.stderr)
        return 3
    if args.format == "text":
        print("\n".join(_classify_lines(report)))
    elif args.format == "tsv":
        print("\t".join([
            Path(args.file).stem,
            format_rational(report.mabuchi),
            report.verdict.value,
        ]))
    else:
        payload = {
            "theta_a": [format_rational(x) for x in report.theta.a],
            "theta_c": format_rational(report.theta.c),
            "mabuchi": format_rational(report.mabuchi),
            "witness": [format_rational(x) for x in report.witness_vertex],
            "verdict": report.verdict.value,
        }
        if report.destabilizer is not None:
            payload["destabilizer"] = [
                [format_rational(x) for x in piece.a] + [format_rational(piece.c)]
                for piece in report.destabilizer.pieces
            ]
        print(json.dumps(payload, sort_keys=False))
    return 0


def cmd_theta(args) -> int:
    try:
        polytope = _load(args.file)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        report = classify(polytope, orbifold=args.orbifold)
    except NotFano as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    md = moment_data(polytope)
    print(f"vol {format_rational(md.vol)}")
    for i, value in enumerate(md.m1, start=1):
        print(f"m1[{i}] {format_rational(value)}")
    for i in range(polytope.dim):
        for j in range(i, polytope.dim):
            print(f"m2[{i + 1}][{j + 1}] {format_rational(md.m2[i][j])}")
    print(f"a {_fmt_vec(report.theta.a)}")
    print(f"c {format_rational(report.theta.c)}")
    return 0


def _parse_piece_spec(spec: str, dim: int) -> PLConvexFunction:
    pieces = []
    for chunk in spec.split(";"):
        tokens = [t.strip() for t in chunk.split(",")]
        if len(tokens) != dim + 1:
            raise ValueError(
                f"piece {chunk!r} has {len(tokens)} entries, needs {dim + 1}"
            )
        values = [parse_rational(t) for t in tokens]
        pieces.append((tuple(values[:dim]), values[dim]))
    return PLConvexFunction.of(pieces)


def cmd_ding(args) -> int:
    try:
        polytope = _load(args.file)
        f = _parse_piece_spec(args.pl, polytope.dim)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(f"I_theta {format_rational(relative_ding_invariant(polytope, f))}")
    print(f"jnorm {format_rational(reduced_j_norm(polytope, f))}")
    return 0


def cmd_table(args) -> int:
    try:
        rows, diff = reproduce_table(args.dim)
    except _INPUT_ERRORS as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for row in rows:
        print(f"{row.id}\t{format_rational(row.mabuchi)}\t{row.verdict.value}")
    if args.diff:
        for entry_id in diff.missing_expectations:
            print(f"missing expectation: {entry_id}", file=sys.stderr)
        for entry_id, got, want in diff.mismatches:
            print(f"mismatch {entry_id}: got {got}, expected {want}", file=sys.stderr)
        if not diff.clean:
            return 4
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dingstab",
        description="Uniform relative Ding stability of toric Fano polytopes, "
        "in exact rational arithmetic.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_classify = sub.add_parser("classify", help="stability verdict for one polytope file")
    p_classify.add_argument("file")
    p_classify.add_argument("--orbifold", action="store_true",
                            help="accept reflexive non-Delzant input")
    p_classify.add_argument("--format", choices=("text", "tsv", "json-like"),
                            default="text")
    p_classify.set_defaults(func=cmd_classify)

    p_theta = sub.add_parser("theta", help="moment data and extremal affine function")
    p_theta.add_argument("file")
    p_theta.add_argument("--orbifold", action="store_true")
    p_theta.set_defaults(func=cmd_theta)

    for name in ("ding", "jnorm"):
        p_ding = sub.add_parser(
            name, help="relative Ding invariant and reduced J-norm of a PL function"
        )
        p_ding.add_argument("file")
        p_ding.add_argument(
            "--pl", required=True,
            help="pieces as 'a1,...,an,c;a1,...,an,c;...' (max of affine pieces)",
        )
        p_ding.set_defaults(func=cmd_ding)

    p_table = sub.add_parser("table", help="reproduce a classification table")
    p_table.add_argument("--dim", type=int, choices=(2, 3, 4), required=True)
    p_table.add_argument("--diff", action="store_true",
                         help="compare against expected.tsv, exit 4 on mismatch")
    p_table.set_defaults(func=cmd_table)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    raise SystemExit(main())
