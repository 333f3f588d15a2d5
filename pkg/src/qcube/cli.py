"""Command-line front end.  Every subcommand reads JSON and prints JSON.

Exit codes: 0 success or identity holds, 1 identity/verification fails,
2 malformed input, 3 internal error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import serialize as ser
from .colorings import (
    builtin_fixture,
    local_distribution_matrix,
    matrix_enumerator_power,
    parameter_matrix_of,
    search_colorings,
    spectral_decompose,
    theorem2_identity_check,
    vector_enumerator,
    verify_perfect,
)
from .eigen import eigenvalue_number, is_eigenfunction, theorem1_identity_check
from .enumerators import local_distribution, local_weight_enumerator
from .errors import NotAnEigenvalue, QcubeError
from .fourier import (
    eigenspace_project,
    fourier_forward,
    fourier_forward_fast,
    fourier_inverse,
    fourier_inverse_naive,
)
from .hamming import SpaceParams

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc


def _inline_or_file(value: str):
    """A JSON literal given on the command line, or a path to a JSON file."""
    if value.lstrip().startswith(("[", "{")):
        try:
            return json.loads(value)
        except json.JSONDecodeError as exc:
            raise InputError(f"invalid inline JSON: {exc.msg}") from exc
    return _load(value)


def _emit(obj) -> None:
    sys.stdout.write(ser.dumps(obj))


def cmd_ft(args) -> int:
    data = _load(args.input)
    if args.inverse:
        spec = ser.spectrum_table_from_json(data)
        f = fourier_inverse(spec) if args.fast else fourier_inverse_naive(spec)
        _emit(ser.function_table_to_json(f))
    else:
        f = ser.function_table_from_json(data)
        spec = fourier_forward_fast(f) if args.fast else fourier_forward(f)
        _emit(ser.spectrum_table_to_json(spec))
    return EXIT_OK


def cmd_project(args) -> int:
    f = ser.function_table_from_json(_load(args.input))
    _emit(ser.function_table_to_json(eigenspace_project(f, args.h)))
    return EXIT_OK


def cmd_enum(args) -> int:
    f = ser.function_table_from_json(_load(args.input))
    face = ser.parse_face(args.face, f.params)
    dist = local_distribution(f, face)
    g = local_weight_enumerator(f, face)
    _emit(
        {
            "face": ser.face_to_json(face),
            "distribution": [ser.cyc_to_json(c) for c in dist.entries],
            "enumerator": ser.homopoly_to_json(g),
            "text": g.text(),
        }
    )
    return EXIT_OK


def cmd_enum_coloring(args) -> int:
    c = ser.coloring_from_json(_load(args.input))
    face = ser.parse_face(args.face, c.params)
    ldm = local_distribution_matrix(c, face)
    gs = vector_enumerator(c, face)
    _emit(
        {
            "face": ser.face_to_json(face),
            "matrix": [list(r) for r in ldm.rows],
            "enumerators": [ser.homopoly_to_json(g) for g in gs],
            "text": [g.text() for g in gs],
        }
    )
    return EXIT_OK


def cmd_verify_eigen(args) -> int:
    f = ser.function_table_from_json(_load(args.input))
    try:
        h = eigenvalue_number(args.lam, f.params)
    except NotAnEigenvalue:
        h = None
    holds = is_eigenfunction(f, args.lam)
    _emit({"lambda": args.lam, "h": h, "holds": holds})
    return EXIT_OK if holds else EXIT_FAIL


def cmd_params(args) -> int:
    c = ser.coloring_from_json(_load(args.input))
    _emit(ser.parameter_matrix_to_json(parameter_matrix_of(c)))
    return EXIT_OK


def cmd_verify_coloring(args) -> int:
    c = ser.coloring_from_json(_load(args.input))
    s = ser.parameter_matrix_from_json(_inline_or_file(args.smatrix))
    holds = verify_perfect(c, s)
    _emit({"holds": holds})
    return EXIT_OK if holds else EXIT_FAIL


def cmd_theorem_eig(args) -> int:
    f = ser.function_table_from_json(_load(args.input))
    face = ser.parse_face(args.face, f.params)
    v = theorem1_identity_check(f, args.h, face.free_set, face.anchor, check=not args.no_check)
    _emit(ser.verdict_to_json(v))
    return EXIT_OK if v.holds else EXIT_FAIL


def cmd_theorem_col(args) -> int:
    c = ser.coloring_from_json(_load(args.input))
    face = ser.parse_face(args.face, c.params)
    v = theorem2_identity_check(c, face.free_set, face.anchor)
    _emit(ser.coloring_verdict_to_json(v))
    return EXIT_OK if v.holds else EXIT_FAIL


def _space(args) -> SpaceParams:
    return SpaceParams(args.q, args.n)


def cmd_spectral(args) -> int:
    p = _space(args)
    s = ser.parameter_matrix_from_json(_inline_or_file(args.smatrix))
    _emit(ser.spectral_to_json(spectral_decompose(s, p)))
    return EXIT_OK


def cmd_hpower(args) -> int:
    p = _space(args)
    s = ser.parameter_matrix_from_json(_inline_or_file(args.smatrix))
    _emit(ser.matrix_power_to_json(matrix_enumerator_power(s, args.k, p)))
    return EXIT_OK


def cmd_fixture(args) -> int:
    c = None
    if args.c is not None:
        try:
            c = [int(x) for x in (args.c.split(",") if "," in args.c else args.c)]
        except ValueError as exc:
            raise InputError(f"bad --c {args.c!r}") from exc
    coloring = builtin_fixture(args.name, args.q, args.n, c=c, m=args.m)
    _emit(ser.coloring_to_json(coloring))
    return EXIT_OK


def cmd_search(args) -> int:
    p = _space(args)
    s = ser.parameter_matrix_from_json(_inline_or_file(args.smatrix))
    found = search_colorings(p, s, args.limit, args.fix_first)
    _emit({"count": len(found), "colorings": [ser.coloring_to_json(c) for c in found]})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qcube", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, *, takes_input=True):
        sp = sub.add_parser(name, help=help_text)
        if takes_input:
            sp.add_argument("input", nargs="?", default="-", help="JSON input file (default: stdin)")
        sp.set_defaults(func=func)
        return sp

    def space_args(sp):
        sp.add_argument("--q", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)

    sp = command("ft", cmd_ft, "Fourier transform of a function table")
    sp.add_argument("--inverse", action="store_true", help="input is a spectrum; output the function")
    sp.add_argument("--fast", action="store_true", help="use the coordinate-wise transform")

    sp = command("project", cmd_project, "project onto the λ_h eigenspace")
    sp.add_argument("--h", type=int, required=True)

    sp = command("enum", cmd_enum, "local distribution and weight enumerator of a function")
    sp.add_argument("--face", required=True, help='e.g. "I=1,3;alpha=0120"')

    sp = command("enum-coloring", cmd_enum_coloring, "local distribution matrix of a coloring")
    sp.add_argument("--face", required=True)

    sp = command("verify-eigen", cmd_verify_eigen, "check Df = λf exactly")
    sp.add_argument("--lambda", dest="lam", type=int, required=True)

    command("params", cmd_params, "extract the parameter matrix of a perfect coloring")

    sp = command("verify-coloring", cmd_verify_coloring, "check a coloring against a parameter matrix")
    sp.add_argument("--smatrix", required=True, help="JSON file or inline JSON")

    sp = command("theorem-eig", cmd_theorem_eig, "orthogonal-face identity for an eigenfunction")
    sp.add_argument("--h", type=int, required=True)
    sp.add_argument("--face", required=True)
    sp.add_argument("--no-check", action="store_true", help="skip the eigenfunction precondition")

    sp = command("theorem-col", cmd_theorem_col, "orthogonal-face identity for a perfect coloring")
    sp.add_argument("--face", required=True)

    sp = command("spectral", cmd_spectral, "exact eigendecomposition of a parameter matrix", takes_input=False)
    sp.add_argument("--smatrix", required=True)
    space_args(sp)

    sp = command("hpower", cmd_hpower, "matrix power (x+(q-1)y)^(h(S)-kE)", takes_input=False)
    sp.add_argument("--smatrix", required=True)
    sp.add_argument("--k", type=int, required=True)
    space_args(sp)

    sp = command("fixture", cmd_fixture, "emit a built-in perfect coloring", takes_input=False)
    sp.add_argument("--name", required=True)
    sp.add_argument("--q", type=int, required=True)
    sp.add_argument("--n", type=int)
    sp.add_argument("--c", help="coefficients for linear_form, e.g. 110")
    sp.add_argument("--m", type=int, help="redundancy for hamming_code_distance")

    sp = command("search", cmd_search, "enumerate perfect colorings with a parameter matrix", takes_input=False)
    sp.add_argument("--smatrix", required=True)
    sp.add_argument("--limit", type=int)
    sp.add_argument("--fix-first", action="store_true")
    space_args(sp)

    return parser


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except (InputError, QcubeError, ValueError, KeyError, TypeError) as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"qcube {args.command}: {type(exc).__name__}: {msg}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"qcube {args.command}: internal error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


def main() -> None:
    sys.exit(run())
