"""JSON codecs for the package's value types.

Rationals are strings ``"p/q"`` or ``"p"``; a cyclotomic number is the list
of its q canonical coefficients.  Key order is fixed so output is stable.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .colorings import Coloring, ColoringVerdict, MatrixPower, ParameterMatrix, SpectralData
from .eigen import IdentityVerdict
from .exact import Cyclotomic, HomoPoly
from .fourier import FunctionTable, SpectrumTable
from .hamming import FaceSpec, SpaceParams, check_vertex


def dumps(obj: Any) -> str:
    return json.dumps(obj, ensure_ascii=False) + "\n"


def rational_str(x: Fraction) -> str:
    return str(Fraction(x))


def parse_rational(s: Any) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ValueError(f"expected a rational string, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rational {s!r}") from exc


def cyc_to_json(c: Cyclotomic) -> list[str]:
    return [rational_str(x) for x in c.coeffs]


def cyc_from_json(data: Any, q: int) -> Cyclotomic:
    if not isinstance(data, list) or len(data) != q:
        raise ValueError(f"a cyclotomic number needs a list of {q} rationals, got {data!r}")
    return Cyclotomic(q, [parse_rational(x) for x in data])


def _value_to_json(c: Cyclotomic):
    return rational_str(c.coeffs[0]) if c.is_rational() else cyc_to_json(c)


def _value_from_json(data: Any, q: int) -> Cyclotomic:
    if isinstance(data, list):
        return cyc_from_json(data, q)
    return Cyclotomic.rational(q, parse_rational(data))


def _params(data: dict) -> SpaceParams:
    if not isinstance(data, dict):
        raise ValueError("expected a JSON object")
    try:
        return SpaceParams(int(data["q"]), int(data["n"]))
    except KeyError as exc:
        raise ValueError(f"missing field {exc}") from exc


def function_table_to_json(f: FunctionTable) -> dict:
    p = f.params
    return {"q": p.q, "n": p.n, "values": [_value_to_json(v) for v in f.values]}


def function_table_from_json(data: dict) -> FunctionTable:
    p = _params(data)
    values = data.get("values")
    if not isinstance(values, list):
        raise ValueError("missing list field 'values'")
    return FunctionTable(p, tuple(_value_from_json(v, p.q) for v in values))


def spectrum_table_to_json(s: SpectrumTable) -> dict:
    p = s.params
    return {"q": p.q, "n": p.n, "values": [cyc_to_json(v) for v in s.values]}


def spectrum_table_from_json(data: dict) -> SpectrumTable:
    p = _params(data)
    values = data.get("values")
    if not isinstance(values, list):
        raise ValueError("missing list field 'values'")
    return SpectrumTable(p, tuple(_value_from_json(v, p.q) for v in values))


def homopoly_to_json(g: HomoPoly) -> dict:
    return {"degree": g.degree, "coeffs": [cyc_to_json(c) for c in g.coeffs]}


def homopoly_from_json(data: dict, q: int) -> HomoPoly:
    coeffs = [cyc_from_json(c, q) for c in data["coeffs"]]
    if len(coeffs) != data["degree"] + 1:
        raise ValueError("degree does not match the coefficient count")
    return HomoPoly(q, coeffs)


def coloring_to_json(c: Coloring) -> dict:
    return {"q": c.params.q, "n": c.params.n, "r": c.r, "colors": list(c.colors)}


def coloring_from_json(data: dict) -> Coloring:
    p = _params(data)
    colors = data.get("colors")
    if not isinstance(colors, list):
        raise ValueError("missing list field 'colors'")
    r = data.get("r", max(colors) + 1 if colors else 0)
    return Coloring(p, int(r), tuple(colors))


def parameter_matrix_to_json(s: ParameterMatrix) -> dict:
    return {"r": s.r, "rows": [list(r) for r in s.rows]}


def parameter_matrix_from_json(data: Any) -> ParameterMatrix:
    rows = data["rows"] if isinstance(data, dict) else data
    if not isinstance(rows, list):
        raise ValueError("a parameter matrix is a list of rows or {'r':..., 'rows':...}")
    s = ParameterMatrix(tuple(tuple(r) for r in rows))
    if isinstance(data, dict) and "r" in data and data["r"] != s.r:
        raise ValueError("field 'r' does not match the number of rows")
    return s


def spectral_to_json(sd: SpectralData) -> dict:
    return {"mu": list(sd.mu), "h": list(sd.h), "T": [[rational_str(x) for x in row] for row in sd.T.entries]}


def verdict_to_json(v: IdentityVerdict) -> dict:
    return {
        "holds": v.holds,
        "lhs": homopoly_to_json(v.lhs),
        "rhs": homopoly_to_json(v.rhs),
        "clearing": list(v.clearing),
    }


def coloring_verdict_to_json(v: ColoringVerdict) -> dict:
    return {
        "holds": v.holds,
        "mu": list(v.mu),
        "h": list(v.h),
        "columns": [verdict_to_json(c) for c in v.columns],
    }


def matrix_power_to_json(mp: MatrixPower) -> dict:
    return {
        "k": mp.k,
        "d": mp.d,
        "base": "x+(q-1)y",
        "P": [[[rational_str(c) for c in z.coeffs] for z in row] for row in mp.P],
    }


def face_to_json(face: FaceSpec) -> dict:
    return {"I": list(face.free_set), "alpha": list(face.anchor)}


def parse_face(text: str, p: SpaceParams) -> FaceSpec:
    """Parse ``"I=1,3;alpha=0120"``; ``alpha`` defaults to the zero vertex.

    ``alpha`` is n digits, or comma separated when q > 10.
    """
    free: tuple[int, ...] | None = None
    alpha = p.zero()
    for part in text.split(";"):
        part = part.strip()
        if not part:
            continue
        key, sep, val = part.partition("=")
        key, val = key.strip(), val.strip()
        if not sep:
            raise ValueError(f"bad face component {part!r}")
        if key == "I":
            try:
                free = tuple(int(x) for x in val.split(",") if x.strip())
            except ValueError as exc:
                raise ValueError(f"bad index set {val!r}") from exc
        elif key == "alpha":
            digits = val.split(",") if "," in val else list(val)
            try:
                alpha = check_vertex([int(d) for d in digits], p)
            except ValueError as exc:
                raise ValueError(f"bad anchor {val!r}: {exc}") from exc
        else:
            raise ValueError(f"unknown face key {key!r}")
    if free is None:
        raise ValueError("face needs I=...")
    return FaceSpec(alpha, free).validate(p)
