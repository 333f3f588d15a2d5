"""Built-in perfect colorings used as a test corpus."""

from __future__ import annotations

import itertools
from typing import Sequence

from ..hamming import SpaceParams, check_vertex, inner, weight
from .core import Coloring, parameter_matrix_of

FIXTURES = ("all_one_color", "coordinate", "parity", "linear_form", "hamming_code_distance")


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % d for d in range(2, int(q**0.5) + 1))


def projective_points(q: int, m: int) -> list[tuple[int, ...]]:
    """Nonzero vectors of F_q^m whose first nonzero entry is 1."""
    pts = []
    for v in itertools.product(range(q), repeat=m):
        nz = next((x for x in v if x), None)
        if nz == 1:
            pts.append(v)
    return pts


def hamming_code(q: int, m: int) -> tuple[SpaceParams, set[tuple[int, ...]]]:
    """The q-ary Hamming code of length (q^m - 1)/(q - 1) as a set of codewords."""
    if not _is_prime(q):
        raise ValueError(f"the Hamming code fixture needs prime q, got {q}")
    if m < 1:
        raise ValueError("m must be >= 1")
    cols = projective_points(q, m)
    p = SpaceParams(q, len(cols))
    rows = list(zip(*cols))  # parity-check matrix, m x n
    code = {v for v in p.vertices() if all(inner(row, v, q) == 0 for row in rows)}
    return p, code


def builtin_fixture(
    name: str,
    q: int,
    n: int | None = None,
    *,
    c: Sequence[int] | None = None,
    m: int | None = None,
) -> Coloring:
    if name == "hamming_code_distance":
        if m is None:
            raise ValueError("hamming_code_distance needs m")
        p, code = hamming_code(q, m)
        if n is not None and n != p.n:
            raise ValueError(f"Hamming code with q={q}, m={m} has length {p.n}, not {n}")
        colors = [0 if v in code else 1 for v in p.vertices()]
        coloring = Coloring(p, 2, tuple(colors))
    else:
        if n is None:
            raise ValueError(f"fixture {name!r} needs n")
        p = SpaceParams(q, n)
        if name == "all_one_color":
            coloring = Coloring(p, 1, (0,) * p.size)
        elif name == "coordinate":
            coloring = Coloring(p, q, tuple(v[0] for v in p.vertices()))
        elif name == "parity":
            if q != 2:
                raise ValueError("the parity fixture is defined for q=2 only")
            coloring = Coloring(p, 2, tuple(weight(v) % 2 for v in p.vertices()))
        elif name == "linear_form":
            if c is None:
                raise ValueError("linear_form needs a coefficient vertex c")
            cv = check_vertex(c, p)
            colors = tuple(inner(cv, v, q) for v in p.vertices())
            if len(set(colors)) != q:
                raise ValueError(f"the form <{cv}, .> mod {q} does not take every value")
            coloring = Coloring(p, q, colors)
        else:
            raise ValueError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    parameter_matrix_of(coloring)  # raises if not perfect
    return coloring
