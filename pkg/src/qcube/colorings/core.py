"""Perfect colorings (equitable partitions) of H(n, q) and their local enumerators."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from ..eigen import IdentityVerdict, eigenvalue, orthogonal_identity
from ..errors import NotDiagonalizableOverHypercubeSpectrum, NotEquitable
from ..exact import DIFF, SUM, GradedPoly, HomoPoly, RationalMatrix, mat_nullspace
from ..exact.poly import linear_power_coeffs
from ..fourier import FunctionTable
from ..hamming import (
    FaceSpec,
    SpaceParams,
    check_vertex,
    complement,
    distance,
    face_vertices,
    index_of,
    neighbor_indices,
)


@dataclass(frozen=True)
class Coloring:
    params: SpaceParams
    r: int
    colors: tuple[int, ...]

    def __post_init__(self):
        colors = tuple(self.colors)
        object.__setattr__(self, "colors", colors)
        if len(colors) != self.params.size:
            raise ValueError(f"coloring has {len(colors)} entries, expected {self.params.size}")
        if self.r < 1:
            raise ValueError("a coloring needs at least one color")
        if any(not isinstance(c, int) or not 0 <= c < self.r for c in colors):
            raise ValueError(f"colors must be integers in [0, {self.r - 1}]")
        if len(set(colors)) != self.r:
            missing = sorted(set(range(self.r)) - set(colors))
            raise ValueError(f"empty color classes: {missing}")

    @classmethod
    def from_colors(cls, p: SpaceParams, colors: Sequence[int]) -> Coloring:
        return cls(p, max(colors) + 1, tuple(colors))

    def color_of(self, v: Sequence[int]) -> int:
        return self.colors[index_of(v, self.params)]

    def class_sizes(self) -> list[int]:
        counts = Counter(self.colors)
        return [counts[i] for i in range(self.r)]

    def indicator(self, i: int) -> FunctionTable:
        return FunctionTable(self.params, tuple(int(c == i) for c in self.colors))


@dataclass(frozen=True)
class ParameterMatrix:
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(r) for r in self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows or any(len(r) != len(rows) for r in rows):
            raise ValueError("parameter matrix must be square and nonempty")
        if any(not isinstance(x, int) or x < 0 for r in rows for x in r):
            raise ValueError("parameter matrix entries must be nonnegative integers")

    @property
    def r(self) -> int:
        return len(self.rows)

    def check_degree(self, p: SpaceParams) -> ParameterMatrix:
        for i, row in enumerate(self.rows):
            if sum(row) != p.degree:
                raise ValueError(f"row {i} of S sums to {sum(row)}, expected (q-1)n = {p.degree}")
        return self

    def as_matrix(self) -> RationalMatrix:
        return RationalMatrix(self.rows)


def parameter_matrix_of(coloring: Coloring) -> ParameterMatrix:
    """The common neighbor-color counts per color class; raises NotEquitable otherwise."""
    r = coloring.r
    colors = coloring.colors
    rows: list[tuple[int, ...] | None] = [None] * r
    first: list[int] = [0] * r
    for v, nb in enumerate(neighbor_indices(coloring.params)):
        counts = [0] * r
        for w in nb:
            counts[colors[w]] += 1
        c = colors[v]
        if rows[c] is None:
            rows[c] = tuple(counts)
            first[c] = v
        elif rows[c] != tuple(counts):
            raise NotEquitable(
                f"vertices {first[c]} and {v} have color {c} but different neighbor-color counts",
                witness=(first[c], v),
            )
    return ParameterMatrix(tuple(rows))


def verify_perfect(coloring: Coloring, s: ParameterMatrix) -> bool:
    if s.r != coloring.r:
        return False
    try:
        return parameter_matrix_of(coloring) == s
    except NotEquitable:
        return False


@dataclass(frozen=True)
class LocalDistributionMatrix:
    face: FaceSpec
    rows: tuple[tuple[int, ...], ...]  # rows[i][j] = |C_i ∩ W_j(anchor) ∩ face|


def local_distribution_matrix(coloring: Coloring, face: FaceSpec) -> LocalDistributionMatrix:
    p = coloring.params
    rows = [[0] * (face.dim + 1) for _ in range(coloring.r)]
    for beta in face_vertices(face, p):
        rows[coloring.colors[index_of(beta, p)]][distance(beta, face.anchor)] += 1
    return LocalDistributionMatrix(face, tuple(tuple(r) for r in rows))


def vector_enumerator(coloring: Coloring, face: FaceSpec) -> tuple[HomoPoly, ...]:
    q = coloring.params.q
    return tuple(HomoPoly(q, row) for row in local_distribution_matrix(coloring, face).rows)


@dataclass(frozen=True)
class SpectralData:
    T: RationalMatrix  # eigenvectors as columns
    mu: tuple[int, ...]
    h: tuple[int, ...]
    T_inv: RationalMatrix


def spectral_decompose(s: ParameterMatrix, p: SpaceParams) -> SpectralData:
    """Eigenbasis of S drawn from the eigenspaces of λ_0, ..., λ_n in that order."""
    r = s.r
    m = s.as_matrix()
    columns, mu, hs = [], [], []
    for h in range(p.n + 1):
        lam = eigenvalue(p, h)
        shifted = m - RationalMatrix.identity(r).scale(lam)
        for v in mat_nullspace(shifted):
            columns.append(v)
            mu.append(lam)
            hs.append(h)
    if len(columns) != r:
        raise NotDiagonalizableOverHypercubeSpectrum(
            f"eigenspaces of S for the eigenvalues of H({p.n},{p.q}) have total dimension "
            f"{len(columns)}, expected {r}"
        )
    t = RationalMatrix.from_columns(columns)
    return SpectralData(t, tuple(mu), tuple(hs), t.inverse())


def h_matrix(s: ParameterMatrix, p: SpaceParams) -> RationalMatrix:
    """((q-1)n E - S) / q."""
    r = s.r
    return (RationalMatrix.identity(r).scale(p.degree) - s.as_matrix()).scale(Fraction(1, p.q))


class ZPoly:
    """A univariate polynomial Σ a_m z^m in the linear form z (x + (q-1)y or x - y)."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable):
        c = [Fraction(x) for x in coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c) if c else (Fraction(0),)

    def in_form(self, g: HomoPoly, base: str) -> GradedPoly:
        """g · Σ a_m base^m as a graded bivariate polynomial."""
        out = GradedPoly(g.q)
        for m, a in enumerate(self.coeffs):
            if a:
                out = out + GradedPoly.of(g.mul_int_poly(linear_power_coeffs(base, g.q, m)) * a)
        return out

    def __eq__(self, other):
        if not isinstance(other, ZPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"ZPoly({[str(c) for c in self.coeffs]})"


@dataclass(frozen=True)
class MatrixPower:
    """(x + (q-1)y)^(h(S) - kE) represented as P / (x + (q-1)y)^d, P polynomial in z = x + (q-1)y."""

    P: tuple[tuple[ZPoly, ...], ...]
    d: int
    k: int


def matrix_enumerator_power(
    s: ParameterMatrix, k: int, p: SpaceParams, spectral: SpectralData | None = None
) -> MatrixPower:
    sd = spectral or spectral_decompose(s, p)
    r = s.r
    d = max(0, max(k - h for h in sd.h))
    exps = [h - k + d for h in sd.h]
    top = max(exps)
    entries = []
    for a in range(r):
        row = []
        for b in range(r):
            coeffs = [Fraction(0)] * (top + 1)
            for i, e in enumerate(exps):
                coeffs[e] += sd.T[a, i] * sd.T_inv[i, b]
            row.append(ZPoly(coeffs))
        entries.append(tuple(row))
    return MatrixPower(tuple(entries), d, k)


def lift_functions(coloring: Coloring, spectral: SpectralData) -> list[FunctionTable]:
    """Columns of F = CT: F^i(α) = T[color(α), i]."""
    p = coloring.params
    return [
        FunctionTable(p, tuple(spectral.T[c, i] for c in coloring.colors))
        for i in range(coloring.r)
    ]


@dataclass(frozen=True)
class ColoringVerdict:
    holds: bool
    columns: tuple[IdentityVerdict, ...]
    mu: tuple[int, ...]
    h: tuple[int, ...]


def _face_pair(I: Iterable[int], alpha: Sequence[int] | None, p: SpaceParams) -> tuple[FaceSpec, FaceSpec]:
    alpha = p.zero() if alpha is None else check_vertex(alpha, p)
    face = FaceSpec(alpha, tuple(I)).validate(p)
    return face, FaceSpec(alpha, complement(face.free_set, p.n))


def _combine(gs: Sequence[HomoPoly], weights: Sequence[Fraction], q: int, degree: int) -> HomoPoly:
    total = HomoPoly.zero(q, degree)
    for g, w in zip(gs, weights):
        if w:
            total = total + g * w
    return total


def theorem2_identity_check(coloring: Coloring, I: Iterable[int], alpha: Sequence[int] | None = None) -> ColoringVerdict:
    """Verify the per-eigencolumn identities for the enumerators of F = CT."""
    p = coloring.params
    s = parameter_matrix_of(coloring)
    sd = spectral_decompose(s, p)
    face, face_bar = _face_pair(I, alpha, p)
    g = vector_enumerator(coloring, face)
    g_bar = vector_enumerator(coloring, face_bar)
    columns = []
    for i in range(coloring.r):
        weights = sd.T.column(i)
        lifted = _combine(g, weights, p.q, face.dim)
        lifted_bar = _combine(g_bar, weights, p.q, face_bar.dim)
        columns.append(orthogonal_identity(lifted_bar, lifted, sd.h[i], face.dim, p.n))
    return ColoringVerdict(all(v.holds for v in columns), tuple(columns), sd.mu, sd.h)


def theorem2_matrix_check(coloring: Coloring, I: Iterable[int], alpha: Sequence[int] | None = None) -> bool:
    """The same identity in matrix form, through the matrix powers of h(S).

    Both sides are multiplied by (x + (q-1)y)^d_Ī (x - y)^d_I and compared
    component by component.
    """
    p = coloring.params
    s = parameter_matrix_of(coloring)
    sd = spectral_decompose(s, p)
    face, face_bar = _face_pair(I, alpha, p)
    g = [e.substitute_dual() for e in vector_enumerator(coloring, face)]
    g_bar = vector_enumerator(coloring, face_bar)
    pw = matrix_enumerator_power(s, face.dim, p, sd)
    pw_bar = matrix_enumerator_power(s, face_bar.dim, p, sd)
    for b in range(coloring.r):
        lhs = GradedPoly(p.q)
        rhs = GradedPoly(p.q)
        for a in range(coloring.r):
            lhs = lhs + pw_bar.P[a][b].in_form(g_bar[a].mul_linear_power(DIFF, pw.d), SUM)
            rhs = rhs + pw.P[a][b].in_form(g[a].mul_linear_power(SUM, pw_bar.d), DIFF)
        if lhs != rhs:
            return False
    return True


def column_sums_ok(ldm: LocalDistributionMatrix, q: int) -> bool:
    """Columns of a local distribution matrix count the face's sphere sections."""
    k = ldm.face.dim
    return all(sum(row[j] for row in ldm.rows) == comb(k, j) * (q - 1) ** j for j in range(k + 1))
