"""Dense matrices over Q with exact Gaussian elimination."""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from ..errors import Singular


class RationalMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, data: Iterable[Iterable]):
        rows = [tuple(Fraction(x) for x in row) for row in data]
        if not rows:
            raise ValueError("matrix must have at least one row")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.rows = len(rows)
        self.cols = width
        self.entries = tuple(rows)

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    @classmethod
    def from_columns(cls, columns: Sequence[Sequence]) -> RationalMatrix:
        return cls(zip(*columns))

    def __getitem__(self, ij: tuple[int, int]) -> Fraction:
        i, j = ij
        return self.entries[i][j]

    def column(self, j: int) -> tuple[Fraction, ...]:
        return tuple(row[j] for row in self.entries)

    def tolist(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def transpose(self) -> RationalMatrix:
        return RationalMatrix(zip(*self.entries))

    def __matmul__(self, other: RationalMatrix) -> RationalMatrix:
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        cols = list(zip(*other.entries))
        return RationalMatrix([[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.entries])

    def apply(self, v: Sequence) -> list[Fraction]:
        return [sum(a * Fraction(b) for a, b in zip(row, v)) for row in self.entries]

    def __add__(self, other: RationalMatrix) -> RationalMatrix:
        return RationalMatrix([[a + b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def __sub__(self, other: RationalMatrix) -> RationalMatrix:
        return RationalMatrix([[a - b for a, b in zip(r, s)] for r, s in zip(self.entries, other.entries)])

    def scale(self, c) -> RationalMatrix:
        c = Fraction(c)
        return RationalMatrix([[a * c for a in r] for r in self.entries])

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in r] for r in self.entries]})"

    def rref(self) -> tuple[list[list[Fraction]], list[int]]:
        return rref([list(r) for r in self.entries])

    def rank(self) -> int:
        return len(self.rref()[1])

    def nullspace(self) -> list[list[Fraction]]:
        return mat_nullspace(self)

    def inverse(self) -> RationalMatrix:
        return mat_inverse(self)


def rref(m: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (matrix, pivot columns)."""
    n_rows = len(m)
    n_cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(n_rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == n_rows:
            break
    return m, pivots


def mat_nullspace(a: RationalMatrix) -> list[list[Fraction]]:
    """Kernel basis: one vector per free column (ascending), that column set to 1."""
    m, pivots = a.rref()
    pivot_set = set(pivots)
    basis = []
    for free in range(a.cols):
        if free in pivot_set:
            continue
        v = [Fraction(0)] * a.cols
        v[free] = Fraction(1)
        for row, pc in enumerate(pivots):
            v[pc] = -m[row][free]
        basis.append(v)
    return basis


def mat_inverse(a: RationalMatrix) -> RationalMatrix:
    if a.rows != a.cols:
        raise Singular(f"{a.rows}x{a.cols} matrix is not square")
    n = a.rows
    aug = [list(row) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a.entries)]
    m, pivots = rref(aug)
    if pivots[:n] != list(range(n)) or len(pivots) < n:
        raise Singular("matrix is singular")
    return RationalMatrix([row[n:] for row in m])


def independent_subset(vectors: Sequence[Sequence[Fraction]]) -> list[int]:
    """Indices of a maximal linearly independent subset, greedily in order."""
    basis: list[tuple[int, list[Fraction]]] = []  # (pivot column, reduced row)
    chosen = []
    for idx, v in enumerate(vectors):
        w = [Fraction(x) for x in v]
        for pc, row in basis:
            f = w[pc]
            if f:
                w = [a - f * b for a, b in zip(w, row)]
        pc = next((j for j, x in enumerate(w) if x), None)
        if pc is None:
            continue
        inv = 1 / w[pc]
        basis.append((pc, [x * inv for x in w]))
        chosen.append(idx)
    return chosen
