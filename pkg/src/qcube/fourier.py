"""Fourier analysis on the group Z_q^n.

The forward transform is f̂(α) = Σ_β f(β) conj(ξ^<α,β>) and the inverse is
f(α) = q^-n Σ_β f̂(β) ξ^<α,β>.  ``fourier_forward`` is the direct double
sum and serves as the oracle for ``fourier_forward_fast``, which applies
the q-point transform along one coordinate at a time.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import Cyclotomic, RationalMatrix, independent_subset
from .exact.cyclotomic import reduce_raw
from .hamming import SpaceParams, add, check_vertex, index_of, inner, weight


@dataclass(frozen=True)
class _Table:
    params: SpaceParams
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        vals = tuple(self.values)
        if len(vals) != self.params.size:
            raise ValueError(f"table has {len(vals)} entries, expected {self.params.size}")
        q = self.params.q
        vals = tuple(v if isinstance(v, Cyclotomic) else Cyclotomic.rational(q, v) for v in vals)
        if any(v.q != q for v in vals):
            raise ValueError("table entries must lie in Q(ξ_q) for the table's q")
        object.__setattr__(self, "values", vals)

    @classmethod
    def zeros(cls, p: SpaceParams):
        return cls(p, (Cyclotomic.zero(p.q),) * p.size)

    def __getitem__(self, v: Sequence[int]) -> Cyclotomic:
        return self.values[index_of(v, self.params)]

    def __add__(self, other):
        self._same(other)
        return type(self)(self.params, tuple(a + b for a, b in zip(self.values, other.values)))

    def __sub__(self, other):
        self._same(other)
        return type(self)(self.params, tuple(a - b for a, b in zip(self.values, other.values)))

    def scale(self, c):
        return type(self)(self.params, tuple(v * c for v in self.values))

    def _same(self, other):
        if type(other) is not type(self) or other.params != self.params:
            raise ValueError("tables over different spaces")

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def is_rational(self) -> bool:
        return all(v.is_rational() for v in self.values)

    def rational_values(self) -> list[Fraction]:
        return [v.as_rational() for v in self.values]


class FunctionTable(_Table):
    """Values of f : F_q^n → Q(ξ_q), indexed by vertex index."""

    @classmethod
    def from_values(cls, p: SpaceParams, values: Iterable) -> FunctionTable:
        return cls(p, tuple(values))

    @classmethod
    def constant(cls, p: SpaceParams, c=1) -> FunctionTable:
        return cls(p, (Cyclotomic.rational(p.q, c),) * p.size)

    @classmethod
    def delta(cls, p: SpaceParams, v: Sequence[int]) -> FunctionTable:
        vals = [0] * p.size
        vals[index_of(v, p)] = 1
        return cls(p, tuple(vals))

    @classmethod
    def character(cls, p: SpaceParams, beta: Sequence[int]) -> FunctionTable:
        """φ^β(α) = ξ^<α,β>."""
        beta = check_vertex(beta, p)
        roots = [Cyclotomic.root(p.q, k) for k in range(p.q)]
        return cls(p, tuple(roots[inner(a, beta, p.q)] for a in p.vertices()))


class SpectrumTable(_Table):
    """Fourier coefficients f̂, indexed by vertex index."""


def _raw(c: Cyclotomic) -> list:
    return list(c.coeffs)


def _finish(raws: list[list], q: int) -> tuple[Cyclotomic, ...]:
    return tuple(Cyclotomic(q, reduce_raw(r, q), canonical=True) for r in raws)


def fourier_forward(f: FunctionTable) -> SpectrumTable:
    """Direct evaluation of f̂(α) = Σ_β f(β) ξ^(-<α,β>)."""
    p = f.params
    q = p.q
    verts = list(p.vertices())
    src = [(beta, f.values[i].coeffs) for i, beta in enumerate(verts) if not f.values[i].is_zero()]
    out = []
    for alpha in verts:
        acc = [Fraction(0)] * q
        for beta, coeffs in src:
            shift = -inner(alpha, beta, q)
            for i, c in enumerate(coeffs):
                if c:
                    acc[(i + shift) % q] += c
        out.append(acc)
    return SpectrumTable(p, _finish(out, q))


def _transform_passes(raws: list[list], p: SpaceParams, sign: int) -> list[list]:
    """Apply Σ_b v[b] ξ^(sign·a·b) along each coordinate in turn."""
    q, n = p.q, p.n
    size = p.size
    for axis in range(n):
        stride = q ** (n - 1 - axis)
        block = stride * q
        nxt: list = [None] * size
        for start in range(0, size, block):
            for off in range(stride):
                fiber = [raws[start + off + b * stride] for b in range(q)]
                for a in range(q):
                    acc = [Fraction(0)] * q
                    for b, vec in enumerate(fiber):
                        shift = sign * a * b
                        for i, c in enumerate(vec):
                            if c:
                                acc[(i + shift) % q] += c
                    nxt[start + off + a * stride] = acc
        raws = nxt
    return raws


def fourier_forward_fast(f: FunctionTable) -> SpectrumTable:
    p = f.params
    raws = _transform_passes([_raw(v) for v in f.values], p, -1)
    return SpectrumTable(p, _finish(raws, p.q))


def fourier_inverse(spec: SpectrumTable) -> FunctionTable:
    p = spec.params
    raws = _transform_passes([_raw(v) for v in spec.values], p, 1)
    scale = Fraction(1, p.size)
    return FunctionTable(p, tuple(v * scale for v in _finish(raws, p.q)))


def fourier_inverse_naive(spec: SpectrumTable) -> FunctionTable:
    p = spec.params
    q = p.q
    verts = list(p.vertices())
    src = [(beta, spec.values[i].coeffs) for i, beta in enumerate(verts) if not spec.values[i].is_zero()]
    scale = Fraction(1, p.size)
    out = []
    for alpha in verts:
        acc = [Fraction(0)] * q
        for beta, coeffs in src:
            shift = inner(alpha, beta, q)
            for i, c in enumerate(coeffs):
                if c:
                    acc[(i + shift) % q] += c
        out.append(acc)
    return FunctionTable(p, tuple(v * scale for v in _finish(out, q)))


def spectral_support_numbers(f: FunctionTable) -> set[int]:
    """Weights h such that f̂ is nonzero somewhere on the sphere W_h."""
    spec = fourier_forward_fast(f)
    return {weight(beta) for beta, c in zip(f.params.vertices(), spec.values) if not c.is_zero()}


def eigenspace_project(f: FunctionTable, h: int) -> FunctionTable:
    """Keep the Fourier coefficients on W_h and transform back."""
    p = f.params
    if not 0 <= h <= p.n:
        raise ValueError(f"h={h} outside [0, {p.n}]")
    spec = fourier_forward_fast(f)
    zero = Cyclotomic.zero(p.q)
    kept = tuple(c if weight(beta) == h else zero for beta, c in zip(p.vertices(), spec.values))
    return fourier_inverse(SpectrumTable(p, kept))


def eigenspace_basis(p: SpaceParams, h: int) -> list[FunctionTable]:
    """Independent subset of the projected delta functions; they span the λ_h-eigenspace."""
    projected = [eigenspace_project(FunctionTable.delta(p, v), h) for v in p.vertices()]
    keep = independent_subset([g.rational_values() for g in projected])
    return [projected[i] for i in keep]


def translate(f: FunctionTable, alpha: Sequence[int]) -> FunctionTable:
    """f∘τ_α, where τ_α(β) = β + α."""
    p = f.params
    alpha = check_vertex(alpha, p)
    return FunctionTable(p, tuple(f[add(beta, alpha, p.q)] for beta in p.vertices()))


def table_rank(tables: Sequence[_Table]) -> int:
    """Exact rank over Q of rational-valued tables."""
    if not tables:
        return 0
    return RationalMatrix([t.rational_values() for t in tables]).rank()
