"""Local distributions and local weight enumerators of functions in faces."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exact import DIFF, SUM, Cyclotomic, HomoPoly
from .fourier import FunctionTable, SpectrumTable
from .hamming import (
    FaceSpec,
    SpaceParams,
    check_vertex,
    distance,
    face_vertices,
    index_of,
    inner,
    support,
    weight,
)


@dataclass(frozen=True)
class LocalDistribution:
    face: FaceSpec
    entries: tuple[Cyclotomic, ...]


def _free_set(I: Iterable[int], p: SpaceParams) -> tuple[int, ...]:
    return FaceSpec.at_zero(I, p).validate(p).free_set


def local_distribution(f: FunctionTable, face: FaceSpec) -> LocalDistribution:
    """Entry j sums f over the face vertices at distance j from the anchor."""
    p = f.params
    acc = [Cyclotomic.zero(p.q)] * (face.dim + 1)
    for beta in face_vertices(face, p):
        j = distance(beta, face.anchor)
        acc[j] = acc[j] + f.values[index_of(beta, p)]
    return LocalDistribution(face, tuple(acc))


def local_weight_enumerator(f: FunctionTable, face: FaceSpec) -> HomoPoly:
    return HomoPoly(f.params.q, local_distribution(f, face).entries)


def character_face_sum(beta: Sequence[int], I: Iterable[int], p: SpaceParams) -> HomoPoly:
    """(x - y)^|I∩s(β)| (x + (q-1)y)^(|I| - |I∩s(β)|)."""
    beta = check_vertex(beta, p)
    I = _free_set(I, p)
    t = len(set(I) & support(beta))
    return HomoPoly.linear_power(DIFF, p.q, t).mul_linear_power(SUM, len(I) - t)


def character_face_sum_bruteforce(beta: Sequence[int], I: Iterable[int], p: SpaceParams) -> HomoPoly:
    """Σ_{α∈Γ_I(0)} φ^β(α) x^(|I|-wt α) y^(wt α), summed term by term."""
    beta = check_vertex(beta, p)
    face = FaceSpec.at_zero(I, p)
    acc = [Cyclotomic.zero(p.q)] * (face.dim + 1)
    for alpha in face_vertices(face, p):
        w = weight(alpha)
        acc[w] = acc[w] + Cyclotomic.root(p.q, inner(alpha, beta, p.q))
    return HomoPoly(p.q, acc)


def lwe_via_spectrum(spec: SpectrumTable, I: Iterable[int]) -> HomoPoly:
    """Enumerator of f in Γ_I(0) recovered from its Fourier coefficients."""
    p = spec.params
    I = _free_set(I, p)
    k = len(I)
    positions = [i - 1 for i in I]
    # group the coefficients by t = |I ∩ s(β)|
    grouped = [Cyclotomic.zero(p.q)] * (k + 1)
    for beta, c in zip(p.vertices(), spec.values):
        if c:
            t = sum(1 for i in positions if beta[i])
            grouped[t] = grouped[t] + c
    total = HomoPoly.zero(p.q, k)
    for t, c in enumerate(grouped):
        if c:
            term = HomoPoly.linear_power(DIFF, p.q, t).mul_linear_power(SUM, k - t)
            total = total + term * c
    return total * Fraction(1, p.size)
