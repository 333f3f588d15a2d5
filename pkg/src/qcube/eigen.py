"""Adjacency action, eigenvalue numbering and the orthogonal-face identity for eigenfunctions.

For a λ_h-function f and complementary coordinate sets I, Ī the identity is

    (x + (q-1)y)^(h-|Ī|) g^Ī(x, y) = (x - y)^(h-|I|) g^I(x + (q-2)y, -y),

where g^J is the local weight enumerator in Γ_J(α).  Exponents may be
negative, so both sides are multiplied by (x + (q-1)y)^max(0, |Ī|-h) and
(x - y)^max(0, |I|-h) and compared as polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import NotAnEigenvalue, NotEigenfunction
from .exact import DIFF, SUM, Cyclotomic, HomoPoly
from .enumerators import local_weight_enumerator
from .fourier import FunctionTable, translate
from .hamming import FaceSpec, SpaceParams, check_vertex, complement, neighbor_indices


@dataclass(frozen=True)
class EigenvalueNumber:
    h: int
    lam: int

    @classmethod
    def from_h(cls, p: SpaceParams, h: int) -> EigenvalueNumber:
        if not 0 <= h <= p.n:
            raise NotAnEigenvalue(f"eigenvalue number {h} outside [0, {p.n}]")
        return cls(h, eigenvalue(p, h))

    @classmethod
    def from_lambda(cls, p: SpaceParams, lam: int) -> EigenvalueNumber:
        return cls(eigenvalue_number(lam, p), lam)


def eigenvalue(p: SpaceParams, h: int) -> int:
    """λ_h = (q-1)n - qh."""
    return p.degree - p.q * h


def eigenvalue_number(lam: int, p: SpaceParams) -> int:
    h, rem = divmod(p.degree - lam, p.q)
    if rem or not 0 <= h <= p.n:
        raise NotAnEigenvalue(f"{lam} is not an eigenvalue of H({p.n},{p.q})")
    return h


def adjacency_apply(f: FunctionTable) -> FunctionTable:
    """Sum of f over the unit sphere around each vertex."""
    p = f.params
    zero = Cyclotomic.zero(p.q)
    out = []
    for nb in neighbor_indices(p):
        acc = zero
        for j in nb:
            acc = acc + f.values[j]
        out.append(acc)
    return FunctionTable(p, tuple(out))


def is_eigenfunction(f: FunctionTable, lam: int) -> bool:
    return adjacency_apply(f) == f.scale(lam)


@dataclass(frozen=True)
class IdentityVerdict:
    holds: bool
    lhs: HomoPoly
    rhs: HomoPoly
    clearing: tuple[int, int]  # (power of x+(q-1)y, power of x-y)


def orthogonal_identity(g_bar: HomoPoly, g: HomoPoly, h: int, k: int, n: int) -> IdentityVerdict:
    """Compare the denominator-cleared sides, given enumerators in Γ_Ī and Γ_I with |I| = k."""
    k_bar = n - k
    if g.degree != k or g_bar.degree != k_bar:
        raise ValueError("enumerator degrees do not match the face dimensions")
    e_sum = max(0, k_bar - h)
    e_diff = max(0, k - h)
    lhs = g_bar.mul_linear_power(SUM, max(0, h - k_bar)).mul_linear_power(DIFF, e_diff)
    rhs = g.substitute_dual().mul_linear_power(DIFF, max(0, h - k)).mul_linear_power(SUM, e_sum)
    return IdentityVerdict(lhs == rhs, lhs, rhs, (e_sum, e_diff))


def theorem1_identity_check(
    f: FunctionTable,
    h: int,
    I: Iterable[int],
    alpha: Sequence[int] | None = None,
    *,
    check: bool = True,
) -> IdentityVerdict:
    """Verify the orthogonal-face identity for f at eigenvalue number h.

    With ``check=False`` the eigenfunction precondition is skipped, which is
    how non-eigenfunctions are probed for failures.
    """
    p = f.params
    number = EigenvalueNumber.from_h(p, h)
    if check and not is_eigenfunction(f, number.lam):
        raise NotEigenfunction(f"function is not a λ-function for λ={number.lam} (h={h})")
    alpha = p.zero() if alpha is None else check_vertex(alpha, p)
    face = FaceSpec.at_zero(I, p).validate(p)
    shifted = translate(f, alpha) if any(alpha) else f
    g = local_weight_enumerator(shifted, face)
    g_bar = local_weight_enumerator(shifted, FaceSpec.at_zero(complement(face.free_set, p.n), p))
    return orthogonal_identity(g_bar, g, h, face.dim, p.n)
