"""Homogeneous bivariate polynomials over Q(ξ_q).

``HomoPoly(q, [c_0, ..., c_k])`` stands for Σ_j c_j y^j x^(k-j).  The two
linear forms that recur throughout are ``x + (q-1)y`` ("sum") and ``x - y``
("diff"); the dual substitution x ↦ x + (q-2)y, y ↦ -y swaps them.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb
from typing import Iterable, Sequence, Union

from .cyclotomic import Cyclotomic

Coefficient = Union[int, Fraction, Cyclotomic]

SUM = "sum"
DIFF = "diff"


def _as_cyc(q: int, c: Coefficient) -> Cyclotomic:
    if isinstance(c, Cyclotomic):
        if c.q != q:
            raise ValueError(f"coefficient lives in Q(ξ_{c.q}), expected Q(ξ_{q})")
        return c
    return Cyclotomic.rational(q, c)


def _int_mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def linear_form(base: str, q: int) -> tuple[int, int]:
    """Coefficients (of x, of y) of the named linear form."""
    if base == SUM:
        return (1, q - 1)
    if base == DIFF:
        return (1, -1)
    raise ValueError(f"unknown linear form {base!r}")


def linear_power_coeffs(base: str, q: int, e: int) -> list[int]:
    a = linear_form(base, q)[1]
    return [comb(e, j) * a**j for j in range(e + 1)]


class HomoPoly:
    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs: Iterable[Coefficient]):
        self.q = q
        self.coeffs = tuple(_as_cyc(q, c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("a homogeneous polynomial needs at least one coefficient")

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def zero(cls, q: int, degree: int) -> HomoPoly:
        return cls(q, [0] * (degree + 1))

    @classmethod
    def constant(cls, q: int, c: Coefficient) -> HomoPoly:
        return cls(q, [c])

    @classmethod
    def linear_power(cls, base: str, q: int, e: int) -> HomoPoly:
        return cls(q, linear_power_coeffs(base, q, e))

    def _check(self, other: HomoPoly):
        if other.q != self.q:
            raise ValueError("polynomials over different fields")

    def __add__(self, other: HomoPoly) -> HomoPoly:
        self._check(other)
        if other.degree != self.degree:
            raise ValueError(f"cannot add degree {self.degree} and {other.degree} homogeneous polynomials")
        return HomoPoly(self.q, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: HomoPoly) -> HomoPoly:
        return self + (-other)

    def __neg__(self) -> HomoPoly:
        return HomoPoly(self.q, [-c for c in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, HomoPoly):
            self._check(other)
            out = [Cyclotomic.zero(self.q)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self.coeffs):
                if a:
                    for j, b in enumerate(other.coeffs):
                        if b:
                            out[i + j] = out[i + j] + a * b
            return HomoPoly(self.q, out)
        if isinstance(other, (int, Fraction, Cyclotomic)):
            return HomoPoly(self.q, [c * other for c in self.coeffs])
        return NotImplemented

    __rmul__ = __mul__

    def mul_int_poly(self, ints: Sequence[int]) -> HomoPoly:
        """Multiply by the homogeneous polynomial with integer coefficients ``ints``."""
        out = [Cyclotomic.zero(self.q)] * (self.degree + len(ints))
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(ints):
                    if b:
                        out[i + j] = out[i + j] + a * b
        return HomoPoly(self.q, out)

    def mul_linear_power(self, base: str, e: int) -> HomoPoly:
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        if e == 0:
            return self
        return self.mul_int_poly(linear_power_coeffs(base, self.q, e))

    def substitute_dual(self) -> HomoPoly:
        """g(x + (q-2)y, -y)."""
        q, k = self.q, self.degree
        out = [Cyclotomic.zero(q)] * (k + 1)
        for j, c in enumerate(self.coeffs):
            if not c:
                continue
            # (-y)^j (x + (q-2)y)^(k-j)
            for t, b in enumerate(linear_power_coeffs_shift(q, k - j)):
                if b:
                    out[j + t] = out[j + t] + c * ((-1) ** j * b)
        return HomoPoly(q, out)

    def evaluate(self, x: Coefficient, y: Coefficient) -> Cyclotomic:
        x, y = _as_cyc(self.q, x), _as_cyc(self.q, y)
        k = self.degree
        xp = [Cyclotomic.one(self.q)]
        yp = [Cyclotomic.one(self.q)]
        for _ in range(k):
            xp.append(xp[-1] * x)
            yp.append(yp[-1] * y)
        total = Cyclotomic.zero(self.q)
        for j, c in enumerate(self.coeffs):
            total = total + c * yp[j] * xp[k - j]
        return total

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coeffs)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs)

    def rational_coeffs(self) -> list[Fraction]:
        return [c.as_rational() for c in self.coeffs]

    def __eq__(self, other):
        if not isinstance(other, HomoPoly):
            return NotImplemented
        return self.q == other.q and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __repr__(self):
        return f"HomoPoly({self.q}, [{', '.join(str(c) for c in self.coeffs)}])"

    def text(self) -> str:
        """Human form ``c · y^j x^(k-j)`` joined by `` + ``."""
        k = self.degree
        terms = []
        for j, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = [_power("y", j), _power("x", k - j)]
            mono = " ".join(m for m in mono if m)
            terms.append(f"{c} · {mono}" if mono else str(c))
        return " + ".join(terms) if terms else "0"

    __str__ = text


def _power(var: str, e: int) -> str:
    if e == 0:
        return ""
    return var if e == 1 else f"{var}^{e}"


def linear_power_coeffs_shift(q: int, e: int) -> list[int]:
    """Coefficients of (x + (q-2)y)^e."""
    return [comb(e, t) * (q - 2) ** t for t in range(e + 1)]


class GradedPoly:
    """A general bivariate polynomial kept as homogeneous components by degree."""

    __slots__ = ("q", "parts")

    def __init__(self, q: int, parts: dict[int, HomoPoly] | None = None):
        self.q = q
        self.parts: dict[int, HomoPoly] = {}
        for g in (parts or {}).values():
            self._accumulate(g)

    @classmethod
    def of(cls, g: HomoPoly) -> GradedPoly:
        return cls(g.q, {g.degree: g})

    def _accumulate(self, g: HomoPoly):
        prev = self.parts.get(g.degree)
        total = g if prev is None else prev + g
        if total.is_zero():
            self.parts.pop(g.degree, None)
        else:
            self.parts[g.degree] = total

    def __add__(self, other: GradedPoly) -> GradedPoly:
        out = GradedPoly(self.q, self.parts)
        for g in other.parts.values():
            out._accumulate(g)
        return out

    def __eq__(self, other):
        if not isinstance(other, GradedPoly):
            return NotImplemented
        return self.q == other.q and self.parts == other.parts

    def __repr__(self):
        return f"GradedPoly({self.q}, {self.parts})"
