"""Exact arithmetic in the cyclotomic field Q(ξ), ξ = exp(2πi/q).

A number is stored as q rational coefficients of 1, ξ, ..., ξ^(q-1).  The
representation is kept canonical by reducing modulo the q-th cyclotomic
polynomial, which zeroes every position from φ(q) upward; two numbers are
equal exactly when their canonical coefficient tuples are equal.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from ..errors import NotRational

Scalar = Union[int, Fraction]


def _divisors(q: int) -> list[int]:
    return [d for d in range(1, q + 1) if q % d == 0]


@lru_cache(maxsize=None)
def cyclotomic_polynomial(q: int) -> tuple[int, ...]:
    """Integer coefficients of Φ_q, lowest degree first.

    Obtained by exact division of x^q - 1 by Φ_d for every proper divisor d.
    """
    if q < 1:
        raise ValueError("q must be >= 1")
    num = [-1] + [0] * (q - 1) + [1]
    for d in _divisors(q)[:-1]:
        num = _divide_monic(num, list(cyclotomic_polynomial(d)))
    return tuple(num)


def _divide_monic(num: list[int], den: list[int]) -> list[int]:
    num = list(num)
    dd = len(den) - 1
    quot = [0] * (len(num) - dd)
    for i in range(len(num) - 1, dd - 1, -1):
        c = num[i]
        if c:
            quot[i - dd] = c
            for j, b in enumerate(den):
                num[i - dd + j] -= c * b
    if any(num[:dd]):
        raise ArithmeticError("inexact polynomial division")
    return quot


def reduce_raw(coeffs: list, q: int) -> list:
    """Reduce a coefficient list of length q modulo Φ_q, in place."""
    phi = cyclotomic_polynomial(q)
    deg = len(phi) - 1
    for i in range(q - 1, deg - 1, -1):
        c = coeffs[i]
        if c:
            off = i - deg
            for j in range(deg):
                if phi[j]:
                    coeffs[off + j] -= c * phi[j]
            coeffs[i] = 0
    return coeffs


def cyc_normalize(coeffs: Sequence[Scalar], q: int) -> tuple[Fraction, ...]:
    """Canonical coefficients of Σ coeffs[i] ξ^i (exponents read mod q)."""
    raw = [Fraction(0)] * q
    for i, c in enumerate(coeffs):
        raw[i % q] += c
    return tuple(Fraction(c) for c in reduce_raw(raw, q))


class Cyclotomic:
    """An element of Q(ξ_q) in canonical form."""

    __slots__ = ("q", "coeffs")

    def __init__(self, q: int, coeffs: Iterable[Scalar] = (), *, canonical: bool = False):
        self.q = q
        if canonical:
            self.coeffs = tuple(coeffs)
        else:
            self.coeffs = cyc_normalize(list(coeffs), q)

    @classmethod
    def rational(cls, q: int, value: Scalar) -> Cyclotomic:
        return cls(q, (Fraction(value),) + (Fraction(0),) * (q - 1), canonical=True)

    @classmethod
    def zero(cls, q: int) -> Cyclotomic:
        return cls.rational(q, 0)

    @classmethod
    def one(cls, q: int) -> Cyclotomic:
        return cls.rational(q, 1)

    @classmethod
    def root(cls, q: int, k: int) -> Cyclotomic:
        """ξ^k."""
        raw = [Fraction(0)] * q
        raw[k % q] = Fraction(1)
        return cls(q, raw)

    @classmethod
    def from_raw(cls, q: int, raw: list) -> Cyclotomic:
        """Wrap a length-q list that is reduced only modulo x^q - 1."""
        return cls(q, [Fraction(c) for c in reduce_raw(list(raw), q)], canonical=True)

    def _coerce(self, other) -> Cyclotomic:
        if isinstance(other, Cyclotomic):
            if other.q != self.q:
                raise ValueError(f"mixing Q(ξ_{self.q}) and Q(ξ_{other.q})")
            return other
        if isinstance(other, (int, Fraction)):
            return Cyclotomic.rational(self.q, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.q, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)), canonical=True)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic(self.q, tuple(-a for a in self.coeffs), canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return Cyclotomic(self.q, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)), canonical=True)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic(self.q, tuple(a * other for a in self.coeffs), canonical=True)
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        q = self.q
        raw = [Fraction(0)] * q
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        raw[(i + j) % q] += a * b
        return Cyclotomic(q, reduce_raw(raw, q), canonical=True)

    __rmul__ = __mul__

    def times_root(self, k: int) -> Cyclotomic:
        """self * ξ^k."""
        q = self.q
        raw = [Fraction(0)] * q
        for i, a in enumerate(self.coeffs):
            raw[(i + k) % q] = a
        return Cyclotomic(q, reduce_raw(raw, q), canonical=True)

    def conj(self) -> Cyclotomic:
        """Complex conjugate: ξ^i ↦ ξ^(q-i)."""
        q = self.q
        raw = [Fraction(0)] * q
        for i, a in enumerate(self.coeffs):
            raw[-i % q] = a
        return Cyclotomic(q, reduce_raw(raw, q), canonical=True)

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise NotRational(f"{self} is not rational")
        return self.coeffs[0]

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.q, self.coeffs))

    def __repr__(self):
        return f"Cyclotomic({self.q}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                mono = "ξ" if i == 1 else f"ξ^{i}"
                terms.append(mono if c == 1 else f"{c}·{mono}")
        return "(" + " + ".join(terms) + ")"


def cyc_arith(op: str, a: Cyclotomic, b: Cyclotomic | None = None) -> Cyclotomic:
    """Dispatch form of the field operations: op in {add, sub, mul, conj}."""
    if op == "conj":
        return a.conj()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown operation {op!r}")


def cyc_as_rational(c: Cyclotomic) -> Fraction:
    return c.as_rational()
