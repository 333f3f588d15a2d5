"""Combinatorics of the q-ary hypercube H(n, q).

Vertices are tuples of ``n`` digits in ``range(q)``; coordinate 1 is the
first element.  Vertex indices are big-endian base-q, so every table in
the package is ordered like ``itertools.product(range(q), repeat=n)``.
Face index sets are 1-based, matching the usual coordinate labels.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Iterable, Iterator, Sequence

Vertex = tuple[int, ...]

# Desk scale only; tables are materialized in memory.
MAX_VERTICES = 1 << 24


@dataclass(frozen=True)
class SpaceParams:
    q: int
    n: int

    def __post_init__(self):
        if not isinstance(self.q, int) or self.q < 2:
            raise ValueError(f"alphabet size q must be an integer >= 2, got {self.q!r}")
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension n must be an integer >= 1, got {self.n!r}")
        if self.q**self.n > MAX_VERTICES:
            raise ValueError(f"q^n = {self.q}^{self.n} is too large")

    @property
    def size(self) -> int:
        return self.q**self.n

    @property
    def degree(self) -> int:
        return (self.q - 1) * self.n

    def vertices(self) -> Iterator[Vertex]:
        return itertools.product(range(self.q), repeat=self.n)

    def zero(self) -> Vertex:
        return (0,) * self.n


def check_vertex(v: Sequence[int], p: SpaceParams) -> Vertex:
    v = tuple(v)
    if len(v) != p.n:
        raise ValueError(f"vertex {v} has length {len(v)}, expected {p.n}")
    for d in v:
        if not isinstance(d, int) or not 0 <= d < p.q:
            raise ValueError(f"digit {d!r} of vertex {v} is outside [0, {p.q - 1}]")
    return v


def index_of(v: Sequence[int], p: SpaceParams) -> int:
    idx = 0
    for d in check_vertex(v, p):
        idx = idx * p.q + d
    return idx


def vertex_of(index: int, p: SpaceParams) -> Vertex:
    if not 0 <= index < p.size:
        raise ValueError(f"index {index} outside [0, {p.size - 1}]")
    digits = [0] * p.n
    for i in range(p.n - 1, -1, -1):
        index, digits[i] = divmod(index, p.q)
    return tuple(digits)


def weight(v: Sequence[int]) -> int:
    return sum(1 for d in v if d)


def support(v: Sequence[int]) -> frozenset[int]:
    """1-based positions of the nonzero digits."""
    return frozenset(i + 1 for i, d in enumerate(v) if d)


def distance(u: Sequence[int], v: Sequence[int]) -> int:
    if len(u) != len(v):
        raise ValueError(f"length mismatch: {len(u)} vs {len(v)}")
    return sum(1 for a, b in zip(u, v) if a != b)


def add(u: Sequence[int], v: Sequence[int], q: int) -> Vertex:
    return tuple((a + b) % q for a, b in zip(u, v))


def sub(u: Sequence[int], v: Sequence[int], q: int) -> Vertex:
    return tuple((a - b) % q for a, b in zip(u, v))


def inner(u: Sequence[int], v: Sequence[int], q: int) -> int:
    return sum(a * b for a, b in zip(u, v)) % q


def sphere_size(p: SpaceParams, radius: int) -> int:
    if not 0 <= radius <= p.n:
        return 0
    return comb(p.n, radius) * (p.q - 1) ** radius


def sphere(center: Sequence[int], radius: int, p: SpaceParams) -> Iterator[Vertex]:
    """Vertices at distance ``radius`` from ``center``, in ascending index order."""
    center = check_vertex(center, p)
    if radius < 0 or radius > p.n:
        return
    for v in p.vertices():
        if distance(v, center) == radius:
            yield v


def neighbors(v: Vertex, q: int) -> Iterator[Vertex]:
    for i, d in enumerate(v):
        for e in range(q):
            if e != d:
                yield v[:i] + (e,) + v[i + 1 :]


def neighbor_indices(p: SpaceParams) -> list[list[int]]:
    """Adjacency lists of H(n, q) by vertex index."""
    q, n = p.q, p.n
    strides = [q ** (n - 1 - i) for i in range(n)]
    adj = []
    for idx, v in enumerate(p.vertices()):
        nb = []
        for i, d in enumerate(v):
            base = idx - d * strides[i]
            nb.extend(base + e * strides[i] for e in range(q) if e != d)
        adj.append(nb)
    return adj


@dataclass(frozen=True)
class FaceSpec:
    """The face Γ_I(anchor): vertices agreeing with ``anchor`` outside ``free_set``."""

    anchor: Vertex
    free_set: tuple[int, ...]

    def __post_init__(self):
        free = tuple(self.free_set)
        if len(set(free)) != len(free):
            raise ValueError(f"repeated coordinate in free set {free}")
        object.__setattr__(self, "anchor", tuple(self.anchor))
        object.__setattr__(self, "free_set", tuple(sorted(free)))

    @classmethod
    def at_zero(cls, free_set: Iterable[int], p: SpaceParams) -> FaceSpec:
        return cls(p.zero(), tuple(free_set))

    @property
    def dim(self) -> int:
        return len(self.free_set)

    def validate(self, p: SpaceParams) -> FaceSpec:
        check_vertex(self.anchor, p)
        for i in self.free_set:
            if not isinstance(i, int) or not 1 <= i <= p.n:
                raise ValueError(f"free coordinate {i!r} outside [1, {p.n}]")
        return self


def complement(free_set: Iterable[int], n: int) -> tuple[int, ...]:
    s = set(free_set)
    return tuple(i for i in range(1, n + 1) if i not in s)


def face_vertices(face: FaceSpec, p: SpaceParams) -> Iterator[Vertex]:
    """All q^|I| vertices of the face; the smallest free index varies slowest."""
    face.validate(p)
    base = list(face.anchor)
    positions = [i - 1 for i in face.free_set]
    for digits in itertools.product(range(p.q), repeat=len(positions)):
        for pos, d in zip(positions, digits):
            base[pos] = d
        yield tuple(base)


def orthogonal_face(face: FaceSpec, p: SpaceParams) -> FaceSpec:
    face.validate(p)
    return FaceSpec(face.anchor, complement(face.free_set, p.n))


def all_subsets(n: int) -> Iterator[tuple[int, ...]]:
    """Every subset of {1..n}, by size and then lexicographically."""
    for k in range(n + 1):
        yield from itertools.combinations(range(1, n + 1), k)
