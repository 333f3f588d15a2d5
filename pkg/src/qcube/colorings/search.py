"""Backtracking enumeration of perfect colorings with a given parameter matrix."""

from __future__ import annotations

import itertools

from ..hamming import SpaceParams, neighbor_indices
from .core import Coloring, ParameterMatrix, verify_perfect


def search_colorings(
    p: SpaceParams, s: ParameterMatrix, limit: int | None = None, fix_first: bool = False
) -> list[Coloring]:
    """Colorings with parameter matrix S, in lexicographic order of the color sequence.

    Vertices are colored in index order.  A branch is cut as soon as some
    colored vertex has more neighbors of a color than its row of S allows,
    or too few uncolored neighbors left to make up the shortfall.  With
    ``fix_first`` vertex 0 gets color 0, so the result is incomplete.
    """
    s.check_degree(p)
    r = s.r
    rows = s.rows
    adj = neighbor_indices(p)
    size = p.size
    colors = [-1] * size
    counts = [[0] * r for _ in range(size)]
    free = [len(nb) for nb in adj]
    found: list[Coloring] = []

    def feasible(v: int) -> bool:
        row = rows[colors[v]]
        cnt = counts[v]
        need = 0
        for j in range(r):
            if cnt[j] > row[j]:
                return False
            need += row[j] - cnt[j]
        return need <= free[v]

    def some_row_fits(v: int) -> bool:
        cnt = counts[v]
        return any(all(cnt[j] <= row[j] for j in range(r)) for row in rows)

    def assign(v: int, c: int) -> bool:
        colors[v] = c
        ok = True
        for w in adj[v]:
            counts[w][c] += 1
            free[w] -= 1
        if not feasible(v):
            ok = False
        else:
            for w in adj[v]:
                if colors[w] >= 0:
                    if not feasible(w):
                        ok = False
                        break
                elif not some_row_fits(w):
                    ok = False
                    break
        return ok

    def unassign(v: int):
        c = colors[v]
        for w in adj[v]:
            counts[w][c] -= 1
            free[w] += 1
        colors[v] = -1

    def walk(v: int) -> bool:
        if v == size:
            candidate = tuple(colors)
            if len(set(candidate)) == r:
                coloring = Coloring(p, r, candidate)
                if verify_perfect(coloring, s):
                    found.append(coloring)
            return limit is not None and len(found) >= limit
        choices = [0] if (fix_first and v == 0) else range(r)
        for c in choices:
            if assign(v, c):
                if walk(v + 1):
                    unassign(v)
                    return True
            unassign(v)
        return False

    if limit is None or limit > 0:
        walk(0)
    return found


def exhaustive_colorings(p: SpaceParams, s: ParameterMatrix) -> list[Coloring]:
    """Every assignment in r^(q^n), filtered by verify_perfect.  Oracle for the search."""
    r = s.r
    out = []
    for colors in itertools.product(range(r), repeat=p.size):
        if len(set(colors)) != r:
            continue
        coloring = Coloring(p, r, colors)
        if verify_perfect(coloring, s):
            out.append(coloring)
    return out
