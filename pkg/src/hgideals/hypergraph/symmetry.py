"""Orbits of vertex subsets under row and column permutations of the grid."""

from __future__ import annotations

from collections import Counter
from itertools import permutations
from math import factorial, prod
from typing import Iterable

from .core import GridShape

_END = float("inf")


def column_patterns(shape: GridShape, s: Iterable[int]) -> list[tuple[int, ...]]:
    """For each column, the sorted rows at which ``s`` meets it."""
    pats: list[list[int]] = [[] for _ in range(shape.l)]
    for v in s:
        i, j = shape.position(v)
        pats[j - 1].append(i)
    return [tuple(sorted(p)) for p in pats]


def _pattern_key(p: tuple[int, ...]):
    # a longer pattern beats its own prefix, an empty column sorts last
    return p + (_END,)


def _image_from_patterns(shape: GridShape, pats: Iterable[tuple[int, ...]]) -> tuple[int, ...]:
    return tuple(shape.entry(i, j) for j, p in enumerate(pats, 1) for i in p)


def canonical_form(shape: GridShape, s: Iterable[int]) -> tuple[int, ...]:
    """Lexicographically least sorted image of ``s`` under Sym(rows) x Sym(columns)."""
    pats = column_patterns(shape, s)
    best = None
    for sigma in permutations(range(1, shape.k + 1)):
        moved = [tuple(sorted(sigma[i - 1] for i in p)) for p in pats]
        img = _image_from_patterns(shape, sorted(moved, key=_pattern_key))
        if best is None or img < best:
            best = img
    return best


def orbit_size(shape: GridShape, s: Iterable[int]) -> int:
    """Orbit size, counted as column arrangements of each distinct pattern multiset."""
    pats = column_patterns(shape, s)
    multisets = set()
    for sigma in permutations(range(1, shape.k + 1)):
        moved = tuple(sorted(tuple(sorted(sigma[i - 1] for i in p)) for p in pats))
        multisets.add(moved)
    total = 0
    for ms in multisets:
        total += factorial(shape.l) // prod(factorial(m) for m in Counter(ms).values())
    return total


def sym_orbit(shape: GridShape, s: Iterable[int]) -> tuple[tuple[int, ...], int]:
    s = list(s)
    return canonical_form(shape, s), orbit_size(shape, s)


def orbit_by_enumeration(shape: GridShape, s: Iterable[int]) -> set[tuple[int, ...]]:
    """All images of ``s`` by brute force over the whole group (small grids only)."""
    s = list(s)
    out = set()
    for sigma in permutations(range(1, shape.k + 1)):
        for tau in permutations(range(1, shape.l + 1)):
            img = []
            for v in s:
                i, j = shape.position(v)
                img.append(shape.entry(sigma[i - 1], tau[j - 1]))
            out.add(tuple(sorted(img)))
    return out
