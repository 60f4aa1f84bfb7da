"""Symbolic minors [A|B] of the generic d x n matrix X = (x[i,j])."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, permutations
from typing import Iterable, Sequence

from .polynomial import Polynomial, Ring


@dataclass(frozen=True, order=True)
class MinorSpec:
    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(sorted(self.rows))
        cols = tuple(sorted(self.cols))
        if len(rows) != len(cols) or not rows:
            raise ValueError(f"minor needs |rows| = |cols| >= 1, got {rows}|{cols}")
        if len(set(rows)) != len(rows) or len(set(cols)) != len(cols):
            raise ValueError(f"repeated index in minor {rows}|{cols}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)

    @property
    def size(self) -> int:
        return len(self.rows)

    def __str__(self):
        return "[" + "".join(map(str, self.rows)) + "|" + "".join(map(str, self.cols)) + "]"


def permutation_sign(perm: Sequence[int]) -> int:
    """Sign of a permutation given as a sequence of distinct comparable items."""
    perm = list(perm)
    sign = 1
    for i in range(len(perm)):
        for j in range(i + 1, len(perm)):
            if perm[i] > perm[j]:
                sign = -sign
    return sign


def _leibniz(ring: Ring, rows: Sequence[int], cols: Sequence[int]) -> Polynomial:
    out: dict[int, int] = {}
    for perm in permutations(range(len(cols))):
        m = 0
        for r, p in zip(rows, perm):
            m += ring.var_monomial(r, cols[p])
        out[m] = out.get(m, 0) + permutation_sign(perm)
    return Polynomial(ring, {m: c for m, c in out.items() if c})


def minor_polynomial(spec: MinorSpec, d: int | None = None, n: int | None = None,
                     ring: Ring | None = None) -> Polynomial:
    """Determinant of the submatrix of X on ``spec.rows`` x ``spec.cols``.

    The leading lex term is the main-diagonal product with coefficient +1.
    """
    if ring is None:
        if d is None or n is None:
            raise ValueError("give either a ring or both d and n")
        ring = Ring(d, n)
    if spec.rows[-1] > ring.d or spec.cols[-1] > ring.n or spec.rows[0] < 1 or spec.cols[0] < 1:
        raise ValueError(f"minor {spec} does not fit a {ring.d}x{ring.n} grid")
    return _leibniz(ring, spec.rows, spec.cols)


def minor(ring: Ring, rows: Iterable[int], cols: Iterable[int]) -> Polynomial:
    return minor_polynomial(MinorSpec(tuple(rows), tuple(cols)), ring=ring)


def ordered_minor(ring: Ring, rows: Iterable[int], cols: Sequence[int]) -> Polynomial:
    """Determinant with columns taken in the given (not necessarily sorted) order."""
    cols = list(cols)
    p = minor(ring, rows, cols)
    return p if permutation_sign(cols) == 1 else -p


def maximal_minor(ring: Ring, cols: Sequence[int]) -> Polynomial:
    """[B] = [1..d | B] with columns in the given order."""
    return ordered_minor(ring, range(1, ring.d + 1), cols)


def all_minors(ring: Ring, cols: Iterable[int]) -> list[Polynomial]:
    """All |cols|-minors of X on the columns ``cols`` (every row subset)."""
    cols = tuple(sorted(cols))
    t = len(cols)
    if t > ring.d:
        return []
    return [minor(ring, rows, cols) for rows in combinations(range(1, ring.d + 1), t)]
