"""Exact rational matrices and fraction-free rank."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Iterable, Sequence


class RationalMatrix:
    """A ``d x n`` matrix of exact rationals; columns are 1-based in the API."""

    __slots__ = ("rows", "d", "n")

    def __init__(self, rows: Sequence[Sequence[object]]):
        rows = [tuple(Fraction(x) for x in r) for r in rows]
        if not rows or not rows[0]:
            raise ValueError("matrix must be nonempty")
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ValueError("ragged matrix")
        self.rows = tuple(rows)
        self.d = len(rows)
        self.n = width

    @classmethod
    def zeros(cls, d: int, n: int) -> "RationalMatrix":
        return cls([[0] * n for _ in range(d)])

    @classmethod
    def identity(cls, d: int) -> "RationalMatrix":
        return cls([[int(i == j) for j in range(d)] for i in range(d)])

    @classmethod
    def from_columns(cls, cols: Sequence[Sequence[object]]) -> "RationalMatrix":
        d = len(cols[0])
        return cls([[c[i] for c in cols] for i in range(d)])

    def __getitem__(self, idx):
        return self.rows[idx]

    def entry(self, r: int, c: int) -> Fraction:
        return self.rows[r - 1][c - 1]

    def column(self, c: int) -> tuple[Fraction, ...]:
        return tuple(r[c - 1] for r in self.rows)

    def columns(self) -> list[tuple[Fraction, ...]]:
        return [self.column(c) for c in range(1, self.n + 1)]

    def __eq__(self, other):
        return isinstance(other, RationalMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"RationalMatrix({[[str(x) for x in r] for r in self.rows]})"

    def to_json(self) -> list[list[str]]:
        return [[f"{x.numerator}/{x.denominator}" for x in r] for r in self.rows]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "RationalMatrix":
        return cls([[Fraction(x) for x in r] for r in data])


def column_submatrix(m: RationalMatrix, cols: Iterable[int]) -> RationalMatrix:
    cols = list(cols)
    if not cols:
        raise ValueError("need at least one column")
    return RationalMatrix([[r[c - 1] for c in cols] for r in m.rows])


def _integer_rows(rows: Sequence[Sequence[Fraction]]) -> list[list[int]]:
    out = []
    for r in rows:
        den = lcm(*(Fraction(x).denominator for x in r)) if r else 1
        out.append([int(Fraction(x) * den) for x in r])
    return out


def rank_of_vectors(vectors: Sequence[Sequence[object]]) -> int:
    """Rank of a list of equal-length vectors (Bareiss elimination over Z)."""
    if not vectors:
        return 0
    a = _integer_rows([[Fraction(x) for x in v] for v in vectors])
    nrows, ncols = len(a), len(a[0])
    rank = 0
    prev = 1
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col]), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        p = a[rank][col]
        for r in range(rank + 1, nrows):
            for c in range(col + 1, ncols):
                a[r][c] = (p * a[r][c] - a[r][col] * a[rank][c]) // prev
            a[r][col] = 0
        prev = p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank(m: RationalMatrix) -> int:
    """Exact rank of ``m``."""
    return rank_of_vectors(m.rows)


def columns_rank(m: RationalMatrix, cols: Iterable[int]) -> int:
    return rank_of_vectors([m.column(c) for c in cols])


def proportional(u: Sequence[Fraction], v: Sequence[Fraction]) -> bool:
    """True iff ``u`` and ``v`` span at most a line (all 2x2 minors vanish)."""
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] * v[j] != u[j] * v[i]:
                return False
    return True


def determinant(rows: Sequence[Sequence[object]]) -> Fraction:
    """Determinant by fraction-free elimination."""
    a = _integer_rows([[Fraction(x) for x in r] for r in rows])
    scale = Fraction(1)
    for r, orig in zip(a, rows):
        den = lcm(*(Fraction(x).denominator for x in orig))
        scale /= den
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((r for r in range(k + 1, n) if a[r][k]), None)
            if swap is None:
                return Fraction(0)
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * Fraction(a[n - 1][n - 1]) * scale


def nullspace_vector(rows: Sequence[Sequence[object]]) -> list[Fraction] | None:
    """Some nonzero vector ``v`` with ``rows @ v = 0`` (``None`` if only zero)."""
    a = [[Fraction(x) for x in r] for r in rows]
    if not a:
        return None
    ncols = len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        p = next((i for i in range(r, len(a)) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(len(a)):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == len(a):
            break
    free = [c for c in range(ncols) if c not in pivots]
    if not free:
        return None
    v = [Fraction(0)] * ncols
    v[free[0]] = Fraction(1)
    for row, c in zip(a, pivots):
        v[c] = -row[free[0]]
    return v
