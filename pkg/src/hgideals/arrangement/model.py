"""Point and line arrangements on [n] with a set of zero points."""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from ..exactalg.linalg import RationalMatrix, proportional, rank_of_vectors
from ..hypergraph.core import GridShape
from ..hypergraph.ktwo import free_columns


@dataclass(frozen=True)
class LineArrangement:
    """Zero points, a partition of the rest into point blocks, and lines.

    ``lines`` hold indices into ``points``.  Points are stored sorted by their
    smallest element and lines sorted, so equal arrangements compare equal.
    """

    n: int
    zeros: frozenset
    points: tuple
    lines: tuple

    def __init__(self, n: int, zeros: Iterable[int], points: Iterable[Iterable[int]],
                 lines: Iterable[Iterable[int]] = ()):
        pts = [frozenset(p) for p in points]
        lines = [frozenset(l) for l in lines]
        order = sorted(range(len(pts)), key=lambda i: min(pts[i]) if pts[i] else 0)
        relabel = {old: new for new, old in enumerate(order)}
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "zeros", frozenset(zeros))
        object.__setattr__(self, "points", tuple(pts[i] for i in order))
        object.__setattr__(self, "lines", tuple(sorted(
            (tuple(sorted(relabel[i] for i in l)) for l in lines))))
        self.validate()

    def validate(self):
        seen = set(self.zeros)
        for p in self.points:
            if not p:
                raise ValueError("point blocks must be nonempty")
            if seen & p:
                raise ValueError("point blocks and zeros must be pairwise disjoint")
            seen |= p
        if seen != set(range(1, self.n + 1)):
            raise ValueError("zeros and point blocks must cover [n]")
        for line in self.lines:
            if len(line) < 3:
                raise ValueError("every line needs at least three distinct points")
            if any(i < 0 or i >= len(self.points) for i in line):
                raise ValueError("line refers to an unknown point")
        for a, b in combinations(self.lines, 2):
            if len(set(a) & set(b)) > 1:
                raise ValueError("two lines share more than one point")

    # -- queries -----------------------------------------------------------
    def point_of(self, v: int) -> int | None:
        for idx, p in enumerate(self.points):
            if v in p:
                return idx
        return None

    def lines_through(self, point: int) -> list[int]:
        return [i for i, l in enumerate(self.lines) if point in l]

    def line_columns(self, line: int) -> list[int]:
        return sorted(v for p in self.lines[line] for v in self.points[p])

    def intersection(self, a: int, b: int) -> int | None:
        common = set(self.lines[a]) & set(self.lines[b])
        return next(iter(common)) if common else None

    def key(self):
        """Labelling-free form: blocks as column sets, lines as sets of blocks."""
        lines = frozenset(frozenset(self.points[i] for i in l) for l in self.lines)
        return self.zeros, frozenset(self.points), lines

    def isomorphic(self, other: "LineArrangement") -> bool:
        return self.key() == other.key()

    def to_json(self) -> dict:
        return {"n": self.n, "zeros": sorted(self.zeros),
                "points": [sorted(p) for p in self.points],
                "lines": [list(l) for l in self.lines]}

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "LineArrangement":
        return cls(data["n"], data.get("zeros", ()), data["points"], data.get("lines", ()))


def build_L_of_S(shape: GridShape, s: Iterable[int]) -> LineArrangement:
    """The arrangement attached to S on the two-row grid."""
    if shape.k != 2:
        raise ValueError(f"only defined for two rows, got k={shape.k}")
    s = frozenset(s)
    n = shape.size
    if not s:
        points = shape.columns()
        return LineArrangement(n, (), points, [range(len(points))])
    cs = free_columns(shape, s)
    points = [cs] if cs else []
    points += [[v for v in c if v not in s] for c in shape.columns()
               if not s.isdisjoint(c) and not set(c) <= s]
    lines = []
    for row in shape.rows():
        live = {v for v in row if v not in s}
        on = [idx for idx, p in enumerate(points) if live & set(p)]
        if len(on) >= 3:
            lines.append(on)
    return LineArrangement(n, s, points, lines)


def is_compatible(arr: LineArrangement, shape: GridShape) -> bool:
    """Columns of the grid coincide; a row with three or more points is on a line."""
    if arr.n != shape.size:
        raise ValueError(f"arrangement has n={arr.n}, grid has {shape.size} entries")
    for col in shape.columns():
        blocks = {arr.point_of(v) for v in col if v not in arr.zeros}
        if len(blocks) > 1:
            return False
    for row in shape.rows():
        blocks = {arr.point_of(v) for v in row if v not in arr.zeros}
        if len(blocks) >= 3 and not any(blocks <= set(l) for l in arr.lines):
            return False
    return True


def _is_zero(v: Sequence) -> bool:
    return all(x == 0 for x in v)


def arrangement_from_matrix(a: RationalMatrix) -> LineArrangement:
    """M_A: zero columns, proportionality classes, and maximal collinear classes."""
    cols = a.columns()
    zeros = [c for c in range(1, a.n + 1) if _is_zero(cols[c - 1])]
    blocks: list[list[int]] = []
    reps: list[tuple] = []
    for c in range(1, a.n + 1):
        v = cols[c - 1]
        if _is_zero(v):
            continue
        for b, r in zip(blocks, reps):
            if proportional(r, v):
                b.append(c)
                break
        else:
            blocks.append([c])
            reps.append(v)
    lines: set[frozenset] = set()
    for p, q in combinations(range(len(blocks)), 2):
        on = frozenset(r for r in range(len(blocks))
                       if r in (p, q) or rank_of_vectors([reps[p], reps[q], reps[r]]) <= 2)
        if len(on) >= 3:
            lines.add(on)
    return LineArrangement(a.n, zeros, blocks, lines)
