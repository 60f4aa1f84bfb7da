"""Incidence types of small line arrangements and build-up certificates."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, permutations

from .model import LineArrangement

MAX_LINES = 4


@dataclass(frozen=True)
class IncidenceType:
    """``crossings`` are the sets of (1-based) lines meeting at a common point."""

    line_count: int
    crossings: tuple

    def to_json(self) -> dict:
        return {"lines": self.line_count, "crossings": [list(c) for c in self.crossings]}


def _canonical(m: int, crossings) -> tuple:
    best = None
    for perm in permutations(range(1, m + 1)):
        img = tuple(sorted(tuple(sorted(perm[i - 1] for i in c)) for c in crossings))
        if best is None or img < best:
            best = img
    return best


def enumerate_incidence_types(line_count: int) -> list[IncidenceType]:
    """Collections of >= 2-subsets of the lines, pairwise sharing <= 1 line, up to relabelling."""
    if not 1 <= line_count <= MAX_LINES:
        raise ValueError(f"line count must be in [1, {MAX_LINES}]")
    cands = [c for r in range(2, line_count + 1) for c in combinations(range(1, line_count + 1), r)]
    found = set()

    def extend(start, chosen):
        found.add(_canonical(line_count, chosen))
        for idx in range(start, len(cands)):
            c = cands[idx]
            if all(len(set(c) & set(o)) <= 1 for o in chosen):
                extend(idx + 1, chosen + [c])

    extend(0, [])
    ordered = sorted(found, key=lambda t: (len(t), [len(c) for c in t], t))
    return [IncidenceType(line_count, t) for t in ordered]


def arrangement_of_type(t: IncidenceType) -> LineArrangement:
    """One point per crossing plus private points so every line has three points."""
    points: list[list[int]] = []
    members: list[set] = [set() for _ in range(t.line_count)]
    for c in t.crossings:
        points.append([len(points) + 1])
        for line in c:
            members[line - 1].add(len(points) - 1)
    for line in range(t.line_count):
        while len(members[line]) < 3:
            points.append([len(points) + 1])
            members[line].add(len(points) - 1)
    return LineArrangement(len(points), (), points, members)


def _meets(arr: LineArrangement, line: int, others) -> int:
    """Number of points of ``line`` lying on some other line of ``others``."""
    own = set(arr.lines[line])
    return len({p for o in others if o != line for p in own & set(arr.lines[o])})


def is_complete_quadrilateral(arr: LineArrangement, lines) -> bool:
    """Four lines, each pair crossing, at six distinct points."""
    lines = list(lines)
    if len(lines) != 4:
        return False
    crossings = []
    for a, b in combinations(lines, 2):
        p = arr.intersection(a, b)
        if p is None:
            return False
        crossings.append(p)
    return len(set(crossings)) == 6


@dataclass
class BuildupCertificate:
    """Lines removed in order, each meeting the remaining lines in ``counts`` points.

    ``base`` names the irreducible core left at the end: ``"empty"`` when every
    line was removed, ``"complete-quadrilateral"`` for the four-line special case.
    """

    removal_order: list[int]
    counts: list[int]
    base: str = "empty"
    base_lines: list[int] = field(default_factory=list)

    @property
    def buildup_order(self) -> list[int]:
        return self.base_lines + self.removal_order[::-1]

    def to_json(self) -> dict:
        return {"removal_order": self.removal_order, "counts": self.counts,
                "base": self.base, "base_lines": self.base_lines}


def certify_irreducible_by_buildup(arr: LineArrangement) -> BuildupCertificate | None:
    """Peel off lines meeting the rest in at most two points.

    Incidence counts only drop as lines are removed, so a greedy choice never
    blocks a removal order that exists.  ``None`` means no certificate was
    found, which says nothing about reducibility.
    """
    remaining = list(range(len(arr.lines)))
    order, counts = [], []
    while remaining:
        for line in remaining:
            m = _meets(arr, line, remaining)
            if m <= 2:
                order.append(line)
                counts.append(m)
                remaining.remove(line)
                break
        else:
            if is_complete_quadrilateral(arr, remaining):
                return BuildupCertificate(order, counts, "complete-quadrilateral", sorted(remaining))
            return None
    return BuildupCertificate(order, counts)
