"""The polynomial families F(L) and G_L of an arrangement."""

from __future__ import annotations

from itertools import combinations, permutations, product

from ..exactalg.minors import MinorSpec, maximal_minor, minor
from ..exactalg.polynomial import Polynomial, Ring
from .model import LineArrangement


def _minor_specs(d: int, cols, size: int) -> list[MinorSpec]:
    if size > d:
        return []
    return [MinorSpec(rows, tuple(cols)) for rows in combinations(range(1, d + 1), size)]


def _collinear_triples(arr: LineArrangement):
    """Column triples taking one column from each of three points on a line."""
    out = set()
    for line in arr.lines:
        for trio in combinations(line, 3):
            for cols in product(*(sorted(arr.points[p]) for p in trio)):
                out.add(tuple(sorted(cols)))
    return sorted(out)


def F_specs(arr: LineArrangement, d: int) -> tuple[list[tuple[int, int]], list[MinorSpec]]:
    """Zero-column variables and the minors making up F(L)."""
    if d < 3:
        raise ValueError("d must be at least 3")
    variables = [(r, c) for c in sorted(arr.zeros) for r in range(1, d + 1)]
    specs: list[MinorSpec] = []
    for p in arr.points:
        for pair in combinations(sorted(p), 2):
            specs += _minor_specs(d, pair, 2)
    for cols in _collinear_triples(arr):
        specs += _minor_specs(d, cols, 3)
    if d >= 4:
        seen = set()
        for a, b in combinations(range(len(arr.lines)), 2):
            if arr.intersection(a, b) is None:
                continue
            union = sorted(set(arr.line_columns(a)) | set(arr.line_columns(b)))
            for quad in combinations(union, 4):
                for spec in _minor_specs(d, quad, 4):
                    if spec not in seen:
                        seen.add(spec)
                        specs.append(spec)
    return variables, specs


def F_of_L(arr: LineArrangement, d: int, ring: Ring | None = None) -> list[Polynomial]:
    ring = ring or Ring(d, arr.n)
    variables, specs = F_specs(arr, d)
    return [ring.var(r, c) for r, c in variables] + [minor(ring, s.rows, s.cols) for s in specs]


def _sign_free_key(p: Polynomial):
    q = p if p.leading_coefficient() > 0 else -p
    return frozenset(q.terms.items())


def concurrency_binomials(arr: LineArrangement, ring: Ring) -> list[Polynomial]:
    """[cda][efb] - [cdb][efa] for every three lines through one point.

    (c, d), (a, b), (e, f) are pairs of points other than the common one, one
    pair per line, each pair taken in increasing column order; every way of
    giving the three roles to the three lines is used, and results are
    deduplicated up to sign.
    """
    out: dict = {}
    for l1, l2, l3 in combinations(range(len(arr.lines)), 3):
        common = set(arr.lines[l1]) & set(arr.lines[l2]) & set(arr.lines[l3])
        if not common:
            continue
        centre = next(iter(common))

        def pairs(line):
            others = [p for p in arr.lines[line] if p != centre]
            for p, q in combinations(others, 2):
                for cp, cq in product(sorted(arr.points[p]), sorted(arr.points[q])):
                    yield tuple(sorted((cp, cq)))

        for x, y, z in permutations((l1, l2, l3)):
            for (c, d), (a, b), (e, f) in product(pairs(x), pairs(y), pairs(z)):
                poly = (maximal_minor(ring, (c, d, a)) * maximal_minor(ring, (e, f, b))
                        - maximal_minor(ring, (c, d, b)) * maximal_minor(ring, (e, f, a)))
                if poly.is_zero():
                    continue
                out.setdefault(_sign_free_key(poly), poly)
    return list(out.values())


def G_of_L(arr: LineArrangement, d: int = 3, ring: Ring | None = None) -> list[Polynomial]:
    """Variables, point 2-minors, collinear 3-minors and the concurrency binomials."""
    if d != 3:
        raise ValueError("G_L is only defined here for d = 3")
    ring = ring or Ring(d, arr.n)
    variables, specs = F_specs(arr, d)
    gens = [ring.var(r, c) for r, c in variables]
    gens += [minor(ring, s.rows, s.cols) for s in specs if s.size <= 3]
    return gens + concurrency_binomials(arr, ring)
