"""Bases, the configuration-space test and an exact random sampler."""

from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from ..exactalg.linalg import RationalMatrix, rank_of_vectors
from ..exactalg.polynomial import Ring
from .incidence import certify_irreducible_by_buildup
from .model import LineArrangement
from .polys import F_of_L

COORD_RANGE = 100
MAX_RESAMPLES = 32


class SamplingError(RuntimeError):
    pass


class Unrealizable(SamplingError):
    """The arrangement is outside what the sampler knows how to build."""


def _independent(arr: LineArrangement, cols: tuple[int, ...], block_of: dict) -> bool:
    blocks = [block_of[c] for c in cols]
    if len(set(blocks)) < len(blocks):
        return False
    for line in arr.lines:
        if sum(b in line for b in blocks) >= 3:
            return False
    return True


def enumerate_bases(arr: LineArrangement, d: int) -> list[tuple[int, ...]]:
    """Maximal column sets of size <= d avoiding zeros, coincidences and collinear triples."""
    block_of = {c: i for i, p in enumerate(arr.points) for c in p}
    cols = sorted(block_of)
    valid: set[tuple[int, ...]] = set()
    frontier = [()]
    for size in range(1, d + 1):
        nxt = []
        for base in frontier:
            start = base[-1] + 1 if base else 1
            for c in cols:
                if c < start:
                    continue
                cand = base + (c,)
                if _independent(arr, cand, block_of):
                    nxt.append(cand)
        valid.update(nxt)
        frontier = nxt
        if not nxt:
            break

    def extendable(b):
        if len(b) == d:
            return False
        return any(c not in b and tuple(sorted(b + (c,))) in valid for c in cols)

    return sorted(b for b in valid if not extendable(b))


@lru_cache(maxsize=256)
def _cached_F(arr: LineArrangement, d: int):
    return F_of_L(arr, d, Ring(d, arr.n))


@lru_cache(maxsize=256)
def _cached_bases(arr: LineArrangement, d: int):
    return enumerate_bases(arr, d)


def is_configuration(a: RationalMatrix, arr: LineArrangement, d: int | None = None) -> bool:
    """F(L) vanishes at ``a`` and every basis has full column rank."""
    d = a.d if d is None else d
    if a.d != d or a.n != arr.n:
        raise ValueError(f"matrix is {a.d}x{a.n}, expected {d}x{arr.n}")
    rows = a.rows
    if any(not p.evaluate(rows) == 0 for p in _cached_F(arr, d)):
        return False
    for b in _cached_bases(arr, d):
        if rank_of_vectors([a.column(c) for c in b]) != len(b):
            return False
    return True


def _rand_vec(rng: random.Random, d: int) -> list[int]:
    while True:
        v = [rng.randint(-COORD_RANGE, COORD_RANGE) for _ in range(d)]
        if any(v):
            return v


def _rand_nonzero(rng: random.Random) -> int:
    while True:
        c = rng.randint(-COORD_RANGE, COORD_RANGE)
        if c:
            return c


def _combo(rng: random.Random, basis: list[list], d: int) -> list:
    while True:
        coeffs = [_rand_nonzero(rng) for _ in basis]
        v = [sum(c * b[i] for c, b in zip(coeffs, basis)) for i in range(d)]
        if any(v):
            return v


def _cross(u, v):
    return [u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]]


def _place_quadrilateral(arr: LineArrangement, lines: list[int], d: int, rng, vecs: dict):
    """Four lines in general position in the projective plane, embedded in K^d."""
    if d < 3:
        raise Unrealizable("four lines need d >= 3")
    normals = [_rand_vec(rng, 3) for _ in lines]
    embed = [_rand_vec(rng, 3) for _ in range(d)]  # d x 3, rows are random

    def lift(v3):
        return [sum(e[i] * v3[i] for i in range(3)) for e in embed]

    planar: dict[int, list] = {}
    for (a, na), (b, nb) in combinations(zip(lines, normals), 2):
        p = arr.intersection(a, b)
        planar[p] = _cross(na, nb)
    for line in lines:
        on = [p for p in arr.lines[line] if p in planar]
        for p in arr.lines[line]:
            if p not in planar:
                planar[p] = _combo(rng, [planar[q] for q in on[:2]], 3)
    for p, v in planar.items():
        vecs[p] = lift(v)


def _point_vectors(arr: LineArrangement, d: int, rng: random.Random) -> dict[int, list]:
    cert = certify_irreducible_by_buildup(arr)
    if cert is None:
        raise Unrealizable("no build-up order for this arrangement")
    vecs: dict[int, list] = {}
    if cert.base == "complete-quadrilateral":
        _place_quadrilateral(arr, cert.base_lines, d, rng, vecs)
    for line in cert.removal_order[::-1]:
        placed = [p for p in arr.lines[line] if p in vecs]
        if len(placed) > 2:
            raise Unrealizable("a line meets the earlier ones in more than two points")
        span = [vecs[p] for p in placed]
        while len(span) < 2:
            span.append(_rand_vec(rng, d))
        for p in arr.lines[line]:
            if p not in vecs:
                vecs[p] = _combo(rng, span, d)
    for p in range(len(arr.points)):
        if p not in vecs:
            vecs[p] = _rand_vec(rng, d)
    return vecs


def _draw(arr: LineArrangement, d: int, rng: random.Random) -> RationalMatrix:
    vecs = _point_vectors(arr, d, rng)
    cols: list[list] = [[0] * d for _ in range(arr.n)]
    for p, block in enumerate(arr.points):
        for c in block:
            lam = _rand_nonzero(rng)
            cols[c - 1] = [lam * x for x in vecs[p]]
    return RationalMatrix.from_columns(cols)


def sample_configuration(arr: LineArrangement, d: int, seed: int | random.Random = 0,
                         retries: int = MAX_RESAMPLES) -> RationalMatrix:
    """A random integer matrix in the configuration space of ``arr``.

    Lines are built in a build-up order: a line's 2-dimensional span comes
    from the (at most two) points already placed on it, topped up with random
    vectors.  Draws failing :func:`is_configuration` are redrawn.
    """
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    for _ in range(retries):
        a = _draw(arr, d, rng)
        if is_configuration(a, arr, d):
            return a
    raise SamplingError(f"no generic sample after {retries} attempts")


def random_matrix(d: int, n: int, rng: random.Random) -> RationalMatrix:
    return RationalMatrix([[Fraction(rng.randint(-COORD_RANGE, COORD_RANGE)) for _ in range(n)]
                           for _ in range(d)])
