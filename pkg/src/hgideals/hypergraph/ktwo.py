"""The two-row families: D and its complement, H(S), F(i,j,c) and minimal subsets."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterable

from .core import (
    GridShape,
    Hypergraph,
    build_delta,
    canonical_generating_edges,
    connected_components,
    induced,
    r_completion,
)
from .symmetry import canonical_form, orbit_size

MAX_ENUMERATION_L = 12

REGIME_D = "D"
REGIME_DC = "Dc"


@dataclass(frozen=True)
class SubsetClass:
    S: tuple[int, ...]
    regime: str
    minimal: bool | None
    orbit_canon: tuple[int, ...]

    @property
    def in_D(self) -> bool:
        return self.regime == REGIME_D


def _require_k2(shape: GridShape):
    if shape.k != 2:
        raise ValueError(f"only defined for two rows, got k={shape.k}")


def _subset(shape: GridShape, s: Iterable[int]) -> frozenset:
    s = frozenset(s)
    if any(v < 1 or v > shape.size for v in s):
        raise ValueError(f"subset {sorted(s)} is not inside [{shape.size}]")
    return s


def in_D(shape: GridShape, s: Iterable[int]) -> bool:
    """S is empty, or Delta with S removed has at least two components.

    Components are counted on the ground set [kl] \\ S, so a vertex that loses
    all its edges is a component of its own.
    """
    s = _subset(shape, s)
    if not s:
        return True
    return len(connected_components(induced(build_delta(shape.k, shape.l), s))) >= 2


def free_columns(shape: GridShape, s: Iterable[int]) -> tuple[int, ...]:
    """C(S): the union of the columns that avoid S."""
    s = frozenset(s)
    return tuple(v for c in shape.columns() if s.isdisjoint(c) for v in c)


def is_minimal(shape: GridShape, s: Iterable[int]) -> bool:
    _require_k2(shape)
    s = _subset(shape, s)
    if not s:
        return True
    r1 = [v for v in shape.row(1) if v not in s]
    r2 = [v for v in shape.row(2) if v not in s]
    cols1 = {shape.position(v)[1] for v in r1}
    cols2 = {shape.position(v)[1] for v in r2}
    if cols1 <= cols2 or cols2 <= cols1:
        return False
    if any(set(c) <= s for c in shape.columns()):
        return False
    return len(r1) >= 2 and len(r2) >= 2


def classify_S(shape: GridShape, s: Iterable[int]) -> SubsetClass:
    s = _subset(shape, s)
    regime = REGIME_D if in_D(shape, s) else REGIME_DC
    minimal = is_minimal(shape, s) if shape.k == 2 else None
    return SubsetClass(tuple(sorted(s)), regime, minimal, canonical_form(shape, s))


def build_H_of_S(shape: GridShape, s: Iterable[int]) -> Hypergraph:
    _require_k2(shape)
    s = _subset(shape, s)
    n = shape.size
    delta = build_delta(shape.k, shape.l)
    singles = [(v,) for v in sorted(s)]
    if in_D(shape, s):
        completed = r_completion(induced(delta, s), 3)
        return Hypergraph.from_edges(n, list(completed.edges) + singles)
    cs = free_columns(shape, s)
    edges = singles + list(combinations(cs, 2))
    for row in shape.rows():
        part = sorted({v for v in row if v not in s} | set(cs))
        edges += combinations(part, 3)
    edges += combinations([v for v in range(1, n + 1) if v not in s], 4)
    return Hypergraph.from_edges(n, edges)


def build_I0_hypergraph(shape: GridShape) -> Hypergraph:
    """Column 2-subsets plus every 3-subset of [kl] (the empty-S hypergraph)."""
    n = shape.size
    edges = [e for c in shape.columns() for e in combinations(c, 2)]
    edges += combinations(range(1, n + 1), 3)
    return Hypergraph.from_edges(n, edges)


def build_F_ijc(i: int, j: int, c: int) -> Hypergraph:
    if min(i, j, c) < 0:
        raise ValueError("i, j, c must be nonnegative")
    if i > j:
        raise ValueError(f"need i <= j, got i={i}, j={j}")
    n = i + j + c
    mid = list(range(i + 1, i + c + 1))
    edges = list(combinations(mid, 2))
    edges += combinations(range(1, i + c + 1), 3)
    edges += combinations(range(i + 1, n + 1), 3)
    edges += combinations([v for v in range(1, n + 1) if not i < v <= i + c], 4)
    return Hypergraph.from_edges(n, edges)


@dataclass(frozen=True)
class Standardization:
    """Relabelling phi taking H(S) minus its singletons onto F(i, j, c)."""

    i: int
    j: int
    c: int
    phi: dict

    def apply(self, h: Hypergraph) -> Hypergraph:
        n = self.i + self.j + self.c
        edges = [tuple(self.phi[v] for v in e) for e in h.edges if all(v in self.phi for v in e)]
        return Hypergraph.from_edges(n, edges)


def standardize(shape: GridShape, s: Iterable[int]) -> Standardization:
    """I = R_1 \\ (S u C) goes to 1..i, C to the middle, J = R_2 \\ (S u C) to the end.

    The rows are swapped first when that is needed for i <= j.
    """
    _require_k2(shape)
    s = _subset(shape, s)
    cs = free_columns(shape, s)
    rest1 = [v for v in shape.row(1) if v not in s and v not in cs]
    rest2 = [v for v in shape.row(2) if v not in s and v not in cs]
    if len(rest1) > len(rest2):
        rest1, rest2 = rest2, rest1
    order = rest1 + list(cs) + rest2
    phi = {v: idx for idx, v in enumerate(order, 1)}
    return Standardization(len(rest1), len(rest2), len(cs), phi)


def enumerate_minimal(l: int) -> list[list[tuple[int, ...]]]:
    """All minimal S on the 2 x l grid, grouped by orbit.

    A column contained in S is never minimal, so only the 3^l subsets meeting
    each column at most once are scanned.  Groups are ordered by their
    canonical form and each group is sorted; the canonical form comes first.
    """
    if l < 1:
        raise ValueError("l must be positive")
    if l > MAX_ENUMERATION_L:
        raise ValueError(f"exhaustive enumeration is capped at l <= {MAX_ENUMERATION_L}")
    shape = GridShape(2, l)
    groups: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    canon_of: dict[tuple[int, ...], tuple[int, ...]] = {}
    for states in product((0, 1, 2), repeat=l):
        s = tuple(shape.entry(st, j) for j, st in enumerate(states, 1) if st)
        if not is_minimal(shape, s):
            continue
        # the orbit only depends on the multiset of column states
        key = tuple(sorted(states))
        if key not in canon_of:
            canon_of[key] = canonical_form(shape, s)
        groups.setdefault(canon_of[key], []).append(s)
    out = []
    for canon in sorted(groups, key=lambda t: (len(t), t)):
        members = sorted(groups[canon])
        members.remove(canon)
        out.append([canon] + members)
    return out


def minimal_classes(l: int) -> list[tuple[tuple[int, ...], int]]:
    """Canonical representative and orbit size of every minimal class."""
    shape = GridShape(2, l)
    return [(g[0], orbit_size(shape, g[0])) for g in enumerate_minimal(l)]


def ideal_hypergraph_of_S(shape: GridShape, s: Iterable[int]) -> Hypergraph:
    """Inclusion-minimal edges of H(S)."""
    return canonical_generating_edges(build_H_of_S(shape, s))
