"""Hypergraphs on [n], the k x l index grid and the hypergraphs Delta, Delta'."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator


def _edge(e: Iterable[int]) -> tuple[int, ...]:
    t = tuple(sorted(set(e)))
    if not t:
        raise ValueError("edges must be nonempty")
    return t


@dataclass(frozen=True)
class Hypergraph:
    """A set of nonempty subsets of a declared ground set inside [n].

    ``vertices`` defaults to all of [n]; :func:`induced` shrinks it so that
    vertices left without edges still count as (isolated) components.
    """

    n: int
    edges: frozenset = frozenset()
    vertices: frozenset = field(default=None)

    def __post_init__(self):
        edges = frozenset(_edge(e) for e in self.edges)
        verts = frozenset(range(1, self.n + 1)) if self.vertices is None else frozenset(self.vertices)
        if any(v < 1 or v > self.n for v in verts):
            raise ValueError(f"ground set must lie in [1, {self.n}]")
        for e in edges:
            if not set(e) <= verts:
                raise ValueError(f"edge {e} is not inside the ground set")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "vertices", verts)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]], vertices=None) -> "Hypergraph":
        return cls(n, frozenset(_edge(e) for e in edges), vertices)

    def sorted_edges(self) -> list[tuple[int, ...]]:
        """Edges ordered by size, then lexicographically."""
        return sorted(self.edges, key=lambda e: (len(e), e))

    def __len__(self):
        return len(self.edges)

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.sorted_edges())

    def __contains__(self, e) -> bool:
        return tuple(sorted(e)) in self.edges

    def union(self, other: "Hypergraph") -> "Hypergraph":
        return Hypergraph(self.n, self.edges | other.edges, self.vertices | other.vertices)

    def singletons(self) -> list[int]:
        return sorted(e[0] for e in self.edges if len(e) == 1)

    def covered(self) -> frozenset:
        return frozenset(v for e in self.edges for v in e)

    def to_json(self) -> dict:
        out = {"n": self.n, "edges": [list(e) for e in sorted(self.edges)]}
        if self.vertices != frozenset(range(1, self.n + 1)):
            out["vertices"] = sorted(self.vertices)
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json())

    @classmethod
    def from_json(cls, data: dict) -> "Hypergraph":
        return cls.from_edges(data["n"], data["edges"], data.get("vertices"))


@dataclass(frozen=True)
class GridShape:
    """The k x l matrix of indices with entry(i, j) = (j - 1) k + i."""

    k: int
    l: int

    def __post_init__(self):
        if self.k < 1 or self.l < 1:
            raise ValueError("grid dimensions must be positive")

    @property
    def size(self) -> int:
        return self.k * self.l

    def entry(self, i: int, j: int) -> int:
        return (j - 1) * self.k + i

    def position(self, v: int) -> tuple[int, int]:
        """Inverse of :meth:`entry`: the (row, column) holding ``v``."""
        return (v - 1) % self.k + 1, (v - 1) // self.k + 1

    def row(self, i: int) -> tuple[int, ...]:
        return tuple(self.entry(i, j) for j in range(1, self.l + 1))

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(self.entry(i, j) for i in range(1, self.k + 1))

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(1, self.k + 1)]

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(j) for j in range(1, self.l + 1)]


def _check_delta_params(k: int, l: int):
    if k < 2 or l < 3:
        raise ValueError(f"need k >= 2 and l >= 3, got k={k}, l={l}")


def build_delta(k: int, l: int) -> Hypergraph:
    """3-subsets of every row and 2-subsets of every column of the k x l grid."""
    _check_delta_params(k, l)
    g = GridShape(k, l)
    edges = [e for r in g.rows() for e in combinations(r, 3)]
    edges += [e for c in g.columns() for e in combinations(c, 2)]
    return Hypergraph.from_edges(g.size, edges)


def build_delta_prime(k: int, l: int) -> Hypergraph:
    """Each full row as one edge plus 2-subsets of every column."""
    _check_delta_params(k, l)
    g = GridShape(k, l)
    edges = list(g.rows())
    edges += [e for c in g.columns() for e in combinations(c, 2)]
    return Hypergraph.from_edges(g.size, edges)


def induced(h: Hypergraph, removed: Iterable[int]) -> Hypergraph:
    """Drop every edge meeting ``removed``; the ground set loses ``removed`` too."""
    removed = frozenset(removed)
    return Hypergraph(h.n, frozenset(e for e in h.edges if removed.isdisjoint(e)),
                      h.vertices - removed)


def connected_components(h: Hypergraph, covered_only: bool = False) -> list[frozenset]:
    """Components of the ground set, two vertices joined when they share an edge.

    Isolated ground-set vertices are singleton components unless
    ``covered_only`` is set.  Output is sorted by smallest element.
    """
    verts = h.covered() if covered_only else h.vertices
    parent = {v: v for v in verts}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for e in h.edges:
        root = find(e[0])
        for v in e[1:]:
            other = find(v)
            if other != root:
                parent[other] = root
    groups: dict[int, set] = {}
    for v in verts:
        groups.setdefault(find(v), set()).add(v)
    return sorted((frozenset(g) for g in groups.values()), key=min)


def r_completion(h: Hypergraph, r: int) -> Hypergraph:
    """``h`` together with every r-subset of a connected component."""
    if r < 1:
        raise ValueError("r must be positive")
    extra = [e for comp in connected_components(h) for e in combinations(sorted(comp), r)]
    return Hypergraph(h.n, h.edges | frozenset(extra), h.vertices)


def canonical_generating_edges(h: Hypergraph) -> Hypergraph:
    """Inclusion-minimal edges; the others only give redundant minors."""
    by_size = sorted(h.edges, key=len)
    keep: list[frozenset] = []
    for e in by_size:
        s = frozenset(e)
        if not any(k < s for k in keep):
            keep.append(s)
    return Hypergraph(h.n, frozenset(tuple(sorted(k)) for k in keep), h.vertices)
