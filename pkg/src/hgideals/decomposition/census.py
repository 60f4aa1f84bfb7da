"""Censuses of the minimal prime components, grouped by symmetry class."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from ..arrangement.model import LineArrangement, build_L_of_S
from ..hypergraph.core import (
    GridShape,
    Hypergraph,
    build_delta,
    canonical_generating_edges,
    connected_components,
    induced,
)
from ..hypergraph.ktwo import MAX_ENUMERATION_L, enumerate_minimal, free_columns, in_D
from ..hypergraph.symmetry import canonical_form, orbit_size

# Reference rows for (3,4): singletons, 2-cliques, 3-cliques.
TABLE_3_4: tuple[tuple[tuple, tuple, tuple], ...] = (
    ((), ((1, 2, 3), (4, 5, 6), (7, 8, 9), (10, 11, 12)), (tuple(range(1, 13)),)),
    ((1, 2, 6, 9), ((4, 5), (7, 8), (10, 11, 12)), ((4, 5, 7, 8, 10, 11, 12),)),
    ((1, 5, 6, 8, 9), ((2, 3), (10, 11, 12)), ((4, 7, 10, 11, 12),)),
    ((1, 5, 6, 8, 12), ((2, 3), (7, 9), (10, 11)), ((4, 7, 9, 10, 11),)),
    ((1, 4, 8, 12), ((2, 3, 5, 6), (7, 9), (10, 11)), ()),
    ((1, 2, 6), ((4, 5), (7, 8, 9, 10, 11, 12)), ()),
    ((1, 2, 7, 9, 11, 12), ((4, 5, 6),), ()),
    ((1, 2, 4, 5, 9, 12), ((7, 8), (10, 11)), ()),
    ((1, 4, 5, 8, 9, 12), ((2, 3), (10, 11)), ()),
)

# Reference orbit sizes next to each row, for comparison only.
REFERENCE_SIZES_3_4 = (1, 36, 36, 72, 24, 36, 24, 18, 72)
REFERENCE_TOTAL_3_4 = 319

# Reference representatives and sizes for (2,5), in table order.
REFERENCE_2_5 = (
    ((), 1), ((1, 4, 6, 8), 20), ((1, 3, 6, 8, 10), 10),
    ((1, 4), 20), ((1, 3, 6, 8), 60), ((1, 4, 6), 60),
)
REFERENCE_TOTAL_2_5 = 171


def table_hypergraph(n: int, row) -> Hypergraph:
    singles, pairs, triples = row
    edges = [(v,) for v in singles]
    for block in pairs:
        edges += combinations(block, 2)
    for block in triples:
        edges += combinations(block, 3)
    return Hypergraph.from_edges(n, edges)


def arrangement_of_hypergraph(h: Hypergraph) -> LineArrangement:
    """Read an arrangement off a hypergraph of singletons, 2-cliques and 3-cliques.

    Singletons are zeros, components of the 2-edges are points, and each
    component of the 3-edges becomes a line through the points it meets
    when there are at least three of them.
    """
    zeros = frozenset(h.singletons())
    rest = frozenset(range(1, h.n + 1)) - zeros
    pair_graph = Hypergraph(h.n, frozenset(e for e in h.edges if len(e) == 2), rest)
    points = [sorted(c) for c in connected_components(pair_graph)]
    block_of = {v: i for i, p in enumerate(points) for v in p}
    triple_graph = Hypergraph(h.n, frozenset(e for e in h.edges if len(e) == 3))
    lines = []
    for comp in connected_components(triple_graph, covered_only=True):
        on = sorted({block_of[v] for v in comp if v in block_of})
        if len(on) >= 3:
            lines.append(on)
    return LineArrangement(h.n, zeros, points, lines)


def table_arrangement(row, n: int = 12) -> LineArrangement:
    return arrangement_of_hypergraph(table_hypergraph(n, row))


def _fmt_set(vs) -> str:
    return "{" + ",".join(map(str, vs)) + "}"


def _fmt_family(verts, r) -> str:
    if len(verts) == r:
        return _fmt_set(verts)
    return f"binom({_fmt_set(verts)},{r})"


def describe_families(n: int, singles, families, d: int) -> str:
    """Singletons then families binom(V, r), keeping only families that add generators.

    A family is shown when it contributes an inclusion-minimal edge of size
    at most d to the whole hypergraph.
    """
    families = [(tuple(sorted(v)), r) for v, r in families if len(v) >= r]
    edges = [(v,) for v in singles] + [e for v, r in families for e in combinations(v, r)]
    minimal = canonical_generating_edges(Hypergraph.from_edges(n, edges)).edges
    parts = [str(v) for v in sorted(singles)]
    for verts, r in families:
        if r <= d and any(e in minimal for e in combinations(verts, r)):
            parts.append(_fmt_family(verts, r))
    return "{" + ", ".join(parts) + "}"


def H_of_S_families(shape: GridShape, s) -> list[tuple[tuple[int, ...], int]]:
    """The defining families of H(S) as (vertex set, edge size) pairs."""
    s = frozenset(s)
    delta = build_delta(shape.k, shape.l)
    if in_D(shape, s):
        rest = induced(delta, s)
        fams = [(e, 2) for e in sorted(rest.edges) if len(e) == 2]
        fams += [(tuple(sorted(c)), 3) for c in connected_components(rest)]
        return fams
    cs = free_columns(shape, s)
    fams = [(cs, 2)]
    for row in shape.rows():
        fams.append((tuple(sorted({v for v in row if v not in s} | set(cs))), 3))
    fams.append((tuple(v for v in range(1, shape.size + 1) if v not in s), 4))
    return fams


@dataclass
class CensusClass:
    representative: tuple[int, ...]
    orbit_size: int
    regime: str | None
    hypergraph: str
    arrangement: dict
    lines: int
    reference_representative: tuple[int, ...] | None = None
    reference_size: int | None = None

    def to_json(self) -> dict:
        out = dict(self.__dict__)
        out["representative"] = list(self.representative)
        if self.reference_representative is not None:
            out["reference_representative"] = list(self.reference_representative)
        return out


@dataclass
class CensusReport:
    k: int
    l: int
    d: int
    classes: list[CensusClass] = field(default_factory=list)
    source: str = "enumerated"
    direct_count: int | None = None

    @property
    def total(self) -> int:
        return sum(c.orbit_size for c in self.classes)

    @property
    def sizes(self) -> list[int]:
        return [c.orbit_size for c in self.classes]

    def to_json(self) -> dict:
        return {"k": self.k, "l": self.l, "d": self.d, "source": self.source,
                "total": self.total, "direct_count": self.direct_count,
                "classes": [c.to_json() for c in self.classes]}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2)

    def table(self) -> str:
        head = ("Type of ideal", "Hypergraph of ideal", "Number of ideals with the same type")
        rows = [("I_" + (",".join(map(str, c.representative)) or "0"), c.hypergraph, str(c.orbit_size))
                for c in self.classes]
        widths = [max(len(r[i]) for r in [head, *rows]) for i in range(3)]
        lines = ["  ".join(h.ljust(w) for h, w in zip(head, widths)).rstrip()]
        lines.append("  ".join("-" * w for w in widths))
        lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows]
        lines.append(f"total components: {self.total} in {len(self.classes)} classes")
        return "\n".join(lines)


def _census_k2(l: int, d: int) -> CensusReport:
    shape = GridShape(2, l)
    groups = enumerate_minimal(l)
    reference = {canonical_form(shape, s): (s, size) for s, size in REFERENCE_2_5} if l == 5 else {}
    report = CensusReport(2, l, d, direct_count=sum(len(g) for g in groups))
    for g in groups:
        rep = g[0]
        arr = build_L_of_S(shape, rep)
        p_rep, p_size = reference.get(rep, (None, None))
        report.classes.append(CensusClass(
            rep, orbit_size(shape, rep), "D" if in_D(shape, rep) else "Dc",
            describe_families(shape.size, rep, H_of_S_families(shape, rep), d), arr.to_json(),
            len(arr.lines), p_rep, p_size))
    return report


def _census_k3l4(d: int) -> CensusReport:
    shape = GridShape(3, 4)
    report = CensusReport(3, 4, d, source="table")
    for row, reference_size in zip(TABLE_3_4, REFERENCE_SIZES_3_4):
        s = row[0]
        h = table_hypergraph(12, row)
        arr = arrangement_of_hypergraph(h)
        report.classes.append(CensusClass(
            tuple(s), orbit_size(shape, s), None, describe_families(12, row[0], [(b, 2) for b in row[1]] + [(b, 3) for b in row[2]], d), arr.to_json(),
            len(arr.lines), tuple(s), reference_size))
    return report


def census(k: int, l: int, d: int = 3) -> CensusReport:
    if k == 2 and 3 <= l <= MAX_ENUMERATION_L:
        return _census_k2(l, d)
    if (k, l) == (3, 4):
        return _census_k3l4(d)
    raise ValueError(f"census is supported for k=2 with 3 <= l <= {MAX_ENUMERATION_L} "
                     f"and for (k,l)=(3,4), not ({k},{l})")
