"""Hypergraph ideals, Gröbner-basis checks and containment tests."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Sequence

from ..exactalg.groebner import (
    CHECK_BUDGET,
    Budget,
    GroebnerBasis,
    buchberger_check,
    buchberger_complete,
    is_radical_by_squarefree_initials,
)
from ..exactalg.minors import MinorSpec, minor
from ..exactalg.polynomial import Polynomial, Ring
from ..hypergraph.core import (
    GridShape,
    Hypergraph,
    build_delta,
    canonical_generating_edges,
    connected_components,
    induced,
)
from ..hypergraph.ktwo import (
    build_F_ijc,
    build_I0_hypergraph,
    ideal_hypergraph_of_S,
    in_D,
    standardize,
)


@dataclass
class IdealSpec:
    """Generators [A|B] for every inclusion-minimal edge B with |B| <= d."""

    hypergraph: Hypergraph
    d: int
    specs: list[MinorSpec]
    ring: Ring

    @property
    def generators(self) -> list[Polynomial]:
        if not hasattr(self, "_gens"):
            self._gens = [minor(self.ring, s.rows, s.cols) for s in self.specs]
        return self._gens

    def __len__(self):
        return len(self.specs)


def ideal_of(h: Hypergraph, d: int) -> IdealSpec:
    if d < 1:
        raise ValueError("d must be positive")
    edges = sorted(canonical_generating_edges(h).edges, key=lambda e: (len(e), e))
    specs = [MinorSpec(rows, e) for e in edges if len(e) <= d
             for rows in combinations(range(1, d + 1), len(e))]
    return IdealSpec(h, d, specs, Ring(d, h.n))


def ideal_of_S(shape: GridShape, s: Iterable[int], d: int = 3) -> IdealSpec:
    return ideal_of(ideal_hypergraph_of_S(shape, s), d)


def ideal_I0(shape: GridShape, d: int = 3) -> IdealSpec:
    return ideal_of(build_I0_hypergraph(shape), d)


def ideal_delta(k: int, l: int, d: int = 3) -> IdealSpec:
    return ideal_of(build_delta(k, l), d)


def relabel(h: Hypergraph, phi: dict) -> Hypergraph:
    """Rename vertices by the bijection ``phi`` of [n]."""
    return Hypergraph.from_edges(h.n, [tuple(phi[v] for v in e) for e in h.edges])


def standard_relabelling(shape: GridShape, s: Iterable[int]) -> dict:
    """The standardizing order on [kl] \\ S, followed by S itself."""
    s = sorted(s)
    phi = dict(standardize(shape, s).phi)
    for v in s:
        phi[v] = len(phi) + 1
    return phi


@dataclass
class GBReport:
    kind: str
    params: tuple
    d: int
    generators: int
    is_gb: bool
    radical: bool
    pairs_reduced: int
    pairs_skipped: int
    seconds: float
    column_order: str = "natural"
    split_ok: bool | None = None
    failing_pair: tuple | None = None

    def to_json(self) -> dict:
        return {k: (list(v) if isinstance(v, tuple) else v) for k, v in self.__dict__.items()}


def _check(kind, params, d, spec: IdealSpec, budget: Budget, order_label="natural") -> GBReport:
    t0 = time.perf_counter()
    gens = spec.generators
    verdict = buchberger_check(gens, budget=budget)
    radical = verdict.is_gb and is_radical_by_squarefree_initials(gens)
    return GBReport(kind, tuple(params), d, len(gens), verdict.is_gb, radical,
                    verdict.pairs_reduced, verdict.pairs_skipped, time.perf_counter() - t0,
                    order_label, None, verdict.failing_pair)


def components_split(shape: GridShape, s: Iterable[int], spec: IdealSpec) -> bool:
    """For S in D, generators of different components of Delta_S share no variable."""
    s = frozenset(s)
    comps = connected_components(induced(build_delta(shape.k, shape.l), s))
    where = {v: i for i, comp in enumerate(comps) for v in comp}
    owner: dict[int, object] = {}
    for spec_ in spec.specs:
        tags = {where.get(c, ("zero", c)) for c in spec_.cols}
        if len(tags) != 1:
            return False
        tag = tags.pop()
        for c in spec_.cols:
            if owner.setdefault(c, tag) != tag:
                return False
    return True


def verify_gb_family(kind: str, params: Sequence, d: int = 3,
                     budget: Budget = CHECK_BUDGET) -> GBReport:
    """Buchberger's criterion on the canonical generators of one ideal.

    ``kind`` is ``"F"`` with params (i, j, c), ``"I0"`` with (k, l), or
    ``"IS"`` with (k, l, S).  For S in the complement of D the natural column
    order is tried first; if that is not a Gröbner basis the columns are put
    in the standardizing order and the check is repeated.
    """
    if kind == "F":
        i, j, c = params
        return _check(kind, params, d, ideal_of(build_F_ijc(i, j, c), d), budget)
    if kind == "I0":
        k, l = params
        return _check(kind, params, d, ideal_I0(GridShape(k, l), d), budget)
    if kind == "IS":
        k, l, s = params
        shape = GridShape(k, l)
        s = tuple(sorted(s))
        spec = ideal_of_S(shape, s, d)
        rep = _check(kind, (k, l, s), d, spec, budget)
        if in_D(shape, s):
            rep.split_ok = components_split(shape, s, spec)
        elif not rep.is_gb:
            phi = standard_relabelling(shape, s)
            moved = ideal_of(relabel(spec.hypergraph, phi), d)
            rep = _check(kind, (k, l, s), d, moved, budget, "standardized")
        return rep
    raise ValueError(f"unknown family {kind!r}")


def groebner_basis_of(spec: IdealSpec, budget: Budget = Budget(max_degree=None)) -> GroebnerBasis:
    """The canonical generators if they already form a Gröbner basis, else a completion."""
    gens = spec.generators
    verdict = buchberger_check(gens, budget=CHECK_BUDGET)
    if verdict.is_gb:
        return GroebnerBasis(list(gens), stats={"completed": False})
    gb = buchberger_complete(gens, budget=budget)
    gb.stats["completed"] = True
    return gb


@dataclass
class ContainmentResult:
    contained: bool
    checked: int
    witness: Polynomial | None = None
    witness_index: int | None = None
    normal_form: Polynomial | None = None
    details: dict = field(default_factory=dict)

    def __bool__(self):
        return self.contained


def check_containment(inner: IdealSpec | Sequence[Polynomial], outer: GroebnerBasis) -> ContainmentResult:
    """Reduce every generator of ``inner`` modulo ``outer``; stop at the first nonzero remainder."""
    if not outer.verified:
        raise ValueError("outer basis is not a verified Gröbner basis")
    gens = inner.generators if isinstance(inner, IdealSpec) else list(inner)
    for idx, g in enumerate(gens):
        nf = outer.normal_form(g)
        if not nf.is_zero():
            return ContainmentResult(False, idx + 1, g, idx, nf)
    return ContainmentResult(True, len(gens))
