"""Evidence for the decomposition by exact sampling, and the G_L experiment."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations

from ..arrangement.config import SamplingError, is_configuration, sample_configuration
from ..arrangement.model import LineArrangement, arrangement_from_matrix, build_L_of_S, is_compatible
from ..arrangement.polys import F_of_L, G_of_L
from ..exactalg.groebner import Budget, BudgetExceeded, buchberger_check, buchberger_complete
from ..exactalg.linalg import RationalMatrix
from ..exactalg.minors import maximal_minor
from ..exactalg.polynomial import Polynomial, Ring
from ..hypergraph.core import GridShape
from ..hypergraph.ktwo import enumerate_minimal
from .census import TABLE_3_4, table_arrangement
from .ideals import check_containment, groebner_basis_of, ideal_delta, ideal_of_S

NOTE = ("the intersection of the components is never formed symbolically; the decomposition is "
        "evidenced by containment, non-redundancy and sampling")


def permute_arrangement(arr: LineArrangement, shape: GridShape, sigma, tau) -> LineArrangement:
    """Image of ``arr`` under the row permutation ``sigma`` and column permutation ``tau``."""
    def move(v):
        i, j = shape.position(v)
        return shape.entry(sigma[i - 1], tau[j - 1])

    return LineArrangement(arr.n, [move(v) for v in arr.zeros],
                           [[move(v) for v in p] for p in arr.points], arr.lines)


def class_arrangements(k: int, l: int) -> list[tuple[tuple[int, ...], LineArrangement]]:
    """A representative arrangement for every minimal class."""
    if k == 2:
        shape = GridShape(2, l)
        return [(g[0], build_L_of_S(shape, g[0])) for g in enumerate_minimal(l)]
    if (k, l) == (3, 4):
        return [(tuple(row[0]), table_arrangement(row)) for row in TABLE_3_4]
    raise ValueError(f"no class list for ({k},{l})")


def _vanishes(gens: list[Polynomial], a: RationalMatrix) -> bool:
    rows = a.rows
    return all(g.evaluate(rows) == 0 for g in gens)


@dataclass
class ClassSampling:
    representative: tuple[int, ...]
    seeds: int
    vanishing: int = 0
    round_trip: int = 0
    compatible: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.vanishing == self.round_trip == self.compatible == self.seeds

    def to_json(self) -> dict:
        return {"representative": list(self.representative), "seeds": self.seeds,
                "vanishing": self.vanishing, "round_trip": self.round_trip,
                "compatible": self.compatible, "failures": self.failures, "ok": self.ok}


@dataclass
class SamplingReport:
    k: int
    l: int
    d: int
    classes: list[ClassSampling] = field(default_factory=list)
    random_arrangements: ClassSampling | None = None
    non_redundancy: dict = field(default_factory=dict)
    note: str = NOTE

    @property
    def ok(self) -> bool:
        parts = [c.ok for c in self.classes]
        if self.random_arrangements is not None:
            parts.append(self.random_arrangements.ok)
        if self.non_redundancy:
            parts.append(self.non_redundancy.get("missing", 1) == 0)
        return all(parts)

    def to_json(self) -> dict:
        return {"k": self.k, "l": self.l, "d": self.d, "ok": self.ok, "note": self.note,
                "classes": [c.to_json() for c in self.classes],
                "random_arrangements": (self.random_arrangements.to_json()
                                        if self.random_arrangements else None),
                "non_redundancy": self.non_redundancy}


def _sample_one(record: ClassSampling, arr: LineArrangement, shape, gens, d, seed):
    try:
        a = sample_configuration(arr, d, seed)
    except SamplingError as exc:
        record.failures.append({"seed": seed, "error": str(exc)})
        return
    record.vanishing += _vanishes(gens, a)
    m_a = arrangement_from_matrix(a)
    record.round_trip += m_a.isomorphic(arr)
    record.compatible += is_compatible(m_a, shape)


def non_redundancy_witnesses(shape: GridShape, subsets, d: int = 3) -> dict:
    """For each ordered pair S1 != S2, a generator of I_S1 outside I_S2."""
    subsets = [tuple(s) for s in subsets]
    specs = {s: ideal_of_S(shape, s, d) for s in subsets}
    gbs = {s: groebner_basis_of(specs[s]) for s in subsets}
    witnesses, missing = {}, []
    for s1 in subsets:
        for s2 in subsets:
            if s1 == s2:
                continue
            res = check_containment(specs[s1], gbs[s2])
            if res.contained:
                missing.append([list(s1), list(s2)])
            else:
                spec = specs[s1].specs[res.witness_index]
                witnesses[f"{list(s1)} -> {list(s2)}"] = str(spec)
    return {"pairs": len(subsets) * (len(subsets) - 1), "missing": len(missing),
            "missing_pairs": missing, "witnesses": witnesses}


def verify_decomposition_by_sampling(k: int, l: int, d: int = 3, seeds: int = 100,
                                     base_seed: int = 0, random_checks: int = 0,
                                     all_pairs_redundancy: bool = False) -> SamplingReport:
    """(a) class representatives, (b) randomly moved arrangements, (c) non-redundancy."""
    shape = GridShape(k, l)
    gens = ideal_delta(k, l, d).generators
    report = SamplingReport(k, l, d)
    classes = class_arrangements(k, l)
    for rep, arr in classes:
        record = ClassSampling(rep, seeds)
        for seed in range(base_seed, base_seed + seeds):
            _sample_one(record, arr, shape, gens, d, seed)
        report.classes.append(record)
    if random_checks:
        rng = random.Random(base_seed)
        record = ClassSampling((), random_checks)
        sigmas = list(permutations(range(1, k + 1)))
        for idx in range(random_checks):
            _, arr = classes[rng.randrange(len(classes))]
            tau = list(range(1, l + 1))
            rng.shuffle(tau)
            moved = permute_arrangement(arr, shape, rng.choice(sigmas), tau)
            if not is_compatible(moved, shape):
                record.failures.append({"check": idx, "error": "moved arrangement incompatible"})
                continue
            _sample_one(record, moved, shape, gens, d, rng.randrange(2**32))
        report.random_arrangements = record
    if k == 2 and all_pairs_redundancy:
        subsets = [s for g in enumerate_minimal(l) for s in g]
        report.non_redundancy = non_redundancy_witnesses(shape, subsets, d)
    return report


# -- three concurrent lines ----------------------------------------------------

def three_concurrent_lines() -> LineArrangement:
    """Seven points, lines {1,2,3}, {1,4,5}, {1,6,7} through point 1."""
    return LineArrangement(7, (), [[v] for v in range(1, 8)], [[0, 1, 2], [0, 3, 4], [0, 5, 6]])


def concurrency_binomial(ring: Ring) -> Polynomial:
    """[234][567] - [235][467]."""
    return (maximal_minor(ring, (2, 3, 4)) * maximal_minor(ring, (5, 6, 7))
            - maximal_minor(ring, (2, 3, 5)) * maximal_minor(ring, (4, 6, 7)))


# Column 1 is zero, so the three collinearity minors vanish, but the other
# six columns are generic and the concurrency condition fails.
THREE_LINES_WITNESS = RationalMatrix([
    [0, 3, -7, 2, 5, -1, 4],
    [0, 1, 6, -3, 2, 8, -5],
    [0, -4, 2, 7, -6, 3, 1],
])


def three_lines_report(seeds: int = 100, witness: RationalMatrix = THREE_LINES_WITNESS) -> dict:
    arr = three_concurrent_lines()
    ring = Ring(3, 7)
    b = concurrency_binomial(ring)
    vanish = 0
    for seed in range(seeds):
        a = sample_configuration(arr, 3, seed)
        vanish += b.evaluate(a.rows) == 0
    f = F_of_L(arr, 3, ring)
    in_variety = _vanishes(f, witness)
    value = Fraction(b.evaluate(witness.rows))
    return {"seeds": seeds, "vanishing": vanish, "witness_in_V(F(L))": in_variety,
            "witness_value": str(value),
            "ok": vanish == seeds and in_variety and value != 0}


# -- G_L experiment ------------------------------------------------------------

def conjecture_experiment_GL(arr: LineArrangement, budget: Budget = Budget(max_degree=12, max_pairs=20_000),
                             seeds: int = 20) -> dict:
    """Probe whether G_L could generate I_L; reports findings, proves nothing.

    Checks that every element of a Gröbner basis of <G_L> vanishes on sampled
    configurations (needed for <G_L> inside I_L) and whether G_L is itself a
    Gröbner basis.
    """
    ring = Ring(3, arr.n)
    gens = G_of_L(arr, 3, ring)
    out = {"arrangement": arr.to_json(), "generators": len(gens), "asserts_conjecture": False}
    try:
        out["G_L_is_groebner_basis"] = buchberger_check(gens, budget=budget).is_gb
    except BudgetExceeded as exc:
        out["G_L_is_groebner_basis"] = None
        out["check_budget"] = str(exc)
    try:
        gb = buchberger_complete(gens, budget=budget)
    except BudgetExceeded as exc:
        out["budget_exceeded"] = str(exc)
        gb = None
    samples = [sample_configuration(arr, 3, s) for s in range(seeds)]
    basis = gb.generators if gb is not None else gens
    out["groebner_basis_size"] = len(gb) if gb is not None else None
    out["vanishing_samples"] = sum(_vanishes(basis, a) for a in samples)
    out["samples"] = seeds
    out["consistent"] = out["vanishing_samples"] == seeds
    return out


def is_sample_generic(arr: LineArrangement, a: RationalMatrix, d: int = 3) -> bool:
    return is_configuration(a, arr, d)
