"""Verification suites: each returns a list of named pass/fail checks."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..arrangement.incidence import (
    arrangement_of_type,
    certify_irreducible_by_buildup,
    enumerate_incidence_types,
)
from ..arrangement.model import build_L_of_S
from ..exactalg.groebner import CHECK_BUDGET, Budget
from ..hypergraph.core import GridShape
from ..hypergraph.ktwo import enumerate_minimal
from .fixtures import FIXTURES, corrupt, verify_identity, verify_verbatim
from .ideals import check_containment, groebner_basis_of, ideal_delta, ideal_I0, ideal_of_S, verify_gb_family
from .sampling import NOTE, non_redundancy_witnesses, three_lines_report, verify_decomposition_by_sampling

SUITES = ("gb", "identities", "containment", "sampling", "incidence", "buildup")
INCIDENCE_COUNTS = {2: 2, 3: 5, 4: 16}
F_MAX_SUM = 7


@dataclass
class Check:
    suite: str
    name: str
    passed: bool
    detail: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"suite": self.suite, "name": self.name, "passed": self.passed, "detail": self.detail}


def _gb_detail(r) -> dict:
    detail = r.to_json()
    detail.pop("seconds")
    return detail


def _need_k2(k: int, l: int, suite: str):
    if k != 2 or not 3 <= l <= 12:
        raise ValueError(f"suite {suite!r} needs k=2 and 3 <= l <= 12, got ({k},{l})")


def f_parameters(max_sum: int = F_MAX_SUM):
    for i in range(max_sum + 1):
        for j in range(i, max_sum + 1):
            for c in range(max_sum + 1 - i - j):
                if i + j + c:
                    yield i, j, c


def suite_gb(k: int = 2, l: int = 5, d: int = 3, budget: Budget = CHECK_BUDGET,
             f_degrees=None, f_max_sum: int = F_MAX_SUM) -> list[Check]:
    """Buchberger's criterion and square-free initials for F(i,j,c), I_0 and the minimal I_S."""
    _need_k2(k, l, "gb")
    out = []
    for fd in (f_degrees or (d,)):
        for ijc in f_parameters(f_max_sum):
            r = verify_gb_family("F", ijc, fd, budget)
            out.append(Check("gb", f"F{ijc} d={fd}", r.is_gb and r.radical, _gb_detail(r)))
    r = verify_gb_family("I0", (k, l), d, budget)
    out.append(Check("gb", f"I_0 ({k},{l}) d={d}", r.is_gb and r.radical, _gb_detail(r)))
    for group in enumerate_minimal(l):
        r = verify_gb_family("IS", (k, l, group[0]), d, budget)
        ok = r.is_gb and r.radical and r.split_ok is not False
        out.append(Check("gb", f"I_S {list(group[0])} ({k},{l}) d={d}", ok, _gb_detail(r)))
    return out


def suite_identities() -> list[Check]:
    out = []
    for idx, fix in enumerate(FIXTURES, 1):
        detail = {"group": fix.group, "verbatim": verify_verbatim(fix),
                  "corrected": fix.corrected is not None, "note": fix.note,
                  "negative_control_fails": not verify_identity(corrupt(fix))}
        ok = verify_identity(fix) and detail["negative_control_fails"]
        out.append(Check("identities", f"#{idx} {fix.label()}", ok, detail))
    return out


def suite_containment(k: int = 2, l: int = 5, d: int = 3, budget: Budget = Budget(max_degree=None)) -> list[Check]:
    """I_Delta inside every minimal I_S and I_0; a witness for each ordered pair of classes."""
    _need_k2(k, l, "containment")
    shape = GridShape(k, l)
    delta = ideal_delta(k, l, d)
    groups = enumerate_minimal(l)
    subsets = [s for g in groups for s in g]
    failures, completed = [], 0
    for s in subsets:
        gb = groebner_basis_of(ideal_of_S(shape, s, d), budget)
        completed += gb.stats.get("completed", False)
        if not check_containment(delta, gb):
            failures.append(list(s))
    out = [Check("containment", f"I_Delta in I_S for all {len(subsets)} minimal S ({k},{l})",
                 not failures, {"failures": failures, "completed_bases": completed})]
    gb0 = groebner_basis_of(ideal_I0(shape, d), budget)
    out.append(Check("containment", f"I_Delta in I_0 ({k},{l})", check_containment(delta, gb0).contained))
    reps = [g[0] for g in groups]
    nr = non_redundancy_witnesses(shape, reps, d)
    out.append(Check("containment", f"non-redundancy over {nr['pairs']} ordered class pairs ({k},{l})",
                     nr["missing"] == 0, nr))
    if l <= 4:
        nr = non_redundancy_witnesses(shape, subsets, d)
        detail = {key: v for key, v in nr.items() if key != "witnesses"}
        out.append(Check("containment", f"non-redundancy over all {nr['pairs']} ordered pairs ({k},{l})",
                         nr["missing"] == 0, detail))
    return out


def suite_sampling(k: int = 2, l: int = 5, d: int = 3, seeds: int = 100, seed: int = 0,
                   random_checks: int = 50) -> list[Check]:
    rep = verify_decomposition_by_sampling(k, l, d, seeds, seed, random_checks, all_pairs_redundancy=False)
    out = [Check("sampling", f"class {list(c.representative)} ({k},{l}) x{seeds}", c.ok, c.to_json())
           for c in rep.classes]
    ra = rep.random_arrangements
    if ra is not None:
        out.append(Check("sampling", f"{ra.seeds} randomly moved class arrangements ({k},{l})", ra.ok, ra.to_json()))
    tl = three_lines_report(seeds)
    out.append(Check("sampling", "three concurrent lines binomial", tl["ok"], tl))
    for c in out:
        c.detail.setdefault("note", NOTE)
    return out


def suite_incidence() -> list[Check]:
    out = []
    for m, expected in INCIDENCE_COUNTS.items():
        got = len(enumerate_incidence_types(m))
        out.append(Check("incidence", f"{m}-line types", got == expected, {"count": got, "expected": expected}))
    return out


def suite_buildup(ls=range(3, 7)) -> list[Check]:
    out = []
    for l in ls:
        shape = GridShape(2, l)
        bad = [list(s) for g in enumerate_minimal(l) for s in g
               if certify_irreducible_by_buildup(build_L_of_S(shape, s)) is None]
        out.append(Check("buildup", f"L(S) for minimal S at (2,{l})", not bad, {"failures": bad}))
    for m in (3, 4):
        certs = []
        for t in enumerate_incidence_types(m):
            cert = certify_irreducible_by_buildup(arrangement_of_type(t))
            certs.append(None if cert is None else cert.base)
        ok = None not in certs
        detail = {"bases": certs, "quadrilateral_cases": certs.count("complete-quadrilateral")}
        out.append(Check("buildup", f"all {len(certs)} {m}-line types", ok, detail))
    return out


def run_suite(name: str, k: int = 2, l: int = 5, d: int = 3, seed: int = 0,
              budget: Budget = CHECK_BUDGET) -> list[Check]:
    if name == "gb":
        out = suite_gb(k, l, d, budget)
    elif name == "identities":
        out = suite_identities()
    elif name == "containment":
        out = suite_containment(k, l, d, Budget(budget.max_degree, budget.max_pairs))
    elif name == "sampling":
        out = suite_sampling(k, l, d, seed=seed)
    elif name == "incidence":
        out = suite_incidence()
    elif name == "buildup":
        out = suite_buildup()
    else:
        raise ValueError(f"unknown suite {name!r}")
    return out
