"""One check per acceptance criterion; each prints a PASS/FAIL line.

Criteria 1 and 2 are split so the parts that hold are reported separately
from the orbit-size parts that do not.
"""

import time
from itertools import combinations

from conftest import ACCEPTANCE_LINES
from hgideals.arrangement import (
    arrangement_of_type,
    build_L_of_S,
    certify_irreducible_by_buildup,
    enumerate_incidence_types,
)
from hgideals.decomposition import (
    FIXTURES,
    census,
    check_containment,
    groebner_basis_of,
    ideal_delta,
    ideal_I0,
    ideal_of_S,
    non_redundancy_witnesses,
    three_lines_report,
    verify_decomposition_by_sampling,
    verify_gb_family,
    verify_identity,
    verify_verbatim,
)
from hgideals.decomposition.suites import f_parameters
from hgideals.hypergraph import GridShape, build_delta, ci_statement_to_hypergraph, enumerate_minimal, model_C
from hgideals.hypergraph.ci import CIModel
from hgideals.hypergraph.symmetry import canonical_form

EXPECTED_2_5_REPS = [(), (1, 4, 6, 8), (1, 3, 6, 8, 10), (1, 4), (1, 3, 6, 8), (1, 4, 6)]
EXPECTED_2_5_SIZES = [1, 20, 10, 20, 60, 60]
EXPECTED_3_4_SIZES = [1, 36, 36, 72, 24, 36, 24, 18, 72]
REFERENCE_FIXTURE_ROWS = 19

_gb_reports: list = []


def record(key: str, ok: bool, text: str):
    line = f"criterion {key}: {'PASS' if ok else 'FAIL'}  {text}"
    ACCEPTANCE_LINES[key] = line
    print(line)
    return ok


def test_criterion_1a_census_2_5_classes_total_representatives():
    t0 = time.perf_counter()
    rep = census(2, 5, 3)
    dt = time.perf_counter() - t0
    g = GridShape(2, 5)
    reps = {canonical_form(g, c.representative) for c in rep.classes}
    expected = {canonical_form(g, s) for s in EXPECTED_2_5_REPS}
    ok = len(rep.classes) == 6 and rep.total == 171 and reps == expected and dt < 5
    assert record("1.a", ok, f"(2,5) classes={len(rep.classes)} total={rep.total} "
                              f"representatives match up to symmetry={reps == expected} {dt:.2f}s")


def test_criterion_1b_census_2_5_orbit_sizes():
    rep = census(2, 5, 3)
    got = sorted(rep.sizes)
    ok = got == sorted(EXPECTED_2_5_SIZES)
    assert record("1.b", ok, f"(2,5) orbit sizes computed {got} expected {sorted(EXPECTED_2_5_SIZES)}")


def test_criterion_2a_census_3_4_classes():
    t0 = time.perf_counter()
    rep = census(3, 4, 3)
    dt = time.perf_counter() - t0
    g = GridShape(3, 4)
    distinct = len({canonical_form(g, c.representative) for c in rep.classes})
    ok = len(rep.classes) == 9 and distinct == 9 and dt < 5
    assert record("2.a", ok, f"(3,4) classes={len(rep.classes)} pairwise non-isomorphic={distinct == 9} {dt:.2f}s")


def test_criterion_2b_census_3_4_orbit_sizes_and_total():
    rep = census(3, 4, 3)
    ok = rep.sizes == EXPECTED_3_4_SIZES and rep.total == 319
    assert record("2.b", ok, f"(3,4) orbit sizes computed {rep.sizes} expected {EXPECTED_3_4_SIZES}; "
                              f"total computed {rep.total} expected 319")


def test_criterion_3_incidence_types():
    t0 = time.perf_counter()
    counts = tuple(len(enumerate_incidence_types(m)) for m in (2, 3, 4))
    dt = time.perf_counter() - t0
    ok = counts == (2, 5, 16) and dt < 1
    assert record("3", ok, f"incidence type counts {counts} {dt:.3f}s")


def test_criterion_4_groebner_bases():
    t0 = time.perf_counter()
    reports = []
    for d in (3, 4):
        for ijc in f_parameters(7):
            reports.append(verify_gb_family("F", ijc, d))
    for l in (3, 4, 5):
        reports.append(verify_gb_family("I0", (2, l), 3))
    for l in (4, 5):
        for group in enumerate_minimal(l):
            reports.append(verify_gb_family("IS", (2, l, group[0]), 3))
    dt = time.perf_counter() - t0
    _gb_reports[:] = reports
    bad = [(r.kind, r.params, r.d) for r in reports if not r.is_gb or r.split_ok is False]
    moved = sum(r.column_order != "natural" for r in reports)
    ok = not bad and dt < 1800
    assert record("4", ok, f"{len(reports) - len(bad)}/{len(reports)} generating sets are Groebner bases "
                           f"({moved} checked in the standardized column order) {dt:.1f}s"), bad


def test_criterion_5_radical():
    if not _gb_reports:
        test_criterion_4_groebner_bases()
    gbs = [r for r in _gb_reports if r.is_gb]
    bad = [(r.kind, r.params, r.d) for r in gbs if not r.radical]
    ok = not bad and len(gbs) == len(_gb_reports)
    assert record("5", ok, f"square-free initial terms for {len(gbs) - len(bad)}/{len(_gb_reports)} bases"), bad


def test_criterion_6_identities():
    t0 = time.perf_counter()
    results = [verify_identity(f) for f in FIXTURES]
    verbatim = sum(verify_verbatim(f) for f in FIXTURES)
    dt = time.perf_counter() - t0
    ok = all(results) and len(FIXTURES) == REFERENCE_FIXTURE_ROWS and dt < 10
    assert record("6", ok, f"{sum(results)}/{len(FIXTURES)} fixtures reduce to zero "
                           f"({verbatim} verbatim, {len(FIXTURES) - verbatim} with a one-term repair); "
                           f"reference rows {REFERENCE_FIXTURE_ROWS} {dt:.2f}s")


def test_criterion_7_containment_and_non_redundancy():
    t0 = time.perf_counter()
    notes, ok = [], True
    for l in (4, 5):
        g = GridShape(2, l)
        delta = ideal_delta(2, l, 3)
        groups = enumerate_minimal(l)
        subsets = [s for grp in groups for s in grp]
        failed = [s for s in subsets if not check_containment(delta, groebner_basis_of(ideal_of_S(g, s)))]
        in_I0 = check_containment(delta, groebner_basis_of(ideal_I0(g))).contained
        nr = non_redundancy_witnesses(g, [grp[0] for grp in groups])
        ok &= not failed and in_I0 and nr["missing"] == 0
        notes.append(f"(2,{l}) I_Delta in {len(subsets) - len(failed)}/{len(subsets)} I_S, "
                     f"witnesses {nr['pairs'] - nr['missing']}/{nr['pairs']}")
    dt = time.perf_counter() - t0
    ok &= dt < 600
    assert record("7", ok, "; ".join(notes) + f" {dt:.1f}s")


def test_criterion_8_sampling():
    t0 = time.perf_counter()
    notes, ok = [], True
    for k, l in [(2, 4), (2, 5), (3, 4)]:
        rep = verify_decomposition_by_sampling(k, l, 3, seeds=100)
        good = sum(c.ok for c in rep.classes)
        ok &= rep.ok
        notes.append(f"({k},{l}) {good}/{len(rep.classes)} classes")
    dt = time.perf_counter() - t0
    ok &= dt < 300
    assert record("8", ok, "100 seeds per class: " + ", ".join(notes) + f" {dt:.1f}s")


def test_criterion_9_three_concurrent_lines():
    t0 = time.perf_counter()
    rep = three_lines_report(100)
    dt = time.perf_counter() - t0
    ok = rep["ok"] and dt < 60
    assert record("9", ok, f"binomial vanishes on {rep['vanishing']}/100 samples; witness in V(F(L)) "
                           f"{rep['witness_in_V(F(L))']} with value {rep['witness_value']} {dt:.2f}s")


def test_criterion_10_buildup_certificates():
    t0 = time.perf_counter()
    l_of_s = [build_L_of_S(GridShape(2, l), s) for l in (3, 4, 5) for grp in enumerate_minimal(l) for s in grp]
    certs = [certify_irreducible_by_buildup(a) for a in l_of_s]
    typed = {m: [certify_irreducible_by_buildup(arrangement_of_type(t)) for t in enumerate_incidence_types(m)]
             for m in (3, 4)}
    dt = time.perf_counter() - t0
    quad = sum(c is not None and c.base == "complete-quadrilateral" for c in typed[4])
    ok = (None not in certs and None not in typed[3] and None not in typed[4]
          and len(typed[3]) == 5 and len(typed[4]) == 16 and quad == 1 and dt < 1)
    assert record("10", ok, f"L(S) {sum(c is not None for c in certs)}/{len(certs)}, "
                            f"3-line {sum(c is not None for c in typed[3])}/5, "
                            f"4-line {sum(c is not None for c in typed[4])}/16 "
                            f"({quad} via the quadrilateral base) {dt:.3f}s")


def test_criterion_11_ci_translation():
    ok_delta = {(k, l): ci_statement_to_hypergraph(model_C(3, k, l)) == build_delta(k, l)
                for k, l in [(2, 4), (2, 5), (3, 4)]}
    model = CIModel.from_json({"row": "X", "columns": ["Y"], "cardinalities": {"X": 4, "Y": 4, "H": 2},
                               "hidden": ["H"], "statements": [{"left": "X", "right": ["Y"], "given": ["H"]}]})
    h = ci_statement_to_hypergraph(model)
    ok_minors = h.edges == frozenset(combinations(range(1, 5), 3)) and model.d == 4
    ok = all(ok_delta.values()) and ok_minors
    assert record("11", ok, f"model maps to Delta for {sum(ok_delta.values())}/3 shapes; "
                            f"4x4 binary hidden gives all 3-minors={ok_minors}")
