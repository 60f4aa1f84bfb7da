from itertools import combinations

import pytest

from hgideals.decomposition import (
    FIXTURES,
    census,
    check_containment,
    conjecture_experiment_GL,
    corrupt,
    groebner_basis_of,
    ideal_delta,
    ideal_I0,
    ideal_of,
    ideal_of_S,
    non_redundancy_witnesses,
    parse_combination,
    three_concurrent_lines,
    verify_decomposition_by_sampling,
    verify_gb_family,
    verify_identity,
    verify_verbatim,
)
from hgideals.arrangement import build_L_of_S
from hgideals.exactalg import GroebnerBasis, Ring, minor
from hgideals.hypergraph import GridShape, Hypergraph, enumerate_minimal, is_minimal
from hgideals.hypergraph.symmetry import canonical_form


def test_generator_counts():
    assert len(ideal_delta(2, 5, 3)) == 35
    spec = ideal_of(Hypergraph.from_edges(2, [(1,)]), 3)
    ring = spec.ring
    assert spec.generators == [ring.var(1, 1), ring.var(2, 1), ring.var(3, 1)]
    assert len(ideal_of(Hypergraph.from_edges(5, [(1, 2, 3, 4, 5)]), 3)) == 0


def test_non_minimal_edges_give_no_generators():
    h = Hypergraph.from_edges(4, [(1, 2), (1, 2, 3), (2, 3, 4)])
    assert [s.cols for s in ideal_of(h, 3).specs] == [(1, 2)] * 3 + [(2, 3, 4)]


@pytest.mark.parametrize("kind,params", [("F", (1, 2, 2)), ("I0", (2, 4)), ("IS", (2, 5, (1, 4)))])
def test_groebner_examples(kind, params):
    r = verify_gb_family(kind, params, 3)
    assert r.is_gb and r.radical


def test_split_components_for_S_in_D():
    r = verify_gb_family("IS", (2, 5, (1, 3, 5, 8, 10)), 3)
    assert r.is_gb and r.split_ok


def test_standardized_order_fallback():
    r = verify_gb_family("IS", (2, 5, (1, 3, 6, 8)), 3)
    assert r.is_gb and r.column_order == "standardized"


def test_unknown_family():
    with pytest.raises(ValueError):
        verify_gb_family("X", (), 3)


def test_containment_examples():
    g5, g4 = GridShape(2, 5), GridShape(2, 4)
    assert check_containment(ideal_delta(2, 5), groebner_basis_of(ideal_of_S(g5, (1, 4, 6, 8)))).contained
    assert check_containment(ideal_delta(2, 4), groebner_basis_of(ideal_I0(g4))).contained
    res = check_containment(ideal_of_S(g4, (1, 4)), groebner_basis_of(ideal_of_S(g4, (1, 3, 6))))
    assert not res.contained and not res.normal_form.is_zero()


def test_containment_needs_verified_basis():
    ring = Ring(2, 2)
    with pytest.raises(ValueError):
        check_containment([ring.var(1, 1)], GroebnerBasis([ring.var(1, 1)], verified=False))


def test_non_minimal_subsets_are_redundant_on_two_by_four():
    """Every non-minimal S has a minimal S' with I_S' inside I_S; minimal ones are incomparable."""
    g = GridShape(2, 4)
    mins = [s for grp in enumerate_minimal(4) for s in grp]
    specs = {s: ideal_of_S(g, s) for s in mins}
    for r in range(9):
        for s in combinations(range(1, 9), r):
            if is_minimal(g, s):
                continue
            gb = groebner_basis_of(ideal_of_S(g, s))
            assert any(check_containment(specs[m], gb) for m in mins), s
    nr = non_redundancy_witnesses(g, mins)
    assert nr["missing"] == 0 and nr["pairs"] == 43 * 42


def test_fixtures_hold_and_controls_fail():
    assert len(FIXTURES) == 19
    for fix in FIXTURES:
        assert verify_identity(fix), fix.label()
        assert not verify_identity(corrupt(fix)), fix.label()
    exact = [f for f in FIXTURES if f.corrected is None]
    assert all(verify_verbatim(f) for f in exact)
    assert not any(verify_verbatim(f) for f in FIXTURES if f.corrected)


def test_parse_combination_notation():
    ring = Ring(3, 4)
    assert parse_combination(ring, "[12|34]") == minor(ring, (1, 2), (3, 4))
    assert parse_combination(ring, "x_{2,3}") == parse_combination(ring, "y_3")
    assert parse_combination(ring, "2z_1 - z_1 - z_1").is_zero()
    with pytest.raises(ValueError):
        parse_combination(ring, "[12|3")


def test_census_two_by_five_totals_two_ways():
    rep = census(2, 5)
    assert rep.total == rep.direct_count == 171
    assert len(rep.classes) == 6
    assert len({c.representative for c in rep.classes}) == 6


@pytest.mark.parametrize("l", [3, 4, 6])
def test_census_totals_agree(l):
    rep = census(2, l)
    assert rep.total == rep.direct_count


def test_census_at_three_columns_matches_delta_prime_view():
    # with three columns every row 3-subset is the whole row
    rep = census(2, 3)
    assert rep.total == sum(len(g) for g in enumerate_minimal(3))


def test_census_three_by_four_is_table_driven():
    rep = census(3, 4)
    assert rep.source == "table" and len(rep.classes) == 9
    assert len({canonical_form(GridShape(3, 4), c.representative) for c in rep.classes}) == 9


def test_census_rejects_unsupported():
    with pytest.raises(ValueError):
        census(3, 5)
    with pytest.raises(ValueError):
        census(2, 13)


def test_census_json_has_totals():
    data = census(2, 4).to_json()
    assert data["total"] == sum(c["orbit_size"] for c in data["classes"])


def test_sampling_report_small():
    rep = verify_decomposition_by_sampling(2, 4, 3, seeds=5, random_checks=5, all_pairs_redundancy=True)
    assert rep.ok
    assert "never formed symbolically" in rep.to_json()["note"]


def test_G_L_experiment_reports_without_asserting():
    out = conjecture_experiment_GL(three_concurrent_lines(), seeds=5)
    assert out["asserts_conjecture"] is False and out["consistent"]
    out = conjecture_experiment_GL(build_L_of_S(GridShape(2, 5), (1, 3, 6, 8)), seeds=5)
    assert out["consistent"]
