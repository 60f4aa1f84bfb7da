import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from hgideals.arrangement import (
    F_of_L,
    G_of_L,
    LineArrangement,
    SamplingError,
    arrangement_from_matrix,
    arrangement_of_type,
    build_L_of_S,
    certify_irreducible_by_buildup,
    enumerate_bases,
    enumerate_incidence_types,
    is_compatible,
    is_complete_quadrilateral,
    is_configuration,
    sample_configuration,
)
from hgideals.exactalg import RationalMatrix, Ring, maximal_minor
from hgideals.hypergraph import GridShape, enumerate_minimal

G5 = GridShape(2, 5)
MINIMAL_5 = [s for g in enumerate_minimal(5) for s in g]


def test_empty_S_gives_one_line_through_all_columns():
    arr = build_L_of_S(G5, ())
    assert len(arr.points) == 5 and arr.lines == ((0, 1, 2, 3, 4),)
    assert is_compatible(arr, G5)


def test_free_columns_merge_into_one_point():
    arr = build_L_of_S(G5, (1, 4))
    assert arr.zeros == frozenset({1, 4})
    assert frozenset({5, 6, 7, 8, 9, 10}) in arr.points
    assert arr.lines == ()


def test_two_lines_meet_at_the_free_columns():
    arr = build_L_of_S(G5, (1, 3, 6, 8))
    assert len(arr.lines) == 2
    assert arr.points[arr.intersection(0, 1)] == frozenset({9, 10})


def test_L_of_S_needs_two_rows():
    with pytest.raises(ValueError):
        build_L_of_S(GridShape(3, 4), ())


def test_validation_rejects_bad_arrangements():
    with pytest.raises(ValueError):
        LineArrangement(3, (), [[1], [2], [3]], [[0, 1]])
    with pytest.raises(ValueError):
        LineArrangement(3, (1,), [[1, 2], [3]])
    with pytest.raises(ValueError):
        LineArrangement(4, (), [[1], [2], [3], [4]], [[0, 1, 2], [0, 1, 3]])


def test_json_round_trip_and_relabelling():
    arr = build_L_of_S(G5, (1, 3, 6, 8))
    assert LineArrangement.from_json(arr.to_json()) == arr
    shuffled = LineArrangement(arr.n, arr.zeros, list(reversed(arr.points)),
                               [[len(arr.points) - 1 - p for p in l] for l in arr.lines])
    assert shuffled == arr and shuffled.isomorphic(arr)


@pytest.mark.parametrize("s", MINIMAL_5[::7])
def test_sampled_configurations_satisfy_F(s):
    arr = build_L_of_S(G5, s)
    ring = Ring(3, 10)
    f = F_of_L(arr, 3, ring)
    for seed in range(5):
        a = sample_configuration(arr, 3, seed)
        assert all(p.evaluate(a.rows) == 0 for p in f)
        assert is_configuration(a, arr)
        assert arrangement_from_matrix(a).isomorphic(arr)


def test_sampling_is_reproducible():
    arr = build_L_of_S(G5, (1, 3, 6, 8))
    assert sample_configuration(arr, 3, 11) == sample_configuration(arr, 3, 11)
    assert sample_configuration(arr, 3, 11) != sample_configuration(arr, 3, 12)


def test_zero_column_outside_S_is_rejected():
    arr = build_L_of_S(G5, (1, 4))
    a = sample_configuration(arr, 3, 0)
    cols = [list(c) for c in a.columns()]
    cols[4] = [0, 0, 0]
    assert not is_configuration(RationalMatrix.from_columns(cols), arr)


def test_coincident_generic_points_are_rejected():
    arr = build_L_of_S(G5, ())
    a = sample_configuration(arr, 3, 0)
    cols = [list(c) for c in a.columns()]
    cols[2] = cols[3] = list(cols[0])
    assert not is_configuration(RationalMatrix.from_columns(cols), arr)


def test_sampler_gives_up_on_impossible_arrangements():
    arr = build_L_of_S(G5, (1, 3, 6, 8))
    with pytest.raises(SamplingError):
        sample_configuration(arr, 3, 0, retries=0)


@given(st.integers(0, 10_000))
@settings(max_examples=25, deadline=None)
def test_compatibility_of_sampled_arrangement(seed):
    rng = random.Random(seed)
    s = rng.choice(MINIMAL_5)
    a = sample_configuration(build_L_of_S(G5, s), 3, rng)
    assert is_compatible(arrangement_from_matrix(a), G5)


def test_incompatible_arrangement_detected():
    arr = LineArrangement(10, (), [[v] for v in range(1, 11)])
    assert not is_compatible(arr, G5)


def test_bases_avoid_collinear_triples():
    arr = build_L_of_S(G5, ())
    bases = enumerate_bases(arr, 3)
    assert bases and all(len(b) == 2 for b in bases)
    arr = build_L_of_S(G5, (1, 4))
    assert enumerate_bases(arr, 3) == [(2, 3, c) for c in range(5, 11)]


def test_F_contains_variables_and_point_minors():
    arr = build_L_of_S(G5, (1, 4))
    ring = Ring(3, 10)
    f = F_of_L(arr, 3, ring)
    assert ring.var(2, 1) in f and ring.var(3, 4) in f
    assert len(f) == 6 + 15 * 3


def test_F_adds_four_minors_for_meeting_lines():
    arr = build_L_of_S(G5, (1, 3, 6, 8))
    assert len(F_of_L(arr, 4)) > len(F_of_L(arr, 3))


def test_G_L_three_concurrent_lines():
    arr = LineArrangement(7, (), [[v] for v in range(1, 8)], [[0, 1, 2], [0, 3, 4], [0, 5, 6]])
    ring = Ring(3, 7)
    g = G_of_L(arr, 3, ring)
    b = maximal_minor(ring, (2, 3, 4)) * maximal_minor(ring, (5, 6, 7)) \
        - maximal_minor(ring, (2, 3, 5)) * maximal_minor(ring, (4, 6, 7))
    assert b in g or -b in g
    assert len(g) == 4
    with pytest.raises(ValueError):
        G_of_L(arr, 4)


def test_G_L_single_line_is_F_restricted():
    arr = build_L_of_S(G5, ())
    assert G_of_L(arr, 3) == F_of_L(arr, 3)


def test_matrix_round_trip_on_hand_matrix():
    a = RationalMatrix([[0, 1, 2, 1, 0], [0, 0, 0, 1, 1], [0, 0, 0, 0, 0]])
    arr = arrangement_from_matrix(a)
    assert arr.zeros == frozenset({1})
    assert frozenset({2, 3}) in arr.points
    assert len(arr.lines) == 1
    assert a.entry(1, 2) == Fraction(1)


def test_incidence_counts():
    assert [len(enumerate_incidence_types(m)) for m in (1, 2, 3, 4)] == [1, 2, 5, 16]


def test_buildup_certificates():
    for m in (2, 3, 4):
        for t in enumerate_incidence_types(m):
            cert = certify_irreducible_by_buildup(arrangement_of_type(t))
            assert cert is not None
            assert sorted(cert.buildup_order) == list(range(m))
    quads = [t for t in enumerate_incidence_types(4)
             if certify_irreducible_by_buildup(arrangement_of_type(t)).base == "complete-quadrilateral"]
    assert len(quads) == 1
    arr = arrangement_of_type(quads[0])
    assert is_complete_quadrilateral(arr, range(4))


@pytest.mark.parametrize("m", [3, 4])
def test_every_incidence_type_is_sampleable(m):
    for t in enumerate_incidence_types(m):
        arr = arrangement_of_type(t)
        a = sample_configuration(arr, 3, 5)
        assert arrangement_from_matrix(a).isomorphic(arr)
