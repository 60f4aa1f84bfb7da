from fractions import Fraction
from itertools import permutations
import random

import pytest
from hypothesis import given, settings, strategies as st

from hgideals.exactalg import (
    Budget,
    BudgetExceeded,
    GroebnerBasis,
    Polynomial,
    RationalMatrix,
    Ring,
    buchberger_check,
    buchberger_complete,
    determinant,
    divide,
    format_polynomial,
    interreduce,
    is_radical_by_squarefree_initials,
    maximal_minor,
    minor,
    parse_polynomial,
    rank,
    s_polynomial,
)
from hgideals.exactalg.linalg import nullspace_vector, proportional, rank_of_vectors
from hgideals.exactalg.minors import MinorSpec, ordered_minor, permutation_sign

R = Ring(3, 4)


def leibniz(mat):
    """Determinant by the permutation expansion, as an oracle."""
    n = len(mat)
    total = Fraction(0)
    for p in permutations(range(n)):
        term = Fraction(permutation_sign(p))
        for i in range(n):
            term *= mat[i][p[i]]
        total += term
    return total


terms = st.lists(
    st.tuples(st.integers(-5, 5),
              st.dictionaries(st.tuples(st.integers(1, 3), st.integers(1, 4)), st.integers(1, 3), max_size=3)),
    max_size=5)


def poly(ts):
    return R.from_terms([(c, e) for c, e in ts])


points = st.lists(st.lists(st.integers(-6, 6), min_size=4, max_size=4), min_size=3, max_size=3)


@given(terms, terms, terms)
@settings(max_examples=60, deadline=None)
def test_ring_axioms(a, b, c):
    f, g, h = poly(a), poly(b), poly(c)
    assert f + g == g + f
    assert f * g == g * f
    assert f * (g + h) == f * g + f * h
    assert (f - f).is_zero()


@given(terms, terms, points)
@settings(max_examples=60, deadline=None)
def test_evaluation_is_a_homomorphism(a, b, pt):
    f, g = poly(a), poly(b)
    assert (f * g).evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)
    assert (f + g).evaluate(pt) == f.evaluate(pt) + g.evaluate(pt)


@given(terms)
@settings(max_examples=60, deadline=None)
def test_format_parse_round_trip(a):
    f = poly(a)
    assert parse_polynomial(R, format_polynomial(f)) == f


def test_rational_coefficients_round_trip():
    f = R.var(1, 1).scale(Fraction(3, 7)) - R.var(2, 3) * R.var(3, 4)
    assert parse_polynomial(R, format_polynomial(f)) == f


def test_lex_order_on_variables():
    ring = Ring(2, 3)
    order = [ring.var(r, c).leading_monomial() for r in (1, 2) for c in (1, 2, 3)]
    assert order == sorted(order, reverse=True)


def test_leading_monomial_is_lex_largest():
    ring = Ring(2, 2)
    f = ring.var(2, 2) ** 3 + ring.var(1, 2) * ring.var(2, 1) + ring.var(1, 1)
    assert f.leading_monomial() == ring.var(1, 1).leading_monomial()


def test_exponent_overflow_is_refused():
    x = Ring(1, 1).var(1, 1)
    with pytest.raises((OverflowError, ValueError)):
        x ** 200


@given(points)
@settings(max_examples=40, deadline=None)
def test_minor_evaluates_to_determinant(pt):
    for rows, cols in [((1, 2), (1, 3)), ((2, 3), (2, 4)), ((1, 2, 3), (1, 2, 4))]:
        sub = [[pt[r - 1][c - 1] for c in cols] for r in rows]
        assert minor(R, rows, cols).evaluate(pt) == leibniz(sub)
        assert determinant(sub) == leibniz(sub)


def test_maximal_minor_respects_column_order():
    assert maximal_minor(R, (2, 1, 3)) == -maximal_minor(R, (1, 2, 3))
    assert ordered_minor(R, (1, 2), (2, 1)) == -minor(R, (1, 2), (1, 2))


def test_minor_spec_validation():
    assert MinorSpec((2, 1), (4, 3)).rows == (1, 2)
    with pytest.raises(ValueError):
        MinorSpec((1, 2), (3,))
    with pytest.raises(ValueError):
        MinorSpec((1, 1), (2, 3))


def test_division_identity():
    ring = Ring(2, 3)
    rng = random.Random(3)
    gens = [minor(ring, (1, 2), (1, 2)), minor(ring, (1, 2), (2, 3)), ring.var(1, 3)]
    for _ in range(10):
        f = ring.from_terms([(rng.randint(-3, 3), {(rng.randint(1, 2), rng.randint(1, 3)): rng.randint(1, 2),
                                                   (rng.randint(1, 2), rng.randint(1, 3)): 1})
                             for _ in range(4)])
        qs, r = divide(f, gens)
        total = r
        for q, g in zip(qs, gens):
            total = total + q * g
        assert total == f
        for m in r.terms:
            assert not any(ring.divides(g.leading_monomial(), m) for g in gens)


def test_s_polynomial_cancels_leading_terms():
    ring = Ring(2, 3)
    g1, g2 = minor(ring, (1, 2), (1, 2)), minor(ring, (1, 2), (1, 3))
    s = s_polynomial(g1, g2)
    lcm = ring.lcm(g1.leading_monomial(), g2.leading_monomial())
    assert lcm not in s.terms


def test_maximal_minors_are_a_groebner_basis():
    ring = Ring(2, 4)
    gens = [minor(ring, (1, 2), c) for c in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]]
    verdict = buchberger_check(gens)
    assert verdict.is_gb and verdict.pairs_reduced > 0
    assert is_radical_by_squarefree_initials(gens)


def test_non_groebner_basis_is_detected_and_completed():
    ring = Ring(1, 3)
    x, y, z = (ring.var(1, c) for c in (1, 2, 3))
    gens = [x * y - z, x * z - y]
    verdict = buchberger_check(gens)
    assert not verdict.is_gb and not verdict.remainder.is_zero()
    gb = buchberger_complete(gens)
    assert buchberger_check(gb.generators).is_gb
    assert gb.contains(verdict.remainder)
    assert gb.contains(x * y - z) and not gb.contains(x)
    assert interreduce(gb.generators) == interreduce(interreduce(gb.generators))


def test_pair_budget_is_enforced():
    ring = Ring(2, 4)
    gens = [minor(ring, (1, 2), c) for c in [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]]
    with pytest.raises(BudgetExceeded):
        buchberger_check(gens, budget=Budget(max_pairs=1))


def test_degree_budget_is_enforced():
    ring = Ring(1, 3)
    x, y, z = (ring.var(1, c) for c in (1, 2, 3))
    with pytest.raises(BudgetExceeded):
        buchberger_complete([x ** 3 * y - z ** 2, x * z ** 2 - y ** 3], budget=Budget(max_degree=4))


def test_groebner_basis_normal_form_decides_membership():
    ring = Ring(2, 3)
    gens = [minor(ring, (1, 2), c) for c in [(1, 2), (1, 3), (2, 3)]]
    gb = GroebnerBasis(gens)
    assert gb.contains(ring.var(1, 1) * gens[2] - ring.var(1, 3) * gens[0])
    assert not gb.contains(ring.var(1, 1))


def test_threaded_check_agrees_with_serial():
    ring = Ring(3, 5)
    from itertools import combinations
    gens = [minor(ring, r, c) for c in combinations(range(1, 6), 2) for r in combinations((1, 2, 3), 2)]
    assert buchberger_check(gens, threads=2).is_gb == buchberger_check(gens, threads=1).is_gb


@given(st.lists(st.lists(st.integers(-4, 4), min_size=3, max_size=3), min_size=1, max_size=5))
@settings(max_examples=60, deadline=None)
def test_rank_matches_minor_oracle(vectors):
    from itertools import combinations
    oracle = 0
    for r in (1, 2, 3):
        rows = range(3)
        for vs in combinations(vectors, r):
            if any(leibniz([[v[i] for i in rs] for v in vs]) != 0 for rs in combinations(rows, r)):
                oracle = r
                break
    assert rank_of_vectors(vectors) == oracle


def test_nullspace_and_proportional():
    rows = [[1, 2, 3], [2, 4, 6]]
    v = nullspace_vector(rows)
    assert v is not None and all(sum(a * b for a, b in zip(r, v)) == 0 for r in rows)
    assert nullspace_vector([[1, 0], [0, 1]]) is None
    assert proportional((1, 2), (-2, -4)) and not proportional((1, 2), (2, 1))


def test_matrix_json_round_trip():
    m = RationalMatrix([[Fraction(1, 2), 0, -3], [4, Fraction(-5, 3), 6]])
    assert RationalMatrix.from_json(m.to_json()) == m
    assert rank(m) == 2
    assert m.column(2) == (0, Fraction(-5, 3))


def test_polynomial_rings_must_match():
    with pytest.raises((ValueError, TypeError)):
        Ring(2, 2).var(1, 1) + Ring(2, 3).var(1, 1)


def test_polynomial_is_hashable_and_picklable():
    import pickle
    f = minor(R, (1, 2), (1, 2))
    assert pickle.loads(pickle.dumps(f)) == f
    assert len({f, f + 0}) == 1
    assert isinstance(f, Polynomial)
