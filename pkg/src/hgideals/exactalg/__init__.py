"""Exact-rational polynomial arithmetic, minors, Gröbner bases and linear algebra."""

from .groebner import (
    Budget,
    BudgetExceeded,
    GBVerdict,
    GroebnerBasis,
    buchberger_check,
    buchberger_complete,
    divide,
    groebner_basis_from_verified,
    interreduce,
    is_radical_by_squarefree_initials,
    normal_form,
    s_polynomial,
)
from .linalg import RationalMatrix, column_submatrix, columns_rank, determinant, rank
from .minors import MinorSpec, all_minors, maximal_minor, minor, minor_polynomial, ordered_minor
from .polynomial import (
    LEX,
    LexOrder,
    Polynomial,
    Ring,
    VarId,
    compare_monomials,
    format_polynomial,
    parse_polynomial,
)

__all__ = [
    "Budget", "BudgetExceeded", "GBVerdict", "GroebnerBasis", "LEX", "LexOrder", "MinorSpec",
    "Polynomial", "RationalMatrix", "Ring", "VarId", "all_minors", "buchberger_check",
    "buchberger_complete", "column_submatrix", "columns_rank", "compare_monomials", "determinant",
    "divide", "format_polynomial", "groebner_basis_from_verified", "interreduce",
    "is_radical_by_squarefree_initials", "maximal_minor", "minor", "minor_polynomial",
    "normal_form", "ordered_minor", "parse_polynomial", "rank", "s_polynomial",
]
