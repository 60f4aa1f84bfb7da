"""Hypergraphs on the k x l index grid and the families attached to them."""

from .ci import CIModel, CIStatement, UnsupportedStatement, ci_statement_to_hypergraph, model_C
from .core import (
    GridShape,
    Hypergraph,
    build_delta,
    build_delta_prime,
    canonical_generating_edges,
    connected_components,
    induced,
    r_completion,
)
from .ktwo import (
    MAX_ENUMERATION_L,
    REGIME_D,
    REGIME_DC,
    Standardization,
    SubsetClass,
    build_F_ijc,
    build_H_of_S,
    build_I0_hypergraph,
    classify_S,
    enumerate_minimal,
    free_columns,
    ideal_hypergraph_of_S,
    in_D,
    is_minimal,
    minimal_classes,
    standardize,
)
from .symmetry import canonical_form, orbit_by_enumeration, orbit_size, sym_orbit

__all__ = [
    "CIModel", "CIStatement", "GridShape", "Hypergraph", "MAX_ENUMERATION_L", "REGIME_D",
    "REGIME_DC", "Standardization", "SubsetClass", "UnsupportedStatement", "build_F_ijc",
    "build_H_of_S", "build_I0_hypergraph", "build_delta", "build_delta_prime",
    "canonical_form", "canonical_generating_edges", "ci_statement_to_hypergraph", "classify_S",
    "connected_components", "enumerate_minimal", "free_columns", "ideal_hypergraph_of_S",
    "in_D", "induced", "is_minimal", "minimal_classes", "model_C", "orbit_by_enumeration",
    "orbit_size", "r_completion", "standardize", "sym_orbit",
]
