"""Point and line arrangements, their polynomials and configuration spaces."""

from .config import (
    COORD_RANGE,
    MAX_RESAMPLES,
    SamplingError,
    Unrealizable,
    enumerate_bases,
    is_configuration,
    random_matrix,
    sample_configuration,
)
from .incidence import (
    BuildupCertificate,
    IncidenceType,
    arrangement_of_type,
    certify_irreducible_by_buildup,
    enumerate_incidence_types,
    is_complete_quadrilateral,
)
from .model import LineArrangement, arrangement_from_matrix, build_L_of_S, is_compatible
from .polys import F_of_L, F_specs, G_of_L, concurrency_binomials

__all__ = [
    "BuildupCertificate", "COORD_RANGE", "F_of_L", "F_specs", "G_of_L", "IncidenceType",
    "LineArrangement", "MAX_RESAMPLES", "SamplingError", "Unrealizable", "arrangement_from_matrix",
    "arrangement_of_type", "build_L_of_S", "certify_irreducible_by_buildup",
    "concurrency_binomials", "enumerate_bases", "enumerate_incidence_types",
    "is_complete_quadrilateral", "is_compatible", "is_configuration", "random_matrix",
    "sample_configuration",
]
