"""Ideal construction and the verification suites built on it."""

from .census import (
    REFERENCE_2_5,
    REFERENCE_SIZES_3_4,
    REFERENCE_TOTAL_2_5,
    REFERENCE_TOTAL_3_4,
    TABLE_3_4,
    CensusClass,
    CensusReport,
    arrangement_of_hypergraph,
    census,
    table_arrangement,
    table_hypergraph,
)
from .fixtures import FIXTURES, IdentityFixture, corrupt, parse_combination, verify_identity, verify_verbatim
from .ideals import (
    ContainmentResult,
    GBReport,
    IdealSpec,
    check_containment,
    components_split,
    groebner_basis_of,
    ideal_delta,
    ideal_I0,
    ideal_of,
    ideal_of_S,
    relabel,
    standard_relabelling,
    verify_gb_family,
)
from .sampling import (
    THREE_LINES_WITNESS,
    ClassSampling,
    SamplingReport,
    class_arrangements,
    concurrency_binomial,
    conjecture_experiment_GL,
    non_redundancy_witnesses,
    permute_arrangement,
    three_concurrent_lines,
    three_lines_report,
    verify_decomposition_by_sampling,
)
from .suites import SUITES, Check, run_suite
