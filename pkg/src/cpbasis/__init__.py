"""Colored-partition combinatorics for symplectic affine Lie algebra bases.

The package covers: exact root-system data and Weyl dimensions
(:mod:`cpbasis.rootdata`); colored partitions with their well order
(:mod:`cpbasis.partitions`); closed-form leading-term families on
diagonal paths (:mod:`cpbasis.leading`) with a brute-force oracle
(:mod:`cpbasis.oracle`); the rank-doubling scheme identification
(:mod:`cpbasis.ident`); and admissibility checking, basis enumeration,
graded series and partition-counting demos (:mod:`cpbasis.basis`).
"""

from .basis import (
    BasisKind,
    QSeries,
    admissible_by_divisibility,
    admissible_by_inequalities,
    character_oracle_a1_level1,
    enumerate_basis,
    graded_series,
    leading_terms,
    rr_counts,
)
from .ident import (
    iota,
    iota_inverse,
    transport_partition,
    transport_partition_inverse,
)
from .leading import (
    DiagonalPath,
    base_leading_terms,
    diagonal_paths,
    fs_leading_terms,
    leading_term_for_multiset,
    std_leading_terms,
    window_split,
)
from .oracle import (
    AuditReport,
    RelationSupport,
    audit_windows,
    brute_leading_term,
    relation_support,
)
from .partitions import (
    Alphabet,
    Color,
    ColoredPartition,
    Factor,
    compare_colors,
    compare_factors,
    compare_partitions,
    divides,
    full_scheme,
    multiply,
    unit,
    upper_scheme,
)
from .rootdata import (
    MinusculeData,
    RootSystemSpec,
    Weight,
    eps,
    highest_root,
    minuscule_gamma,
    positive_roots,
    verify_branching,
    weight,
    weyl_dim,
)

__all__ = [
    "Alphabet",
    "AuditReport",
    "BasisKind",
    "Color",
    "ColoredPartition",
    "DiagonalPath",
    "Factor",
    "MinusculeData",
    "QSeries",
    "RelationSupport",
    "RootSystemSpec",
    "Weight",
    "admissible_by_divisibility",
    "admissible_by_inequalities",
    "audit_windows",
    "base_leading_terms",
    "brute_leading_term",
    "character_oracle_a1_level1",
    "compare_colors",
    "compare_factors",
    "compare_partitions",
    "diagonal_paths",
    "divides",
    "enumerate_basis",
    "eps",
    "fs_leading_terms",
    "full_scheme",
    "graded_series",
    "highest_root",
    "iota",
    "iota_inverse",
    "leading_term_for_multiset",
    "leading_terms",
    "minuscule_gamma",
    "multiply",
    "positive_roots",
    "relation_support",
    "rr_counts",
    "std_leading_terms",
    "transport_partition",
    "transport_partition_inverse",
    "unit",
    "upper_scheme",
    "verify_branching",
    "weight",
    "weyl_dim",
    "window_split",
]

__version__ = "0.1.0"
