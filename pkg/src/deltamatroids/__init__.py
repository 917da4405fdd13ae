"""Workbench for matroids and delta-matroids on small ground sets.

Axiom checkers with witnesses, upper/lower matroid extraction, duals and
minors, the sandwich construction, graph rigidity via (2,3)-sparsity, and
exhaustive verification suites at desk scale.
"""

from .core import (
    GroundSet,
    InputError,
    SetFamily,
    Subset,
    default_ground,
    maximal_members,
    minimal_members,
    sym_diff,
)
from .delta import (
    DeltaMatroid,
    PairabilityReport,
    bouchet_triple,
    check_symmetric_exchange,
    construct_sandwich,
    enumerate_delta_matroids,
    fmax_lower_uniform,
    fmax_upper_uniform,
    is_pairable,
    lower_matroid,
    restrict_by_deletion,
    restrict_to_contained,
    upper_matroid,
)
from .matroids import (
    AxiomError,
    ExchangeViolation,
    Matroid,
    check_basis_axiom,
    direct_sum,
    is_quotient,
    is_union_of_circuits,
    uniform,
)
from .rigidity import (
    CORPUS,
    ConeQuotientReport,
    ConeResult,
    Multigraph,
    cone,
    cycle_matroid,
    is_sparse_23,
    rigidity_feasible_family,
    rigidity_matroid,
    verify_cone_quotient,
)
from .search import (
    PROPERTY_IDS,
    SearchReport,
    enumerate_matroids,
    find_unpairable_pair,
    verify_property,
)

__version__ = "0.1.0"

__all__ = [
    "AxiomError",
    "CORPUS",
    "ConeQuotientReport",
    "ConeResult",
    "DeltaMatroid",
    "ExchangeViolation",
    "GroundSet",
    "InputError",
    "Matroid",
    "Multigraph",
    "PROPERTY_IDS",
    "PairabilityReport",
    "SearchReport",
    "SetFamily",
    "Subset",
    "bouchet_triple",
    "check_basis_axiom",
    "check_symmetric_exchange",
    "cone",
    "construct_sandwich",
    "cycle_matroid",
    "default_ground",
    "direct_sum",
    "enumerate_delta_matroids",
    "enumerate_matroids",
    "find_unpairable_pair",
    "fmax_lower_uniform",
    "fmax_upper_uniform",
    "is_pairable",
    "is_quotient",
    "is_sparse_23",
    "is_union_of_circuits",
    "lower_matroid",
    "maximal_members",
    "minimal_members",
    "restrict_by_deletion",
    "restrict_to_contained",
    "rigidity_feasible_family",
    "rigidity_matroid",
    "sym_diff",
    "uniform",
    "upper_matroid",
    "verify_cone_quotient",
    "verify_property",
]
