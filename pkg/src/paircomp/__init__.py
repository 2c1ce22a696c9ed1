"""Pairwise-comparison matrices over orderable multiplicative structures.

The admission rule: a carrier works for ratios exactly when it is an
abelian torsion-free (hence linearly orderable) group, which in this
catalog means the positive reals. Strict mode enforces that rule; research
mode opens the other carriers so the classic negative/complex
counterexamples can be reproduced and inspected.
"""

from .additive import (
    AdditiveMatrix,
    additive_is_consistent,
    additive_is_reciprocal,
    exp_map,
    log_map,
)
from .errors import PaircompError
from .fixtures import FIXTURE_NAMES, Finding, FindingsReport, Fixture, fixture, run_report
from .groups import (
    ADDITIVE_REALS,
    NONZERO_COMPLEX,
    NONZERO_REALS,
    POSITIVE_REALS,
    GroupDescriptor,
    OrderabilityVerdict,
    TorsionWitness,
    check_orderability,
    cyclic_roots_of_unity,
    element_order,
    find_torsion_witness,
    group_by_name,
    group_catalog,
    order_axiom_check,
    standard_le,
)
from .matrix import (
    InconsistencyReport,
    Judgment,
    Mode,
    PcMatrix,
    Triad,
    complete_from_tree,
    superfluous_count,
)
from .weights import (
    BranchSet,
    Normalization,
    WeightVector,
    eigen_full_symmetric,
    eigen_weights,
    geometric_mean_weights,
    gm_branch_vectors,
    rank_entities,
    reconstruct,
)

__version__ = "0.1.0"

__all__ = [
    "AdditiveMatrix",
    "ADDITIVE_REALS",
    "BranchSet",
    "FIXTURE_NAMES",
    "Finding",
    "FindingsReport",
    "Fixture",
    "GroupDescriptor",
    "InconsistencyReport",
    "Judgment",
    "Mode",
    "NONZERO_COMPLEX",
    "NONZERO_REALS",
    "Normalization",
    "OrderabilityVerdict",
    "PaircompError",
    "PcMatrix",
    "POSITIVE_REALS",
    "TorsionWitness",
    "Triad",
    "WeightVector",
    "additive_is_consistent",
    "additive_is_reciprocal",
    "check_orderability",
    "complete_from_tree",
    "cyclic_roots_of_unity",
    "eigen_full_symmetric",
    "eigen_weights",
    "element_order",
    "exp_map",
    "find_torsion_witness",
    "fixture",
    "geometric_mean_weights",
    "gm_branch_vectors",
    "group_by_name",
    "group_catalog",
    "log_map",
    "order_axiom_check",
    "rank_entities",
    "reconstruct",
    "run_report",
    "standard_le",
    "superfluous_count",
]
