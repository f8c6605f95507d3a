"""
Solvers

Exact hull number, convexity number and independence number, product
fast-paths, and the partitioned-hull-set condition.
"""

from convexity.solvers.closed_forms import CARTESIAN_FORMS, STRONG_LEX_FORMS, ClosedForm
from convexity.solvers.convexity_number import convexity_number_exact
from convexity.solvers.fastpaths import (
    cartesian_convexity_formula,
    cartesian_hull_bounds,
    cartesian_hull_witness,
    convexity_fastpath,
    hull_fastpath,
)
from convexity.solvers.hull import all_minimum_hull_masks, hull_number_exact
from convexity.solvers.independence import independence_number_exact
from convexity.solvers.models import (
    ConvexityNumberResult,
    HullResult,
    IndependenceResult,
    PartitionCertificate,
    SearchBudget,
    SolveMethod,
)
from convexity.solvers.partition import (
    partition_certificate,
    partition_condition,
    partition_product_witness,
)

__all__ = [
    # Models
    "SearchBudget",
    "SolveMethod",
    "HullResult",
    "ConvexityNumberResult",
    "IndependenceResult",
    "PartitionCertificate",
    # Exact solvers
    "hull_number_exact",
    "all_minimum_hull_masks",
    "convexity_number_exact",
    "independence_number_exact",
    # Fast-paths
    "hull_fastpath",
    "convexity_fastpath",
    "cartesian_hull_bounds",
    "cartesian_hull_witness",
    "cartesian_convexity_formula",
    # Partition condition
    "partition_condition",
    "partition_certificate",
    "partition_product_witness",
    # Closed forms
    "ClosedForm",
    "CARTESIAN_FORMS",
    "STRONG_LEX_FORMS",
]
