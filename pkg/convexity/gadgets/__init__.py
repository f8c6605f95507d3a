"""
Gadgets and Reductions

The H(w) and F^uv gadgets, the bipartite P3-to-cycle reduction, the
Cartesian-with-K2 hardness construction and their hull-set certificates.
"""

from convexity.gadgets.builders import (
    build_Fuv,
    build_Hw,
    build_identified_HH,
    hull_set_Hw,
    hull_set_identified_HH,
)
from convexity.gadgets.models import (
    GadgetFuv,
    GadgetHw,
    HardnessCertificate,
    ProvenanceEntry,
    ReductionInstance,
    ReductionKind,
)
from convexity.gadgets.reductions import (
    build_cartesian_hardness,
    from_envelope,
    hardness_certificate,
    lift_hull_set,
    nonedge_set,
    project_back,
    reduce_p3_to_cc,
    to_envelope,
)

__all__ = [
    # Models
    "GadgetHw",
    "GadgetFuv",
    "ProvenanceEntry",
    "ReductionInstance",
    "ReductionKind",
    "HardnessCertificate",
    # Gadgets
    "build_Hw",
    "hull_set_Hw",
    "build_Fuv",
    "build_identified_HH",
    "hull_set_identified_HH",
    # Reductions
    "nonedge_set",
    "reduce_p3_to_cc",
    "lift_hull_set",
    "project_back",
    "build_cartesian_hardness",
    "hardness_certificate",
    "to_envelope",
    "from_envelope",
]
