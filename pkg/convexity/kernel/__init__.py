"""
Convexity Kernel

Interval and closure operators with convexity predicates for the cycle and
P3 convexities.
"""

from convexity.kernel.disjoint_set import DisjointSet
from convexity.kernel.models import ClosureResult, ConvexityKind
from convexity.kernel.oracle import cycle_interval_oracle
from convexity.kernel.tools import (
    closure,
    closure_mask,
    interval,
    interval_mask,
    is_convex,
    is_convex_mask,
    is_hull_mask,
    is_hull_set,
    never_generated_mask,
)

__all__ = [
    "ConvexityKind",
    "ClosureResult",
    "DisjointSet",
    "interval",
    "closure",
    "is_convex",
    "is_hull_set",
    "interval_mask",
    "closure_mask",
    "is_convex_mask",
    "is_hull_mask",
    "never_generated_mask",
    "cycle_interval_oracle",
]
