"""
Convexity Kernel Models
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any

from convexity.graph_core.models import VertexSet


class ConvexityKind(str, Enum):
    """Graph convexity in use."""

    CYCLE = "cc"
    """w is generated when it closes a cycle with the set."""

    P3 = "p3"
    """w is generated when it has two neighbors in the set."""

    @classmethod
    def from_string(cls, value: str) -> "ConvexityKind":
        """Convert string to ConvexityKind enum; 'cycle' is accepted for cc."""
        key = value.strip().lower()
        if key == "cycle":
            key = "cc"
        try:
            return cls(key)
        except ValueError as e:
            raise ValueError(
                f"Invalid convexity: '{value}'. "
                f"Valid values are: {[k.value for k in cls]}"
            ) from e


@dataclass(frozen=True)
class ClosureResult:
    """
    Convex hull of a seed set with its generation trace.

    rounds[0] is the seed; rounds[r] holds the vertices first generated by
    the r-th application of the interval operator. Rounds are pairwise
    disjoint and their union is closed.
    """

    closed: VertexSet
    rounds: tuple[VertexSet, ...]
    kind: ConvexityKind

    @property
    def seed(self) -> VertexSet:
        return self.rounds[0]

    @property
    def iterations(self) -> int:
        return len(self.rounds) - 1

    @property
    def is_full(self) -> bool:
        return self.closed.is_full()

    def to_dict(self) -> dict[str, Any]:
        return {
            "convexity": self.kind.value,
            "n": self.closed.n,
            "closed": self.closed.to_list(),
            "rounds": [r.to_list() for r in self.rounds],
            "hull_set": self.is_full,
        }
