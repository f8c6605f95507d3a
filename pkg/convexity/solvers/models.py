"""
Solver Models

Search budgets and the result records returned by the exact solvers and
the product fast-paths.
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from convexity.graph_core.models import VertexSet
from convexity.kernel.models import ConvexityKind
from convexity.shared.config import REPRESENTATION_MAX_N, Settings, get_settings


class SolveMethod(str, Enum):
    """How a result was obtained."""

    EXACT = "exact"
    FASTPATH_STRONG = "fastpath-strong"
    FASTPATH_LEX = "fastpath-lex"
    FASTPATH_TREE_PRODUCT = "fastpath-tree-product"
    FASTPATH_GRID = "fastpath-grid"
    FASTPATH_CARTESIAN = "fastpath-cartesian"
    FASTPATH_ALPHA = "fastpath-alpha"

    @property
    def is_exact(self) -> bool:
        return self is SolveMethod.EXACT


class SearchBudget(BaseModel):
    """
    Limits for one exact search.

    max_n caps the order of the input graph, max_subsets the number of
    candidate sets (or branch nodes) examined, time_limit the wall clock.
    """

    model_config = ConfigDict(frozen=True)

    max_n: int = Field(
        default=REPRESENTATION_MAX_N,
        gt=0,
        le=REPRESENTATION_MAX_N,
        description="Vertex cap",
    )
    max_subsets: int = Field(default=20_000_000, gt=0, description="Enumeration cap")
    time_limit: float = Field(default=120.0, gt=0, description="Seconds")

    @classmethod
    def from_settings(cls, settings: Settings | None = None, *, hull: bool = False) -> "SearchBudget":
        """Budget from settings; hull searches use the tighter exact_max_n cap."""
        settings = settings or get_settings()
        return cls(
            max_n=settings.exact_max_n if hull else settings.representation_max_n,
            max_subsets=settings.max_subsets,
            time_limit=settings.time_limit,
        )


@dataclass(frozen=True)
class HullResult:
    """Hull number with a minimum hull set."""

    value: int
    witness: VertexSet
    method: SolveMethod
    kind: ConvexityKind = ConvexityKind.CYCLE

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "witness": self.witness.to_list(),
            "method": self.method.value,
            "convexity": self.kind.value,
        }


@dataclass(frozen=True)
class ConvexityNumberResult:
    """Convexity number with a maximum proper convex set."""

    value: int
    witness: VertexSet
    method: SolveMethod
    kind: ConvexityKind = ConvexityKind.CYCLE

    def to_dict(self) -> dict[str, Any]:
        return {
            "value": self.value,
            "witness": self.witness.to_list(),
            "method": self.method.value,
            "convexity": self.kind.value,
        }


@dataclass(frozen=True)
class IndependenceResult:
    """Independence number with a maximum independent set."""

    value: int
    witness: VertexSet

    def to_dict(self) -> dict[str, Any]:
        return {"value": self.value, "witness": self.witness.to_list()}


@dataclass(frozen=True)
class PartitionCertificate:
    """
    Minimum hull set S = S1 + S2 whose part hulls intersect.

    common is the least vertex in hull(S1) & hull(S2).
    """

    hull_set: VertexSet
    first: VertexSet
    second: VertexSet
    common: int

    def to_dict(self) -> dict[str, Any]:
        return {
            "hull_set": self.hull_set.to_list(),
            "first": self.first.to_list(),
            "second": self.second.to_list(),
            "common": self.common,
        }
