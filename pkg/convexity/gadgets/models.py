"""
Gadget and Reduction Models
"""

from dataclasses import dataclass, field
from enum import Enum
from typing import Literal

from pydantic import BaseModel, ConfigDict, Field

from convexity.graph_core.models import Graph, VertexSet
from convexity.products.models import ProductGraph


class ReductionKind(str, Enum):
    """Which hardness construction produced an instance."""

    P3_TO_CC = "p3cc"
    """Bipartite P3 hull number to cycle hull number, one F^uv per non-edge."""

    CARTESIAN_K2 = "cart-k2"
    """Cycle hull number to cycle hull number of G' x K2."""

    @classmethod
    def from_string(cls, value: str) -> "ReductionKind":
        try:
            return cls(value.lower())
        except ValueError as e:
            raise ValueError(
                f"Invalid reduction: '{value}'. Valid values are: {[r.value for r in cls]}"
            ) from e


@dataclass(frozen=True)
class GadgetHw:
    """
    The 14-vertex gadget H(w): a 6-cycle y0..y5 with four 4-cycles hung on
    its consecutive edges y1y2, y2y3, y3y4, y4y5.

    ids maps names ("y0", "x3", ...) to vertex ids.
    """

    graph: Graph
    ids: dict[str, int]


@dataclass(frozen=True)
class GadgetFuv:
    """
    Non-edge gadget F^uv: u, u', v, v' plus five H(w) copies w1..w5.

    ids maps roles ("u", "u'", "w3:y0", ...) to vertex ids.
    """

    graph: Graph
    ids: dict[str, int]


class ProvenanceEntry(BaseModel):
    """Where one output vertex of a reduction comes from."""

    model_config = ConfigDict(frozen=True)

    origin: Literal["base", "gadget"] = Field(..., description="Base graph or gadget vertex")
    label: str = Field(..., description="Full provenance label")
    base_vertex: int | None = Field(default=None, ge=0, description="Id in the base graph")
    gadget: str | None = Field(default=None, description="Gadget name, e.g. F^{(0,2)}")
    role: str | None = Field(default=None, description="Role inside the gadget, e.g. w3:y0")


@dataclass(frozen=True)
class ReductionInstance:
    """
    Output of a hardness construction.

    registry maps each gadget name to its role -> output-id table. For the
    Cartesian construction, product is G' x K2.
    """

    reduction: ReductionKind
    base: Graph
    output: Graph
    k: int
    k_prime: int
    provenance: tuple[ProvenanceEntry, ...]
    nonedges: tuple[tuple[int, int], ...] = ()
    registry: dict[str, dict[str, int]] = field(default_factory=dict)
    product: ProductGraph | None = None

    def base_ids(self) -> list[int]:
        """Output ids of the base vertices, indexed by base id."""
        ids = [0] * self.base.n
        for i, entry in enumerate(self.provenance):
            if entry.origin == "base" and entry.base_vertex is not None:
                ids[entry.base_vertex] = i
        return ids


@dataclass(frozen=True)
class HardnessCertificate:
    """
    Hull sets for a Cartesian hardness instance.

    hull_set closes G'; first/second split it with hulls meeting at common;
    product_hull_set has the same size and closes G' x K2.
    """

    hull_set: VertexSet
    first: VertexSet
    second: VertexSet
    common: int
    product_hull_set: VertexSet
