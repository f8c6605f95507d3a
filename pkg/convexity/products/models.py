"""
Product Models

Product kinds, factor sides and the ProductGraph value with its pair
encoding index(g, h) = g * n + h.
"""

from dataclasses import dataclass
from enum import Enum

from convexity.graph_core.models import Graph


class ProductKind(str, Enum):
    """
    Graph product kind.

    All three share the vertex set V(G) x V(H) and differ only in adjacency.
    """

    CARTESIAN = "cartesian"
    """(g1~g2 and h1=h2) or (g1=g2 and h1~h2)."""

    STRONG = "strong"
    """Cartesian adjacency, or g1~g2 and h1~h2."""

    LEXICOGRAPHIC = "lexicographic"
    """g1~g2, or g1=g2 and h1~h2."""

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @property
    def commutative(self) -> bool:
        """Whether G*H and H*G are isomorphic through the index swap for all factors."""
        return self is not ProductKind.LEXICOGRAPHIC

    @classmethod
    def from_string(cls, value: str) -> "ProductKind":
        """Convert string to ProductKind enum; accepts short forms like 'lex'."""
        key = value.strip().lower()
        key = _ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError as e:
            raise ValueError(
                f"Invalid product kind: '{value}'. "
                f"Valid values are: {[k.value for k in cls]}"
            ) from e


_SYMBOLS = {
    ProductKind.CARTESIAN: "□",
    ProductKind.STRONG: "⊠",
    ProductKind.LEXICOGRAPHIC: "∘",
}

_ALIASES = {
    "cart": "cartesian",
    "box": "cartesian",
    "lex": "lexicographic",
    "o": "lexicographic",
}


class FactorSide(str, Enum):
    """Which factor a layer or projection refers to."""

    G = "G"
    H = "H"

    @classmethod
    def from_string(cls, value: str) -> "FactorSide":
        try:
            return cls(value.upper())
        except ValueError as e:
            raise ValueError(
                f"Invalid factor side: '{value}'. Valid values are: {[s.value for s in cls]}"
            ) from e


@dataclass(frozen=True, slots=True)
class ProductGraph:
    """
    A product graph together with its factor metadata.

    graph has m * n vertices; vertex (g, h) lives at g * n + h. Products of
    products are plain Graphs: factors are not tracked recursively.
    """

    graph: Graph
    m: int
    n: int
    kind: ProductKind
    factors: tuple[Graph, Graph]

    def index(self, g: int, h: int) -> int:
        if not (0 <= g < self.m and 0 <= h < self.n):
            raise ValueError(f"pair ({g}, {h}) outside {self.m} x {self.n}")
        return g * self.n + h

    def pair(self, i: int) -> tuple[int, int]:
        if not 0 <= i < self.m * self.n:
            raise ValueError(f"index {i} outside 0..{self.m * self.n - 1}")
        return divmod(i, self.n)

    @property
    def name(self) -> str:
        return f"G{self.kind.symbol}H ({self.m}x{self.n})"
