"""
Graph Models

Immutable graph and vertex-set values shared by every module.
Vertex ids are dense 0-indexed integers; neighbor sets and vertex sets are
stored as bit masks so set algebra is a single integer operation.
"""

from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum

from pydantic import BaseModel, ConfigDict, Field

from convexity.graph_core.bitset import iter_bits, mask_of
from convexity.shared.exceptions import (
    DuplicateEdgeError,
    SelfLoopError,
    VertexOutOfRangeError,
)
from convexity.shared.prng import MASK64


# =====================================================
# Vertex sets
# =====================================================


@dataclass(frozen=True, slots=True)
class VertexSet:
    """
    Subset of 0..n-1 for an associated n.

    Iteration yields members in increasing order; comparisons between sets
    of different ground sizes are rejected.
    """

    n: int
    mask: int = 0

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} has members outside 0..{self.n - 1}")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "VertexSet":
        """Build from explicit members, rejecting out-of-range ids."""
        mask = 0
        for v in members:
            if not 0 <= v < n:
                raise VertexOutOfRangeError(v, n)
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "VertexSet":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, v: object) -> bool:
        return isinstance(v, int) and 0 <= v < self.n and bool(self.mask >> v & 1)

    def _check(self, other: "VertexSet") -> None:
        if other.n != self.n:
            raise ValueError(f"vertex sets over different ground sizes ({self.n} vs {other.n})")

    def union(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask | other.mask)

    def intersection(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & other.mask)

    def difference(self, other: "VertexSet") -> "VertexSet":
        self._check(other)
        return VertexSet(self.n, self.mask & ~other.mask)

    def complement(self) -> "VertexSet":
        return VertexSet(self.n, ((1 << self.n) - 1) & ~self.mask)

    __or__ = union
    __and__ = intersection
    __sub__ = difference
    __invert__ = complement

    def issubset(self, other: "VertexSet") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def is_full(self) -> bool:
        return self.mask == (1 << self.n) - 1

    def to_list(self) -> list[int]:
        return list(iter_bits(self.mask))

    def __repr__(self) -> str:
        return f"VertexSet(n={self.n}, members={self.to_list()})"


# =====================================================
# Graph
# =====================================================


@dataclass(frozen=True, slots=True)
class Graph:
    """
    Finite, undirected, simple graph.

    adj[v] is the bit mask of v's neighbors. Labels are optional and carried
    separately so provenance survives composition.
    """

    n: int
    adj: tuple[int, ...]
    labels: tuple[str, ...] | None = None

    def __post_init__(self) -> None:
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        if self.labels is not None and len(self.labels) != self.n:
            raise ValueError(f"{len(self.labels)} labels for n={self.n}")
        for v, row in enumerate(self.adj):
            if row >> self.n:
                raise VertexOutOfRangeError(row.bit_length() - 1, self.n)
            if row >> v & 1:
                raise SelfLoopError(v)
            for u in iter_bits(row):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"adjacency is not symmetric at {v}-{u}")

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Iterable[str] | None = None,
    ) -> "Graph":
        """Build a graph, rejecting loops, duplicates and out-of-range ends."""
        rows = [0] * n
        for u, v in edges:
            for x in (u, v):
                if not 0 <= x < n:
                    raise VertexOutOfRangeError(x, n)
            if u == v:
                raise SelfLoopError(u)
            if rows[u] >> v & 1:
                raise DuplicateEdgeError(min(u, v), max(u, v))
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, tuple(rows), tuple(labels) if labels is not None else None)

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def neighbors(self, v: int) -> frozenset[int]:
        return frozenset(iter_bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges (u, v) with u < v in increasing order."""
        for u, row in enumerate(self.adj):
            for v in iter_bits(row >> (u + 1)):
                yield u, u + 1 + v

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def with_labels(self, labels: Iterable[str] | None) -> "Graph":
        return Graph(self.n, self.adj, tuple(labels) if labels is not None else None)

    def vertex_set(self, members: Iterable[int] = ()) -> VertexSet:
        return VertexSet.of(self.n, members)

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def same_adjacency(self, other: "Graph") -> bool:
        """Adjacency identity, ignoring labels."""
        return self.n == other.n and self.adj == other.adj

    def check_set(self, s: VertexSet) -> int:
        """Mask of s after checking it lives on this graph."""
        if s.n != self.n:
            raise ValueError(f"vertex set over {s.n} vertices used on a graph of order {self.n}")
        return s.mask

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


def mask_from(g: Graph, members: Iterable[int]) -> int:
    """Mask of members after range-checking them against g."""
    members = list(members)
    for v in members:
        if not 0 <= v < g.n:
            raise VertexOutOfRangeError(v, g.n)
    return mask_of(members)


@dataclass(frozen=True, slots=True)
class BipartiteResult:
    """Two-coloring, or an odd cycle proving none exists."""

    parts: tuple[VertexSet, VertexSet] | None = None
    odd_cycle: tuple[int, ...] | None = None

    @property
    def bipartite(self) -> bool:
        return self.parts is not None

    def __bool__(self) -> bool:
        return self.bipartite


class GraphStats(BaseModel):
    """Summary printed by `cxh graph stats`."""

    model_config = ConfigDict(frozen=True)

    n: int
    m: int
    components: int
    connected: bool
    bipartite: bool
    tree: bool
    min_degree: int
    max_degree: int
    vertices_on_cycles: int


# =====================================================
# Generator families
# =====================================================


class GraphFamily(str, Enum):
    """Deterministic instance families."""

    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    STAR = "star"
    GRID = "grid"
    RANDOM_TREE = "random_tree"

    @classmethod
    def from_string(cls, value: str) -> "GraphFamily":
        """Convert string to GraphFamily enum."""
        try:
            return cls(value.lower())
        except ValueError as e:
            raise ValueError(
                f"Invalid graph family: '{value}'. "
                f"Valid values are: {[f.value for f in cls]}"
            ) from e


class FamilySpec(BaseModel):
    """Family name plus its order(s); the seed only matters for random_tree."""

    model_config = ConfigDict(frozen=True)

    family: GraphFamily = Field(..., description="Graph family")
    orders: tuple[int, ...] = Field(..., description="Order(s); grid takes (m, n)")
    seed: int = Field(default=0, ge=0, le=MASK64, description="64-bit unsigned seed")
