"""
Graph Generators

Deterministic instance families, named small graphs and the enumeration of
small connected graphs used by the verification harness.
"""

import heapq
import re
from functools import lru_cache

import networkx as nx
import structlog

from convexity.graph_core.io import from_networkx
from convexity.graph_core.models import FamilySpec, Graph, GraphFamily
from convexity.shared.exceptions import InvalidFamilySpecError
from convexity.shared.prng import SplitMix64

log = structlog.get_logger()

ATLAS_MAX_ORDER = 7


def path(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def cycle(n: int) -> Graph:
    if n < 3:
        raise InvalidFamilySpecError("cycle", f"needs at least 3 vertices, got {n}")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)] + [(0, n - 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, ((u, v) for u in range(n) for v in range(u + 1, n)))


def star(n: int) -> Graph:
    """K_{1,n-1} with center 0."""
    return Graph.from_edges(n, ((0, v) for v in range(1, n)))


def grid(m: int, n: int) -> Graph:
    """P_m x P_n with (g, h) stored at g*n + h."""
    edges = []
    for g in range(m):
        for h in range(n):
            i = g * n + h
            if h + 1 < n:
                edges.append((i, i + 1))
            if g + 1 < m:
                edges.append((i, i + n))
    return Graph.from_edges(m * n, edges)


def random_tree(n: int, seed: int) -> Graph:
    """
    Uniformly random labeled tree on n vertices.

    A Prufer sequence of length n-2 is drawn with SplitMix64 and decoded with
    a min-heap of current leaves, so equal seeds give equal trees.
    """
    if n == 1:
        return Graph.empty(1)
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    rng = SplitMix64(seed)
    sequence = [rng.below(n) for _ in range(n - 2)]

    degree = [1] * n
    for x in sequence:
        degree[x] += 1
    leaves = [v for v in range(n) if degree[v] == 1]
    heapq.heapify(leaves)

    edges = []
    for x in sequence:
        leaf = heapq.heappop(leaves)
        edges.append((min(leaf, x), max(leaf, x)))
        degree[x] -= 1
        if degree[x] == 1:
            heapq.heappush(leaves, x)
    u, v = heapq.heappop(leaves), heapq.heappop(leaves)
    edges.append((min(u, v), max(u, v)))
    return Graph.from_edges(n, edges)


def random_graph(n: int, p: float, seed: int) -> Graph:
    """Seeded G(n, p): each pair u < v is an edge with probability p."""
    if not 0.0 <= p <= 1.0:
        raise ValueError(f"edge probability must lie in [0, 1], got {p}")
    rng = SplitMix64(seed)
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


# =====================================================
# Family dispatch
# =====================================================


def generate(spec: FamilySpec) -> Graph:
    """
    Build the graph a FamilySpec describes.

    Raises:
        InvalidFamilySpecError: wrong number of orders, a zero order, or a
            cycle on fewer than 3 vertices
    """
    family = spec.family
    arity = 2 if family == GraphFamily.GRID else 1
    if len(spec.orders) != arity:
        raise InvalidFamilySpecError(
            family.value, f"expects {arity} order(s), got {len(spec.orders)}"
        )
    if any(order < 1 for order in spec.orders):
        raise InvalidFamilySpecError(family.value, f"orders must be >= 1, got {spec.orders}")

    match family:
        case GraphFamily.PATH:
            g = path(spec.orders[0])
        case GraphFamily.CYCLE:
            g = cycle(spec.orders[0])
        case GraphFamily.COMPLETE:
            g = complete(spec.orders[0])
        case GraphFamily.STAR:
            g = star(spec.orders[0])
        case GraphFamily.GRID:
            g = grid(*spec.orders)
        case GraphFamily.RANDOM_TREE:
            g = random_tree(spec.orders[0], spec.seed)

    log.debug("graph_generated", family=family.value, orders=spec.orders, n=g.n)
    return g


# =====================================================
# Named graphs
# =====================================================

_FIXED_GRAPHS: dict[str, tuple[int, list[tuple[int, int]]]] = {
    "diamond": (4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)]),
    "paw": (4, [(0, 1), (1, 2), (0, 2), (0, 3)]),
    "claw": (4, [(0, 1), (0, 2), (0, 3)]),
    "bowtie": (5, [(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]),
}

_FAMILY_NAME = re.compile(r"^([PCKS])(\d+)$")


def named_graph(name: str) -> Graph:
    """
    Small graph by name: P<n>, C<n>, K<n>, S<n> (star), diamond, paw, claw, bowtie.
    """
    key = name.strip()
    if key.lower() in _FIXED_GRAPHS:
        n, edges = _FIXED_GRAPHS[key.lower()]
        return Graph.from_edges(n, edges)
    match = _FAMILY_NAME.match(key.upper())
    if match is None:
        raise InvalidFamilySpecError(name, "unknown graph name")
    letter, order = match.group(1), int(match.group(2))
    if order < 1:
        raise InvalidFamilySpecError(name, "order must be >= 1")
    builders = {"P": path, "C": cycle, "K": complete, "S": star}
    return builders[letter](order)


@lru_cache(maxsize=8)
def connected_graphs(max_order: int, min_order: int = 2) -> tuple[Graph, ...]:
    """
    Connected graphs up to isomorphism with min_order..max_order vertices.

    Order follows the networkx graph atlas (by order, then edge count).
    """
    if not 1 <= min_order <= max_order <= ATLAS_MAX_ORDER:
        raise ValueError(
            f"orders must satisfy 1 <= {min_order} <= {max_order} <= {ATLAS_MAX_ORDER}"
        )
    graphs = tuple(
        from_networkx(atlas_graph)
        for atlas_graph in nx.graph_atlas_g()
        if min_order <= atlas_graph.number_of_nodes() <= max_order
        and nx.is_connected(atlas_graph)
    )
    log.debug("atlas_loaded", min_order=min_order, max_order=max_order, count=len(graphs))
    return graphs
