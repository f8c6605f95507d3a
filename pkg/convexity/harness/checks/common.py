"""
Shared instance streams and cached solves for theorem checks.
"""

from collections.abc import Iterator
from functools import lru_cache
from itertools import combinations_with_replacement, product as pairs_of

from convexity.graph_core.generators import ATLAS_MAX_ORDER, connected_graphs
from convexity.graph_core.models import Graph
from convexity.kernel.models import ConvexityKind
from convexity.solvers.hull import hull_number_exact
from convexity.solvers.models import HullResult, SearchBudget

FactorPair = tuple[Graph, Graph]


def atlas(max_order: int, min_order: int = 2) -> tuple[Graph, ...]:
    """Connected atlas graphs, with max_order clamped to the atlas range."""
    top = min(max_order, ATLAS_MAX_ORDER)
    if top < min_order:
        return ()
    return connected_graphs(top, min_order)


def factor_pairs(max_order: int, *, ordered: bool) -> Iterator[FactorPair]:
    """
    Pairs of connected nontrivial factors with orders <= max_order.

    Unordered pairs suit commutative products.
    """
    graphs = atlas(max_order)
    if ordered:
        yield from pairs_of(graphs, repeat=2)
    else:
        yield from combinations_with_replacement(graphs, 2)


@lru_cache(maxsize=4096)
def exact_hull(g: Graph, kind: ConvexityKind, budget: SearchBudget) -> HullResult:
    return hull_number_exact(g, kind, budget)


def has_cycle(g: Graph) -> bool:
    return g.edge_count >= g.n
