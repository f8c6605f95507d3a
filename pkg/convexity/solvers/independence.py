"""
Exact maximum independent set.

Branch and bound over bit masks: branch on a vertex of highest degree in
the remaining candidate graph (take it, or drop it) and prune with a greedy
clique-cover bound, since an independent set meets each clique at most once.
"""

import structlog

from convexity.graph_core.bitset import iter_bits, lowest_bit
from convexity.graph_core.models import Graph, VertexSet
from convexity.solvers.budget import SearchMeter
from convexity.solvers.models import IndependenceResult, SearchBudget

log = structlog.get_logger()

OPERATION = "independence_number_exact"


def _clique_cover_bound(adj: tuple[int, ...], candidates: int) -> int:
    """Number of cliques in a greedy cover of g[candidates]."""
    cliques = 0
    remaining = candidates
    while remaining:
        v = lowest_bit(remaining)
        clique = 1 << v
        extendable = adj[v] & remaining
        while extendable:
            u = lowest_bit(extendable)
            clique |= 1 << u
            extendable &= adj[u]
        remaining &= ~clique
        cliques += 1
    return cliques


def _greedy(adj: tuple[int, ...], candidates: int) -> int:
    """Min-degree greedy independent set, as a starting incumbent."""
    chosen = 0
    remaining = candidates
    while remaining:
        v = min(iter_bits(remaining), key=lambda x: ((adj[x] & remaining).bit_count(), x))
        chosen |= 1 << v
        remaining &= ~(adj[v] | 1 << v)
    return chosen


def independence_number_exact(g: Graph, budget: SearchBudget | None = None) -> IndependenceResult:
    """
    alpha(g) with the least maximum independent set (by mask order).

    Raises:
        BudgetExceededError: graph too large, or node/time limit hit
    """
    budget = budget or SearchBudget.from_settings()
    meter = SearchMeter(OPERATION, budget)
    meter.upper_bound = g.n
    meter.check_order(g)
    adj = g.adj

    best = _greedy(adj, g.full_mask)
    best_size = best.bit_count()
    meter.lower_bound = best_size

    def search(chosen: int, candidates: int) -> None:
        nonlocal best, best_size
        meter.tick()
        size = chosen.bit_count()
        if not candidates:
            if size > best_size or (size == best_size and chosen < best):
                best, best_size = chosen, size
                meter.lower_bound = best_size
            return
        # Equal bounds are explored so ties resolve to the least mask.
        if size + _clique_cover_bound(adj, candidates) < best_size:
            return
        pivot, pivot_degree = -1, -1
        for v in iter_bits(candidates):
            d = (adj[v] & candidates).bit_count()
            if d > pivot_degree:
                pivot, pivot_degree = v, d
        if pivot_degree == 0:
            search(chosen | candidates, 0)
            return
        search(chosen | 1 << pivot, candidates & ~(adj[pivot] | 1 << pivot))
        search(chosen, candidates & ~(1 << pivot))

    search(0, g.full_mask)
    log.info("independence_number_solved", n=g.n, value=best_size, nodes=meter.count)
    return IndependenceResult(value=best_size, witness=VertexSet(g.n, best))
