"""
Exact convexity number: the largest proper convex set.
"""

import structlog

from convexity.graph_core.bitset import iter_bits, k_subsets
from convexity.graph_core.models import Graph, VertexSet
from convexity.graph_core.tools import component_masks, induced_subgraph
from convexity.kernel.models import ConvexityKind
from convexity.kernel.tools import is_convex_mask, never_generated_mask
from convexity.shared.exceptions import PreconditionError
from convexity.solvers.budget import SearchMeter
from convexity.solvers.models import ConvexityNumberResult, SearchBudget, SolveMethod

log = structlog.get_logger()

OPERATION = "convexity_number_exact"


def _largest_proper_convex(g: Graph, kind: ConvexityKind, meter: SearchMeter) -> int:
    """Least maximum proper convex set of a connected graph, as a mask."""
    if g.n == 1:
        return 0
    full = g.full_mask
    isolated = never_generated_mask(g, kind)
    if isolated:
        # V - v is convex exactly when v is never generated; dropping the
        # highest such v gives the least mask of size n - 1.
        top = isolated.bit_length() - 1
        log.debug("convexity_shortcut", vertex=top, n=g.n)
        return full & ~(1 << top)
    positions = list(range(g.n))
    for k in range(g.n - 2, -1, -1):
        meter.upper_bound = k
        log.debug("convexity_search_level", k=k, n=g.n)
        for candidate in k_subsets(positions, k):
            meter.tick()
            if is_convex_mask(g, candidate, kind):
                return candidate
    return 0


def convexity_number_exact(
    g: Graph,
    kind: ConvexityKind = ConvexityKind.CYCLE,
    budget: SearchBudget | None = None,
) -> ConvexityNumberResult:
    """
    Maximum proper convex set by downward search over k = n-1, n-2, ...

    For a disconnected graph the best proper convex set keeps every
    component whole except one, which contributes its own best proper
    convex set. K1 has C = 0 (only the empty set is proper).

    Raises:
        PreconditionError: the graph has no vertices
        BudgetExceededError: graph too large or search limits hit
    """
    if g.n == 0:
        raise PreconditionError(OPERATION, "the empty graph has no proper subset")
    budget = budget or SearchBudget.from_settings()
    meter = SearchMeter(OPERATION, budget)
    meter.lower_bound = 0
    meter.upper_bound = g.n - 1
    meter.check_order(g)

    components = component_masks(g)
    if len(components) == 1:
        witness = _largest_proper_convex(g, kind, meter)
    else:
        log.warning("disconnected_input", operation=OPERATION, components=len(components))
        candidates = []
        for comp in components:
            sub, originals = induced_subgraph(g, VertexSet(g.n, comp))
            local = _largest_proper_convex(sub, kind, meter)
            mask = g.full_mask & ~comp
            for i in iter_bits(local):
                mask |= 1 << originals[i]
            candidates.append(mask)
        best = max(c.bit_count() for c in candidates)
        witness = min(c for c in candidates if c.bit_count() == best)

    result = ConvexityNumberResult(
        value=witness.bit_count(),
        witness=VertexSet(g.n, witness),
        method=SolveMethod.EXACT,
        kind=kind,
    )
    log.info(
        "convexity_number_solved",
        convexity=kind.value,
        n=g.n,
        value=result.value,
        candidates=meter.count,
    )
    return result
