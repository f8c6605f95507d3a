"""
Exact hull number.

Iterative deepening over the set size k. Vertices that can never be
generated are forced into every candidate; the remaining positions are
enumerated as k-subsets in increasing mask order, so the first hull set
found is the least minimum hull set.
"""

import structlog

from convexity.graph_core.bitset import iter_bits, k_subsets
from convexity.graph_core.models import Graph, VertexSet
from convexity.graph_core.tools import component_masks, induced_subgraph
from convexity.kernel.models import ConvexityKind
from convexity.kernel.tools import is_hull_mask, never_generated_mask
from convexity.solvers.budget import SearchMeter
from convexity.solvers.models import HullResult, SearchBudget, SolveMethod

log = structlog.get_logger()

OPERATION = "hull_number_exact"


def _least_hull_mask(g: Graph, kind: ConvexityKind, meter: SearchMeter) -> int:
    """Least minimum hull set of a connected graph, as a mask."""
    if g.n <= 1:
        return g.full_mask
    forced = never_generated_mask(g, kind)
    if forced == g.full_mask:
        return forced
    free = [v for v in range(g.n) if not forced >> v & 1]
    # A single vertex generates nothing once n >= 2.
    start = max(forced.bit_count(), 2)
    for k in range(start, g.n + 1):
        meter.lower_bound = k
        log.debug("hull_search_level", k=k, forced=forced.bit_count(), n=g.n)
        for extra in k_subsets(free, k - forced.bit_count()):
            meter.tick()
            candidate = forced | extra
            if is_hull_mask(g, candidate, kind):
                return candidate
    return g.full_mask


def hull_number_exact(
    g: Graph,
    kind: ConvexityKind = ConvexityKind.CYCLE,
    budget: SearchBudget | None = None,
) -> HullResult:
    """
    Minimum hull set by exhaustive search.

    Disconnected graphs are solved per component; the union of the
    per-component least witnesses is the least witness overall.

    Raises:
        BudgetExceededError: graph too large, or the enumeration or time
            limit was hit; carries the bounds established so far
    """
    budget = budget or SearchBudget.from_settings(hull=True)
    meter = SearchMeter(OPERATION, budget)
    meter.upper_bound = g.n
    meter.check_order(g)

    components = component_masks(g)
    if len(components) <= 1:
        witness = _least_hull_mask(g, kind, meter)
    else:
        log.warning("disconnected_input", operation=OPERATION, components=len(components))
        witness = 0
        for comp in components:
            sub, originals = induced_subgraph(g, VertexSet(g.n, comp))
            local = _least_hull_mask(sub, kind, meter)
            for i in iter_bits(local):
                witness |= 1 << originals[i]

    result = HullResult(
        value=witness.bit_count(),
        witness=VertexSet(g.n, witness),
        method=SolveMethod.EXACT,
        kind=kind,
    )
    log.info(
        "hull_number_solved",
        convexity=kind.value,
        n=g.n,
        value=result.value,
        candidates=meter.count,
    )
    return result


def all_minimum_hull_masks(
    g: Graph,
    kind: ConvexityKind = ConvexityKind.CYCLE,
    budget: SearchBudget | None = None,
) -> list[int]:
    """Every minimum hull set of a connected graph, in increasing mask order."""
    budget = budget or SearchBudget.from_settings(hull=True)
    meter = SearchMeter("all_minimum_hull_sets", budget)
    meter.upper_bound = g.n
    meter.check_order(g)
    least = _least_hull_mask(g, kind, meter)
    k = least.bit_count()
    forced = never_generated_mask(g, kind)
    free = [v for v in range(g.n) if not forced >> v & 1]
    found = []
    for extra in k_subsets(free, k - forced.bit_count()):
        meter.tick()
        candidate = forced | extra
        if candidate >= least and is_hull_mask(g, candidate, kind):
            found.append(candidate)
    return found
