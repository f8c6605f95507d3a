"""
Partitioned minimum hull sets.

For a factor H with a two-vertex hull set {h, h'}, hn(G x H) = hn(G) for
the Cartesian product exactly when some minimum hull set S of G splits into
nonempty S1, S2 whose convex hulls intersect. This module decides that
condition by enumeration and builds the |S|-vertex hull set of G x H from a
split.
"""

import structlog

from convexity.graph_core.bitset import iter_bits, lowest_bit
from convexity.graph_core.models import Graph, VertexSet
from convexity.graph_core.tools import component_mask
from convexity.kernel.models import ConvexityKind
from convexity.kernel.tools import closure_mask, is_hull_mask
from convexity.products.models import ProductKind
from convexity.products.tools import cross_mask, product
from convexity.shared.exceptions import PreconditionError, ReductionCounterexampleError
from convexity.solvers.budget import SearchMeter
from convexity.solvers.hull import all_minimum_hull_masks
from convexity.solvers.models import PartitionCertificate, SearchBudget

log = structlog.get_logger()

CYCLE = ConvexityKind.CYCLE


def split_with_common_hull(g: Graph, hull_mask: int) -> tuple[int, int, int] | None:
    """
    First split (S1, S2, common vertex) of hull_mask whose part hulls meet.

    S1 always holds the least member; S1 runs over submasks in increasing
    order, so the result is deterministic.
    """
    if hull_mask.bit_count() < 2:
        return None
    anchor = 1 << lowest_bit(hull_mask)
    rest = hull_mask & ~anchor
    sub = 0
    while True:
        s1 = anchor | sub
        s2 = hull_mask & ~s1
        if s2:
            common = closure_mask(g, s1, CYCLE) & closure_mask(g, s2, CYCLE)
            if common:
                return s1, s2, lowest_bit(common)
        if sub == rest:
            return None
        # Next submask of rest in increasing order.
        sub = (sub - rest) & rest


def partition_certificate(
    g: Graph,
    budget: SearchBudget | None = None,
) -> PartitionCertificate | None:
    """
    A minimum cycle hull set of g with an intersecting split, or None.

    Splits with an empty part are not considered, so trees and K1 give None.
    """
    budget = budget or SearchBudget.from_settings(hull=True)
    meter = SearchMeter("partition_condition", budget)
    for hull_mask in all_minimum_hull_masks(g, CYCLE, budget):
        meter.tick()
        split = split_with_common_hull(g, hull_mask)
        if split is not None:
            s1, s2, common = split
            log.debug("partition_found", hull_set=list(iter_bits(hull_mask)), common=common)
            return PartitionCertificate(
                hull_set=VertexSet(g.n, hull_mask),
                first=VertexSet(g.n, s1),
                second=VertexSet(g.n, s2),
                common=common,
            )
    return None


def partition_condition(g: Graph, budget: SearchBudget | None = None) -> bool:
    """True iff some minimum cycle hull set of g has a split with meeting hulls."""
    return partition_certificate(g, budget) is not None


def partition_product_witness(
    g_factor: Graph,
    h_factor: Graph,
    certificate: PartitionCertificate,
    hull_pair: tuple[int, int],
) -> VertexSet:
    """
    Hull set of G x H (Cartesian) with |S| vertices.

    With B the component of hull(S2) holding the common vertex, the seeds
    S2 & B go to the h' layer and all other seeds to the h layer. The h'
    layer then closes B, the h layer closes hull(S1) (which reaches the
    common vertex) and spreads along B, so the h layer closes all of G;
    the common vertex's H-layer closes through {h, h'}.

    Raises:
        PreconditionError: hull_pair is not a hull set of H
        ReductionCounterexampleError: the built set fails to close
    """
    operation = "partition_product_witness"
    h, h_prime = hull_pair
    if not is_hull_mask(h_factor, (1 << h) | (1 << h_prime), CYCLE) or h == h_prime:
        raise PreconditionError(operation, "hull_pair is not a hull set of H", hull_pair=hull_pair)

    s2_hull = closure_mask(g_factor, certificate.second.mask, CYCLE)
    block = component_mask(g_factor, certificate.common, s2_hull)
    upper = certificate.second.mask & block
    lower = certificate.hull_set.mask & ~upper

    n = h_factor.n
    mask = cross_mask(lower, 1 << h, n) | cross_mask(upper, 1 << h_prime, n)
    p = product(g_factor, h_factor, ProductKind.CARTESIAN)
    if not is_hull_mask(p.graph, mask, CYCLE):
        raise ReductionCounterexampleError(
            operation,
            "layered set does not close the product",
            {
                "hull_set": certificate.hull_set.to_list(),
                "first": certificate.first.to_list(),
                "second": certificate.second.to_list(),
                "hull_pair": list(hull_pair),
            },
        )
    return VertexSet(p.graph.n, mask)
