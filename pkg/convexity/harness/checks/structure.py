"""
Structure of convex sets in Cartesian products.
"""

from convexity.graph_core.models import Graph, VertexSet
from convexity.graph_core.tools import component_masks
from convexity.harness.checks.common import factor_pairs
from convexity.harness.models import CheckContext, Counterexample
from convexity.kernel.models import ConvexityKind
from convexity.kernel.tools import is_convex_mask
from convexity.products.models import ProductKind
from convexity.products.tools import cross_mask, is_subproduct_mask, product

CYCLE = ConvexityKind.CYCLE

# Products up to this order have all 2^mn subsets enumerated.
SUBSET_PRODUCT_ORDER = 12


def _convex_masks(g: Graph) -> list[int]:
    return [s for s in range(1 << g.n) if is_convex_mask(g, s, CYCLE)]


def check_subproduct_decomposition(ctx: CheckContext) -> Counterexample | None:
    """Each component of a convex set of G x H is a subproduct."""
    for g, h in factor_pairs(ctx.max_order, ordered=False):
        if g.n * h.n > SUBSET_PRODUCT_ORDER:
            continue
        p = product(g, h, ProductKind.CARTESIAN)
        for s in _convex_masks(p.graph):
            ctx.count()
            for part in component_masks(p.graph, s):
                if not is_subproduct_mask(p, part):
                    return ctx.counterexample(
                        "component of a convex set is not a subproduct",
                        graphs={"G": g, "H": h},
                        sets={
                            "convex_set": VertexSet(p.graph.n, s),
                            "component": VertexSet(p.graph.n, part),
                        },
                    )
    return None


def check_product_of_convex_sets(ctx: CheckContext) -> Counterexample | None:
    """S x T is convex in G x H for convex S of G and convex T of H."""
    for g, h in factor_pairs(ctx.max_order, ordered=True):
        p = product(g, h, ProductKind.CARTESIAN)
        convex_h = _convex_masks(h)
        for s in _convex_masks(g):
            for t in convex_h:
                ctx.count()
                if not is_convex_mask(p.graph, cross_mask(s, t, h.n), CYCLE):
                    return ctx.counterexample(
                        "product of convex sets is not convex",
                        graphs={"G": g, "H": h},
                        sets={"S": VertexSet(g.n, s), "T": VertexSet(h.n, t)},
                    )
    return None
