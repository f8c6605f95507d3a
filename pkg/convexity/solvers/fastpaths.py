"""
Product fast-paths.

Closed formulas for the cycle hull number and cycle convexity number of
products of nontrivial connected factors, each returned with a witness
built the way the corresponding proof builds it:

- strong and lexicographic products: hn = 2, witnessed by two adjacent
  vertices inside one H-layer;
- Cartesian product of two trees: hn = m + n - 1, witnessed by an
  L-shaped set through one H-layer and one G-layer;
- Cartesian product: C = max(n * C(G), m * C(H)), witnessed by a maximum
  proper convex set of one factor times the whole other factor;
- strong and lexicographic products: C = alpha(G * H).
"""

import structlog

from convexity.graph_core.models import Graph, VertexSet
from convexity.graph_core.tools import is_connected, is_tree
from convexity.kernel.models import ConvexityKind
from convexity.kernel.tools import is_hull_mask
from convexity.products.models import ProductGraph, ProductKind
from convexity.products.tools import cross_mask, product
from convexity.shared.exceptions import (
    DisconnectedFactorError,
    NotAHullSetError,
    PreconditionError,
    ReductionCounterexampleError,
)
from convexity.solvers.convexity_number import convexity_number_exact
from convexity.solvers.independence import independence_number_exact
from convexity.solvers.models import (
    ConvexityNumberResult,
    HullResult,
    SearchBudget,
    SolveMethod,
)

log = structlog.get_logger()


def require_nontrivial_connected(operation: str, factors: tuple[Graph, Graph]) -> None:
    for side, factor in zip(("G", "H"), factors):
        if factor.n < 2 or not is_connected(factor):
            raise DisconnectedFactorError(operation, side)


def _is_path(g: Graph) -> bool:
    return is_tree(g) and all(g.degree(v) <= 2 for v in range(g.n))


def adjacent_pair_witness(p: ProductGraph) -> VertexSet:
    """
    {(0, h1), (0, h2)} for the edge h1h2 of H giving the least mask.

    H is connected and nontrivial, so the edge exists.
    """
    h_factor = p.factors[1]
    h1, h2 = min(h_factor.edges(), key=lambda e: (e[1], e[0]))
    return VertexSet.of(p.m * p.n, (p.index(0, h1), p.index(0, h2)))


def l_shaped_mask(p: ProductGraph, s_g: int, s_h: int) -> int:
    """({g1} x S_H) | (S_G x {hs}) with g1 = min S_G and hs = max S_H."""
    g1 = (s_g & -s_g).bit_length() - 1
    hs = s_h.bit_length() - 1
    return cross_mask(1 << g1, s_h, p.n) | cross_mask(s_g, 1 << hs, p.n)


def hull_fastpath(
    p: ProductGraph,
    factors: tuple[Graph, Graph] | None = None,
) -> HullResult | None:
    """
    Cycle hull number of a product from its formula, when one applies.

    Returns None for Cartesian products whose factors are not both trees.

    Raises:
        DisconnectedFactorError: a factor is disconnected or trivial
    """
    factors = factors or p.factors
    require_nontrivial_connected("hull_fastpath", factors)
    g_factor, h_factor = factors

    if p.kind is not ProductKind.CARTESIAN:
        method = (
            SolveMethod.FASTPATH_STRONG if p.kind is ProductKind.STRONG else SolveMethod.FASTPATH_LEX
        )
        return HullResult(value=2, witness=adjacent_pair_witness(p), method=method)

    if not (is_tree(g_factor) and is_tree(h_factor)):
        return None
    # A tree's only hull set is its whole vertex set.
    witness = l_shaped_mask(p, g_factor.full_mask, h_factor.full_mask)
    method = (
        SolveMethod.FASTPATH_GRID
        if _is_path(g_factor) and _is_path(h_factor)
        else SolveMethod.FASTPATH_TREE_PRODUCT
    )
    return HullResult(
        value=g_factor.n + h_factor.n - 1,
        witness=VertexSet(p.m * p.n, witness),
        method=method,
    )


def cartesian_hull_bounds(hn_g: int, hn_h: int) -> tuple[int, int]:
    """
    Bounds on hn(G x H) for the Cartesian product from the factor hull numbers.

    lo = max(hn_g, hn_h, 3), hi = hn_g + hn_h - 1.
    """
    if hn_g < 2 or hn_h < 2:
        raise PreconditionError(
            "cartesian_hull_bounds",
            "hull numbers of nontrivial connected factors are at least 2",
            hn_g=hn_g,
            hn_h=hn_h,
        )
    return max(hn_g, hn_h, 3), hn_g + hn_h - 1


def cartesian_hull_witness(
    g_factor: Graph,
    h_factor: Graph,
    s_g: VertexSet,
    s_h: VertexSet,
) -> VertexSet:
    """
    L-shaped hull set of G x H (Cartesian) from factor hull sets.

    Raises:
        NotAHullSetError: s_g or s_h is not a cycle hull set of its factor
        ReductionCounterexampleError: the L-shaped set fails to close
    """
    operation = "cartesian_hull_witness"
    for factor, s in ((g_factor, s_g), (h_factor, s_h)):
        if not is_hull_mask(factor, factor.check_set(s), ConvexityKind.CYCLE):
            raise NotAHullSetError(operation, s.to_list())
    p = product(g_factor, h_factor, ProductKind.CARTESIAN)
    mask = l_shaped_mask(p, s_g.mask, s_h.mask)
    if not is_hull_mask(p.graph, mask, ConvexityKind.CYCLE):
        raise ReductionCounterexampleError(
            operation,
            "L-shaped set does not close the product",
            {
                "s_g": s_g.to_list(),
                "s_h": s_h.to_list(),
                "witness": VertexSet(p.graph.n, mask).to_list(),
            },
        )
    return VertexSet(p.graph.n, mask)


def cartesian_convexity_formula(c_g: int, c_h: int, m: int, n: int) -> int:
    """C(G x H) = max(n * C(G), m * C(H)) for the Cartesian product."""
    return max(n * c_g, m * c_h)


def convexity_fastpath(
    p: ProductGraph,
    factors: tuple[Graph, Graph] | None = None,
    budget: SearchBudget | None = None,
) -> ConvexityNumberResult:
    """
    Cycle convexity number of a product from its formula.

    Cartesian: exact factor convexity numbers combined by the max formula.
    Strong and lexicographic: the independence number of the product.

    Raises:
        DisconnectedFactorError: a factor is disconnected or trivial
        BudgetExceededError: a factor (or product) solve exceeds the budget
    """
    factors = factors or p.factors
    require_nontrivial_connected("convexity_fastpath", factors)
    g_factor, h_factor = factors

    if p.kind is ProductKind.CARTESIAN:
        c_g = convexity_number_exact(g_factor, ConvexityKind.CYCLE, budget)
        c_h = convexity_number_exact(h_factor, ConvexityKind.CYCLE, budget)
        value = cartesian_convexity_formula(c_g.value, c_h.value, p.m, p.n)
        # The G side wins ties.
        if p.n * c_g.value >= p.m * c_h.value:
            mask = cross_mask(c_g.witness.mask, h_factor.full_mask, p.n)
        else:
            mask = cross_mask(g_factor.full_mask, c_h.witness.mask, p.n)
        log.debug("convexity_fastpath_cartesian", c_g=c_g.value, c_h=c_h.value, value=value)
        return ConvexityNumberResult(
            value=value,
            witness=VertexSet(p.graph.n, mask),
            method=SolveMethod.FASTPATH_CARTESIAN,
        )

    alpha = independence_number_exact(p.graph, budget)
    return ConvexityNumberResult(
        value=alpha.value,
        witness=alpha.witness,
        method=SolveMethod.FASTPATH_ALPHA,
    )
