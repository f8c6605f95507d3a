"""
Hull-number checks on graph products.
"""

import structlog

from convexity.graph_core.bitset import iter_bits
from convexity.graph_core.generators import complete, named_graph, path, random_tree
from convexity.graph_core.models import VertexSet
from convexity.harness.checks.common import atlas, exact_hull, factor_pairs, has_cycle
from convexity.harness.models import CheckContext, Counterexample
from convexity.kernel.models import ConvexityKind
from convexity.kernel.tools import closure_mask, is_hull_mask
from convexity.products.models import FactorSide, ProductKind
from convexity.products.tools import layer, layers_of, product, projection
from convexity.solvers.fastpaths import (
    cartesian_hull_bounds,
    cartesian_hull_witness,
    hull_fastpath,
)
from convexity.solvers.partition import partition_certificate, partition_product_witness

log = structlog.get_logger()

CYCLE = ConvexityKind.CYCLE

PARTITION_GRAPH_CAP = 30
RANDOM_TREE_PAIRS = 20


def _two_hull(ctx: CheckContext, kind: ProductKind) -> Counterexample | None:
    for g, h in factor_pairs(ctx.max_order, ordered=not kind.commutative):
        p = product(g, h, kind)
        exact = exact_hull(p.graph, CYCLE, ctx.budget)
        fast = hull_fastpath(p)
        ctx.count()
        if exact.value != 2 or fast is None or fast.value != 2:
            return ctx.counterexample(
                f"hn_cc of the {kind.value} product is not 2",
                graphs={"G": g, "H": h},
                sets={"exact_witness": exact.witness},
                exact=exact.value,
                fastpath=fast.value if fast else None,
            )
        if not is_hull_mask(p.graph, fast.witness.mask, CYCLE):
            return ctx.counterexample(
                "fast-path witness is not a hull set",
                graphs={"G": g, "H": h},
                sets={"witness": fast.witness},
            )
    return None


def check_strong_hull(ctx: CheckContext) -> Counterexample | None:
    """hn_cc(G x H) = 2 for the strong product of nontrivial connected factors."""
    return _two_hull(ctx, ProductKind.STRONG)


def check_lex_hull(ctx: CheckContext) -> Counterexample | None:
    """hn_cc(G o H) = 2 for the lexicographic product."""
    return _two_hull(ctx, ProductKind.LEXICOGRAPHIC)


def check_tree_product_hull(ctx: CheckContext) -> Counterexample | None:
    """hn_cc(T1 x T2) = m + n - 1 for paths (grids) and seeded random trees."""
    bound = 2 * ctx.max_order + 1
    instances = [(path(m), path(n)) for m in range(2, bound - 1) for n in range(2, bound - m + 1)]
    rng = ctx.rng("trees")
    for _ in range(RANDOM_TREE_PAIRS):
        m = 2 + rng.below(bound - 3)
        n = 2 + rng.below(bound - m - 1)
        instances.append((random_tree(m, rng.next_u64()), random_tree(n, rng.next_u64())))

    for g, h in instances:
        p = product(g, h, ProductKind.CARTESIAN)
        expected = g.n + h.n - 1
        exact = exact_hull(p.graph, CYCLE, ctx.budget)
        fast = hull_fastpath(p)
        ctx.count()
        if exact.value != expected or fast is None or fast.value != expected:
            return ctx.counterexample(
                "tree product hull number differs from m + n - 1",
                graphs={"G": g, "H": h},
                sets={"exact_witness": exact.witness},
                expected=expected,
                exact=exact.value,
                fastpath=fast.value if fast else None,
            )
    return None


def check_cartesian_hull_bounds(ctx: CheckContext) -> Counterexample | None:
    """max(hn G, hn H, 3) <= hn(G x H) <= hn G + hn H - 1, with the L-shaped witness."""
    for g, h in factor_pairs(ctx.max_order, ordered=False):
        hn_g = exact_hull(g, CYCLE, ctx.budget)
        hn_h = exact_hull(h, CYCLE, ctx.budget)
        p = product(g, h, ProductKind.CARTESIAN)
        hn_p = exact_hull(p.graph, CYCLE, ctx.budget)
        lo, hi = cartesian_hull_bounds(hn_g.value, hn_h.value)
        witness = cartesian_hull_witness(g, h, hn_g.witness, hn_h.witness)
        ctx.count()
        if not lo <= hn_p.value <= hi or len(witness) != hi:
            return ctx.counterexample(
                "Cartesian hull number outside its bounds",
                graphs={"G": g, "H": h},
                sets={"exact_witness": hn_p.witness, "l_shaped": witness},
                hn_g=hn_g.value,
                hn_h=hn_h.value,
                hn_product=hn_p.value,
                bounds=[lo, hi],
            )

    for m in (2, 3):
        for n in (2, 3):
            p = product(complete(m), complete(n), ProductKind.CARTESIAN)
            value = exact_hull(p.graph, CYCLE, ctx.budget).value
            ctx.count()
            if value != 3:
                return ctx.counterexample(
                    "hn_cc(K_m x K_n) is not 3",
                    graphs={"G": complete(m), "H": complete(n)},
                    hn_product=value,
                )
    return None


def check_hull_two_factor_partition(ctx: CheckContext) -> Counterexample | None:
    """
    For H with hn_cc(H) = 2: hn(G x H) is hn(G) or hn(G) + 1, and equals
    hn(G) exactly when a minimum hull set of G splits with meeting hulls.
    """
    graphs = [g for g in atlas(ctx.max_order + 2, min_order=3) if has_cycle(g)]
    if len(graphs) > PARTITION_GRAPH_CAP:
        ctx.rng("sample").shuffle(graphs)
        graphs = sorted(graphs[:PARTITION_GRAPH_CAP], key=lambda g: (g.n, g.edge_count, g.adj))
    factors = {"K3": complete(3), "diamond": named_graph("diamond")}

    for g in graphs:
        hn_g = exact_hull(g, CYCLE, ctx.budget)
        certificate = partition_certificate(g, ctx.budget)
        for name, h in factors.items():
            pair = tuple(exact_hull(h, CYCLE, ctx.budget).witness)
            p = product(g, h, ProductKind.CARTESIAN)
            hn_p = exact_hull(p.graph, CYCLE, ctx.budget)
            ctx.count()
            fails_range = hn_p.value not in (hn_g.value, hn_g.value + 1)
            if fails_range or (hn_p.value == hn_g.value) != (certificate is not None):
                return ctx.counterexample(
                    "hull number of G x H disagrees with the partition condition",
                    graphs={"G": g, "H": h},
                    sets={"exact_witness": hn_p.witness},
                    factor=name,
                    hn_g=hn_g.value,
                    hn_product=hn_p.value,
                    partition=certificate is not None,
                )
            if certificate is not None:
                witness = partition_product_witness(g, h, certificate, (pair[0], pair[1]))
                if len(witness) != hn_g.value:
                    return ctx.counterexample(
                        "partition witness has the wrong size",
                        graphs={"G": g, "H": h},
                        sets={"witness": witness, "hull_set": certificate.hull_set},
                    )
    ctx.details["graphs"] = len(graphs)
    return None


def check_projection_hull_sets(ctx: CheckContext) -> Counterexample | None:
    """Both projections of a hull set of G x H are hull sets of the factors."""
    for g, h in factor_pairs(ctx.max_order, ordered=False):
        p = product(g, h, ProductKind.CARTESIAN)
        witness = exact_hull(p.graph, CYCLE, ctx.budget).witness
        ctx.count()
        for side, factor in ((FactorSide.G, g), (FactorSide.H, h)):
            shadow = projection(p, witness, side)
            if not is_hull_mask(factor, shadow.mask, CYCLE):
                return ctx.counterexample(
                    f"projection on {side.value} is not a hull set",
                    graphs={"G": g, "H": h},
                    sets={"witness": witness, "projection": shadow},
                )
    return None


def check_line_column_closure(ctx: CheckContext) -> Counterexample | None:
    """A convex set holding one G-layer and one H-layer is all of G x H."""
    for g, h in factor_pairs(ctx.max_order, ordered=True):
        p = product(g, h, ProductKind.CARTESIAN)
        for gi in range(g.n):
            column = layer(p, FactorSide.G, gi)
            for hi in range(h.n):
                seed = column | layer(p, FactorSide.H, hi)
                ctx.count()
                if closure_mask(p.graph, seed.mask, CYCLE) != p.graph.full_mask:
                    return ctx.counterexample(
                        "layer pair does not generate the product",
                        graphs={"G": g, "H": h},
                        sets={"seed": seed},
                        g=gi,
                        h=hi,
                    )
    return None


def check_two_subset_layer(ctx: CheckContext) -> Counterexample | None:
    """Every 2-subset of G x H is independent or has its hull inside one layer."""
    for g, h in factor_pairs(ctx.max_order, ordered=False):
        p = product(g, h, ProductKind.CARTESIAN)
        n = p.graph.n
        for a in range(n):
            for b in range(a + 1, n):
                ctx.count()
                pair = 1 << a | 1 << b
                hull = VertexSet(n, closure_mask(p.graph, pair, CYCLE))
                independent = not p.graph.has_edge(a, b)
                if (independent and hull.mask != pair) or (not independent and not layers_of(p, hull)):
                    return ctx.counterexample(
                        "hull of an adjacent pair leaves its layer",
                        graphs={"G": g, "H": h},
                        sets={"pair": VertexSet.of(n, (a, b)), "hull": hull},
                        hull_layers=sorted({p.pair(i) for i in iter_bits(hull.mask)}),
                    )
    return None
