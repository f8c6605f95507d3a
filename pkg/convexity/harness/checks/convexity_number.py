"""
Convexity-number checks: product formulas, closed forms and alpha.
"""

from convexity.graph_core.generators import random_graph
from convexity.graph_core.models import Graph
from convexity.harness.checks.common import factor_pairs
from convexity.harness.models import CheckContext, Counterexample
from convexity.kernel.models import ConvexityKind
from convexity.kernel.tools import is_convex_mask
from convexity.products.models import ProductKind
from convexity.products.tools import product
from convexity.solvers.closed_forms import CARTESIAN_FORMS, STRONG_LEX_FORMS, ClosedForm
from convexity.solvers.convexity_number import convexity_number_exact
from convexity.solvers.fastpaths import convexity_fastpath
from convexity.solvers.independence import independence_number_exact

CYCLE = ConvexityKind.CYCLE

# Largest product order compared against the exact convexity search.
EXACT_PRODUCT_ORDER = 16
CLOSED_FORM_ORDERS = range(2, 6)
ALPHA_PAIRS = 20


def check_cartesian_convexity_number(ctx: CheckContext) -> Counterexample | None:
    """C(G x H) = max(n C(G), m C(H)) for the Cartesian product."""
    for g, h in factor_pairs(ctx.max_order, ordered=False):
        p = product(g, h, ProductKind.CARTESIAN)
        exact = convexity_number_exact(p.graph, CYCLE, ctx.budget)
        fast = convexity_fastpath(p, budget=ctx.budget)
        ctx.count()
        witness_ok = len(fast.witness) == fast.value and is_convex_mask(
            p.graph, fast.witness.mask, CYCLE
        )
        if exact.value != fast.value or not witness_ok:
            return ctx.counterexample(
                "Cartesian convexity number differs from the max formula",
                graphs={"G": g, "H": h},
                sets={"exact_witness": exact.witness, "formula_witness": fast.witness},
                exact=exact.value,
                formula=fast.value,
            )
    return None


def check_strong_lex_convexity_alpha(ctx: CheckContext) -> Counterexample | None:
    """C(G * H) = alpha(G * H) for strong and lexicographic products."""
    for kind in (ProductKind.STRONG, ProductKind.LEXICOGRAPHIC):
        for g, h in factor_pairs(ctx.max_order, ordered=not kind.commutative):
            if g.n * h.n > EXACT_PRODUCT_ORDER:
                continue
            p = product(g, h, kind)
            exact = convexity_number_exact(p.graph, CYCLE, ctx.budget)
            alpha = independence_number_exact(p.graph, ctx.budget)
            ctx.count()
            if exact.value != alpha.value:
                return ctx.counterexample(
                    f"convexity number of the {kind.value} product is not alpha",
                    graphs={"G": g, "H": h},
                    sets={"exact_witness": exact.witness, "independent_set": alpha.witness},
                    exact=exact.value,
                    alpha=alpha.value,
                )
    return None


def _closed_forms(
    ctx: CheckContext,
    forms: tuple[ClosedForm, ...],
    exact_order: int,
) -> Counterexample | None:
    seed = ctx.rng("trees").next_u64() >> 1
    for form in forms:
        for kind in form.kinds:
            for m in CLOSED_FORM_ORDERS:
                for n in CLOSED_FORM_ORDERS:
                    if not form.applies(m, n):
                        continue
                    g, h = form.factors(m, n, seed)
                    p = product(g, h, kind)
                    expected = form.value(m, n)
                    fast = convexity_fastpath(p, budget=ctx.budget)
                    exact = (
                        convexity_number_exact(p.graph, CYCLE, ctx.budget).value
                        if m * n <= exact_order
                        else None
                    )
                    ctx.count()
                    if fast.value != expected or exact not in (None, expected):
                        return ctx.counterexample(
                            f"closed form {form.name} fails",
                            graphs={"G": g, "H": h},
                            sets={"formula_witness": fast.witness},
                            kind=kind.value,
                            m=m,
                            n=n,
                            expected=expected,
                            fastpath=fast.value,
                            exact=exact,
                        )
    return None


def check_cartesian_closed_forms(ctx: CheckContext) -> Counterexample | None:
    """Closed forms for products of complete graphs, cycles and trees."""
    return _closed_forms(ctx, CARTESIAN_FORMS, EXACT_PRODUCT_ORDER)


def check_strong_lex_closed_forms(ctx: CheckContext) -> Counterexample | None:
    """Closed forms for strong and lexicographic products of K, C and P."""
    return _closed_forms(ctx, STRONG_LEX_FORMS, EXACT_PRODUCT_ORDER)


def _random_factor(ctx: CheckContext, tag: str) -> Graph:
    rng = ctx.rng(tag)
    order = 2 + rng.below(ctx.max_order + 1)
    return random_graph(order, 0.5, rng.next_u64())


def check_lex_alpha_multiplicative(ctx: CheckContext) -> Counterexample | None:
    """alpha(G o H) = alpha(G) alpha(H)."""
    for i in range(ALPHA_PAIRS):
        g = _random_factor(ctx, f"G{i}")
        h = _random_factor(ctx, f"H{i}")
        p = product(g, h, ProductKind.LEXICOGRAPHIC)
        a_p = independence_number_exact(p.graph, ctx.budget).value
        a_g = independence_number_exact(g, ctx.budget).value
        a_h = independence_number_exact(h, ctx.budget).value
        ctx.count()
        if a_p != a_g * a_h:
            return ctx.counterexample(
                "alpha is not multiplicative over the lexicographic product",
                graphs={"G": g, "H": h},
                alpha_g=a_g,
                alpha_h=a_h,
                alpha_product=a_p,
            )
    return None
