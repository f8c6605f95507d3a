"""
Negative control: a deliberately wrong formula the harness must reject.
"""

from convexity.graph_core.generators import path
from convexity.harness.checks.common import exact_hull
from convexity.harness.models import CheckContext, Counterexample
from convexity.kernel.models import ConvexityKind
from convexity.products.models import ProductKind
from convexity.products.tools import product


def check_negative_control(ctx: CheckContext) -> Counterexample | None:
    """Claims hn_cc(P_m x P_n) = m + n, one more than the truth."""
    for m in range(2, ctx.max_order + 1):
        for n in range(2, ctx.max_order + 1):
            p = product(path(m), path(n), ProductKind.CARTESIAN)
            exact = exact_hull(p.graph, ConvexityKind.CYCLE, ctx.budget)
            ctx.count()
            if exact.value != m + n:
                return ctx.counterexample(
                    "grid hull number differs from m + n",
                    graphs={"G": path(m), "H": path(n)},
                    sets={"exact_witness": exact.witness},
                    claimed=m + n,
                    exact=exact.value,
                )
    return None
