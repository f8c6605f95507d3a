"""
Closure-operator laws on random graphs and sets.
"""

from convexity.graph_core.generators import random_graph
from convexity.graph_core.models import Graph, VertexSet
from convexity.harness.models import CheckContext, Counterexample
from convexity.kernel.models import ConvexityKind
from convexity.kernel.oracle import cycle_interval_oracle
from convexity.kernel.tools import closure_mask, interval_mask, is_convex_mask
from convexity.shared.prng import SplitMix64

CYCLE = ConvexityKind.CYCLE
P3 = ConvexityKind.P3

KERNEL_CASES = 500
KERNEL_MAX_N = 10
ORACLE_MAX_N = 7


def _random_mask(rng: SplitMix64, n: int, density: float = 0.4) -> int:
    return sum(1 << v for v in range(n) if rng.random() < density)


def _laws(g: Graph, s: int, t: int) -> str | None:
    """Name of the first law that fails on (g, s, t), with s a subset of t."""
    for kind in (CYCLE, P3):
        hull_s = closure_mask(g, s, kind)
        if s & ~interval_mask(g, s, kind) or interval_mask(g, s, kind) & ~hull_s:
            return f"extensivity ({kind.value})"
        if hull_s & ~closure_mask(g, t, kind):
            return f"monotonicity ({kind.value})"
        if closure_mask(g, hull_s, kind) != hull_s:
            return f"idempotence ({kind.value})"
        meet = hull_s & closure_mask(g, t ^ s, kind)
        if not is_convex_mask(g, meet, kind):
            return f"intersection ({kind.value})"
    if interval_mask(g, s, CYCLE) & ~interval_mask(g, s, P3):
        return "domination (interval)"
    if closure_mask(g, s, CYCLE) == g.full_mask and closure_mask(g, s, P3) != g.full_mask:
        return "domination (hull set)"
    if g.n <= ORACLE_MAX_N and interval_mask(g, s, CYCLE) != cycle_interval_oracle(g, VertexSet(g.n, s)).mask:
        return "cycle interval vs oracle"
    return None


def check_kernel_properties(ctx: CheckContext) -> Counterexample | None:
    """
    Extensivity, monotonicity, idempotence, intersection-closedness,
    cycle-under-P3 domination and oracle agreement of the cycle interval.
    """
    rng = ctx.rng("cases")
    for _ in range(KERNEL_CASES):
        n = 3 + rng.below(KERNEL_MAX_N - 2)
        g = random_graph(n, 0.2 + 0.6 * rng.random(), rng.next_u64())
        s = _random_mask(rng, n)
        t = s | _random_mask(rng, n)
        ctx.count()
        law = _laws(g, s, t)
        if law is not None:
            return ctx.counterexample(
                f"{law} fails",
                graphs={"G": g},
                sets={"S": VertexSet(n, s), "T": VertexSet(n, t)},
            )
    return None
