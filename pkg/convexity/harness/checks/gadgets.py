"""
Gadget facts and reduction certificates.
"""

import structlog

from convexity.gadgets.builders import (
    FUV_ATTACHMENT_CYCLES,
    FUV_ATTACHMENTS,
    HW_CYCLES,
    HW_HULL_NAMES,
    build_Fuv,
    build_Hw,
    build_identified_HH,
    hull_set_Hw,
    hull_set_identified_HH,
)
from convexity.gadgets.reductions import (
    build_cartesian_hardness,
    hardness_certificate,
    lift_hull_set,
    project_back,
    reduce_p3_to_cc,
)
from convexity.graph_core.tools import is_bipartite, is_cut_vertex, is_cycle_walk
from convexity.harness.checks.common import atlas, exact_hull
from convexity.harness.models import CheckContext, Counterexample
from convexity.kernel.models import ConvexityKind
from convexity.kernel.tools import is_hull_mask

log = structlog.get_logger()

CYCLE = ConvexityKind.CYCLE
P3 = ConvexityKind.P3


def check_hw_gadget(ctx: CheckContext) -> Counterexample | None:
    """
    H(w) has 14 vertices, 18 edges, its five listed cycles and hull
    number 9 with S(w) a hull set; F^uv and the identified pair are built
    as described.
    """
    hw = build_Hw()
    g = hw.graph
    cycles_ok = all(is_cycle_walk(g, [hw.ids[name] for name in walk]) for walk in HW_CYCLES)
    ctx.count()
    if (g.n, g.edge_count) != (14, 18) or not cycles_ok or not is_bipartite(g):
        return ctx.counterexample("H(w) structure is wrong", graphs={"H(w)": g})

    s = hull_set_Hw()
    exact = exact_hull(g, CYCLE, ctx.budget)
    ctx.count()
    if not is_hull_mask(g, s.mask, CYCLE) or exact.value != len(HW_HULL_NAMES):
        return ctx.counterexample(
            "H(w) hull facts fail",
            graphs={"H(w)": g},
            sets={"S(w)": s, "exact_witness": exact.witness},
            hn=exact.value,
        )
    ctx.details["hw_hull_number"] = exact.value
    ctx.details["hw_y0_in_least_witness"] = hw.ids["y0"] in exact.witness

    fuv = build_Fuv()
    f = fuv.graph
    ids = fuv.ids
    ctx.count()
    attachments_ok = all(
        is_cycle_walk(f, [ids[role] for role in walk]) for walk in FUV_ATTACHMENT_CYCLES
    )
    u_prime, y0_w3, v_prime = (ids[role] for role in FUV_ATTACHMENTS[2])
    path_ok = f.has_edge(u_prime, y0_w3) and f.has_edge(y0_w3, v_prime)
    degrees_ok = f.degree(ids["u"]) == 2 and f.degree(ids["v"]) == 2
    if f.n != 74 or not (attachments_ok and path_ok and degrees_ok) or not is_bipartite(f):
        return ctx.counterexample("F^uv structure is wrong", graphs={"F^uv": f})

    hh = build_identified_HH()
    ctx.count()
    if (
        hh.n != 27
        or not is_cut_vertex(hh, 0)
        or not is_hull_mask(hh, hull_set_identified_HH().mask, CYCLE)
    ):
        return ctx.counterexample(
            "identified H(w) pair is wrong",
            graphs={"HH": hh},
            sets={"S": hull_set_identified_HH()},
        )
    return None


def check_bipartite_reduction_forward(ctx: CheckContext) -> Counterexample | None:
    """
    For bipartite G, a minimum P3 hull set lifts to a cycle hull set of G'
    of size hn_P3(G) + 45|L|, and projects back to itself.
    """
    for g in atlas(ctx.max_order + 2):
        if not is_bipartite(g):
            continue
        s = exact_hull(g, P3, ctx.budget)
        instance = reduce_p3_to_cc(g, s.value)
        lifted = lift_hull_set(instance, s.witness)
        ctx.count()
        if not is_bipartite(instance.output) or len(lifted) != instance.k_prime:
            return ctx.counterexample(
                "lifted hull set has the wrong size or G' is not bipartite",
                graphs={"G": g},
                sets={"s_p3": s.witness, "lifted": lifted},
                k_prime=instance.k_prime,
            )
        back = project_back(instance, lifted)
        if back != s.witness:
            return ctx.counterexample(
                "projection does not invert the lift",
                graphs={"G": g},
                sets={"s_p3": s.witness, "projected": back},
            )
    return None


def check_cartesian_hardness_certificate(ctx: CheckContext) -> Counterexample | None:
    """
    base hull | S(w1) | S(w2) closes G' and, split at v, yields an equally
    large hull set of G' x K2.
    """
    rng = ctx.rng("attach")
    for g in atlas(ctx.max_order):
        base = exact_hull(g, CYCLE, ctx.budget)
        u = rng.below(g.n)
        instance = build_cartesian_hardness(g, u, base.value)
        certificate = hardness_certificate(instance, base.witness)
        ctx.count()
        sizes = {len(certificate.hull_set), len(certificate.product_hull_set)}
        if sizes != {instance.k_prime}:
            return ctx.counterexample(
                "hardness certificate has the wrong size",
                graphs={"G": g},
                sets={"base_hull": base.witness, "hull_set": certificate.hull_set},
                u=u,
                k_prime=instance.k_prime,
            )
    return None
