"""
Hardness constructions and their certificates.

reduce_p3_to_cc attaches one F^uv per non-adjacent pair with a common
neighbor to a bipartite base graph; a P3 hull set of the base of size k
lifts to a cycle hull set of size k + 45|L|. build_cartesian_hardness
hangs the identified H(w) pair off a base vertex; a cycle hull set of the
base of size k yields one of size k + 18 for both G' and G' x K2.
"""

from typing import Any

import structlog

from convexity.gadgets.builders import (
    HW_HULL_NAMES,
    IDENTIFIED_ORDER,
    build_identified_HH,
    fuv_edges,
    fuv_hull_roles,
    fuv_roles,
    identified_hull_roles,
    identified_ids,
)
from convexity.gadgets.models import (
    HardnessCertificate,
    ProvenanceEntry,
    ReductionInstance,
    ReductionKind,
)
from convexity.graph_core.bitset import iter_bits, lowest_bit
from convexity.graph_core.generators import complete
from convexity.graph_core.io import emit_edge_list, parse_edge_list
from convexity.graph_core.models import Graph, VertexSet
from convexity.graph_core.tools import induced_subgraph, is_bipartite
from convexity.kernel.models import ConvexityKind
from convexity.kernel.tools import closure_mask, is_hull_mask
from convexity.products.models import ProductKind
from convexity.products.tools import product
from convexity.shared.contracts import REDUCTION_SCHEMA, validate_document
from convexity.shared.exceptions import (
    NotAHullSetError,
    NotBipartiteError,
    PreconditionError,
    ReductionCounterexampleError,
)
from convexity.solvers.models import PartitionCertificate
from convexity.solvers.partition import partition_product_witness

log = structlog.get_logger()

CYCLE = ConvexityKind.CYCLE
P3 = ConvexityKind.P3

HH_GADGET = "H"
HARDNESS_EXTRA = 2 * len(HW_HULL_NAMES)


def gadget_name(u: int, v: int) -> str:
    return f"F^{{({u},{v})}}"


def gadget_label(role: str, u: int, v: int) -> str:
    """'w3:y0' on pair (0, 2) -> 'w3^{(0,2)}:y0'; "u'" -> "u'^{(0,2)}"."""
    head, sep, tail = role.partition(":")
    return f"{head}^{{({u},{v})}}{sep}{tail}"


def _base_provenance(g: Graph) -> list[ProvenanceEntry]:
    return [ProvenanceEntry(origin="base", label=g.label(v), base_vertex=v) for v in range(g.n)]


def _require_kind(operation: str, instance: ReductionInstance, kind: ReductionKind) -> None:
    if instance.reduction is not kind:
        raise PreconditionError(
            operation,
            f"expects a {kind.value} instance",
            reduction=instance.reduction.value,
        )


def _lift_base(instance: ReductionInstance, mask: int) -> int:
    ids = instance.base_ids()
    return sum(1 << ids[v] for v in iter_bits(mask))


# =====================================================
# Bipartite P3 -> cycle hull number
# =====================================================


def nonedge_set(g: Graph) -> list[tuple[int, int]]:
    """Pairs u < v, non-adjacent, with a common neighbor, in lexicographic order."""
    return [
        (u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
        if not g.has_edge(u, v) and g.adj[u] & g.adj[v]
    ]


def reduce_p3_to_cc(g: Graph, k: int) -> ReductionInstance:
    """
    Attach F^uv to g for every pair in nonedge_set(g).

    The gadget's u and v are the base vertices themselves. Output ids keep
    the base at 0..n-1; each gadget then takes 72 fresh ids in role order.

    Raises:
        NotBipartiteError: g has an odd cycle
    """
    operation = "reduce_p3_to_cc"
    coloring = is_bipartite(g)
    if not coloring:
        raise NotBipartiteError(operation, list(coloring.odd_cycle or ()))

    pairs = nonedge_set(g)
    provenance = _base_provenance(g)
    edges = set(g.edges())
    registry: dict[str, dict[str, int]] = {}
    for u, v in pairs:
        name = gadget_name(u, v)
        ids = {"u": u, "v": v}
        for role in fuv_roles():
            if role in ("u", "v"):
                continue
            ids[role] = len(provenance)
            provenance.append(
                ProvenanceEntry(
                    origin="gadget",
                    label=gadget_label(role, u, v),
                    gadget=name,
                    role=role,
                )
            )
        edges |= fuv_edges(ids)
        registry[name] = ids

    output = Graph.from_edges(len(provenance), sorted(edges), [p.label for p in provenance])
    instance = ReductionInstance(
        reduction=ReductionKind.P3_TO_CC,
        base=g,
        output=output,
        k=k,
        k_prime=k + len(fuv_hull_roles()) * len(pairs),
        provenance=tuple(provenance),
        nonedges=tuple(pairs),
        registry=registry,
    )
    log.info(
        "reduction_built",
        reduction=instance.reduction.value,
        base_n=g.n,
        pairs=len(pairs),
        output_n=output.n,
        k_prime=instance.k_prime,
    )
    return instance


def lift_hull_set(instance: ReductionInstance, s_p3: VertexSet) -> VertexSet:
    """
    S' = S | S^uv over all gadgets, checked to close G'.

    Raises:
        NotAHullSetError: s_p3 is not a P3 hull set of the base
        ReductionCounterexampleError: S' fails to close G'
    """
    operation = "lift_hull_set"
    _require_kind(operation, instance, ReductionKind.P3_TO_CC)
    base_mask = instance.base.check_set(s_p3)
    if not is_hull_mask(instance.base, base_mask, P3):
        raise NotAHullSetError(operation, s_p3.to_list(), convexity=P3.value)

    mask = _lift_base(instance, base_mask)
    for ids in instance.registry.values():
        for role in fuv_hull_roles():
            mask |= 1 << ids[role]

    closed = closure_mask(instance.output, mask, CYCLE)
    if closed != instance.output.full_mask:
        raise ReductionCounterexampleError(
            operation,
            "lifted set does not close G'",
            {
                "s_p3": s_p3.to_list(),
                "lifted": list(iter_bits(mask)),
                "missing": list(iter_bits(instance.output.full_mask & ~closed)),
            },
        )
    log.debug("hull_set_lifted", size=mask.bit_count(), k_prime=instance.k_prime)
    return VertexSet(instance.output.n, mask)


def project_back(instance: ReductionInstance, s_cc: VertexSet) -> VertexSet:
    """
    Base part of a cycle hull set of G', with u'/v' replaced by u/v.

    The projection is checked to be a P3 hull set of the base.

    Raises:
        NotAHullSetError: s_cc is not a cycle hull set of G'
        ReductionCounterexampleError: the projection is not a P3 hull set
    """
    operation = "project_back"
    _require_kind(operation, instance, ReductionKind.P3_TO_CC)
    mask = instance.output.check_set(s_cc)
    if not is_hull_mask(instance.output, mask, CYCLE):
        raise NotAHullSetError(operation, s_cc.to_list(), convexity=CYCLE.value)

    projected = 0
    for i in iter_bits(mask):
        entry = instance.provenance[i]
        if entry.origin == "base":
            projected |= 1 << entry.base_vertex
        elif entry.role in ("u'", "v'"):
            twin = instance.registry[entry.gadget][entry.role[0]]
            projected |= 1 << instance.provenance[twin].base_vertex

    if not is_hull_mask(instance.base, projected, P3):
        raise ReductionCounterexampleError(
            operation,
            "projection is not a P3 hull set of the base",
            {
                "s_cc": s_cc.to_list(),
                "projected": list(iter_bits(projected)),
                "within_budget": len(s_cc) <= instance.k_prime,
            },
        )
    return VertexSet(instance.base.n, projected)


# =====================================================
# Cartesian products with K2
# =====================================================


def build_cartesian_hardness(g: Graph, u: int, k: int) -> ReductionInstance:
    """
    G' = g + identified H(w) pair + the edge u v, with G' x K2 recorded.

    Raises:
        PreconditionError: u is not a vertex of g
        ReductionCounterexampleError: g is bipartite but G' x K2 is not
    """
    operation = "build_cartesian_hardness"
    if not 0 <= u < g.n:
        raise PreconditionError(operation, "u is not a vertex of G", u=u, n=g.n)

    hh = build_identified_HH()
    offset = g.n
    provenance = _base_provenance(g)
    provenance.extend(
        ProvenanceEntry(origin="gadget", label=hh.label(i), gadget=HH_GADGET, role=hh.label(i))
        for i in range(hh.n)
    )
    ids = {role: offset + i for role, i in identified_ids().items()}
    edges = list(g.edges()) + [(offset + a, offset + b) for a, b in hh.edges()]
    edges.append((u, ids["v"]))
    output = Graph.from_edges(g.n + IDENTIFIED_ORDER, edges, [p.label for p in provenance])

    p = product(output, complete(2), ProductKind.CARTESIAN)
    if is_bipartite(g) and not is_bipartite(p.graph):
        raise ReductionCounterexampleError(
            operation,
            "G is bipartite but G' x K2 is not",
            {"u": u, "odd_cycle": list(is_bipartite(p.graph).odd_cycle or ())},
        )
    instance = ReductionInstance(
        reduction=ReductionKind.CARTESIAN_K2,
        base=g,
        output=output,
        k=k,
        k_prime=k + HARDNESS_EXTRA,
        provenance=tuple(provenance),
        registry={HH_GADGET: ids},
        product=p,
    )
    log.info(
        "reduction_built",
        reduction=instance.reduction.value,
        base_n=g.n,
        output_n=output.n,
        product_n=p.graph.n,
        k_prime=instance.k_prime,
    )
    return instance


def hardness_certificate(instance: ReductionInstance, base_hull: VertexSet) -> HardnessCertificate:
    """
    Hull sets of G' and G' x K2 of size |base_hull| + 18.

    S = base_hull | S(w1) | S(w2) closes G'; S(w1) and the rest have hulls
    meeting exactly at v; the layered set from that split closes G' x K2.

    Raises:
        NotAHullSetError: base_hull is not a cycle hull set of the base
        ReductionCounterexampleError: a constructed set fails its check
    """
    operation = "hardness_certificate"
    _require_kind(operation, instance, ReductionKind.CARTESIAN_K2)
    base_mask = instance.base.check_set(base_hull)
    if not is_hull_mask(instance.base, base_mask, CYCLE):
        raise NotAHullSetError(operation, base_hull.to_list(), convexity=CYCLE.value)

    ids = instance.registry[HH_GADGET]
    g_prime = instance.output
    first = sum(1 << ids[role] for role in identified_hull_roles(1))
    second = _lift_base(instance, base_mask) | sum(1 << ids[role] for role in identified_hull_roles(2))
    hull_mask = first | second
    v = ids["v"]

    artifact: dict[str, Any] = {"base_hull": base_hull.to_list(), "hull_set": list(iter_bits(hull_mask))}
    if not is_hull_mask(g_prime, hull_mask, CYCLE):
        raise ReductionCounterexampleError(operation, "S does not close G'", artifact)
    common = closure_mask(g_prime, first, CYCLE) & closure_mask(g_prime, second, CYCLE)
    if common != 1 << v:
        artifact["common"] = list(iter_bits(common))
        raise ReductionCounterexampleError(operation, "part hulls do not meet exactly at v", artifact)

    certificate = PartitionCertificate(
        hull_set=VertexSet(g_prime.n, hull_mask),
        first=VertexSet(g_prime.n, first),
        second=VertexSet(g_prime.n, second),
        common=lowest_bit(common),
    )
    product_hull = partition_product_witness(g_prime, complete(2), certificate, (0, 1))
    log.info("hardness_certificate_built", size=hull_mask.bit_count(), k_prime=instance.k_prime)
    return HardnessCertificate(
        hull_set=certificate.hull_set,
        first=certificate.first,
        second=certificate.second,
        common=certificate.common,
        product_hull_set=product_hull,
    )


# =====================================================
# JSON envelope
# =====================================================


def to_envelope(instance: ReductionInstance) -> dict[str, Any]:
    """{reduction, k, k_prime, edge_list, labels, L, provenance}, schema-checked."""
    envelope = {
        "reduction": instance.reduction.value,
        "k": instance.k,
        "k_prime": instance.k_prime,
        "edge_list": emit_edge_list(instance.output, with_labels=False),
        "labels": [instance.output.label(v) for v in range(instance.output.n)],
        "L": [list(pair) for pair in instance.nonedges],
        "provenance": [entry.model_dump(exclude_none=True) for entry in instance.provenance],
    }
    validate_document(envelope, REDUCTION_SCHEMA)
    return envelope


def from_envelope(envelope: dict[str, Any]) -> ReductionInstance:
    """
    Rebuild an instance from its envelope.

    The base graph is the subgraph induced by base-origin vertices; the
    registry is recovered from the gadget roles.

    Raises:
        ContractValidationError: the envelope violates its schema
        GraphFormatError: the embedded edge list is malformed
    """
    validate_document(envelope, REDUCTION_SCHEMA)
    provenance = tuple(ProvenanceEntry.model_validate(p) for p in envelope["provenance"])
    output = parse_edge_list(envelope["edge_list"]).with_labels(envelope["labels"])

    base_members = sorted(
        (entry.base_vertex, i) for i, entry in enumerate(provenance) if entry.origin == "base"
    )
    sub, _ = induced_subgraph(output, output.vertex_set(i for _, i in base_members))
    base = sub.with_labels([entry.label for entry in provenance if entry.origin == "base"])

    registry: dict[str, dict[str, int]] = {}
    for i, entry in enumerate(provenance):
        if entry.origin == "gadget" and entry.gadget is not None and entry.role is not None:
            registry.setdefault(entry.gadget, {})[entry.role] = i
    reduction = ReductionKind.from_string(envelope["reduction"])
    nonedges = tuple((u, v) for u, v in envelope["L"])
    if reduction is ReductionKind.P3_TO_CC:
        base_ids = [i for _, i in base_members]
        for u, v in nonedges:
            registry.setdefault(gadget_name(u, v), {}).update(
                {"u": base_ids[u], "v": base_ids[v]}
            )
    else:
        registry[HH_GADGET]["w1:y0"] = registry[HH_GADGET]["w2:y0"] = registry[HH_GADGET]["v"]

    return ReductionInstance(
        reduction=reduction,
        base=base,
        output=output,
        k=envelope["k"],
        k_prime=envelope["k_prime"],
        provenance=provenance,
        nonedges=nonedges,
        registry=registry,
        product=(
            product(output, complete(2), ProductKind.CARTESIAN)
            if reduction is ReductionKind.CARTESIAN_K2
            else None
        ),
    )
