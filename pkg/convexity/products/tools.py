"""
Product Tools

Construction of Cartesian, strong and lexicographic products, and the
layer, projection and subproduct queries over the pair encoding.
"""

from collections.abc import Iterable

import structlog

from convexity.graph_core.bitset import iter_bits
from convexity.graph_core.models import Graph, VertexSet
from convexity.products.models import FactorSide, ProductGraph, ProductKind
from convexity.shared.exceptions import EmptyFactorError

log = structlog.get_logger()


def cross_mask(g_mask: int, h_mask: int, n: int) -> int:
    """Mask of A x B under index(g, h) = g * n + h."""
    out = 0
    for g in iter_bits(g_mask):
        out |= h_mask << (g * n)
    return out


def product(g_factor: Graph, h_factor: Graph, kind: ProductKind) -> ProductGraph:
    """
    Build G * H for the given kind.

    Raises:
        EmptyFactorError: either factor has no vertices
    """
    if g_factor.n == 0:
        raise EmptyFactorError("G")
    if h_factor.n == 0:
        raise EmptyFactorError("H")
    m, n = g_factor.n, h_factor.n
    h_full = h_factor.full_mask

    rows = []
    for g in range(m):
        g_nbrs = g_factor.adj[g]
        for h in range(n):
            own_layer = h_factor.adj[h] << (g * n)
            match kind:
                case ProductKind.CARTESIAN:
                    row = cross_mask(g_nbrs, 1 << h, n) | own_layer
                case ProductKind.STRONG:
                    row = cross_mask(g_nbrs, (1 << h) | h_factor.adj[h], n) | own_layer
                case ProductKind.LEXICOGRAPHIC:
                    row = cross_mask(g_nbrs, h_full, n) | own_layer
            rows.append(row)

    labels = tuple(
        f"({g_factor.label(g)},{h_factor.label(h)})" for g in range(m) for h in range(n)
    )
    graph = Graph(m * n, tuple(rows), labels)
    log.debug("product_built", kind=kind.value, m=m, n=n, edges=graph.edge_count)
    return ProductGraph(graph=graph, m=m, n=n, kind=kind, factors=(g_factor, h_factor))


def layer(p: ProductGraph, fix: FactorSide, index: int) -> VertexSet:
    """
    Layer through a fixed factor vertex.

    fix=G, index=u gives the H-layer {u} x V(H); fix=H, index=v gives the
    G-layer V(G) x {v}.
    """
    if fix is FactorSide.G:
        if not 0 <= index < p.m:
            raise ValueError(f"G-vertex {index} out of range for m={p.m}")
        mask = cross_mask(1 << index, (1 << p.n) - 1, p.n)
    else:
        if not 0 <= index < p.n:
            raise ValueError(f"H-vertex {index} out of range for n={p.n}")
        mask = cross_mask((1 << p.m) - 1, 1 << index, p.n)
    return VertexSet(p.m * p.n, mask)


def projection_mask(p: ProductGraph, mask: int, side: FactorSide) -> int:
    out = 0
    for i in iter_bits(mask):
        g, h = divmod(i, p.n)
        out |= 1 << (g if side is FactorSide.G else h)
    return out


def projection(p: ProductGraph, s: VertexSet, side: FactorSide) -> VertexSet:
    """pi_G(S) or pi_H(S)."""
    mask = p.graph.check_set(s)
    return VertexSet(p.m if side is FactorSide.G else p.n, projection_mask(p, mask, side))


def cross(p: ProductGraph, s_g: VertexSet, s_h: VertexSet) -> VertexSet:
    """S_G x S_H as a vertex set of p."""
    if s_g.n != p.m or s_h.n != p.n:
        raise ValueError(f"factor sets over ({s_g.n}, {s_h.n}) used on a {p.m} x {p.n} product")
    return VertexSet(p.m * p.n, cross_mask(s_g.mask, s_h.mask, p.n))


def is_subproduct_mask(p: ProductGraph, mask: int) -> bool:
    g_side = projection_mask(p, mask, FactorSide.G)
    h_side = projection_mask(p, mask, FactorSide.H)
    return cross_mask(g_side, h_side, p.n) == mask


def is_subproduct(p: ProductGraph, s: VertexSet) -> bool:
    """True iff S = pi_G(S) x pi_H(S); the empty set qualifies."""
    return is_subproduct_mask(p, p.graph.check_set(s))


def layers_of(p: ProductGraph, s: VertexSet) -> list[tuple[FactorSide, int]]:
    """
    Every layer containing S, H-layers first.

    Empty for sets that meet two H-layers and two G-layers.
    """
    mask = p.graph.check_set(s)
    found: list[tuple[FactorSide, int]] = []
    if not mask:
        return found
    g_side = projection_mask(p, mask, FactorSide.G)
    h_side = projection_mask(p, mask, FactorSide.H)
    if g_side.bit_count() == 1:
        found.append((FactorSide.G, g_side.bit_length() - 1))
    if h_side.bit_count() == 1:
        found.append((FactorSide.H, h_side.bit_length() - 1))
    return found


def swap_index(p: ProductGraph, i: int) -> int:
    """Image of vertex i of G*H in H*G under (g, h) -> (h, g)."""
    g, h = divmod(i, p.n)
    return h * p.m + g


def swap_factors(p: ProductGraph, q: ProductGraph) -> bool:
    """
    True iff (g, h) -> (h, g) maps p = G*H isomorphically onto q = H*G.

    Adjacency identity under the swap; no general isomorphism search.
    """
    if (q.m, q.n) != (p.n, p.m):
        return False
    for u, v in p.graph.edges():
        if not q.graph.has_edge(swap_index(p, u), swap_index(p, v)):
            return False
    return p.graph.edge_count == q.graph.edge_count


def factor_vertices(p: ProductGraph, members: Iterable[tuple[int, int]]) -> VertexSet:
    """Vertex set of p from (g, h) pairs."""
    return VertexSet.of(p.m * p.n, (p.index(g, h) for g, h in members))
