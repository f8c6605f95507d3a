"""
Graph Tools

Structural queries on immutable graphs: connectivity, bipartiteness,
cycle membership, induced subgraphs and unions.
"""

from collections import deque
from collections.abc import Iterable

from convexity.graph_core.bitset import iter_bits, lowest_bit
from convexity.graph_core.models import BipartiteResult, Graph, GraphStats, VertexSet


# =====================================================
# Connectivity
# =====================================================


def component_mask(g: Graph, start: int, within: int) -> int:
    """Vertices reachable from start inside the vertex mask `within` (start included)."""
    comp = frontier = 1 << start
    while frontier:
        reached = 0
        for v in iter_bits(frontier):
            reached |= g.adj[v]
        frontier = reached & within & ~comp
        comp |= frontier
    return comp


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Components of g[within] as masks, ordered by least vertex."""
    remaining = g.full_mask if within is None else within
    components = []
    while remaining:
        comp = component_mask(g, lowest_bit(remaining), remaining)
        components.append(comp)
        remaining &= ~comp
    return components


def connected_components(g: Graph, within: VertexSet | None = None) -> list[VertexSet]:
    mask = None if within is None else g.check_set(within)
    return [VertexSet(g.n, comp) for comp in component_masks(g, mask)]


def is_connected(g: Graph) -> bool:
    """True for the empty graph and for any graph with a single component."""
    return g.n == 0 or component_mask(g, 0, g.full_mask) == g.full_mask


def is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.edge_count == g.n - 1 and is_connected(g)


# =====================================================
# Cycles and bipartiteness
# =====================================================


def lies_on_cycle(g: Graph, v: int) -> bool:
    """
    True iff some cycle of g passes through v.

    Equivalently, two distinct neighbors of v stay connected in g - v.
    """
    if not 0 <= v < g.n:
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    others = g.full_mask & ~(1 << v)
    pending = g.adj[v]
    while pending:
        comp = component_mask(g, lowest_bit(pending), others)
        if (comp & g.adj[v]).bit_count() >= 2:
            return True
        pending &= ~comp
    return False


def cycle_vertices(g: Graph) -> int:
    """Mask of the vertices that lie on some cycle."""
    mask = 0
    for v in range(g.n):
        if lies_on_cycle(g, v):
            mask |= 1 << v
    return mask


def is_cycle_walk(g: Graph, walk: list[int]) -> bool:
    """True iff walk lists >= 3 distinct vertices forming a closed cycle in g."""
    if len(walk) < 3 or len(set(walk)) != len(walk):
        return False
    return all(g.has_edge(a, b) for a, b in zip(walk, walk[1:] + walk[:1]))


def is_cut_vertex(g: Graph, v: int) -> bool:
    """Removing v leaves more components than g has."""
    others = g.full_mask & ~(1 << v)
    return len(component_masks(g, others)) > len(component_masks(g))


def _tree_path(parent: list[int], depth: list[int], u: int, v: int) -> list[int]:
    """Vertices of the BFS-tree path u .. v."""
    left, right = [u], [v]
    while depth[u] > depth[v]:
        u = parent[u]
        left.append(u)
    while depth[v] > depth[u]:
        v = parent[v]
        right.append(v)
    while u != v:
        u, v = parent[u], parent[v]
        left.append(u)
        right.append(v)
    right.pop()
    return left + right[::-1]


def is_bipartite(g: Graph) -> BipartiteResult:
    """
    Two-color g by BFS from the least vertex of each component.

    Color 0 forms the first part. On failure the result carries an odd cycle
    closed by the first monochromatic edge found.
    """
    color = [-1] * g.n
    parent = [-1] * g.n
    depth = [0] * g.n
    for root in range(g.n):
        if color[root] != -1:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in iter_bits(g.adj[u]):
                if color[w] == -1:
                    color[w] = 1 - color[u]
                    parent[w] = u
                    depth[w] = depth[u] + 1
                    queue.append(w)
                elif color[w] == color[u]:
                    return BipartiteResult(odd_cycle=tuple(_tree_path(parent, depth, u, w)))
    first = VertexSet.of(g.n, (v for v in range(g.n) if color[v] == 0))
    return BipartiteResult(parts=(first, first.complement()))


# =====================================================
# Subgraphs and unions
# =====================================================


def induced_subgraph(g: Graph, s: VertexSet) -> tuple[Graph, list[int]]:
    """
    g[s] relabelled to 0..|s|-1.

    Returns the subgraph and the map from new ids to original ids.
    """
    mask = g.check_set(s)
    originals = list(iter_bits(mask))
    position = {v: i for i, v in enumerate(originals)}
    rows = []
    for v in originals:
        row = 0
        for w in iter_bits(g.adj[v] & mask):
            row |= 1 << position[w]
        rows.append(row)
    labels = tuple(g.label(v) for v in originals) if g.labels is not None else None
    return Graph(len(originals), tuple(rows), labels), originals


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Union with vertices of later graphs shifted past earlier ones."""
    graphs = list(graphs)
    rows: list[int] = []
    labelled = any(h.labels is not None for h in graphs)
    labels: list[str] = []
    offset = 0
    for h in graphs:
        rows.extend(row << offset for row in h.adj)
        labels.extend(h.label(v) if h.labels is not None else str(offset + v) for v in range(h.n))
        offset += h.n
    return Graph(offset, tuple(rows), tuple(labels) if labelled else None)


def graph_stats(g: Graph) -> GraphStats:
    degrees = [g.degree(v) for v in range(g.n)]
    components = len(component_masks(g))
    return GraphStats(
        n=g.n,
        m=g.edge_count,
        components=components,
        connected=components <= 1,
        bipartite=is_bipartite(g).bipartite,
        tree=is_tree(g),
        min_degree=min(degrees, default=0),
        max_degree=max(degrees, default=0),
        vertices_on_cycles=cycle_vertices(g).bit_count(),
    )
