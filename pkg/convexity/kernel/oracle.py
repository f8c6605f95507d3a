"""
Reference cycle interval.

Searches g[S + w] for a simple cycle through w by depth-first path
extension. Exponential; meant for cross-checking the component-based
interval on small graphs.
"""

from convexity.graph_core.bitset import iter_bits
from convexity.graph_core.models import Graph, VertexSet


def has_cycle_through(g: Graph, w: int, allowed: int) -> bool:
    """True iff g restricted to `allowed` (which must contain w) has a cycle through w."""
    targets = g.adj[w] & allowed

    def extend(v: int, visited: int, length: int) -> bool:
        # The path w .. v has `length` edges; closing back to w needs >= 2 of them.
        if length >= 2 and targets >> v & 1:
            return True
        for x in iter_bits(g.adj[v] & allowed & ~visited):
            if extend(x, visited | 1 << x, length + 1):
                return True
        return False

    return extend(w, 1 << w, 0)


def cycle_interval_oracle(g: Graph, s: VertexSet) -> VertexSet:
    """Cycle interval of S computed directly from the definition."""
    mask = g.check_set(s)
    out = mask
    for w in iter_bits(g.full_mask & ~mask):
        if has_cycle_through(g, w, mask | 1 << w):
            out |= 1 << w
    return VertexSet(g.n, out)
