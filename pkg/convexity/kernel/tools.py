"""
Convexity Kernel Tools

Interval operator, convex hull and the convexity predicates for the cycle
and P3 convexities.

Cycle interval: w outside S is generated iff two distinct neighbors of w lie
in one connected component of g[S]; a path between them inside S plus w is
a cycle through w in g[S + w].
P3 interval: w outside S is generated iff |N(w) & S| >= 2.

The *_mask functions work on raw bit masks and skip validation; they are
the hot path of the exact solvers.
"""

import structlog

from convexity.graph_core.bitset import iter_bits, mask_of
from convexity.graph_core.models import Graph, VertexSet
from convexity.graph_core.tools import cycle_vertices
from convexity.kernel.disjoint_set import DisjointSet
from convexity.kernel.models import ClosureResult, ConvexityKind

log = structlog.get_logger()


def _components_of(g: Graph, mask: int) -> DisjointSet:
    dsu = DisjointSet(g.n)
    for v in iter_bits(mask):
        dsu.add(v)
        for w in iter_bits(g.adj[v] & mask & ((1 << v) - 1)):
            dsu.union(v, w)
    return dsu


def _closes_cycle(g: Graph, dsu: DisjointSet, inside: int, w: int) -> bool:
    seen: set[int] = set()
    for u in iter_bits(g.adj[w] & inside):
        root = dsu.find(u)
        if root in seen:
            return True
        seen.add(root)
    return False


def _generated(g: Graph, mask: int, kind: ConvexityKind, *, first_only: bool) -> int:
    outside = g.full_mask & ~mask
    found = 0
    if kind is ConvexityKind.P3:
        for w in iter_bits(outside):
            if (g.adj[w] & mask).bit_count() >= 2:
                found |= 1 << w
                if first_only:
                    break
        return found
    dsu = _components_of(g, mask)
    for w in iter_bits(outside):
        if (g.adj[w] & mask).bit_count() >= 2 and _closes_cycle(g, dsu, mask, w):
            found |= 1 << w
            if first_only:
                break
    return found


def interval_mask(g: Graph, mask: int, kind: ConvexityKind) -> int:
    return mask | _generated(g, mask, kind, first_only=False)


def is_convex_mask(g: Graph, mask: int, kind: ConvexityKind) -> bool:
    """Stops at the first generated vertex."""
    return not _generated(g, mask, kind, first_only=True)


def _p3_closure_mask(g: Graph, mask: int) -> int:
    counts = [(row & mask).bit_count() for row in g.adj]
    stack = [w for w in range(g.n) if not mask >> w & 1 and counts[w] >= 2]
    closed = mask
    while stack:
        w = stack.pop()
        if closed >> w & 1:
            continue
        closed |= 1 << w
        for x in iter_bits(g.adj[w] & ~closed):
            counts[x] += 1
            if counts[x] == 2:
                stack.append(x)
    return closed


def _cycle_closure_mask(g: Graph, mask: int) -> int:
    dsu = _components_of(g, mask)
    closed = mask
    changed = True
    while changed:
        changed = False
        for w in iter_bits(g.full_mask & ~closed):
            if (g.adj[w] & closed).bit_count() < 2 or not _closes_cycle(g, dsu, closed, w):
                continue
            dsu.add(w)
            for u in iter_bits(g.adj[w] & closed):
                dsu.union(w, u)
            closed |= 1 << w
            changed = True
    return closed


def closure_mask(g: Graph, mask: int, kind: ConvexityKind) -> int:
    """
    Convex hull of mask, adding each vertex as soon as it qualifies.

    Same closed set as iterating the interval operator, since both intervals
    are monotone.
    """
    if kind is ConvexityKind.P3:
        return _p3_closure_mask(g, mask)
    return _cycle_closure_mask(g, mask)


def is_hull_mask(g: Graph, mask: int, kind: ConvexityKind) -> bool:
    return closure_mask(g, mask, kind) == g.full_mask


def never_generated_mask(g: Graph, kind: ConvexityKind) -> int:
    """
    Vertices no set can generate: those on no cycle (cycle convexity) or of
    degree at most one (P3). Every hull set contains all of them.
    """
    if kind is ConvexityKind.P3:
        return mask_of(v for v in range(g.n) if g.degree(v) < 2)
    return g.full_mask & ~cycle_vertices(g)


# =====================================================
# Validated API
# =====================================================


def interval(g: Graph, s: VertexSet, kind: ConvexityKind) -> VertexSet:
    """S plus every vertex S generates in one step."""
    return VertexSet(g.n, interval_mask(g, g.check_set(s), kind))


def closure(g: Graph, s: VertexSet, kind: ConvexityKind) -> ClosureResult:
    """
    Least convex superset of S with the round-by-round trace.

    A vertex generated in round r can act as a generator only from round
    r + 1 on.
    """
    current = g.check_set(s)
    rounds = [VertexSet(g.n, current)]
    while True:
        fresh = _generated(g, current, kind, first_only=False)
        if not fresh:
            break
        rounds.append(VertexSet(g.n, fresh))
        current |= fresh
    result = ClosureResult(closed=VertexSet(g.n, current), rounds=tuple(rounds), kind=kind)
    log.debug(
        "closure_completed",
        convexity=kind.value,
        seed_size=len(s),
        closed_size=len(result.closed),
        iterations=result.iterations,
    )
    return result


def is_convex(g: Graph, s: VertexSet, kind: ConvexityKind) -> bool:
    """True iff interval(S) = S; the empty set and V are always convex."""
    return is_convex_mask(g, g.check_set(s), kind)


def is_hull_set(g: Graph, s: VertexSet, kind: ConvexityKind) -> bool:
    return is_hull_mask(g, g.check_set(s), kind)
