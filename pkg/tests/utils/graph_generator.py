"""
Graph Generators for Testing

Hypothesis strategies for small graphs and vertex subsets, plus a seeded
generator for deterministic batches.
"""

import random

from hypothesis import strategies as st

from convexity.graph_core.models import Graph


@st.composite
def graphs(draw: st.DrawFn, min_n: int = 1, max_n: int = 8) -> Graph:
    """Simple graph on min_n..max_n vertices with an arbitrary edge subset."""
    n = draw(st.integers(min_value=min_n, max_value=max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    chosen = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [pair for pair, keep in zip(pairs, chosen) if keep])


@st.composite
def graphs_with_sets(draw: st.DrawFn, max_n: int = 8) -> tuple[Graph, int, int]:
    """A graph with masks s and t where s is a subset of t."""
    g = draw(graphs(max_n=max_n))
    s = draw(st.integers(min_value=0, max_value=g.full_mask))
    extra = draw(st.integers(min_value=0, max_value=g.full_mask))
    return g, s, s | extra


class GraphBatchGenerator:
    """Deterministic batches of random graphs for non-hypothesis tests."""

    def __init__(self, seed: int = 7) -> None:
        self._rng = random.Random(seed)

    def graph(self, n: int, p: float = 0.5) -> Graph:
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if self._rng.random() < p]
        return Graph.from_edges(n, edges)

    def connected_graph(self, n: int, p: float = 0.4) -> Graph:
        """Random spanning tree plus extra edges, so the result is connected."""
        edges = {(self._rng.randrange(v), v) for v in range(1, n)}
        for u in range(n):
            for v in range(u + 1, n):
                if self._rng.random() < p:
                    edges.add((u, v))
        return Graph.from_edges(n, sorted(edges))

    def batch(self, count: int, min_n: int = 3, max_n: int = 8) -> list[Graph]:
        return [self.graph(self._rng.randint(min_n, max_n)) for _ in range(count)]
