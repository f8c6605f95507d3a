"""
Test Convexity Kernel

Unit tests for the interval and closure operators of the cycle and P3
convexities, the convexity predicates and the reference cycle oracle.
"""

import pytest
from hypothesis import given

from convexity.graph_core.generators import complete, cycle, named_graph, path, random_tree
from convexity.graph_core.models import Graph, VertexSet
from convexity.kernel import (
    ClosureResult,
    ConvexityKind,
    DisjointSet,
    closure,
    closure_mask,
    cycle_interval_oracle,
    interval,
    is_convex,
    is_hull_set,
    never_generated_mask,
)
from tests.utils.graph_generator import graphs_with_sets

CC = ConvexityKind.CYCLE
P3 = ConvexityKind.P3

# Path 0-1-2-3 with a hub 4 adjacent to every path vertex.
FAN = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (0, 4), (1, 4), (2, 4), (3, 4)])


def vs(g: Graph, members: list[int]) -> VertexSet:
    return VertexSet.of(g.n, members)


class TestConvexityKind:
    """Tests for ConvexityKind parsing."""

    @pytest.mark.parametrize("text,kind", [("cc", CC), ("cycle", CC), ("P3", P3)])
    def test_from_string(self, text: str, kind: ConvexityKind):
        """Codes are case-insensitive; 'cycle' means cc."""
        assert ConvexityKind.from_string(text) is kind

    def test_invalid(self):
        """Other convexities are not supported."""
        with pytest.raises(ValueError, match="Valid values"):
            ConvexityKind.from_string("geodesic")


class TestInterval:
    """Tests for the one-step interval operator."""

    def test_cycle_two_adjacent_on_c4(self):
        """Two adjacent vertices of C4 generate nothing."""
        g = cycle(4)
        assert interval(g, vs(g, [0, 1]), CC).to_list() == [0, 1]

    def test_cycle_path_on_c4(self):
        """Three consecutive vertices of C4 close the cycle."""
        g = cycle(4)
        assert interval(g, vs(g, [0, 1, 2]), CC).is_full()

    def test_split_neighbors_do_not_generate(self):
        """Neighbors in different components of g[S] give no cycle."""
        g = cycle(4)
        assert interval(g, vs(g, [0, 2]), CC).to_list() == [0, 2]

    def test_p3_two_neighbors(self):
        """Under P3 a common neighbor is enough."""
        g = path(3)
        assert interval(g, vs(g, [0, 2]), P3).is_full()
        assert interval(g, vs(g, [0, 2]), CC).to_list() == [0, 2]

    def test_complete_graph(self):
        """In K4 any edge generates every other vertex."""
        g = complete(4)
        assert interval(g, vs(g, [0, 1]), CC).is_full()

    def test_ground_size_mismatch(self):
        """The set must be over the graph's vertices."""
        with pytest.raises(ValueError):
            interval(cycle(4), VertexSet.of(5, [0]), CC)

    @given(graphs_with_sets(max_n=7))
    def test_matches_cycle_oracle(self, case: tuple[Graph, int, int]):
        """Component-based interval equals the cycle-search definition."""
        g, s, _ = case
        seed = VertexSet(g.n, s)
        assert interval(g, seed, CC) == cycle_interval_oracle(g, seed)

    @given(graphs_with_sets())
    def test_cycle_interval_within_p3_interval(self, case: tuple[Graph, int, int]):
        """Every vertex the cycle convexity generates, P3 generates too."""
        g, s, _ = case
        seed = VertexSet(g.n, s)
        assert interval(g, seed, CC).issubset(interval(g, seed, P3))


class TestClosure:
    """Tests for closure and its round trace."""

    def test_c4_examples(self):
        """Adjacent pair stays put; a 3-path closes all of C4."""
        g = cycle(4)
        assert closure(g, vs(g, [0, 1]), CC).closed.to_list() == [0, 1]
        assert closure(g, vs(g, [0, 1, 2]), CC).is_full

    def test_p3_path_endpoints(self):
        """The endpoints of P3 are a P3 hull set."""
        g = path(3)
        result = closure(g, vs(g, [0, 2]), P3)
        assert result.is_full
        assert result.iterations == 1

    def test_trees_are_always_closed(self):
        """No vertex of a tree lies on a cycle, so every set is cc-convex."""
        t = random_tree(9, seed=4)
        for members in ([0], [1, 5, 8], list(range(0, 9, 2))):
            assert closure(t, vs(t, members), CC).closed.to_list() == sorted(members)

    def test_round_trace(self):
        """Each generated vertex enables the next one along the fan."""
        result = closure(FAN, vs(FAN, [0, 1]), CC)
        assert [r.to_list() for r in result.rounds] == [[0, 1], [4], [2], [3]]
        assert result.iterations == 3
        assert result.seed.to_list() == [0, 1]

    def test_round_trace_is_a_partition(self):
        """Rounds are disjoint and cover the closed set."""
        g = named_graph("bowtie")
        result = closure(g, vs(g, [0, 1, 3]), CC)
        seen = VertexSet.empty(g.n)
        for r in result.rounds:
            assert not (seen & r)
            seen = seen | r
        assert seen == result.closed

    def test_to_dict(self):
        """Trace document shape."""
        g = path(3)
        doc = closure(g, vs(g, [0, 2]), P3).to_dict()
        assert doc == {
            "convexity": "p3",
            "n": 3,
            "closed": [0, 1, 2],
            "rounds": [[0, 2], [1]],
            "hull_set": True,
        }

    def test_closed_result_is_frozen(self):
        """Results are immutable."""
        g = path(2)
        result = closure(g, vs(g, [0]), CC)
        assert isinstance(result, ClosureResult)
        with pytest.raises(AttributeError):
            result.kind = P3  # type: ignore[misc]

    @given(graphs_with_sets())
    def test_extensive(self, case: tuple[Graph, int, int]):
        """S is inside interval(S), which is inside closure(S)."""
        g, s, _ = case
        seed = VertexSet(g.n, s)
        for kind in ConvexityKind:
            one_step = interval(g, seed, kind)
            assert seed.issubset(one_step)
            assert one_step.issubset(closure(g, seed, kind).closed)

    @given(graphs_with_sets())
    def test_monotone(self, case: tuple[Graph, int, int]):
        """S inside T implies closure(S) inside closure(T)."""
        g, s, t = case
        for kind in ConvexityKind:
            assert closure_mask(g, s, kind) & ~closure_mask(g, t, kind) == 0

    @given(graphs_with_sets())
    def test_idempotent(self, case: tuple[Graph, int, int]):
        """The closure is convex and closing it again changes nothing."""
        g, s, _ = case
        for kind in ConvexityKind:
            closed = closure(g, VertexSet(g.n, s), kind).closed
            assert is_convex(g, closed, kind)
            assert closure(g, closed, kind).closed == closed

    @given(graphs_with_sets())
    def test_eager_closure_matches_trace(self, case: tuple[Graph, int, int]):
        """The fast closure reaches the same set as iterating the interval."""
        g, s, _ = case
        for kind in ConvexityKind:
            assert closure_mask(g, s, kind) == closure(g, VertexSet(g.n, s), kind).closed.mask

    @given(graphs_with_sets())
    def test_intersection_of_convex_sets(self, case: tuple[Graph, int, int]):
        """Convex sets are closed under intersection."""
        g, s, t = case
        for kind in ConvexityKind:
            a = closure(g, VertexSet(g.n, s), kind).closed
            b = closure(g, VertexSet(g.n, t ^ s), kind).closed
            assert is_convex(g, a & b, kind)


class TestPredicates:
    """Tests for is_convex, is_hull_set and never_generated_mask."""

    def test_three_consecutive_on_c5(self):
        """Three consecutive vertices of C5 are cc-convex."""
        g = cycle(5)
        assert is_convex(g, vs(g, [0, 1, 2]), CC)
        assert is_convex(g, vs(g, [3, 4, 0]), CC)

    def test_edge_of_k4_not_convex(self):
        """An edge of K4 generates the other two vertices."""
        g = complete(4)
        assert not is_convex(g, vs(g, [0, 1]), CC)

    @pytest.mark.parametrize("g", [cycle(5), complete(4), path(3), named_graph("paw")])
    def test_trivial_sets_convex(self, g: Graph):
        """The empty set and V are convex in both convexities."""
        for kind in ConvexityKind:
            assert is_convex(g, VertexSet.empty(g.n), kind)
            assert is_convex(g, VertexSet.full(g.n), kind)

    def test_hull_sets_on_c4(self):
        """A 3-path is a cc hull set of C4; opposite vertices are not."""
        g = cycle(4)
        assert is_hull_set(g, vs(g, [0, 1, 2]), CC)
        assert not is_hull_set(g, vs(g, [0, 2]), CC)
        assert is_hull_set(g, vs(g, [0, 2]), P3)

    def test_never_generated(self):
        """Pendant vertices lie on no cycle and have degree one."""
        paw = named_graph("paw")
        assert never_generated_mask(paw, CC) == 0b1000
        assert never_generated_mask(paw, P3) == 0b1000
        assert never_generated_mask(path(4), CC) == 0b1111
        assert never_generated_mask(path(4), P3) == 0b1001

    @given(graphs_with_sets())
    def test_never_generated_vertices_stay_out(self, case: tuple[Graph, int, int]):
        """Closures add no vertex from never_generated_mask."""
        g, s, _ = case
        for kind in ConvexityKind:
            added = closure_mask(g, s, kind) & ~s
            assert added & never_generated_mask(g, kind) == 0


class TestDisjointSet:
    """Tests for the merge-only disjoint-set forest."""

    def test_union_and_find(self):
        """Unions merge classes; untouched vertices stay alone."""
        dsu = DisjointSet(5)
        for v in (0, 1, 2, 3):
            dsu.add(v)
        dsu.union(0, 1)
        dsu.union(2, 3)
        dsu.union(1, 3)
        assert dsu.same(0, 2)
        assert not dsu.same(0, 4)
        assert 3 in dsu
        assert 4 not in dsu

    def test_union_by_rank(self):
        """Equal ranks keep the first root; a lower rank hangs below a higher one."""
        dsu = DisjointSet(6)
        dsu.union(0, 1)
        dsu.union(2, 3)
        dsu.union(2, 4)
        assert dsu.rank[0] == dsu.rank[2] == 1
        # Ranks tie although {2, 3, 4} is the larger class.
        dsu.union(0, 2)
        assert dsu.find(4) == 0
        assert dsu.rank[0] == 2
        dsu.union(5, 3)
        assert dsu.find(5) == 0
        assert dsu.rank[0] == 2
