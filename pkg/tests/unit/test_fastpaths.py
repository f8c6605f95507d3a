"""
Test Product Fast-Paths

Unit tests for the hull number and convexity number formulas on products
and the witnesses they return.
"""

import pytest

from convexity.graph_core.generators import complete, cycle, path, random_tree
from convexity.graph_core.models import Graph, VertexSet
from convexity.kernel import ConvexityKind, is_convex, is_hull_set
from convexity.products import ProductKind, product
from convexity.shared.exceptions import (
    DisconnectedFactorError,
    NotAHullSetError,
    PreconditionError,
)
from convexity.solvers import (
    SearchBudget,
    SolveMethod,
    cartesian_convexity_formula,
    cartesian_hull_bounds,
    cartesian_hull_witness,
    convexity_fastpath,
    convexity_number_exact,
    hull_fastpath,
    hull_number_exact,
)

CC = ConvexityKind.CYCLE


class TestHullFastpath:
    """Tests for hull_fastpath."""

    @pytest.mark.parametrize(
        "g,h,kind,method",
        [
            (path(4), cycle(5), ProductKind.STRONG, SolveMethod.FASTPATH_STRONG),
            (cycle(3), path(2), ProductKind.LEXICOGRAPHIC, SolveMethod.FASTPATH_LEX),
            (complete(2), path(3), ProductKind.STRONG, SolveMethod.FASTPATH_STRONG),
        ],
    )
    def test_strong_and_lex_need_two(self, g: Graph, h: Graph, kind: ProductKind, method: SolveMethod):
        """Two adjacent vertices of one H-layer close the whole product."""
        p = product(g, h, kind)
        result = hull_fastpath(p)
        assert result is not None
        assert (result.value, result.method) == (2, method)
        assert is_hull_set(p.graph, result.witness, CC)

    def test_adjacent_pair_witness(self):
        """The witness is {(0, h1), (0, h2)} for the least edge of H."""
        p = product(path(4), cycle(5), ProductKind.STRONG)
        result = hull_fastpath(p)
        assert result is not None
        assert result.witness.to_list() == [p.index(0, 0), p.index(0, 1)]

    def test_tree_product(self):
        """T1 x T2 needs m + n - 1 vertices."""
        p = product(random_tree(4, 1), random_tree(5, 2), ProductKind.CARTESIAN)
        result = hull_fastpath(p)
        assert result is not None
        assert result.value == 8
        assert len(result.witness) == 8
        assert result.method in (SolveMethod.FASTPATH_TREE_PRODUCT, SolveMethod.FASTPATH_GRID)
        assert is_hull_set(p.graph, result.witness, CC)

    def test_grid(self):
        """Paths are trees; grids are flagged separately."""
        p = product(path(3), path(4), ProductKind.CARTESIAN)
        result = hull_fastpath(p)
        assert result is not None
        assert (result.value, result.method) == (6, SolveMethod.FASTPATH_GRID)

    def test_no_formula_for_general_cartesian(self):
        """Cartesian products of non-trees have bounds, not a formula."""
        assert hull_fastpath(product(complete(3), complete(3), ProductKind.CARTESIAN)) is None

    @pytest.mark.parametrize("g", [Graph.empty(1), Graph.empty(2)])
    def test_factor_preconditions(self, g: Graph):
        """Factors must be connected with at least two vertices."""
        with pytest.raises(DisconnectedFactorError) as exc_info:
            hull_fastpath(product(g, path(3), ProductKind.STRONG))
        assert exc_info.value.side == "G"

    @pytest.mark.parametrize(
        "g,h,kind",
        [
            (path(2), path(3), ProductKind.STRONG),
            (complete(3), path(2), ProductKind.LEXICOGRAPHIC),
            (path(2), complete(3), ProductKind.LEXICOGRAPHIC),
            (path(2), path(3), ProductKind.CARTESIAN),
            (path(3), path(3), ProductKind.CARTESIAN),
        ],
    )
    def test_agrees_with_exact(self, g: Graph, h: Graph, kind: ProductKind, budget: SearchBudget):
        """Formula value equals the exhaustive search."""
        p = product(g, h, kind)
        result = hull_fastpath(p)
        assert result is not None
        assert result.value == hull_number_exact(p.graph, CC, budget).value


class TestCartesianHull:
    """Tests for cartesian_hull_bounds and cartesian_hull_witness."""

    @pytest.mark.parametrize("hn_g,hn_h,bounds", [(2, 2, (3, 3)), (4, 2, (4, 5)), (3, 3, (3, 5))])
    def test_bounds(self, hn_g: int, hn_h: int, bounds: tuple[int, int]):
        """lo = max(a, b, 3), hi = a + b - 1."""
        assert cartesian_hull_bounds(hn_g, hn_h) == bounds

    def test_bounds_need_nontrivial_factors(self):
        """A hull number below 2 cannot come from a nontrivial connected factor."""
        with pytest.raises(PreconditionError):
            cartesian_hull_bounds(1, 3)

    def test_witness_on_rook_graph(self):
        """K3 x K3 is closed by three vertices."""
        k3 = complete(3)
        witness = cartesian_hull_witness(k3, k3, VertexSet.of(3, [0, 1]), VertexSet.of(3, [0, 1]))
        assert witness.to_list() == [0, 1, 4]

    def test_witness_on_cube(self):
        """C4 x K2 is closed by |S_G| + |S_H| - 1 = 4 vertices."""
        witness = cartesian_hull_witness(cycle(4), path(2), VertexSet.of(4, [0, 1, 2]), VertexSet.of(2, [0, 1]))
        assert witness.to_list() == [0, 1, 3, 5]
        p = product(cycle(4), path(2), ProductKind.CARTESIAN)
        assert is_hull_set(p.graph, witness, CC)

    def test_witness_needs_hull_sets(self):
        """Factor sets must themselves be hull sets."""
        k3 = complete(3)
        with pytest.raises(NotAHullSetError):
            cartesian_hull_witness(k3, k3, VertexSet.of(3, [0]), VertexSet.of(3, [0, 1]))


class TestConvexityFastpath:
    """Tests for convexity_fastpath."""

    def test_formula(self):
        """max(n * C(G), m * C(H))."""
        assert cartesian_convexity_formula(1, 1, 3, 5) == 5
        assert cartesian_convexity_formula(2, 4, 4, 6) == 16

    def test_complete_factors(self, budget: SearchBudget):
        """K3 x K5 has C = max(m, n) = 5."""
        result = convexity_fastpath(product(complete(3), complete(5), ProductKind.CARTESIAN), budget=budget)
        assert (result.value, result.method) == (5, SolveMethod.FASTPATH_CARTESIAN)

    def test_cycle_factors(self, budget: SearchBudget):
        """C4 x C6 has C = max(24 - 8, 24 - 12) = 16, witnessed by a subproduct."""
        p = product(cycle(4), cycle(6), ProductKind.CARTESIAN)
        result = convexity_fastpath(p, budget=budget)
        assert result.value == 16
        assert len(result.witness) == 16
        assert is_convex(p.graph, result.witness, CC)

    def test_lexicographic_uses_independence(self, budget: SearchBudget):
        """C4 o C4 has C = floor(4/2) * floor(4/2) = 4."""
        result = convexity_fastpath(product(cycle(4), cycle(4), ProductKind.LEXICOGRAPHIC), budget=budget)
        assert (result.value, result.method) == (4, SolveMethod.FASTPATH_ALPHA)

    @pytest.mark.parametrize(
        "g,h,kind",
        [
            (path(2), path(2), ProductKind.CARTESIAN),
            (path(2), cycle(3), ProductKind.CARTESIAN),
            (path(2), path(3), ProductKind.CARTESIAN),
            (path(2), path(3), ProductKind.STRONG),
            (path(3), path(2), ProductKind.LEXICOGRAPHIC),
        ],
    )
    def test_agrees_with_exact(self, g: Graph, h: Graph, kind: ProductKind, budget: SearchBudget):
        """Formula value equals the exhaustive search on the product."""
        p = product(g, h, kind)
        expected = convexity_number_exact(p.graph, CC, budget).value
        assert convexity_fastpath(p, budget=budget).value == expected

    def test_disconnected_factor(self, budget: SearchBudget):
        """Disconnected factors are refused."""
        with pytest.raises(DisconnectedFactorError):
            convexity_fastpath(product(path(3), Graph.empty(2), ProductKind.CARTESIAN), budget=budget)
