"""
Test Hardness Reductions

Unit tests for the bipartite P3-to-cycle reduction, the Cartesian K2
construction, their certificates and the JSON envelope.
"""

import pytest

from convexity.gadgets import (
    ReductionKind,
    build_cartesian_hardness,
    from_envelope,
    hardness_certificate,
    lift_hull_set,
    nonedge_set,
    project_back,
    reduce_p3_to_cc,
    to_envelope,
)
from convexity.gadgets.models import ReductionInstance
from convexity.graph_core.generators import complete, cycle, path, star
from convexity.graph_core.models import VertexSet
from convexity.graph_core.tools import is_bipartite
from convexity.kernel import ConvexityKind, is_hull_set
from convexity.shared.exceptions import (
    ContractValidationError,
    NotAHullSetError,
    NotBipartiteError,
    PreconditionError,
)


@pytest.fixture
def p3_instance() -> ReductionInstance:
    """P3 has one non-adjacent pair with a common neighbor: (0, 2)."""
    return reduce_p3_to_cc(path(3), k=2)


@pytest.fixture
def cart_instance() -> ReductionInstance:
    """C4 with the identified gadget hung off vertex 0."""
    return build_cartesian_hardness(cycle(4), u=0, k=3)


class TestNonedgeSet:
    """Tests for nonedge_set."""

    def test_path(self):
        """Endpoints of P3 share the middle vertex."""
        assert nonedge_set(path(3)) == [(0, 2)]

    def test_star(self):
        """All leaf pairs of a star share the center."""
        assert nonedge_set(star(4)) == [(1, 2), (1, 3), (2, 3)]

    def test_complete_and_far_apart(self):
        """No pairs in K4; distance-3 pairs have no common neighbor."""
        assert nonedge_set(complete(4)) == []
        assert nonedge_set(path(4)) == [(0, 2), (1, 3)]


class TestReduceP3ToCycle:
    """Tests for reduce_p3_to_cc."""

    def test_sizes(self, p3_instance: ReductionInstance):
        """One F^uv adds 72 vertices and 45 to the budget."""
        assert p3_instance.output.n == 3 + 72
        assert p3_instance.k_prime == 2 + 45
        assert p3_instance.nonedges == ((0, 2),)
        assert p3_instance.reduction is ReductionKind.P3_TO_CC

    def test_base_kept_at_front(self, p3_instance: ReductionInstance):
        """Base ids and edges are unchanged."""
        assert p3_instance.base_ids() == [0, 1, 2]
        assert p3_instance.output.has_edge(0, 1)
        assert p3_instance.output.has_edge(1, 2)
        assert p3_instance.registry["F^{(0,2)}"]["u"] == 0
        assert p3_instance.registry["F^{(0,2)}"]["v"] == 2

    def test_provenance_labels(self, p3_instance: ReductionInstance):
        """Gadget vertices are labelled with their pair."""
        labels = [p3_instance.output.label(i) for i in (0, 3, 4, 5)]
        assert labels == ["0", "u'^{(0,2)}", "v'^{(0,2)}", "w1^{(0,2)}:y0"]
        entry = p3_instance.provenance[5]
        assert (entry.origin, entry.gadget, entry.role) == ("gadget", "F^{(0,2)}", "w1:y0")

    def test_output_stays_bipartite(self):
        """Bipartite bases give bipartite outputs."""
        assert is_bipartite(reduce_p3_to_cc(star(4), k=3).output)

    def test_rejects_odd_cycles(self):
        """The reduction is defined for bipartite graphs only."""
        with pytest.raises(NotBipartiteError) as exc_info:
            reduce_p3_to_cc(complete(3), k=2)
        assert len(exc_info.value.odd_cycle) == 3

    def test_lift(self, p3_instance: ReductionInstance):
        """The P3 hull set {0, 2} lifts to a cycle hull set of size k'."""
        lifted = lift_hull_set(p3_instance, VertexSet.of(3, [0, 2]))
        assert len(lifted) == p3_instance.k_prime
        assert is_hull_set(p3_instance.output, lifted, ConvexityKind.CYCLE)

    def test_lift_needs_p3_hull_set(self, p3_instance: ReductionInstance):
        """A single endpoint does not P3-close P3."""
        with pytest.raises(NotAHullSetError):
            lift_hull_set(p3_instance, VertexSet.of(3, [0]))

    def test_project_back(self, p3_instance: ReductionInstance):
        """Base members survive; u' stands in for u."""
        lifted = lift_hull_set(p3_instance, VertexSet.of(3, [0, 2]))
        assert project_back(p3_instance, lifted).to_list() == [0, 2]

        u_prime = p3_instance.registry["F^{(0,2)}"]["u'"]
        swapped = VertexSet(lifted.n, (lifted.mask & ~1) | 1 << u_prime)
        assert is_hull_set(p3_instance.output, swapped, ConvexityKind.CYCLE)
        assert project_back(p3_instance, swapped).to_list() == [0, 2]

    def test_project_back_needs_hull_set(self, p3_instance: ReductionInstance):
        """Only cycle hull sets of G' can be projected."""
        with pytest.raises(NotAHullSetError):
            project_back(p3_instance, VertexSet.of(p3_instance.output.n, [0, 2]))

    def test_wrong_instance_kind(self, cart_instance: ReductionInstance):
        """Lifting belongs to the P3 reduction."""
        with pytest.raises(PreconditionError):
            lift_hull_set(cart_instance, VertexSet.of(4, [0, 1, 2]))


class TestCartesianHardness:
    """Tests for build_cartesian_hardness and hardness_certificate."""

    def test_sizes(self, cart_instance: ReductionInstance):
        """G' adds the 27-vertex gadget; the product doubles it."""
        assert cart_instance.output.n == 4 + 27
        assert cart_instance.output.edge_count == 4 + 36 + 1
        assert cart_instance.k_prime == 3 + 18
        assert cart_instance.product is not None
        assert cart_instance.product.graph.n == 62

    def test_bridge(self, cart_instance: ReductionInstance):
        """u is joined to the shared gadget vertex."""
        v = cart_instance.registry["H"]["v"]
        assert cart_instance.output.has_edge(0, v)
        assert cart_instance.output.label(v) == "v"

    def test_bipartite_preserved(self, cart_instance: ReductionInstance):
        """A bipartite base keeps G' x K2 bipartite."""
        assert cart_instance.product is not None
        assert is_bipartite(cart_instance.product.graph)

    def test_certificate(self, cart_instance: ReductionInstance):
        """Hull sets of G' and G' x K2 of size k + 18, parts meeting at v."""
        cert = hardness_certificate(cart_instance, VertexSet.of(4, [0, 1, 2]))
        assert len(cert.hull_set) == 21
        assert len(cert.product_hull_set) == 21
        assert cert.common == cart_instance.registry["H"]["v"]
        assert is_hull_set(cart_instance.output, cert.hull_set, ConvexityKind.CYCLE)
        assert cart_instance.product is not None
        assert is_hull_set(cart_instance.product.graph, cert.product_hull_set, ConvexityKind.CYCLE)

    def test_certificate_needs_base_hull_set(self, cart_instance: ReductionInstance):
        """Opposite vertices of C4 do not close it."""
        with pytest.raises(NotAHullSetError):
            hardness_certificate(cart_instance, VertexSet.of(4, [0, 2]))

    def test_u_must_be_a_vertex(self):
        """u is checked against the base."""
        with pytest.raises(PreconditionError):
            build_cartesian_hardness(cycle(4), u=4, k=3)


class TestEnvelope:
    """Tests for to_envelope / from_envelope."""

    def test_p3_envelope(self, p3_instance: ReductionInstance):
        """Envelope fields and rebuild."""
        envelope = to_envelope(p3_instance)
        assert envelope["reduction"] == "p3cc"
        assert (envelope["k"], envelope["k_prime"]) == (2, 47)
        assert envelope["L"] == [[0, 2]]
        assert envelope["edge_list"].startswith("75 ")
        assert envelope["provenance"][0] == {"origin": "base", "label": "0", "base_vertex": 0}

        rebuilt = from_envelope(envelope)
        assert rebuilt.output == p3_instance.output
        assert rebuilt.base.same_adjacency(p3_instance.base)
        assert rebuilt.registry == p3_instance.registry
        assert rebuilt.nonedges == p3_instance.nonedges

    def test_rebuilt_instance_still_lifts(self, p3_instance: ReductionInstance):
        """A rebuilt instance supports the same certificates."""
        rebuilt = from_envelope(to_envelope(p3_instance))
        assert len(lift_hull_set(rebuilt, VertexSet.of(3, [0, 2]))) == 47

    def test_cartesian_envelope(self, cart_instance: ReductionInstance):
        """The Cartesian envelope has no pairs and rebuilds its product."""
        envelope = to_envelope(cart_instance)
        assert envelope["L"] == []
        rebuilt = from_envelope(envelope)
        assert rebuilt.registry == cart_instance.registry
        assert rebuilt.product is not None
        assert rebuilt.product.graph == cart_instance.product.graph

    def test_schema_violation(self, p3_instance: ReductionInstance):
        """Envelopes are schema-checked on the way in."""
        envelope = to_envelope(p3_instance)
        envelope["reduction"] = "sat"
        with pytest.raises(ContractValidationError):
            from_envelope(envelope)
