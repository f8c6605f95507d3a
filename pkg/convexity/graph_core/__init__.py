"""
Graph Core

Immutable bit-mask graphs, edge-list and graph6 codecs, generators and
structural queries.
"""

from convexity.graph_core.generators import (
    connected_graphs,
    generate,
    named_graph,
    random_graph,
    random_tree,
)
from convexity.graph_core.io import (
    dump_graph,
    emit_edge_list,
    encode_graph6,
    load_graph,
    parse_edge_list,
    parse_graph6,
)
from convexity.graph_core.models import (
    BipartiteResult,
    FamilySpec,
    Graph,
    GraphFamily,
    GraphStats,
    VertexSet,
)
from convexity.graph_core.tools import (
    connected_components,
    disjoint_union,
    graph_stats,
    induced_subgraph,
    is_bipartite,
    is_connected,
    is_cut_vertex,
    is_cycle_walk,
    is_tree,
    lies_on_cycle,
)

__all__ = [
    # Models
    "Graph",
    "VertexSet",
    "GraphFamily",
    "FamilySpec",
    "BipartiteResult",
    "GraphStats",
    # Codecs
    "parse_edge_list",
    "emit_edge_list",
    "parse_graph6",
    "encode_graph6",
    "load_graph",
    "dump_graph",
    # Generators
    "generate",
    "named_graph",
    "random_tree",
    "random_graph",
    "connected_graphs",
    # Tools
    "is_bipartite",
    "lies_on_cycle",
    "is_cycle_walk",
    "is_cut_vertex",
    "connected_components",
    "is_connected",
    "is_tree",
    "induced_subgraph",
    "disjoint_union",
    "graph_stats",
]
