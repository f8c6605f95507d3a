"""
Graph Input/Output

Edge-list and graph6 codecs.

Edge-list format: the first content line is "n m", followed by m lines
"u v" with u < v. Blank lines and '#' comments are ignored, except for
directive lines "#@label <v> <text>" which attach a label to vertex v.
graph6 goes through networkx; the input is screened first so every failure
surfaces as a Graph6FormatError instead of a networkx exception.
"""

import sys
from pathlib import Path

import networkx as nx
import structlog

from convexity.graph_core.models import Graph
from convexity.shared.config import REPRESENTATION_MAX_N
from convexity.shared.exceptions import (
    DuplicateEdgeError,
    EdgeCountMismatchError,
    EdgeOrderError,
    Graph6FormatError,
    GraphFormatError,
    MalformedHeaderError,
    SelfLoopError,
    VertexOutOfRangeError,
)

log = structlog.get_logger()

LABEL_DIRECTIVE = "#@label"
GRAPH6_HEADER = ">>graph6<<"
GRAPH6_SUFFIXES = frozenset({".g6", ".graph6"})

# Largest order an edge-list header may declare.
MAX_FILE_ORDER = 1_000_000


# =====================================================
# Edge list
# =====================================================


def _parse_int_pair(tokens: list[str], line_no: int, raw: str) -> tuple[int, int]:
    if len(tokens) != 2:
        raise GraphFormatError(f"Expected two integers, got {raw.strip()!r}", line=line_no)
    try:
        return int(tokens[0]), int(tokens[1])
    except ValueError as e:
        raise GraphFormatError(f"Expected two integers, got {raw.strip()!r}", line=line_no) from e


def parse_edge_list(text: str) -> Graph:
    """
    Parse edge-list text into a Graph.

    Raises:
        MalformedHeaderError: header missing, not two non-negative integers,
            or declaring more than MAX_FILE_ORDER vertices
        EdgeCountMismatchError: number of edge lines differs from m
        VertexOutOfRangeError, DuplicateEdgeError, SelfLoopError,
        EdgeOrderError: bad edges (each line must read "u v" with u < v)
    """
    header: tuple[int, int] | None = None
    labels: dict[int, str] = {}
    edges: list[tuple[int, int, int]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith(LABEL_DIRECTIVE):
            parts = stripped.split(maxsplit=2)
            if len(parts) < 3 or not parts[1].lstrip("-").isdigit():
                raise GraphFormatError(f"Malformed label directive {stripped!r}", line=line_no)
            labels[int(parts[1])] = parts[2]
            continue
        content = stripped.split("#", 1)[0].strip()
        if not content:
            continue
        tokens = content.split()
        if header is None:
            try:
                n, m = _parse_int_pair(tokens, line_no, raw)
            except GraphFormatError as e:
                raise MalformedHeaderError(content, line=line_no) from e
            if n < 0 or m < 0:
                raise MalformedHeaderError(content, line=line_no)
            if n > MAX_FILE_ORDER:
                raise MalformedHeaderError(
                    content, line=line_no, reason=f"order exceeds {MAX_FILE_ORDER}"
                )
            header = (n, m)
            continue
        u, v = _parse_int_pair(tokens, line_no, raw)
        edges.append((u, v, line_no))

    if header is None:
        raise MalformedHeaderError("", line=None)
    n, m = header
    if len(edges) != m:
        raise EdgeCountMismatchError(m, len(edges))

    rows = [0] * n
    for u, v, line_no in edges:
        for x in (u, v):
            if not 0 <= x < n:
                raise VertexOutOfRangeError(x, n, line=line_no)
        if u == v:
            raise SelfLoopError(u, line=line_no)
        if u > v:
            raise EdgeOrderError(u, v, line=line_no)
        if rows[u] >> v & 1:
            raise DuplicateEdgeError(u, v, line=line_no)
        rows[u] |= 1 << v
        rows[v] |= 1 << u

    for v in labels:
        if not 0 <= v < n:
            raise VertexOutOfRangeError(v, n)
    graph_labels = tuple(labels.get(v, str(v)) for v in range(n)) if labels else None
    return Graph(n, tuple(rows), graph_labels)


def emit_edge_list(g: Graph, *, with_labels: bool = True) -> str:
    """Render g as edge-list text; labels become directive lines."""
    lines = [f"{g.n} {g.edge_count}"]
    if with_labels and g.labels is not None:
        lines.extend(f"{LABEL_DIRECTIVE} {v} {g.labels[v]}" for v in range(g.n))
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


# =====================================================
# graph6
# =====================================================


def _graph6_order(data: bytes) -> tuple[int, int]:
    """Decode the order prefix; returns (n, offset of the adjacency bytes)."""
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] == 126:
        raise Graph6FormatError(f"order exceeds the {REPRESENTATION_MAX_N}-vertex limit")
    if len(data) < 4:
        raise Graph6FormatError("truncated order prefix")
    n = ((data[1] - 63) << 12) | ((data[2] - 63) << 6) | (data[3] - 63)
    return n, 4


def parse_graph6(text: str) -> Graph:
    """
    Decode one graph6 line.

    Raises:
        Graph6FormatError: empty input, bytes outside 63..126, wrong length,
            non-zero padding bits, or more than 64 vertices
    """
    s = text.strip()
    if s.startswith(GRAPH6_HEADER):
        s = s[len(GRAPH6_HEADER):].strip()
    if not s:
        raise Graph6FormatError("empty input")
    if "\n" in s:
        raise Graph6FormatError("expected a single graph")
    try:
        data = s.encode("ascii")
    except UnicodeEncodeError as e:
        raise Graph6FormatError("non-ASCII character") from e
    bad = [c for c in data if not 63 <= c <= 126]
    if bad:
        raise Graph6FormatError(f"byte {bad[0]} outside 63..126")

    n, offset = _graph6_order(data)
    if n > REPRESENTATION_MAX_N:
        raise Graph6FormatError(f"order {n} exceeds the {REPRESENTATION_MAX_N}-vertex limit")
    bits = n * (n - 1) // 2
    expected = (bits + 5) // 6
    body = data[offset:]
    if len(body) != expected:
        raise Graph6FormatError(f"expected {expected} adjacency bytes for n={n}, got {len(body)}")
    pad = expected * 6 - bits
    if pad and (body[-1] - 63) & ((1 << pad) - 1):
        raise Graph6FormatError("non-zero padding bits")

    nx_graph = nx.from_graph6_bytes(data)
    return from_networkx(nx_graph, n)


def encode_graph6(g: Graph) -> str:
    """graph6 encoding of g, without header or trailing newline."""
    return nx.to_graph6_bytes(to_networkx(g), header=False).decode("ascii").strip()


# =====================================================
# networkx bridge
# =====================================================


def to_networkx(g: Graph) -> nx.Graph:
    """networkx copy of g with integer nodes 0..n-1 and a 'label' attribute."""
    nx_graph = nx.Graph()
    for v in range(g.n):
        nx_graph.add_node(v, label=g.label(v))
    nx_graph.add_edges_from(g.edges())
    return nx_graph


def from_networkx(nx_graph: nx.Graph, n: int | None = None) -> Graph:
    """Graph from a networkx graph whose nodes are sortable; ids follow sorted order."""
    nodes = sorted(nx_graph.nodes())
    order = len(nodes) if n is None else n
    index = {node: i for i, node in enumerate(nodes)}
    edges = [(index[u], index[v]) for u, v in nx_graph.edges() if u != v]
    return Graph.from_edges(order, edges)


# =====================================================
# Files
# =====================================================


def _is_graph6_path(path: str | Path) -> bool:
    return Path(path).suffix.lower() in GRAPH6_SUFFIXES


def parse_graph_text(text: str, *, graph6: bool) -> Graph:
    return parse_graph6(text) if graph6 else parse_edge_list(text)


def load_graph(path: str | Path, *, graph6: bool | None = None) -> Graph:
    """
    Read a graph file; "-" reads standard input.

    The format follows the suffix (.g6 -> graph6) unless graph6 is given.
    """
    if str(path) == "-":
        text = sys.stdin.read()
        use_graph6 = bool(graph6)
    else:
        text = Path(path).read_text(encoding="utf-8")
        use_graph6 = _is_graph6_path(path) if graph6 is None else graph6
    g = parse_graph_text(text, graph6=use_graph6)
    log.debug("graph_loaded", path=str(path), n=g.n, m=g.edge_count, graph6=use_graph6)
    return g


def dump_graph(g: Graph, path: str | Path, *, graph6: bool | None = None) -> None:
    """Write g to path ("-" for standard output) in the suffix-selected format."""
    use_graph6 = (_is_graph6_path(path) if str(path) != "-" else False) if graph6 is None else graph6
    text = encode_graph6(g) + "\n" if use_graph6 else emit_edge_list(g)
    if str(path) == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")
