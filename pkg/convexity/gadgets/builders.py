"""
Hardness gadgets.

H(w) is a 6-cycle y0..y5 with the 4-cycles x1 y1 y2 x2, x3 y2 y3 x4,
x6 y4 y3 x5 and x8 y5 y4 x7 hung on four of its edges. F^uv joins five
copies of H(w) to u, u', v, v' through two 4-cycles and a 3-path. Two
copies of H(w) glued at y0 give the identified gadget used for Cartesian
products with K2.
"""

from convexity.gadgets.models import GadgetFuv, GadgetHw
from convexity.graph_core.models import Graph, VertexSet

HW_NAMES: tuple[str, ...] = (
    "y0", "y1", "y2", "y3", "y4", "y5",
    "x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8",
)  # fmt: skip
HW_ORDER = len(HW_NAMES)
HW_INDEX: dict[str, int] = {name: i for i, name in enumerate(HW_NAMES)}

HW_CYCLES: tuple[tuple[str, ...], ...] = (
    ("x1", "y1", "y2", "x2"),
    ("x3", "y2", "y3", "x4"),
    ("x6", "y4", "y3", "x5"),
    ("x8", "y5", "y4", "x7"),
    ("y0", "y1", "y2", "y3", "y4", "y5"),
)

HW_HULL_NAMES: tuple[str, ...] = ("y1", "y2", "y3", "y4", "y5", "x1", "x3", "x5", "x7")

FUV_COPIES = 5
FUV_ORDER = 4 + FUV_COPIES * HW_ORDER

# Attachment cycles and path of F^uv, by role.
FUV_ATTACHMENTS: tuple[tuple[str, ...], ...] = (
    ("u", "u'", "w2:y0", "w1:y0"),
    ("v", "v'", "w4:y0", "w5:y0"),
    ("u'", "w3:y0", "v'"),
)
FUV_ATTACHMENT_CYCLES = FUV_ATTACHMENTS[:2]

# Vertices of F^uv outside the H(w) copies, in id order.
FUV_TERMINALS: tuple[str, ...] = ("u", "u'", "v", "v'")

IDENTIFIED_ORDER = 2 * HW_ORDER - 1


def _cycle_edges(ids: dict[str, int], walk: tuple[str, ...], closed: bool) -> set[tuple[int, int]]:
    stops = [ids[name] for name in walk]
    pairs = zip(stops, stops[1:] + stops[:1] if closed else stops[1:])
    return {(min(a, b), max(a, b)) for a, b in pairs}


def hw_edges() -> list[tuple[int, int]]:
    """The 18 edges of H(w) in local ids."""
    edges: set[tuple[int, int]] = set()
    for walk in HW_CYCLES:
        edges |= _cycle_edges(HW_INDEX, walk, closed=True)
    return sorted(edges)


def build_Hw() -> GadgetHw:
    return GadgetHw(graph=Graph.from_edges(HW_ORDER, hw_edges(), HW_NAMES), ids=dict(HW_INDEX))


def hull_set_Hw() -> VertexSet:
    """S(w) = {y1..y5, x1, x3, x5, x7}."""
    return VertexSet.of(HW_ORDER, (HW_INDEX[name] for name in HW_HULL_NAMES))


def fuv_roles() -> list[str]:
    """Roles of F^uv in id order: terminals, then w1..w5 copies."""
    roles = list(FUV_TERMINALS)
    for i in range(1, FUV_COPIES + 1):
        roles.extend(f"w{i}:{name}" for name in HW_NAMES)
    return roles


def fuv_edges(ids: dict[str, int]) -> set[tuple[int, int]]:
    """Edges of F^uv over an arbitrary role -> id table."""
    edges: set[tuple[int, int]] = set()
    for i in range(1, FUV_COPIES + 1):
        for a, b in hw_edges():
            x, y = ids[f"w{i}:{HW_NAMES[a]}"], ids[f"w{i}:{HW_NAMES[b]}"]
            edges.add((min(x, y), max(x, y)))
    for walk in FUV_ATTACHMENT_CYCLES:
        edges |= _cycle_edges(ids, walk, closed=True)
    edges |= _cycle_edges(ids, FUV_ATTACHMENTS[2], closed=False)
    return edges


def build_Fuv() -> GadgetFuv:
    roles = fuv_roles()
    ids = {role: i for i, role in enumerate(roles)}
    graph = Graph.from_edges(FUV_ORDER, sorted(fuv_edges(ids)), roles)
    return GadgetFuv(graph=graph, ids=ids)


def fuv_hull_roles() -> list[str]:
    """S^uv: the 45 roles of S(w1) .. S(w5)."""
    return [f"w{i}:{name}" for i in range(1, FUV_COPIES + 1) for name in HW_HULL_NAMES]


def identified_roles() -> list[str]:
    """Roles of the identified gadget: v = y0 shared, then w1 and w2 without y0."""
    roles = ["v"]
    for i in (1, 2):
        roles.extend(f"w{i}:{name}" for name in HW_NAMES[1:])
    return roles


def identified_ids() -> dict[str, int]:
    ids = {role: i for i, role in enumerate(identified_roles())}
    ids["w1:y0"] = ids["w2:y0"] = ids["v"]
    return ids


def build_identified_HH() -> Graph:
    """Two copies of H(w) sharing y0 as the cut vertex v (id 0)."""
    ids = identified_ids()
    edges = set()
    for i in (1, 2):
        for a, b in hw_edges():
            x, y = ids[f"w{i}:{HW_NAMES[a]}"], ids[f"w{i}:{HW_NAMES[b]}"]
            edges.add((min(x, y), max(x, y)))
    return Graph.from_edges(IDENTIFIED_ORDER, sorted(edges), identified_roles())


def identified_hull_roles(copy: int | None = None) -> list[str]:
    copies = (1, 2) if copy is None else (copy,)
    return [f"w{i}:{name}" for i in copies for name in HW_HULL_NAMES]


def hull_set_identified_HH() -> VertexSet:
    """S(w1) | S(w2), 18 vertices."""
    ids = identified_ids()
    return VertexSet.of(IDENTIFIED_ORDER, (ids[role] for role in identified_hull_roles()))


