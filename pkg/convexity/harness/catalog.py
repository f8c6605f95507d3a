"""
Theorem-check catalog.

Ids are fixed and listed in the order reports are emitted. The negative
control is selectable by id but never part of "all".
"""

from collections.abc import Callable
from dataclasses import dataclass
from typing import Final

from convexity.harness.checks import convexity_number, gadgets, hull, kernel, negative, structure
from convexity.harness.models import CheckContext, Counterexample
from convexity.shared.exceptions import UnknownCheckError

CheckFn = Callable[[CheckContext], Counterexample | None]

SUITE_ALL: Final = "all"


@dataclass(frozen=True)
class CatalogEntry:
    id: str
    statement: str
    run: CheckFn
    in_all: bool = True


CATALOG: Final[tuple[CatalogEntry, ...]] = (
    CatalogEntry("strong-hull", "hn_cc(G strong H) = 2", hull.check_strong_hull),
    CatalogEntry("lex-hull", "hn_cc(G lex H) = 2", hull.check_lex_hull),
    CatalogEntry("tree-product-hull", "hn_cc(T1 x T2) = m + n - 1", hull.check_tree_product_hull),
    CatalogEntry(
        "cartesian-hull-bounds",
        "max(hn G, hn H, 3) <= hn(G x H) <= hn G + hn H - 1",
        hull.check_cartesian_hull_bounds,
    ),
    CatalogEntry(
        "hull-two-factor-partition",
        "hn(G x H) = hn G iff a minimum hull set splits with meeting hulls (hn H = 2)",
        hull.check_hull_two_factor_partition,
    ),
    CatalogEntry(
        "subproduct-decomposition",
        "components of convex sets of G x H are subproducts",
        structure.check_subproduct_decomposition,
    ),
    CatalogEntry(
        "product-of-convex-sets",
        "S x T is convex for convex S, T",
        structure.check_product_of_convex_sets,
    ),
    CatalogEntry(
        "projection-hull-sets",
        "projections of a hull set of G x H are hull sets",
        hull.check_projection_hull_sets,
    ),
    CatalogEntry(
        "line-column-closure",
        "a G-layer and an H-layer generate G x H",
        hull.check_line_column_closure,
    ),
    CatalogEntry(
        "two-subset-layer",
        "2-subsets are independent or have their hull in one layer",
        hull.check_two_subset_layer,
    ),
    CatalogEntry(
        "cartesian-convexity-number",
        "C(G x H) = max(n C(G), m C(H))",
        convexity_number.check_cartesian_convexity_number,
    ),
    CatalogEntry(
        "strong-lex-convexity-alpha",
        "C(G * H) = alpha(G * H) for strong and lexicographic products",
        convexity_number.check_strong_lex_convexity_alpha,
    ),
    CatalogEntry(
        "cartesian-closed-forms",
        "closed forms for K, C, T Cartesian products",
        convexity_number.check_cartesian_closed_forms,
    ),
    CatalogEntry(
        "strong-lex-closed-forms",
        "closed forms for K, C, P strong and lexicographic products",
        convexity_number.check_strong_lex_closed_forms,
    ),
    CatalogEntry(
        "lex-alpha-multiplicative",
        "alpha(G lex H) = alpha(G) alpha(H)",
        convexity_number.check_lex_alpha_multiplicative,
    ),
    CatalogEntry("hw-gadget", "H(w), F^uv and the identified pair", gadgets.check_hw_gadget),
    CatalogEntry(
        "bipartite-reduction-forward",
        "P3 hull sets lift to cycle hull sets of size k + 45|L|",
        gadgets.check_bipartite_reduction_forward,
    ),
    CatalogEntry(
        "cartesian-hardness-certificate",
        "hull sets of G' and G' x K2 of size k + 18",
        gadgets.check_cartesian_hardness_certificate,
    ),
    CatalogEntry("kernel-properties", "closure operator laws", kernel.check_kernel_properties),
    CatalogEntry(
        "negative-control",
        "deliberately wrong: hn_cc(P_m x P_n) = m + n",
        negative.check_negative_control,
        in_all=False,
    ),
)

_BY_ID: Final[dict[str, CatalogEntry]] = {entry.id: entry for entry in CATALOG}


def known_ids() -> list[str]:
    return [entry.id for entry in CATALOG]


def get_entry(check_id: str) -> CatalogEntry:
    """
    Raises:
        UnknownCheckError: check_id is not in the catalog
    """
    try:
        return _BY_ID[check_id]
    except KeyError:
        raise UnknownCheckError(check_id, known_ids()) from None


def resolve_suite(suite: str) -> list[str]:
    """
    Check ids for a --suite value: "all", a comma-separated id list, or "".

    Ids come back in catalog order without duplicates.

    Raises:
        UnknownCheckError: an id is not in the catalog
    """
    if suite.strip() == SUITE_ALL:
        return [entry.id for entry in CATALOG if entry.in_all]
    requested = {part.strip() for part in suite.split(",") if part.strip()}
    for check_id in sorted(requested):
        get_entry(check_id)
    return [entry.id for entry in CATALOG if entry.id in requested]
