"""
Graph Products

Cartesian, strong and lexicographic products with layer, projection and
subproduct queries.
"""

from convexity.products.models import FactorSide, ProductGraph, ProductKind
from convexity.products.tools import (
    cross,
    factor_vertices,
    is_subproduct,
    layer,
    layers_of,
    product,
    projection,
    swap_factors,
)

__all__ = [
    "ProductKind",
    "FactorSide",
    "ProductGraph",
    "product",
    "layer",
    "projection",
    "is_subproduct",
    "cross",
    "layers_of",
    "swap_factors",
    "factor_vertices",
]
