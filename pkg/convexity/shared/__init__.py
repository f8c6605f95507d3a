# Shared Infrastructure
"""
Settings, exceptions, logging setup and the seeded PRNG.
"""

from convexity.shared.config import REPRESENTATION_MAX_N, Settings, get_settings
from convexity.shared.exceptions import (
    BudgetExceededError,
    ConvexityError,
    GraphFormatError,
    PreconditionError,
)
from convexity.shared.prng import SplitMix64, derive_seed

__all__ = [
    "REPRESENTATION_MAX_N",
    "Settings",
    "get_settings",
    "ConvexityError",
    "GraphFormatError",
    "PreconditionError",
    "BudgetExceededError",
    "SplitMix64",
    "derive_seed",
]
