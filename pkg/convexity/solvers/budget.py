"""
Budget enforcement for exact searches.
"""

import time

from convexity.graph_core.models import Graph
from convexity.shared.config import REPRESENTATION_MAX_N
from convexity.shared.exceptions import BudgetExceededError
from convexity.solvers.models import SearchBudget

# Wall-clock is sampled once per this many ticks.
_CLOCK_STRIDE = 1024


class SearchMeter:
    """
    Counts candidate sets for one search and enforces its budget.

    The solver keeps lower_bound/upper_bound current so a budget error
    reports the best bounds established so far.
    """

    def __init__(self, operation: str, budget: SearchBudget) -> None:
        self.operation = operation
        self.budget = budget
        self.count = 0
        self.lower_bound: int | None = None
        self.upper_bound: int | None = None
        self._deadline = time.monotonic() + budget.time_limit

    def check_order(self, g: Graph) -> None:
        """Refuse graphs above the representation cap or the budget's vertex cap."""
        limit = min(self.budget.max_n, REPRESENTATION_MAX_N)
        if g.n > limit:
            raise BudgetExceededError(
                self.operation,
                f"vertex (n={g.n} > {limit})",
                lower_bound=self.lower_bound,
                upper_bound=self.upper_bound,
            )

    def tick(self) -> None:
        self.count += 1
        if self.count > self.budget.max_subsets:
            raise self._exceeded(f"enumeration ({self.budget.max_subsets} sets)")
        if self.count % _CLOCK_STRIDE == 0 and time.monotonic() > self._deadline:
            raise self._exceeded(f"time ({self.budget.time_limit}s)")

    def _exceeded(self, limit: str) -> BudgetExceededError:
        return BudgetExceededError(
            self.operation,
            limit,
            lower_bound=self.lower_bound,
            upper_bound=self.upper_bound,
        )
