"""
Closed forms for the cycle convexity number of products of complete
graphs, cycles, paths and trees.

Cartesian forms follow max(n * C(G), m * C(H)) with C(K_m) = 1,
C(C_m) = m - 2 and C(T_m) = m - 1. Strong and lexicographic forms are
independence numbers of the product.
"""

from collections.abc import Callable
from dataclasses import dataclass

from convexity.graph_core.generators import complete, cycle, path, random_tree
from convexity.graph_core.models import Graph
from convexity.products.models import ProductKind

FactorBuilder = Callable[[int, int], Graph]

_MIN_ORDER = {"K": 2, "C": 3, "P": 2, "T": 2}

_BUILDERS: dict[str, FactorBuilder] = {
    "K": lambda order, _seed: complete(order),
    "C": lambda order, _seed: cycle(order),
    "P": lambda order, _seed: path(order),
    "T": random_tree,
}


def _ceil_half(x: int) -> int:
    return (x + 1) // 2


@dataclass(frozen=True)
class ClosedForm:
    """
    One closed form C(X_m * Y_n) = formula(m, n).

    left/right are family letters: K complete, C cycle, P path, T tree.
    """

    name: str
    kinds: tuple[ProductKind, ...]
    left: str
    right: str
    formula: Callable[[int, int], int]
    condition: Callable[[int, int], bool] = lambda m, n: True

    def applies(self, m: int, n: int) -> bool:
        return m >= _MIN_ORDER[self.left] and n >= _MIN_ORDER[self.right] and self.condition(m, n)

    def factors(self, m: int, n: int, seed: int = 0) -> tuple[Graph, Graph]:
        """Factor graphs; trees are drawn from seed (left) and seed + 1 (right)."""
        return _BUILDERS[self.left](m, seed), _BUILDERS[self.right](n, seed + 1)

    def value(self, m: int, n: int) -> int:
        return self.formula(m, n)


CARTESIAN_FORMS: tuple[ClosedForm, ...] = (
    ClosedForm("K□K", (ProductKind.CARTESIAN,), "K", "K", lambda m, n: max(m, n)),
    ClosedForm("K□C", (ProductKind.CARTESIAN,), "K", "C", lambda m, n: max(n, m * (n - 2))),
    ClosedForm("K□T", (ProductKind.CARTESIAN,), "K", "T", lambda m, n: max(n, m * (n - 1))),
    ClosedForm("C□C", (ProductKind.CARTESIAN,), "C", "C", lambda m, n: max(n * (m - 2), m * (n - 2))),
    ClosedForm("C□T", (ProductKind.CARTESIAN,), "C", "T", lambda m, n: max(n * (m - 2), m * (n - 1))),
    ClosedForm("T□T", (ProductKind.CARTESIAN,), "T", "T", lambda m, n: max(n * (m - 1), m * (n - 1))),
)

_BOTH = (ProductKind.STRONG, ProductKind.LEXICOGRAPHIC)

STRONG_LEX_FORMS: tuple[ClosedForm, ...] = (
    ClosedForm("K*K", _BOTH, "K", "K", lambda m, n: 1),
    ClosedForm("K*C", _BOTH, "K", "C", lambda m, n: n // 2),
    ClosedForm("K*P", _BOTH, "K", "P", lambda m, n: _ceil_half(n)),
    ClosedForm("C∘C", (ProductKind.LEXICOGRAPHIC,), "C", "C", lambda m, n: (m // 2) * (n // 2)),
    ClosedForm(
        "C_even⊠C",
        (ProductKind.STRONG,),
        "C",
        "C",
        lambda m, n: (m // 2) * (n // 2),
        condition=lambda m, n: m % 2 == 0,
    ),
    ClosedForm(
        "C_odd⊠C_odd",
        (ProductKind.STRONG,),
        "C",
        "C",
        # m = 2j + 1 >= n = 2k + 1: jk + floor(k / 2)
        lambda m, n: (m // 2) * (n // 2) + (n // 2) // 2,
        condition=lambda m, n: m % 2 == 1 and n % 2 == 1 and m >= n,
    ),
    ClosedForm("C*P", _BOTH, "C", "P", lambda m, n: (m // 2) * _ceil_half(n)),
    ClosedForm("P*P", _BOTH, "P", "P", lambda m, n: _ceil_half(m) * _ceil_half(n)),
)
