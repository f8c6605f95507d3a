"""
Test Closed Forms

Closed-form convexity numbers of products of named families, checked
against the solvers on small orders.
"""

import pytest

from convexity.kernel import ConvexityKind
from convexity.products import ProductKind, product
from convexity.solvers import (
    CARTESIAN_FORMS,
    STRONG_LEX_FORMS,
    ClosedForm,
    SearchBudget,
    cartesian_convexity_formula,
    convexity_number_exact,
    independence_number_exact,
)

ORDERS = range(2, 6)


def _cases(forms: tuple[ClosedForm, ...]) -> list[tuple[ClosedForm, ProductKind, int, int]]:
    return [
        (form, kind, m, n)
        for form in forms
        for kind in form.kinds
        for m in ORDERS
        for n in ORDERS
        if form.applies(m, n)
    ]


def _case_id(case: tuple[ClosedForm, ProductKind, int, int]) -> str:
    form, kind, m, n = case
    return f"{form.name}-{kind.value}-{m}x{n}"


class TestClosedFormCatalog:
    """Tests for the form tables themselves."""

    def test_form_counts(self):
        """Six Cartesian forms, eight strong/lexicographic forms."""
        assert len(CARTESIAN_FORMS) == 6
        assert len(STRONG_LEX_FORMS) == 8

    def test_minimum_orders(self):
        """Cycles need three vertices, other families two."""
        cc = next(f for f in CARTESIAN_FORMS if f.name == "C□C")
        assert not cc.applies(2, 4)
        assert cc.applies(3, 4)

    def test_parity_conditions(self):
        """The odd strong form needs m >= n, both odd."""
        odd = next(f for f in STRONG_LEX_FORMS if f.name == "C_odd⊠C_odd")
        assert odd.applies(5, 3)
        assert not odd.applies(3, 5)
        assert not odd.applies(4, 3)
        assert odd.value(5, 5) == 5

    def test_factors(self):
        """Factors have the requested orders."""
        form = next(f for f in CARTESIAN_FORMS if f.name == "C□T")
        g, h = form.factors(4, 5, seed=9)
        assert (g.n, g.edge_count, h.n, h.edge_count) == (4, 4, 5, 4)


class TestClosedFormValues:
    """Closed forms against the solvers."""

    @pytest.mark.parametrize("case", _cases(CARTESIAN_FORMS), ids=_case_id)
    def test_cartesian_forms(self, case: tuple[ClosedForm, ProductKind, int, int], budget: SearchBudget):
        """Formula equals max(n * C(G), m * C(H)) with exact factor values."""
        form, _, m, n = case
        g, h = form.factors(m, n)
        c_g = convexity_number_exact(g, ConvexityKind.CYCLE, budget).value
        c_h = convexity_number_exact(h, ConvexityKind.CYCLE, budget).value
        assert form.value(m, n) == cartesian_convexity_formula(c_g, c_h, m, n)

    @pytest.mark.parametrize("case", _cases(STRONG_LEX_FORMS), ids=_case_id)
    def test_strong_lex_forms(self, case: tuple[ClosedForm, ProductKind, int, int], budget: SearchBudget):
        """Formula equals the independence number of the product."""
        form, kind, m, n = case
        g, h = form.factors(m, n)
        p = product(g, h, kind)
        assert form.value(m, n) == independence_number_exact(p.graph, budget).value

    @pytest.mark.parametrize(
        "name,kind,m,n",
        [("K□K", ProductKind.CARTESIAN, 2, 2), ("K□C", ProductKind.CARTESIAN, 2, 3), ("P*P", ProductKind.STRONG, 2, 3)],
    )
    def test_matches_full_search(self, name: str, kind: ProductKind, m: int, n: int, budget: SearchBudget):
        """On tiny products the formula equals the exhaustive convexity number."""
        form = next(f for f in CARTESIAN_FORMS + STRONG_LEX_FORMS if f.name == name)
        g, h = form.factors(m, n)
        p = product(g, h, kind)
        assert form.value(m, n) == convexity_number_exact(p.graph, ConvexityKind.CYCLE, budget).value
