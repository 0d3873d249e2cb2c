from fractions import Fraction

import pytest

from quantale.arith import INF, ext
from quantale.catalog import grid_unit_quantale, resolve, truncated_lawvere
from quantale.continuous import LawvereQuantale, ProductQuantale
from quantale.core import FiniteQuantale, validate_finite_quantale
from quantale.errors import ParseError, UnsupportedOperationError


def test_truncation_caps_addition():
    t = truncated_lawvere(2)
    assert t.labels[t.tensor(t.index("2"), t.index("1"))] == "inf"
    assert t.labels[t.unit] == "0"
    # 0 is the top in the reversed order
    assert all(t.leq(u, t.unit) for u in t.elements)
    zero = t.index("0")
    assert all(t.tensor(zero, u) == u for u in t.elements)


def test_truncations_and_grids_validate_up_to_six():
    for n in range(1, 7):
        for q in (
            truncated_lawvere(n),
            grid_unit_quantale("min", n),
            grid_unit_quantale("luk", n),
        ):
            assert validate_finite_quantale(q.labels, q._leq, q._tensor, q.unit).passed


def test_lukasiewicz_grid_values():
    g = grid_unit_quantale("luk", 4)
    half = g.value_projection(Fraction(1, 2))
    threq = g.value_projection(Fraction(3, 4))
    quarter = g.value_projection(Fraction(1, 4))
    assert g.tensor(half, threq) == quarter
    assert g.tensor(quarter, half) == g.value_projection(Fraction(0))
    one = g.unit
    assert all(g.tensor(u, one) == u for u in g.elements)


def test_grid_rejects_product_tnorm():
    with pytest.raises(UnsupportedOperationError):
        grid_unit_quantale("product", 4)


def test_truncation_projection():
    t = truncated_lawvere(3)
    assert t.element_values[t.value_projection(ext(2))] == 2
    assert t.element_values[t.value_projection(ext(9))] == INF
    assert t.element_values[t.value_projection(INF)] == INF
    with pytest.raises(UnsupportedOperationError):
        t.value_projection(ext(Fraction(1, 2)))


def test_resolve_products_and_powers():
    p = resolve("lawvere:2x2")
    assert isinstance(p, FiniteQuantale) and p.n == 16
    assert resolve("twoxtwo").n == 4
    assert isinstance(resolve("lawvere"), LawvereQuantale)
    pw = resolve("lawverex3")
    assert isinstance(pw, ProductQuantale) and pw.arity == 3
    assert resolve("ddf:prod").name == "ddf:product"
    assert resolve("ddf-pw:prod").name == "ddf-pw:product"


def test_resolve_rejects_unknown_names():
    with pytest.raises(ParseError):
        resolve("nosuch")
    with pytest.raises(ParseError):
        resolve("chain:x")
