import itertools
import random
from fractions import Fraction

import pytest

from quantale.arith import EXT_ZERO, INF, ext
from quantale.catalog import three_drastic, truncated_lawvere, two
from quantale.continuous import LAWVERE, DDFQuantale, lawvere_power
from quantale.ddf import UNIT_DDF, StepDDF, unit_jump
from quantale.errors import BridgeError, StructureError
from quantale.morphisms import rule_morphism
from quantale.vcat import (
    aggregate_category,
    check_fuzzy_qpm,
    check_quasi_pseudometric,
    check_vcategory,
    coordinate_category,
    diagonal_category,
    distance_matrix,
    fuzzy_bridge,
    fuzzy_family,
    is_separated,
    is_symmetric,
    make_category,
    preorder_bridge,
    product_category,
    qpm_bridge,
)

F = Fraction


def _paper_pair_category():
    # two points over the squared extended half-line: one direction (0,0),
    # the other (0,1); separated because (0,1) is not the unit
    q = lawvere_power(2)
    unit = q.unit
    a01 = (EXT_ZERO, EXT_ZERO)
    a10 = (EXT_ZERO, ext(1))
    return make_category(q, ["y1", "y2"], [[unit, a01], [a10, unit]])


def test_two_point_pair_category_is_valid_and_separated():
    c = _paper_pair_category()
    assert check_vcategory(c) == []
    assert is_separated(c)
    assert not is_symmetric(c)


def test_first_zero_flag_breaks_separation():
    c = _paper_pair_category()
    rule = rule_morphism("nonzero:1", c.quantale, LAWVERE)
    out, violations = aggregate_category(rule, c)
    assert violations == []
    assert out.entry(0, 1) == EXT_ZERO and out.entry(1, 0) == EXT_ZERO
    assert not is_separated(out)


def test_vc1_violation_reported_per_point():
    q = three_drastic()
    c = make_category(q, ["p", "q"], [[1, 0], [0, q.unit]])
    bad = check_vcategory(c)
    assert bad and bad[0].axiom == "VC1" and bad[0].points == ("p",)


def test_composition_construction_is_always_valid():
    # the 3-point matrix with entries unit/u/v/u*v used to read laxity off
    # a category; valid for every u, v
    for q in (three_drastic(), two(), truncated_lawvere(2)):
        for u, v in itertools.product(q.elements, repeat=2):
            uv = q.tensor(u, v)
            m = [
                [q.unit, u, uv],
                [uv, q.unit, v],
                [uv, uv, q.unit],
            ]
            c = make_category(q, ["a", "b", "c"], m)
            assert check_vcategory(c) == [], (q.name, u, v)


def test_diagonal_is_unit_in_valid_categories():
    q = three_drastic()
    for u in q.elements:
        m = [[q.unit, u], [u, q.unit]]
        c = make_category(q, ["a", "b"], m)
        if not check_vcategory(c):
            assert all(c.entry(i, i) == q.unit for i in range(2))


def test_preorder_bridge_accepts_reflexive_transitive():
    c = preorder_bridge(["a", "b", "c"], [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c"), ("a", "c")])
    assert check_vcategory(c) == []


def test_preorder_bridge_rejects_non_transitive_with_witness():
    with pytest.raises(BridgeError) as exc:
        preorder_bridge(
            ["a", "b", "c"],
            [("a", "a"), ("b", "b"), ("c", "c"), ("a", "b"), ("b", "c")],
        )
    assert exc.value.witness == ("a", "b", "c")


def test_two_category_validity_is_reflexivity_plus_transitivity():
    q = two()
    rng = random.Random(17)
    for _ in range(60):
        n = 3
        rel = [[rng.random() < 0.5 for _ in range(n)] for _ in range(n)]
        matrix = [[1 if rel[i][j] else 0 for j in range(n)] for i in range(n)]
        c = make_category(q, [str(i) for i in range(n)], matrix)
        reflexive = all(rel[i][i] for i in range(n))
        transitive = all(
            (not (rel[x][z] and rel[z][y])) or rel[x][y]
            for x, z, y in itertools.product(range(n), repeat=3)
        )
        assert (check_vcategory(c) == []) == (reflexive and transitive)


def test_distance_bridge_and_rejection():
    d = distance_matrix(["a", "b"], [[0, 1], ["1/2", 0]])
    c = qpm_bridge(d)
    assert check_vcategory(c) == []
    bad = distance_matrix(["a", "b", "c"], [[0, 1, 5], [1, 0, 1], [1, 1, 0]])
    with pytest.raises(BridgeError) as exc:
        qpm_bridge(bad)
    assert exc.value.witness.axiom == "triangle-inequality"


def test_diagonal_and_coordinate_round_trip():
    d1 = distance_matrix(["a", "b", "c"], [[0, 1, 2], [1, 0, 1], [2, 1, 0]])
    d2 = distance_matrix(["a", "b", "c"], [[0, 3, 3], [3, 0, 3], [3, 3, 0]])
    c1, c2 = qpm_bridge(d1), qpm_bridge(d2)
    diag = diagonal_category([c1, c2])
    assert check_vcategory(diag) == []
    for i, original in enumerate((c1, c2)):
        back = coordinate_category(diag, i)
        assert back.matrix == original.matrix
        assert check_vcategory(back) == []


def test_single_matrix_diagonal_embeds():
    d1 = distance_matrix(["a", "b"], [[0, 1], [1, 0]])
    c1 = qpm_bridge(d1)
    diag = diagonal_category([c1])
    assert coordinate_category(diag, 0).matrix == c1.matrix


def test_product_category_componentwise():
    d1 = distance_matrix(["a", "b"], [[0, 1], [2, 0]])
    d2 = distance_matrix(["u", "v"], [[0, 3], [4, 0]])
    c1, c2 = qpm_bridge(d1), qpm_bridge(d2)
    prod = product_category([c1, c2])
    assert prod.n == 4
    assert check_vcategory(prod) == []
    i = prod.point_index("(a,u)")
    j = prod.point_index("(b,v)")
    assert prod.entry(i, j) == (ext(1), ext(3))
    # first coordinate recovers the first factor's entries
    first = coordinate_category(prod, 0)
    assert first.entry(i, j) == ext(1)
    assert check_vcategory(first) == []


def test_product_of_one_category_is_unchanged_up_to_wrapping():
    d1 = distance_matrix(["a", "b"], [[0, 1], [2, 0]])
    c1 = qpm_bridge(d1)
    prod = product_category([c1])
    assert [[e[0] for e in row] for row in prod.matrix] == [list(r) for r in c1.matrix]


def test_diagonal_requires_matching_points():
    d1 = distance_matrix(["a", "b"], [[0, 1], [1, 0]])
    d2 = distance_matrix(["a", "c"], [[0, 1], [1, 0]])
    with pytest.raises(StructureError):
        diagonal_category([qpm_bridge(d1), qpm_bridge(d2)])


def test_refutation_distances_are_quasi_metrics():
    d1 = distance_matrix(
        ["x1", "x2", "x3"], [[0, 0, 0], [1, 0, 0], [1, 1, 0]]
    )
    d2 = distance_matrix(
        ["x1", "x2", "x3"], [[0, 1, "1/2"], [2, 0, 0], [2, 2, 0]]
    )
    assert check_quasi_pseudometric(d1) == []
    assert check_quasi_pseudometric(d2) == []
    diag = diagonal_category([qpm_bridge(d1), qpm_bridge(d2)])
    assert check_vcategory(diag) == []


def test_fuzzy_bridge_diagonal_must_be_full_membership():
    fam = fuzzy_family(
        ["a", "b"],
        [[UNIT_DDF, unit_jump(1)], [unit_jump(2), UNIT_DDF]],
        "product",
    )
    c = fuzzy_bridge(fam)
    assert check_vcategory(c) == []
    assert c.entry(0, 0) == UNIT_DDF
    bad = fuzzy_family(
        ["a", "b"],
        [[unit_jump(1), unit_jump(1)], [unit_jump(1), UNIT_DDF]],
        "product",
    )
    with pytest.raises(BridgeError):
        fuzzy_bridge(bad)


def test_fuzzy_triangle_violation_detected():
    # a-b and b-c very close, a-c claims to be far: shifted triangle fails
    fam = fuzzy_family(
        ["a", "b", "c"],
        [
            [UNIT_DDF, unit_jump(F(1, 4)), unit_jump(10)],
            [unit_jump(F(1, 4)), UNIT_DDF, unit_jump(F(1, 4))],
            [unit_jump(10), unit_jump(F(1, 4)), UNIT_DDF],
        ],
        "min",
    )
    bad = check_fuzzy_qpm(fam)
    assert bad and bad[0].axiom == "shifted-triangle"


def test_fuzzy_entry_value_at_infinity_is_sup_of_finite_values():
    f = StepDDF.from_jumps([(1, F(1, 2)), (2, F(3, 4))])
    assert f.value_at_infinity == F(3, 4)
    assert f(INF) == F(3, 4)
