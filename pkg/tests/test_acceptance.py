"""Acceptance suite: one test per release criterion, each printing a
PASS line (run with -s or -v to see them).  Every tolerance here is
exact equality; the only numeric bounds are wall-clock budgets."""

import itertools
import random
import time
from fractions import Fraction

from oracles import mesh_oracle_value, mesh_points
from quantale.arith import EXT_ZERO, ext
from quantale.catalog import (
    chain,
    grid_unit_quantale,
    resolve,
    three_drastic,
    truncated_lawvere,
    two,
)
from quantale.continuous import LAWVERE, _sample_ddf, lawvere_power
from quantale.core import validate_finite_quantale
from quantale.ddf import UNIT_DDF, ddf_convolve, level_step, unit_jump
from quantale.morphisms import (
    FAILS,
    HOLDS_EXHAUSTIVE,
    HOLDS_ON_SAMPLES,
    REPORT_KEYS,
    classify,
    extend_aggregator,
    gdelta_expressibility,
    is_lax_morphism,
    lift_F_delta,
    qpm_aggregator_verdict,
    rule_morphism,
    table_morphism,
    threshold_half_morphism,
    verify_equivalences,
)
from quantale.vcat import (
    aggregate_category,
    category_to_distance,
    check_quasi_pseudometric,
    check_vcategory,
    diagonal_category,
    distance_matrix,
    is_separated,
    make_category,
    qpm_bridge,
)

F = Fraction

ROSTER = (
    ("two", "two"),
    ("chain:3", "two"),
    ("two", "chain:3"),
    ("three-drastic", "three-drastic"),
    ("lawvere-trunc:2", "lawvere-trunc:2"),
    ("grid:luk:2", "grid:luk:2"),
)


def _ok(n, label):
    print(f"ACCEPTANCE {n} ({label}): PASS")


def test_criterion_1_theorem_equivalences_across_roster():
    t0 = time.perf_counter()
    for left, right in ROSTER:
        summary = verify_equivalences(resolve(left), resolve(right), nmax=3)
        assert summary.agreement, (left, right, summary.disagreements)
        if left == right == "three-drastic":
            assert summary.n_functions == 27
    elapsed = time.perf_counter() - t0
    assert elapsed < 10.0, f"roster took {elapsed:.1f}s"
    _ok(1, "preserving == lax == asym-triplets+unit, zero disagreements")


def test_criterion_2_three_element_counterexample():
    q = three_drastic()
    swap = table_morphism(q, q, [1, 0, 2], name="swap")
    report = classify(swap)
    assert report["symmetrically_preserving"].status == HOLDS_EXHAUSTIVE
    pres = report["preserving"]
    assert pres.status == FAILS
    bot, x, top = q.index("bot"), q.index("x"), q.index("top")
    assert pres.witness.elements == (bot, top, x)
    _ok(2, "symmetrically preserving, not preserving, witness (bot,top,x)")


def test_criterion_3_sets_vs_products_separation():
    V, W = resolve("lawvere:2x2"), resolve("lawvere:2")
    flag = rule_morphism("nonzero:1", V, W)
    report = classify(flag)
    assert report["preserving"].status == HOLDS_EXHAUSTIVE
    sep = report["separately_preserving"]
    assert sep.status == FAILS
    assert V.format_element(sep.witness.elements[0]) == "(0,1)"

    pair_q = lawvere_power(2)
    cat = make_category(
        pair_q,
        ["y1", "y2"],
        [
            [pair_q.unit, (EXT_ZERO, EXT_ZERO)],
            [(EXT_ZERO, ext(1)), pair_q.unit],
        ],
    )
    assert check_vcategory(cat) == [] and is_separated(cat)
    out, violations = aggregate_category(
        rule_morphism("nonzero:1", pair_q, LAWVERE), cat
    )
    assert violations == []
    assert out.entry(0, 1) == EXT_ZERO and out.entry(1, 0) == EXT_ZERO
    assert not is_separated(out)
    _ok(3, "preserving but unit fiber (0,1); aggregated pair not separated")


def test_criterion_4_refutation_with_corrected_arithmetic():
    points = ["x1", "x2", "x3"]
    d1 = distance_matrix(points, [[0, 0, 0], [1, 0, 0], [1, 1, 0]])
    d2 = distance_matrix(points, [[0, 1, "1/2"], [2, 0, 0], [2, 2, 0]])
    assert check_quasi_pseudometric(d1) == []
    assert check_quasi_pseudometric(d2) == []
    diag = diagonal_category([qpm_bridge(d1), qpm_bridge(d2)])
    gate = rule_morphism("gatestep", diag.quantale, LAWVERE)
    out, _ = aggregate_category(gate, diag)
    d_out = category_to_distance(out)
    assert d_out.entries[0][2] == 2
    assert d_out.entries[0][1] == 1
    assert d_out.entries[1][2] == 0
    # the sum on the right is 1 + 0 = 1, and 2 > 1 exactly
    assert d_out.entries[0][1] + d_out.entries[1][2] == 1
    violations = check_quasi_pseudometric(d_out)
    triangle = [v for v in violations if v.axiom == "triangle-inequality"]
    assert triangle and triangle[0].points == ("x1", "x2", "x3")
    assert triangle[0].lhs == 2 and triangle[0].rhs == 1
    _ok(4, "aggregated distance breaks the triangle: 2 > 1 exactly")


def test_criterion_5_ddf_algebra_and_mesh_oracle():
    t0 = time.perf_counter()
    for tnorm in ("min", "product", "lukasiewicz"):
        rng = random.Random(0)
        for _ in range(200):
            f, g, h = _sample_ddf(rng), _sample_ddf(rng), _sample_ddf(rng)
            fg = ddf_convolve(f, g, tnorm)
            assert ddf_convolve(f, UNIT_DDF, tnorm) == f
            assert fg == ddf_convolve(g, f, tnorm)
            assert ddf_convolve(fg, h, tnorm) == ddf_convolve(
                f, ddf_convolve(g, h, tnorm), tnorm
            )
            assert ddf_convolve(f, g.join(h), tnorm) == ddf_convolve(
                f, g, tnorm
            ).join(ddf_convolve(f, h, tnorm))
            if f.breakpoints and g.breakpoints:
                mesh, tpoints = mesh_points(f, g)
                for t in tpoints:
                    assert fg(t) == mesh_oracle_value(f, g, tnorm, t, mesh)
    elapsed = time.perf_counter() - t0
    assert elapsed < 30.0, f"ddf algebra took {elapsed:.1f}s"
    _ok(5, "600 random triples: exact laws and mesh-oracle agreement")


def test_criterion_6_pointwise_lift_verdicts():
    lifted_min = lift_F_delta("min", 2, "min")
    v = is_lax_morphism(lifted_min, seed=0, samples=500)
    assert v.status == HOLDS_ON_SAMPLES and v.witness is None

    lifted_prod = lift_F_delta("prod", 2, "min")
    v = is_lax_morphism(lifted_prod, seed=0, samples=500)
    assert v.status == FAILS
    u, w = v.witness.elements
    assert u == (level_step(1), level_step(F(1, 2)))
    assert w == (level_step(F(1, 2)), level_step(1))
    assert v.witness.lhs == level_step(F(1, 2))
    assert v.witness.rhs == level_step(F(1, 4))
    _ok(6, "lifted min lax on 500 samples; lifted product fails, 1/2 not below 1/4")


def test_criterion_7_aggregators_over_truncations():
    V, W = resolve("lawvere:5x2"), resolve("lawvere:5")
    for rule in ("sum", "max"):
        report = classify(rule_morphism(rule, V, W))
        assert report["preserving"].status == HOLDS_EXHAUSTIVE, rule
        assert report["separately_preserving"].status == HOLDS_EXHAUSTIVE, rule

    rep = qpm_aggregator_verdict("min", 2, seed=0, samples=500)
    sub = rep["subadditive"]
    assert sub.status == FAILS
    assert sub.witness.elements == ((EXT_ZERO, ext(5)), (ext(5), EXT_ZERO))

    for rule in ("sum", "max", "min"):
        plain = classify(rule_morphism(rule, V, W))
        extended = classify(rule_morphism(f"ext:{rule}", V, W))
        for key in REPORT_KEYS:
            assert plain[key].status == extended[key].status, (rule, key)
    _ok(7, "sum/max preserving+separately; min witness ((0,5),(5,0)); extension stable")


def test_criterion_8_threshold_rule_not_pointwise():
    rule = threshold_half_morphism()
    lax = is_lax_morphism(rule, seed=0, samples=500)
    assert lax.status == HOLDS_ON_SAMPLES

    verdict = gdelta_expressibility(rule, seed=0, samples=500)
    assert verdict.status == FAILS
    (f1, t1), (f2, t2) = verdict.witness.elements
    assert (f1, t1) == (unit_jump(F(1, 2)), F(1, 3))
    assert (f2, t2) == (unit_jump(F(1, 3)), F(1, 3))
    assert {verdict.witness.lhs, verdict.witness.rhs} == {F(0), F(1)}
    _ok(8, "threshold rule lax on samples yet forces two values for G(0)")


def test_criterion_9_builtin_validation_and_mutation_sweep():
    t0 = time.perf_counter()
    builders = [two, lambda: chain(3), three_drastic]
    builders += [lambda n=n: truncated_lawvere(n) for n in range(1, 7)]
    builders += [lambda n=n: grid_unit_quantale("min", n) for n in range(1, 7)]
    builders += [lambda n=n: grid_unit_quantale("luk", n) for n in range(1, 7)]
    for make in builders:
        q = make()
        assert validate_finite_quantale(q.labels, q._leq, q._tensor, q.unit).passed

    q = three_drastic()
    mutants = 0
    for i, j in itertools.product(range(3), repeat=2):
        for v in range(3):
            if v == q._tensor[i][j]:
                continue
            mutants += 1
            tensor = [list(r) for r in q._tensor]
            tensor[i][j] = v
            report = validate_finite_quantale(q.labels, q._leq, tensor, q.unit)
            if not report.passed:
                assert report.violations and all(
                    viol.axiom for viol in report.violations
                )
    assert mutants == 18
    elapsed = time.perf_counter() - t0
    assert elapsed < 5.0, f"validation sweep took {elapsed:.1f}s"
    _ok(9, "all builtins validate; 18-mutant sweep witnessed in time")
