import random
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from oracles import mesh_oracle_value, mesh_points
from quantale.continuous import _sample_ddf
from quantale.ddf import (
    UNIT_DDF,
    ZERO_DDF,
    StepDDF,
    ddf_convolve,
    ddf_eval,
    ddf_leq,
    ddf_pointwise_sup,
    ddf_pointwise_tnorm,
    level_step,
    unit_jump,
)
from quantale.errors import DDFError

F = Fraction


def test_unit_ddf_evaluation():
    assert ddf_eval(UNIT_DDF, 0) == 0
    assert ddf_eval(UNIT_DDF, F(1, 100)) == 1
    assert ddf_eval(UNIT_DDF, "inf") == 1 or UNIT_DDF.value_at_infinity == 1


def test_left_continuity_at_a_jump():
    f = StepDDF.from_jumps([(2, F(3, 4))])
    assert f(2) == 0
    assert f(F(201, 100)) == F(3, 4)
    assert f.value_at_infinity == F(3, 4)


def test_canonicalization_merges_and_drops_zeros():
    f = StepDDF.from_jumps([(0, 0), (1, F(1, 2)), (2, F(1, 2)), (3, 1)])
    assert f.breakpoints == (F(1), F(3))
    assert f.values == (F(1, 2), F(1))


def test_from_jumps_rejects_bad_data():
    with pytest.raises(DDFError):
        StepDDF.from_jumps([(1, F(1, 2)), (1, F(3, 4))])
    with pytest.raises(DDFError):
        StepDDF.from_jumps([(1, F(3, 4)), (2, F(1, 2))])
    with pytest.raises(DDFError):
        StepDDF.from_jumps([(-1, F(1, 2))])
    with pytest.raises(DDFError):
        StepDDF.from_jumps([(0.5, F(1, 2))])


def test_unit_jump_sum_rule():
    # one-jump functions convolve by adding their jump points
    for tnorm in ("min", "product", "lukasiewicz"):
        got = ddf_convolve(unit_jump(F(1, 2)), unit_jump(F(1, 3)), tnorm)
        assert got == unit_jump(F(5, 6))


def test_unit_law_is_syntactic():
    rng = random.Random(3)
    for _ in range(30):
        f = _sample_ddf(rng)
        for tnorm in ("min", "product", "lukasiewicz"):
            assert ddf_convolve(f, UNIT_DDF, tnorm) == f


def test_half_jump_product_example():
    f = StepDDF.from_jumps([(1, F(1, 2))])
    got = ddf_convolve(f, f, "product")
    assert got == StepDDF.from_jumps([(2, F(1, 4))])
    assert got(2) == 0
    assert got(F(5, 2)) == F(1, 4)


def test_zero_annihilates():
    f = _sample_ddf(random.Random(5))
    assert ddf_convolve(f, ZERO_DDF, "min") == ZERO_DDF


def test_leq_reflexive_and_unit_is_top():
    rng = random.Random(7)
    for _ in range(40):
        f = _sample_ddf(rng)
        assert ddf_leq(f, f)
        assert ddf_leq(f, UNIT_DDF)


def test_pointwise_sup_matches_pointwise_max():
    rng = random.Random(9)
    for _ in range(25):
        f, g = _sample_ddf(rng), _sample_ddf(rng)
        s = ddf_pointwise_sup([f, g])
        mesh = sorted(set(f.breakpoints) | set(g.breakpoints) | {F(0), F(10)})
        for m in mesh:
            probe = m + F(1, 7)
            assert s(probe) == max(f(probe), g(probe))
    assert ddf_pointwise_sup([]) == ZERO_DDF


def test_convolve_agrees_with_mesh_oracle():
    rng = random.Random(11)
    for _ in range(25):
        f, g = _sample_ddf(rng), _sample_ddf(rng)
        if not f.breakpoints or not g.breakpoints:
            continue
        mesh, tpoints = mesh_points(f, g)
        for tnorm in ("min", "product", "lukasiewicz"):
            h = ddf_convolve(f, g, tnorm)
            for t in tpoints:
                assert h(t) == mesh_oracle_value(f, g, tnorm, t, mesh)
            assert h.value_at_infinity == h(tpoints[-1])


def test_convolution_monotone_in_both_arguments():
    rng = random.Random(13)
    for _ in range(25):
        f, g = _sample_ddf(rng), _sample_ddf(rng)
        fp = f.join(_sample_ddf(rng))
        gp = g.join(_sample_ddf(rng))
        for tnorm in ("min", "product", "lukasiewicz"):
            assert ddf_leq(ddf_convolve(f, g, tnorm), ddf_convolve(fp, gp, tnorm))


_vals = st.sampled_from([F(0), F(1, 4), F(1, 3), F(1, 2), F(2, 3), F(1)])
_bps = st.sampled_from([F(0), F(1, 2), F(1), F(3, 2), F(2), F(3)])


@st.composite
def ddfs(draw):
    k = draw(st.integers(min_value=0, max_value=3))
    bps = sorted(draw(st.sets(_bps, min_size=k, max_size=k)))
    vals = sorted(draw(st.sets(_vals.filter(lambda v: v > 0), min_size=k, max_size=k)))
    return StepDDF.from_jumps(zip(bps, vals))


@given(ddfs(), ddfs(), ddfs(), st.sampled_from(["min", "product", "lukasiewicz"]))
def test_convolution_laws(f, g, h, tnorm):
    assert ddf_convolve(f, g, tnorm) == ddf_convolve(g, f, tnorm)
    assert ddf_convolve(ddf_convolve(f, g, tnorm), h, tnorm) == ddf_convolve(
        f, ddf_convolve(g, h, tnorm), tnorm
    )
    lhs = ddf_convolve(f, g.join(h), tnorm)
    rhs = ddf_convolve(f, g, tnorm).join(ddf_convolve(f, h, tnorm))
    assert lhs == rhs


@given(ddfs(), ddfs(), st.sampled_from(["min", "product", "lukasiewicz"]))
def test_pointwise_tnorm_is_pointwise(f, g, tnorm):
    from quantale.tnorms import resolve_tnorm

    _, tn = resolve_tnorm(tnorm)
    p = ddf_pointwise_tnorm(f, g, tnorm)
    for m in set(f.breakpoints) | set(g.breakpoints) | {F(0)}:
        probe = m + F(1, 9)
        assert p(probe) == tn(f(probe), g(probe))
