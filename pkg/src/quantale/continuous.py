"""Quantales whose elements are values rather than table indices.

Covers the extended-nonnegative-reals quantale with reversed order and
addition (whose enriched categories are extended quasi-pseudometric
spaces), the unit interval under a left-continuous t-norm, the distance
distribution functions under sup-shifted convolution or under the
pointwise t-norm, and finite componentwise products of any of these.

These carriers are infinite, so checks against them are sample-based.
Each class exposes, besides the quantale operations themselves:

  * ``sample(rng)``        -- a random element, exact rationals only;
  * ``crossing_values``    -- scalars used to build structured "crossed"
                              probe pairs on product quantales;
  * ``probe_grid``         -- a small fixed grid of notable elements;
  * ``fiber_grid``         -- elements probed first in unit-fiber searches.

Probe order is deliberately fixed so that failure witnesses are
reproducible run to run.
"""

from __future__ import annotations

import itertools
from fractions import Fraction

from .arith import EXT_ZERO, INF, ExtNonNeg, ext
from .ddf import (
    UNIT_DDF,
    ZERO_DDF,
    StepDDF,
    ddf_convolve,
    ddf_pointwise_tnorm,
    level_step,
)
from .errors import SizeBudgetError
from .tnorms import resolve_tnorm

_MAX_FINITE_PRODUCT = 100_000


class _ProbeDefaults:
    def equal(self, u, v) -> bool:
        return u == v

    def probe_elements(self):
        return tuple(dict.fromkeys(tuple(self.probe_grid) + tuple(self.crossing_values)))

    def probe_pairs(self):
        pts = self.probe_elements()
        return [(u, v) for u in pts for v in pts]

    def fiber_elements(self):
        return tuple(self.fiber_grid)


class LawvereQuantale(_ProbeDefaults):
    """([0, oo], reversed numeric order, +).

    The quantale order is opposite to the numeric one: u is below v
    exactly when v <= u numerically, so 0 is the top (and the unit) and
    infinity is the bottom; the quantale supremum is the numeric infimum.
    """

    name = "lawvere"
    elements = None

    def __init__(self):
        self.unit = EXT_ZERO
        self.bottom = INF
        self.crossing_values = (ext(5), ext(1), ext(2), ext(Fraction(1, 2)))
        self.probe_grid = (ext(0), ext(1), INF)
        self.fiber_grid = (ext(0), ext(1), ext(2), INF)

    def leq(self, u: ExtNonNeg, v: ExtNonNeg) -> bool:
        return v <= u

    def tensor(self, u: ExtNonNeg, v: ExtNonNeg) -> ExtNonNeg:
        return u + v

    def sup(self, subset):
        items = list(subset)
        if not items:
            return INF
        return min(items)

    def sample(self, rng) -> ExtNonNeg:
        if rng.random() < 0.125:
            return INF
        den = rng.choice((1, 1, 2, 3, 4))
        return ext(Fraction(rng.randint(0, 6 * den), den))

    def format_element(self, u) -> str:
        return str(u)

    def __repr__(self):
        return "<LawvereQuantale>"


class UnitIntervalQuantale(_ProbeDefaults):
    """([0, 1], usual order, left-continuous t-norm)."""

    elements = None

    def __init__(self, tnorm: str):
        self.tnorm_name, self._tn = resolve_tnorm(tnorm)
        self.name = f"unit:{self.tnorm_name}"
        self.unit = Fraction(1)
        self.bottom = Fraction(0)
        self.crossing_values = (Fraction(1, 2), Fraction(1, 4), Fraction(3, 4))
        self.probe_grid = (Fraction(1), Fraction(1, 2), Fraction(0))
        self.fiber_grid = (Fraction(1), Fraction(1, 2), Fraction(0))

    def leq(self, u, v) -> bool:
        return u <= v

    def tensor(self, u, v):
        return self._tn(u, v)

    def sup(self, subset):
        items = list(subset)
        if not items:
            return Fraction(0)
        return max(items)

    def sample(self, rng) -> Fraction:
        den = rng.randint(1, 8)
        return Fraction(rng.randint(0, den), den)

    def format_element(self, u) -> str:
        return str(u)

    def __repr__(self):
        return f"<UnitIntervalQuantale {self.tnorm_name}>"


def _sample_ddf(rng) -> StepDDF:
    k = rng.randint(0, 3)
    if k == 0:
        return ZERO_DDF
    bp_pool = sorted(
        {Fraction(n, d) for d in (1, 2, 3, 4) for n in range(0, 4 * d + 1)}
    )
    val_pool = sorted(
        {Fraction(n, d) for d in (1, 2, 3, 4, 6) for n in range(1, d + 1)}
    )
    bps = sorted(rng.sample(bp_pool, k))
    vals = sorted(rng.sample(val_pool, k))
    return StepDDF.from_jumps(zip(bps, vals))


class DDFQuantale(_ProbeDefaults):
    """Distance distribution functions under sup-shifted convolution."""

    elements = None

    def __init__(self, tnorm: str):
        self.tnorm_name, _ = resolve_tnorm(tnorm)
        self.name = f"ddf:{self.tnorm_name}"
        self.unit = UNIT_DDF
        self.bottom = ZERO_DDF
        self.crossing_values = (
            level_step(Fraction(1, 2)),
            level_step(Fraction(1, 4)),
            level_step(Fraction(3, 4)),
        )
        self.probe_grid = (UNIT_DDF, level_step(Fraction(1, 2)), ZERO_DDF)
        self.fiber_grid = (UNIT_DDF, level_step(Fraction(1, 2)), ZERO_DDF)

    def leq(self, u: StepDDF, v: StepDDF) -> bool:
        return u.leq(v)

    def tensor(self, u: StepDDF, v: StepDDF) -> StepDDF:
        return ddf_convolve(u, v, self.tnorm_name)

    def sup(self, subset):
        acc = ZERO_DDF
        for f in subset:
            acc = acc.join(f)
        return acc

    def sample(self, rng) -> StepDDF:
        return _sample_ddf(rng)

    def format_element(self, u) -> str:
        return str(u)

    def __repr__(self):
        return f"<DDFQuantale {self.tnorm_name}>"


class PointwiseDDFQuantale(DDFQuantale):
    """Distance distribution functions under the pointwise t-norm.

    The tensor is (f * g)(t) = f(t) * g(t); the unit is the same
    0-at-0 / 1-above-0 step as in the convolution quantale, and it is
    again the top element.
    """

    def __init__(self, tnorm: str):
        super().__init__(tnorm)
        self.name = f"ddf-pw:{self.tnorm_name}"

    def tensor(self, u: StepDDF, v: StepDDF) -> StepDDF:
        return ddf_pointwise_tnorm(u, v, self.tnorm_name)

    def __repr__(self):
        return f"<PointwiseDDFQuantale {self.tnorm_name}>"


class ProductQuantale(_ProbeDefaults):
    """Finite componentwise product; elements are tuples of factor elements."""

    def __init__(self, factors, *, name=None):
        self.factors = tuple(factors)
        if not self.factors:
            raise SizeBudgetError("product of an empty family is not supported")
        self.name = name or " x ".join(f.name for f in self.factors)
        self.unit = tuple(f.unit for f in self.factors)
        self.bottom = tuple(getattr(f, "bottom") for f in self.factors)

    @property
    def arity(self) -> int:
        return len(self.factors)

    @property
    def elements(self):
        lists = []
        for f in self.factors:
            if f.elements is None:
                return None
            lists.append(list(f.elements))
        size = 1
        for lst in lists:
            size *= len(lst)
        if size > _MAX_FINITE_PRODUCT:
            raise SizeBudgetError(f"{size} product elements exceed the enumeration cap")
        return list(itertools.product(*lists))

    def leq(self, u, v) -> bool:
        return all(f.leq(a, b) for f, a, b in zip(self.factors, u, v))

    def tensor(self, u, v):
        return tuple(f.tensor(a, b) for f, a, b in zip(self.factors, u, v))

    def equal(self, u, v) -> bool:
        return all(f.equal(a, b) for f, a, b in zip(self.factors, u, v))

    def sup(self, subset):
        items = list(subset)
        return tuple(
            f.sup([item[i] for item in items]) for i, f in enumerate(self.factors)
        )

    def sample(self, rng):
        return tuple(f.sample(rng) for f in self.factors)

    def format_element(self, u) -> str:
        return "(" + ", ".join(f.format_element(a) for f, a in zip(self.factors, u)) + ")"

    def probe_pairs(self):
        """Structured tensor-probe pairs, in a fixed order.

        First "crossed" pairs: for each crossing scalar c and position i,
        the pair (unit at i, c elsewhere) vs (c at i, unit elsewhere).
        These catch laxity failures that need incomparable arguments.
        Then all pairs over the small probe grid, lexicographically.
        """
        pairs = []
        depth = min(len(f.crossing_values) for f in self.factors)
        for j in range(depth):
            for i in range(self.arity):
                x = tuple(
                    f.unit if k == i else f.crossing_values[j]
                    for k, f in enumerate(self.factors)
                )
                y = tuple(
                    f.crossing_values[j] if k == i else f.unit
                    for k, f in enumerate(self.factors)
                )
                pairs.append((x, y))
        grids = [list(f.probe_grid) for f in self.factors]
        tuples = list(itertools.product(*grids))
        pairs.extend(itertools.product(tuples, tuples))
        return pairs

    def probe_elements(self):
        grids = [list(dict.fromkeys(tuple(f.probe_grid) + tuple(f.crossing_values))) for f in self.factors]
        return tuple(itertools.product(*grids))

    def fiber_elements(self):
        grids = [list(f.fiber_grid) for f in self.factors]
        out = list(itertools.product(*grids))
        return tuple(out[:256])

    def __repr__(self):
        return f"<ProductQuantale {self.name}>"


LAWVERE = LawvereQuantale()


def lawvere_power(arity: int) -> ProductQuantale:
    return ProductQuantale([LAWVERE] * arity)
