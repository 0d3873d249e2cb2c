"""Distance distribution functions as exact rational step functions.

A distance distribution function maps [0, oo] to [0, 1], is isotone and
left-continuous, and satisfies f(0) = 0 (the empty supremum) and
f(oo) = sup of all finite values.  This module represents the step-shaped
ones exactly: `breakpoints` is a strictly increasing tuple of nonnegative
Fractions and `values[k]` is the value taken on the half-open interval
(breakpoints[k], breakpoints[k+1]]  (the last value extends to oo).
Below the first breakpoint the function is 0.

Storing values on half-open intervals makes left-continuity structural:
no representable function can violate it.  Construction canonicalizes
(leading zeros dropped, equal adjacent values merged), so two step
functions are pointwise equal iff their representations are equal, and
`==` is the right equality test.

The convolution here is the sup-shifted one:

    (f (*) g)(t) = sup { f(r) * g(s) : r + s <= t }

for a left-continuous t-norm `*`.  For step operands the supremum over a
cell (a_k, a_{k+1}] x (b_l, b_{l+1}] is attained arbitrarily close to the
corner, so the value just above a candidate point c is the maximum of
v_k * w_l over corner sums a_k + b_l <= c, i.e. strictly below any t in
the gap above c.  That strict-inequality form is what the sweep below
computes, and the result is automatically a valid step function.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction

from .arith import ExtNonNeg
from .errors import DDFError
from .tnorms import as_unit, resolve_tnorm

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class StepDDF:
    breakpoints: tuple
    values: tuple

    @staticmethod
    def from_jumps(jumps) -> "StepDDF":
        """Build a canonical step function from (breakpoint, value) pairs.

        Pair (b_k, v_k) means: the function takes value v_k on the
        interval just above b_k.  Breakpoints must be strictly increasing
        nonnegative rationals, values nondecreasing rationals in [0, 1].
        """
        bps = []
        vals = []
        last_bp = None
        last_val = _ZERO
        for raw_bp, raw_val in jumps:
            if isinstance(raw_bp, ExtNonNeg):
                if raw_bp.is_infinite:
                    raise DDFError("breakpoints must be finite")
                raw_bp = raw_bp.finite
            if isinstance(raw_bp, float):
                raise DDFError("float breakpoints are not exact")
            bp = Fraction(raw_bp)
            if bp < 0:
                raise DDFError(f"negative breakpoint {bp}")
            val = as_unit(raw_val)
            if last_bp is not None and bp <= last_bp:
                raise DDFError(f"breakpoints not strictly increasing at {bp}")
            if val < last_val:
                raise DDFError(f"values decrease at breakpoint {bp}")
            last_bp = bp
            if val == last_val:
                continue  # merge with the previous (or the implicit 0) run
            bps.append(bp)
            vals.append(val)
            last_val = val
        return StepDDF(tuple(bps), tuple(vals))

    # -- evaluation ---------------------------------------------------------

    def __call__(self, t) -> Fraction:
        """Left-continuous evaluation at t in [0, oo]."""
        if isinstance(t, str):
            t = ExtNonNeg.parse(t)
        if isinstance(t, ExtNonNeg):
            if t.is_infinite:
                return self.value_at_infinity
            t = t.finite
        if isinstance(t, float):
            raise DDFError("float arguments are not exact")
        t = Fraction(t)
        if t < 0:
            raise DDFError(f"argument {t} outside [0, oo]")
        # value on (b_k, b_{k+1}]: the largest k with b_k < t
        k = bisect_left(self.breakpoints, t)
        return self.values[k - 1] if k else _ZERO

    def value_above(self, b) -> Fraction:
        """Value on the interval just above b (the largest k with b_k <= b)."""
        k = bisect_right(self.breakpoints, Fraction(b))
        return self.values[k - 1] if k else _ZERO

    @property
    def value_at_infinity(self) -> Fraction:
        return self.values[-1] if self.values else _ZERO

    # -- pointwise order ----------------------------------------------------

    def leq(self, other: "StepDDF") -> bool:
        """Exact pointwise comparison via the merged breakpoint set."""
        for m in sorted(set(self.breakpoints) | set(other.breakpoints)):
            if self.value_above(m) > other.value_above(m):
                return False
        return True

    def join(self, other: "StepDDF") -> "StepDDF":
        """Pointwise maximum."""
        merged = sorted(set(self.breakpoints) | set(other.breakpoints))
        return StepDDF.from_jumps(
            (m, max(self.value_above(m), other.value_above(m))) for m in merged
        )

    def __str__(self):
        if not self.breakpoints:
            return "ddf{0}"
        inner = ", ".join(f"{b}:{v}" for b, v in zip(self.breakpoints, self.values))
        return "ddf{" + inner + "}"


ZERO_DDF = StepDDF((), ())
UNIT_DDF = StepDDF((_ZERO,), (_ONE,))  # 0 at 0, 1 everywhere above


def unit_jump(alpha) -> StepDDF:
    """The function jumping 0 -> 1 just above alpha."""
    return StepDDF.from_jumps([(Fraction(alpha), _ONE)])


def level_step(level) -> StepDDF:
    """The function jumping 0 -> level just above 0 (constant above 0)."""
    level = as_unit(level)
    if level == 0:
        return ZERO_DDF
    return StepDDF.from_jumps([(_ZERO, level)])


def ddf_eval(f: StepDDF, t) -> Fraction:
    return f(t)


def ddf_leq(f: StepDDF, g: StepDDF) -> bool:
    return f.leq(g)


def ddf_pointwise_sup(fs) -> StepDDF:
    """Pointwise supremum of finitely many step functions; sup([]) = 0."""
    acc = ZERO_DDF
    for f in fs:
        acc = acc.join(f)
    return acc


def ddf_convolve(f: StepDDF, g: StepDDF, tnorm: str) -> StepDDF:
    """Exact sup-shifted convolution of two step functions.

    Candidate breakpoints are the pairwise sums of input breakpoints; the
    value just above candidate c is the running maximum of v_k * w_l over
    corner sums a_k + b_l <= c (strictly below any point of the open gap
    above c, matching left-continuity of both operands).
    """
    _, tn = resolve_tnorm(tnorm)
    if not f.values or not g.values:
        return ZERO_DDF
    items = sorted(
        (a + b, tn(va, wb))
        for a, va in zip(f.breakpoints, f.values)
        for b, wb in zip(g.breakpoints, g.values)
    )
    jumps = []
    best = _ZERO
    i = 0
    while i < len(items):
        c = items[i][0]
        while i < len(items) and items[i][0] == c:
            if items[i][1] > best:
                best = items[i][1]
            i += 1
        jumps.append((c, best))
    return StepDDF.from_jumps(jumps)


def ddf_pointwise_tnorm(f: StepDDF, g: StepDDF, tnorm: str) -> StepDDF:
    """Pointwise t-norm of two step functions: t |-> f(t) * g(t)."""
    _, tn = resolve_tnorm(tnorm)
    merged = sorted(set(f.breakpoints) | set(g.breakpoints))
    return StepDDF.from_jumps(
        (m, tn(f.value_above(m), g.value_above(m))) for m in merged
    )
