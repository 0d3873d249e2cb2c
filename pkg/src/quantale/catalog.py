"""Built-in quantales addressable by name.

Names understood by `resolve`:

    two                  -- the two-element quantale {0, 1} with min
    chain:N              -- an N-element chain with the minimum tensor
    three-drastic        -- 3-chain bot < x < top with the drastic tensor
                            (u * v = u ^ v when the top is involved,
                            bottom otherwise)
    lawvere              -- ([0, oo], reversed order, +), infinite
    lawvere-trunc:N      -- its finite quotient {0, 1, .., N, inf} with
                            addition capped into inf  (alias lawvere:N)
    grid:T:N             -- {0, 1/N, .., 1} with t-norm T in {min, luk}
    unit:T               -- [0, 1] with t-norm T, infinite
    ddf:T                -- distance distribution functions under
                            sup-shifted convolution with t-norm T
    ddf-pw:T             -- same carrier under the pointwise t-norm

Products use `x`: `AxB` is the product of A and B, and an integer part
repeats the preceding quantale, so `lawvere:2x2` is the square of the
2-truncation.  Finite factors produce an explicit table product; any
infinite factor produces a componentwise value product.
"""

from __future__ import annotations

import functools
from fractions import Fraction

from .arith import INF, ext
from .continuous import (
    LAWVERE,
    DDFQuantale,
    PointwiseDDFQuantale,
    ProductQuantale,
    UnitIntervalQuantale,
)
from .core import FiniteQuantale, product_quantale
from .errors import ParseError, UnsupportedOperationError
from .tnorms import resolve_tnorm


def two() -> FiniteQuantale:
    """The two-element quantale {0, 1}; every t-norm restricts to min here."""
    return chain(2, name="two")


def chain(n: int, *, name=None) -> FiniteQuantale:
    """An n-element chain 0 < 1 < ... < n-1 with tensor = min, unit = top."""
    if n < 1:
        raise ParseError("chain needs at least one element")
    labels = [str(i) for i in range(n)]
    leq = [[i <= j for j in range(n)] for i in range(n)]
    tensor = [[min(i, j) for j in range(n)] for i in range(n)]
    q = FiniteQuantale(labels, leq, tensor, n - 1, name=name or f"chain:{n}")
    return q


def three_drastic() -> FiniteQuantale:
    """The 3-chain bot < x < top with the drastic tensor.

    u * v equals u ^ v when u or v is the top and bottom otherwise, which
    makes x * x = bot.  Small enough to enumerate everything over, yet it
    separates triangle-triplet preservation from its asymmetric variant.
    """
    labels = ["bot", "x", "top"]
    leq = [[True, True, True], [False, True, True], [False, False, True]]
    tensor = [[0, 0, 0], [0, 0, 1], [0, 1, 2]]
    return FiniteQuantale(labels, leq, tensor, 2, name="three-drastic")


def truncated_lawvere(n: int) -> FiniteQuantale:
    """Finite quotient of the extended-reals quantale: {0, .., n, inf}.

    The order is reversed (0 on top, inf at the bottom) and addition is
    capped: a + b collapses to inf as soon as it exceeds n.
    """
    if n < 1:
        raise ParseError("truncation height must be at least 1")
    values = [ext(i) for i in range(n + 1)] + [INF]
    labels = [str(i) for i in range(n + 1)] + ["inf"]
    size = len(values)
    inf_idx = size - 1

    def add(i, j):
        if i == inf_idx or j == inf_idx:
            return inf_idx
        s = i + j
        return s if s <= n else inf_idx

    leq = [[values[j] <= values[i] for j in range(size)] for i in range(size)]
    tensor = [[add(i, j) for j in range(size)] for i in range(size)]
    q = FiniteQuantale(labels, leq, tensor, 0, name=f"lawvere-trunc:{n}")
    q.element_values = tuple(values)

    def project(value):
        value = ext(value)
        if value.is_infinite or value > n:
            return inf_idx
        if value.finite.denominator != 1:
            raise UnsupportedOperationError(
                f"value {value} is not representable in {q.name}"
            )
        return int(value.finite)

    q.value_projection = project
    return q


def grid_unit_quantale(tnorm: str, n: int) -> FiniteQuantale:
    """The grid {0, 1/n, .., 1} under a grid-closed t-norm.

    Only min and Lukasiewicz are closed on the grid; asking for the
    product t-norm is rejected rather than silently rounded.
    """
    canonical, tn = resolve_tnorm(tnorm)
    if canonical not in ("min", "lukasiewicz"):
        raise UnsupportedOperationError(
            f"t-norm {canonical!r} is not closed on a finite grid"
        )
    if n < 1:
        raise ParseError("grid resolution must be at least 1")
    values = [Fraction(k, n) for k in range(n + 1)]
    pos = {v: i for i, v in enumerate(values)}
    labels = [str(v) for v in values]
    leq = [[a <= b for b in values] for a in values]
    tensor_rows = []
    for a in values:
        row = []
        for b in values:
            c = tn(a, b)
            if c not in pos:
                raise UnsupportedOperationError(
                    f"{canonical}({a},{b}) = {c} leaves the grid"
                )
            row.append(pos[c])
        tensor_rows.append(row)
    short = {"lukasiewicz": "luk", "min": "min"}[canonical]
    q = FiniteQuantale(labels, leq, tensor_rows, n, name=f"grid:{short}:{n}")
    q.element_values = tuple(values)

    def project(value):
        if value in pos:
            return pos[value]
        raise UnsupportedOperationError(f"value {value} is not on the grid {q.name}")

    q.value_projection = project
    return q


def _resolve_atom(token: str):
    t = token.strip()
    if not t:
        raise ParseError("empty quantale name")
    if t == "two":
        return two()
    if t == "three-drastic":
        return three_drastic()
    if t == "lawvere":
        return LAWVERE
    parts = t.split(":")
    head = parts[0]
    try:
        if head == "chain" and len(parts) == 2:
            return chain(int(parts[1]))
        if head in ("lawvere-trunc", "lawvere") and len(parts) == 2:
            return truncated_lawvere(int(parts[1]))
        if head == "grid" and len(parts) == 3:
            return grid_unit_quantale(parts[1], int(parts[2]))
        if head == "unit" and len(parts) == 2:
            return UnitIntervalQuantale(parts[1])
        if head == "ddf" and len(parts) == 2:
            return DDFQuantale(parts[1])
        if head == "ddf-pw" and len(parts) == 2:
            return PointwiseDDFQuantale(parts[1])
    except ValueError as e:
        raise ParseError(f"bad quantale name {token!r}: {e}") from None
    raise ParseError(f"unknown quantale name {token!r}")


@functools.lru_cache(maxsize=None)
def resolve(name: str):
    """Resolve a quantale name, including x-products and integer powers."""
    factors = []
    for part in name.strip().split("x"):
        part = part.strip()
        if part.isdigit() and factors:
            factors.extend([factors[-1]] * (int(part) - 1))
        else:
            factors.append(_resolve_atom(part))
    if len(factors) == 1:
        return factors[0]
    if all(isinstance(f, FiniteQuantale) for f in factors):
        return product_quantale(factors, name=name)
    return ProductQuantale(factors, name=name)


BUILTIN_EXAMPLES = (
    "two",
    "chain:3",
    "three-drastic",
    "lawvere-trunc:1",
    "lawvere-trunc:2",
    "grid:min:2",
    "grid:luk:2",
    "grid:luk:4",
)
