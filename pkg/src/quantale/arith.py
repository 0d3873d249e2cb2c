"""Exact arithmetic on [0, oo]: nonnegative rationals plus a distinguished infinity.

Floats are rejected everywhere so that every comparison and sum is exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering

_INF_TOKENS = {"inf", "+inf", "infinity", "oo"}


@total_ordering
class ExtNonNeg:
    """A nonnegative rational or infinity.

    Order is the usual numeric one (infinity greatest); addition saturates
    at infinity.  `finite` holds the Fraction, or None for infinity.
    """

    __slots__ = ("finite",)

    def __init__(self, value=0, *, infinite=False):
        if infinite:
            self.finite = None
            return
        if isinstance(value, float):
            raise TypeError("floats are not exact; use int, Fraction or str")
        f = Fraction(value)
        if f < 0:
            raise ValueError(f"{f} is negative, not in [0, oo]")
        self.finite = f

    @property
    def is_infinite(self) -> bool:
        return self.finite is None

    @classmethod
    def parse(cls, text: str) -> "ExtNonNeg":
        t = text.strip().lower()
        if t in _INF_TOKENS:
            return INF
        return cls(Fraction(t))

    def __add__(self, other):
        other = ext(other)
        if self.finite is None or other.finite is None:
            return INF
        return ExtNonNeg(self.finite + other.finite)

    __radd__ = __add__

    def __mul__(self, other):
        other = ext(other)
        if self.finite is None or other.finite is None:
            if self == 0 or other == 0:
                raise ValueError("0 * infinity is undefined")
            return INF
        return ExtNonNeg(self.finite * other.finite)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ExtNonNeg):
            return self.finite == other.finite
        if isinstance(other, (int, Fraction)):
            return self.finite == other
        return NotImplemented

    def __lt__(self, other):
        if isinstance(other, (int, Fraction)):
            other = ExtNonNeg(other)
        if not isinstance(other, ExtNonNeg):
            return NotImplemented
        if self.finite is None:
            return False
        if other.finite is None:
            return True
        return self.finite < other.finite

    def __hash__(self):
        return hash(("ExtNonNeg", self.finite))

    def __str__(self):
        return "inf" if self.finite is None else str(self.finite)

    def __repr__(self):
        return f"ext({str(self)!r})"


def ext(value) -> ExtNonNeg:
    """Coerce int, Fraction, str or ExtNonNeg to ExtNonNeg."""
    if isinstance(value, ExtNonNeg):
        return value
    if isinstance(value, str):
        return ExtNonNeg.parse(value)
    return ExtNonNeg(value)


INF = ExtNonNeg(infinite=True)
EXT_ZERO = ExtNonNeg(0)
EXT_ONE = ExtNonNeg(1)
