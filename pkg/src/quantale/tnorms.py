"""Triangular norms evaluated exactly on rationals in [0, 1]."""

from __future__ import annotations

from fractions import Fraction

from .errors import UnsupportedOperationError

_ZERO = Fraction(0)
_ONE = Fraction(1)


def as_unit(value) -> Fraction:
    """Coerce to an exact rational in [0, 1]."""
    if isinstance(value, float):
        raise TypeError("floats are not exact; use int, Fraction or str")
    f = Fraction(value)
    if not _ZERO <= f <= _ONE:
        raise ValueError(f"{f} outside [0, 1]")
    return f


def minimum(a: Fraction, b: Fraction) -> Fraction:
    return a if a <= b else b


def product(a: Fraction, b: Fraction) -> Fraction:
    return a * b


def lukasiewicz(a: Fraction, b: Fraction) -> Fraction:
    return max(_ZERO, a + b - _ONE)


_TNORMS = {"min": minimum, "product": product, "lukasiewicz": lukasiewicz}
_ALIASES = {
    "min": "min",
    "minimum": "min",
    "prod": "product",
    "product": "product",
    "luk": "lukasiewicz",
    "lukasiewicz": "lukasiewicz",
}


def resolve_tnorm(name: str):
    """Return (canonical name, binary function) for a t-norm name or alias."""
    canonical = _ALIASES.get(name.strip().lower())
    if canonical is None:
        raise UnsupportedOperationError(f"unknown t-norm {name!r}")
    return canonical, _TNORMS[canonical]


def tnorm_eval(name: str, a, b) -> Fraction:
    """Evaluate the named t-norm exactly on two rationals in [0, 1]."""
    _, fn = resolve_tnorm(name)
    return fn(as_unit(a), as_unit(b))
