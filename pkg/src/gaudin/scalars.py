"""Scalar domains and their JSON forms.

Every coefficient in the library lives in exactly one of two domains:
exact rationals (``fractions.Fraction``, ints count as exact) or
multiprecision complex floats (``mpmath.mpf``/``mpc`` at a caller-chosen
binary precision).  Machine floats are never used as carriers.

Exact scalars serialize as strings like ``"3/4"`` or ``"-2"``; float
scalars as ``{"re": "...", "im": "..."}`` decimal strings.
"""

from __future__ import annotations

from fractions import Fraction

import mpmath


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


def as_fraction(x) -> Fraction:
    """Coerce an int, Fraction or ``"p/q"`` string to a Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"not an exact scalar: {x!r}")


def to_mpc(x) -> mpmath.mpc:
    """Convert to mpc at the current working precision.

    Fractions convert via an exact integer quotient so no double
    rounding occurs.
    """
    if isinstance(x, Fraction):
        return mpmath.mpc(mpmath.mpf(x.numerator) / x.denominator)
    return mpmath.mpc(x)


def abs_value(x):
    if is_exact(x):
        return abs(as_fraction(x))
    return abs(x)


def sup_norm(values) -> object:
    """Max of abs over an iterable of scalars; 0 for an empty iterable."""
    best = 0
    for v in values:
        a = abs_value(v)
        if a > best:
            best = a
    return best


def scalar_to_json(x):
    if is_exact(x):
        return str(as_fraction(x))
    x = mpmath.mpc(x)
    digits = mpmath.mp.dps + 3
    return {"re": mpmath.nstr(x.real, digits), "im": mpmath.nstr(x.imag, digits)}


def scalar_from_json(obj):
    if isinstance(obj, dict):
        return mpmath.mpc(mpmath.mpf(obj["re"]), mpmath.mpf(obj["im"]))
    return as_fraction(obj)
