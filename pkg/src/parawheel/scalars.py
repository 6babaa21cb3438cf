"""Scalar backends and the extended real line.

Two backends coexist: exact (``int``/``Fraction``) and floating point.
The backend is chosen by the values fed in; exact values never silently
degrade to floats inside the library.  Float comparisons use the absolute
tolerance ``EPS``.

``INF`` is a single unsigned point at infinity (a projective ideal
element, not IEEE ``inf``): ``1/0 == INF``, ``1/INF == 0``, ``-INF``
is identified with ``INF`` and ``INF`` compares equal only to itself.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Union

EPS = 1e-9

Scalar = Union[int, Fraction, float]


class _Infinity:
    """The unsigned point at infinity."""

    __slots__ = ()

    def __repr__(self) -> str:
        return "INF"

    def __neg__(self) -> "_Infinity":
        return self


INF = _Infinity()

ExtScalar = Union[Scalar, _Infinity]


def is_inf(x: ExtScalar) -> bool:
    return x is INF


def is_exact(x: Scalar) -> bool:
    """True when the value belongs to the exact rational backend."""
    return not isinstance(x, float)


def scalar_eq(x: Scalar, y: Scalar, eps: float = EPS) -> bool:
    """Exact equality on the rational backend, |x-y| <= eps otherwise."""
    if is_exact(x) and is_exact(y):
        return x == y
    return abs(x - y) <= eps


def ext_eq(x: ExtScalar, y: ExtScalar, eps: float = EPS) -> bool:
    if is_inf(x) or is_inf(y):
        return is_inf(x) and is_inf(y)
    return scalar_eq(x, y, eps)


def recip(x: ExtScalar) -> ExtScalar:
    """Reciprocal on the extended line: 1/0 = INF, 1/INF = 0."""
    if is_inf(x):
        return 0
    if x == 0:
        return INF
    if isinstance(x, float):
        return 1.0 / x
    return Fraction(1, 1) / x


def ext_neg(x: ExtScalar) -> ExtScalar:
    return INF if is_inf(x) else -x


def ext_add(x: ExtScalar, y: ExtScalar) -> ExtScalar:
    if is_inf(x) or is_inf(y):
        return INF
    return x + y


def is_integral(x: Scalar) -> bool:
    if isinstance(x, int):
        return True
    if isinstance(x, Fraction):
        return x.denominator == 1
    return x.is_integer()


def sqrt_scalar(x: Scalar) -> Scalar:
    """Square root, exact when x is a perfect rational square.

    Negative arguments raise ``ValueError``.
    """
    if isinstance(x, float):
        if x < 0:
            raise ValueError("square root of a negative float")
        return math.sqrt(x)
    frac = Fraction(x)
    if frac < 0:
        raise ValueError("square root of a negative rational")
    rn = math.isqrt(frac.numerator)
    rd = math.isqrt(frac.denominator)
    if rn * rn == frac.numerator and rd * rd == frac.denominator:
        return Fraction(rn, rd)
    return math.sqrt(frac)
