"""The planar number systems sharing one multiplication rule.

A ``HyperNumber`` is ``u + iota*v`` where the imaginary unit squares to
``sigma``:

* ``sigma = -1`` -- complex numbers, elliptic zone;
* ``sigma =  0`` -- dual numbers, parabolic zone;
* ``sigma = +1`` -- double (split-complex) numbers, hyperbolic zone.

The product rule ``(u1 + iota*v1)(u2 + iota*v2) =
(u1*u2 + sigma*v1*v2) + iota*(u1*v2 + u2*v1)`` specialises to the usual
complex product, to ``p**2 = 0`` and to ``h**2 = 1``.  The squared
modulus ``u**2 - sigma*v**2`` equals ``w * conj(w)`` and is
multiplicative in every zone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import BackendMismatch, ZeroDivisor, ZoneMismatch
from .scalars import Scalar, is_exact, scalar_eq

ELLIPTIC = -1
PARABOLIC = 0
HYPERBOLIC = 1
ZONES = (ELLIPTIC, PARABOLIC, HYPERBOLIC)

_SCALAR_TYPES = (int, float, Fraction)


def _check_zone(sigma: int) -> None:
    if sigma not in ZONES:
        raise ValueError(f"zone sigma must be one of {ZONES}, got {sigma!r}")


@dataclass(frozen=True)
class HyperNumber:
    """Immutable planar number ``u + iota*v`` with ``iota**2 == sigma``."""

    sigma: int
    u: Scalar
    v: Scalar

    def __post_init__(self) -> None:
        _check_zone(self.sigma)

    # -- constructors -------------------------------------------------

    @classmethod
    def real(cls, sigma: int, x: Scalar) -> "HyperNumber":
        """Embed a real scalar: x -> x + iota*0."""
        return cls(sigma, x, 0)

    @classmethod
    def unit(cls, sigma: int) -> "HyperNumber":
        """The imaginary unit of the zone (i, p or h)."""
        return cls(sigma, 0, 1)

    @classmethod
    def one(cls, sigma: int) -> "HyperNumber":
        return cls(sigma, 1, 0)

    @classmethod
    def zero(cls, sigma: int) -> "HyperNumber":
        return cls(sigma, 0, 0)

    # -- ring operations ----------------------------------------------

    def _coerce(self, other) -> "HyperNumber":
        if isinstance(other, HyperNumber):
            if other.sigma != self.sigma:
                raise ZoneMismatch(
                    f"zones differ: sigma={self.sigma} vs sigma={other.sigma}"
                )
            return other
        if isinstance(other, _SCALAR_TYPES):
            return HyperNumber.real(self.sigma, other)
        return NotImplemented

    def __add__(self, other) -> "HyperNumber":
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return HyperNumber(self.sigma, self.u + w.u, self.v + w.v)

    __radd__ = __add__

    def __sub__(self, other) -> "HyperNumber":
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return HyperNumber(self.sigma, self.u - w.u, self.v - w.v)

    def __rsub__(self, other) -> "HyperNumber":
        return (-self) + other

    def __neg__(self) -> "HyperNumber":
        return HyperNumber(self.sigma, -self.u, -self.v)

    def __mul__(self, other) -> "HyperNumber":
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return HyperNumber(
            self.sigma,
            self.u * w.u + self.sigma * self.v * w.v,
            self.u * w.v + w.u * self.v,
        )

    __rmul__ = __mul__

    def __truediv__(self, other) -> "HyperNumber":
        if isinstance(other, _SCALAR_TYPES):
            inv = Fraction(1, 1) / other if is_exact(other) else 1.0 / other
            return HyperNumber(self.sigma, self.u * inv, self.v * inv)
        w = self._coerce(other)
        if w is NotImplemented:
            return NotImplemented
        return self * w.reciprocal()

    def __pow__(self, k: int) -> "HyperNumber":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.reciprocal() ** (-k)
        out = HyperNumber.one(self.sigma)
        base = self
        n = k
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # -- conjugation and modulus ---------------------------------------

    def conjugate(self) -> "HyperNumber":
        """Zone conjugate u - iota*v (the parabolic vector algebra has
        its own, different conjugation)."""
        return HyperNumber(self.sigma, self.u, -self.v)

    def modulus_sq(self) -> Scalar:
        """u**2 - sigma*v**2 == self * self.conjugate(), a real scalar."""
        return self.u * self.u - self.sigma * self.v * self.v

    def reciprocal(self) -> "HyperNumber":
        """Multiplicative inverse conj(w) / modulus_sq(w).

        Raises ``ZeroDivisor`` on zero divisors: the whole axis u = 0 in
        the parabolic zone, the diagonals u = +-v in the hyperbolic one.
        """
        m = self.modulus_sq()
        if m == 0:
            raise ZeroDivisor(f"{self!r} has vanishing squared modulus")
        return self.conjugate() / m

    # -- comparison helpers ---------------------------------------------

    def isclose(self, other: "HyperNumber", eps: float | None = None) -> bool:
        if self.sigma != other.sigma:
            return False
        if eps is None:
            return scalar_eq(self.u, other.u) and scalar_eq(self.v, other.v)
        return scalar_eq(self.u, other.u, eps) and scalar_eq(self.v, other.v, eps)

    def __repr__(self) -> str:
        unit = {ELLIPTIC: "i", PARABOLIC: "p", HYPERBOLIC: "h"}[self.sigma]
        return f"({self.u} + {unit}*{self.v})"


def exp_imag(sigma: int, t: Scalar) -> HyperNumber:
    """Exponential of an imaginary argument, exp(iota*t).

    Closed forms: cos t + i sin t, 1 + p t, cosh t + h sinh t.  The
    parabolic case is exact on the rational backend; the other two are
    transcendental, so a nonzero exact ``t`` raises ``BackendMismatch``.
    """
    _check_zone(sigma)
    if t == 0:
        return HyperNumber.one(sigma)
    if sigma == PARABOLIC:
        return HyperNumber(PARABOLIC, 1, t)
    if is_exact(t):
        raise BackendMismatch(
            "exp of a nonzero exact argument is transcendental for sigma != 0"
        )
    if sigma == ELLIPTIC:
        return HyperNumber(ELLIPTIC, math.cos(t), math.sin(t))
    return HyperNumber(HYPERBOLIC, math.cosh(t), math.sinh(t))
