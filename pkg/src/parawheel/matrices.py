"""2x2 matrices over the reals and over planar numbers.

Covers the one-parameter subgroups K, N, N', A of SL(2,R), their Lie
generators, Cayley conjugation into each zone's unit-disk model, and
the fractional-linear (Moebius) action on homogeneous points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import BackendMismatch, DegenerateMap, ZoneMismatch
from .hypernum import HYPERBOLIC, PARABOLIC, HyperNumber
from .scalars import EPS, Scalar, is_exact, scalar_eq


class Subgroup(Enum):
    """The four one-parameter subgroups of SL(2,R)."""

    K = "K"
    N = "N"
    NP = "N'"
    A = "A"


def generator(which: Subgroup) -> tuple[tuple[Scalar, Scalar], tuple[Scalar, Scalar]]:
    """Zero-trace Lie-algebra generator of the subgroup, as row tuples."""
    table = {
        Subgroup.K: ((0, 1), (-1, 0)),
        Subgroup.N: ((0, 1), (0, 0)),
        Subgroup.NP: ((0, 0), (1, 0)),
        Subgroup.A: ((0, 1), (1, 0)),
    }
    return table[which]


def mat2_mul(x, y):
    """Product of two 2x2 matrices given as row tuples."""
    return (
        (
            x[0][0] * y[0][0] + x[0][1] * y[1][0],
            x[0][0] * y[0][1] + x[0][1] * y[1][1],
        ),
        (
            x[1][0] * y[0][0] + x[1][1] * y[1][0],
            x[1][0] * y[0][1] + x[1][1] * y[1][1],
        ),
    )


@dataclass(frozen=True)
class SL2:
    """Real 2x2 matrix with determinant one."""

    a: Scalar
    b: Scalar
    c: Scalar
    d: Scalar

    def __post_init__(self) -> None:
        det = self.a * self.d - self.b * self.c
        if is_exact(det):
            ok = det == 1
        else:
            scale = max(1.0, abs(self.a * self.d), abs(self.b * self.c))
            ok = abs(det - 1) <= EPS * scale
        if not ok:
            raise ValueError(f"determinant is {det}, expected 1")

    @classmethod
    def identity(cls) -> "SL2":
        return cls(1, 0, 0, 1)

    @property
    def entries(self) -> tuple[Scalar, Scalar, Scalar, Scalar]:
        return (self.a, self.b, self.c, self.d)

    def __matmul__(self, other: "SL2") -> "SL2":
        return SL2(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
        )

    def inverse(self) -> "SL2":
        return SL2(self.d, -self.b, -self.c, self.a)

    def lift(self, sigma: int) -> "Mat2H":
        """Embed entrywise into the zone algebra, x -> x + iota*0."""
        r = lambda x: HyperNumber.real(sigma, x)
        return Mat2H(r(self.a), r(self.b), r(self.c), r(self.d))


def subgroup_element(which: Subgroup, t: Scalar) -> SL2:
    """exp(t * generator(which)).

    K and A involve cos/sin and cosh/sinh, so they require a float
    parameter when t != 0; N and N' stay exact.
    """
    if which is Subgroup.N:
        return SL2(1, t, 0, 1)
    if which is Subgroup.NP:
        return SL2(1, 0, t, 1)
    if t == 0:
        return SL2.identity()
    if is_exact(t):
        raise BackendMismatch(f"{which.value} subgroup needs a float parameter")
    if which is Subgroup.K:
        return SL2(math.cos(t), math.sin(t), -math.sin(t), math.cos(t))
    return SL2(math.cosh(t), math.sinh(t), math.sinh(t), math.cosh(t))


@dataclass(frozen=True)
class Mat2H:
    """2x2 matrix with entries in one zone's planar numbers."""

    e11: HyperNumber
    e12: HyperNumber
    e21: HyperNumber
    e22: HyperNumber

    def __post_init__(self) -> None:
        s = self.e11.sigma
        if not (self.e12.sigma == s and self.e21.sigma == s and self.e22.sigma == s):
            raise ZoneMismatch("matrix entries live in different zones")

    @property
    def sigma(self) -> int:
        return self.e11.sigma

    @classmethod
    def identity(cls, sigma: int) -> "Mat2H":
        one = HyperNumber.one(sigma)
        zero = HyperNumber.zero(sigma)
        return cls(one, zero, zero, one)

    def __matmul__(self, other: "Mat2H") -> "Mat2H":
        return Mat2H(
            self.e11 * other.e11 + self.e12 * other.e21,
            self.e11 * other.e12 + self.e12 * other.e22,
            self.e21 * other.e11 + self.e22 * other.e21,
            self.e21 * other.e12 + self.e22 * other.e22,
        )

    def det(self) -> HyperNumber:
        return self.e11 * self.e22 - self.e12 * self.e21

    def adjugate(self) -> "Mat2H":
        return Mat2H(self.e22, -self.e12, -self.e21, self.e11)

    def inverse(self) -> "Mat2H":
        d = self.det()
        adj = self.adjugate()
        inv = d.reciprocal()
        return Mat2H(adj.e11 * inv, adj.e12 * inv, adj.e21 * inv, adj.e22 * inv)

    def scaled(self, s: Scalar) -> "Mat2H":
        return Mat2H(self.e11 * s, self.e12 * s, self.e21 * s, self.e22 * s)

    def isclose(self, other: "Mat2H", eps: float | None = None) -> bool:
        return (
            self.e11.isclose(other.e11, eps)
            and self.e12.isclose(other.e12, eps)
            and self.e21.isclose(other.e21, eps)
            and self.e22.isclose(other.e22, eps)
        )


@dataclass(frozen=True)
class MoebiusPoint:
    """Homogeneous pair [num : den] over one zone.

    Ideal elements such as the reciprocal of a zero divisor are ordinary
    pairs here ([1 : p] for 1/p), which keeps the Moebius action total.
    """

    num: HyperNumber
    den: HyperNumber

    def __post_init__(self) -> None:
        if self.num.sigma != self.den.sigma:
            raise ZoneMismatch("numerator and denominator zones differ")
        if self.num.u == 0 and self.num.v == 0 and self.den.u == 0 and self.den.v == 0:
            raise ValueError("homogeneous point must not be [0 : 0]")

    @property
    def sigma(self) -> int:
        return self.num.sigma

    @classmethod
    def from_affine(cls, w: HyperNumber) -> "MoebiusPoint":
        return cls(w, HyperNumber.one(w.sigma))

    def is_finite(self) -> bool:
        return self.den.modulus_sq() != 0

    def as_affine(self) -> HyperNumber:
        """Affine reading num / den; raises ``ZeroDivisor`` on ideal points."""
        return self.num * self.den.reciprocal()

    def projectively_equal(self, other: "MoebiusPoint", eps: float | None = None) -> bool:
        """Cross-multiplied equality num*den' == num'*den."""
        return (self.num * other.den).isclose(other.num * self.den, eps)


def moebius_apply(m: Mat2H | SL2, w: MoebiusPoint) -> MoebiusPoint:
    """Apply (a,b;c,d): [n : d] -> [a n + b d : c n + d d].

    Affine reading: w -> (a w + b) / (c w + d).  Real matrices are
    lifted into the point's zone.
    """
    if isinstance(m, SL2):
        m = m.lift(w.sigma)
    if m.sigma != w.sigma:
        raise ZoneMismatch("matrix and point zones differ")
    num = m.e11 * w.num + m.e12 * w.den
    den = m.e21 * w.num + m.e22 * w.den
    if num.u == 0 and num.v == 0 and den.u == 0 and den.v == 0:
        raise DegenerateMap("matrix annihilates the point")
    return MoebiusPoint(num, den)


def _cayley_unnormalized(sigma: int) -> tuple[Mat2H, Mat2H, Scalar]:
    """The integer-entry Cayley matrix, its adjugate and its real determinant.

    Dividing the adjugate by the determinant gives the exact inverse, so
    conjugation avoids the irrational 1/sqrt(2) normalisation entirely.
    """
    one = HyperNumber.one(sigma)
    iota = HyperNumber.unit(sigma)
    if sigma == HYPERBOLIC:
        c = Mat2H(one, iota, -iota, one)
    else:
        c = Mat2H(one, -iota, -iota, one)
    det = c.det().u  # 2, 1, 2 for sigma = -1, 0, +1; imaginary part vanishes
    return c, c.adjugate(), det


def cayley_matrix(sigma: int) -> Mat2H:
    """The zone's Cayley transform onto its unit disk.

    Elliptic and hyperbolic versions carry the 1/sqrt(2) factor (float
    entries); the parabolic one is (1, -p; -p, 1) with no factor, and
    its determinant is already 1 because p**2 = 0.
    """
    c, _, _ = _cayley_unnormalized(sigma)
    if sigma == PARABOLIC:
        return c
    return c.scaled(1.0 / math.sqrt(2.0))


def cayley_conjugate(m: SL2, sigma: int) -> Mat2H:
    """C * m * C^-1 computed in the zone algebra.

    Exact on the rational backend for every zone: the normalising
    scalars cancel, leaving only a division by the integer determinant.
    """
    c, adj, det = _cayley_unnormalized(sigma)
    prod = c @ m.lift(sigma) @ adj
    if det == 1:
        return prod
    inv = Fraction(1, det)
    return prod.scaled(inv)
