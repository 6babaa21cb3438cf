"""Representations of SL(2,R) induced from its K, A and N' subgroups.

The homogeneous space Omega = G/H is coordinatised by the section

    s(u, v) = (1/sqrt(v)) * (v, u; 0, 1),   v > 0,

so every g factors uniquely as g = s(omega) * h with h in H.  Moving
s(omega) by a matrix and projecting back to Omega gives a closed-form
plane action per subgroup; it is the Moebius action in the zone whose
imaginary unit matches the subgroup (i for K, h for A, p for N').
Characters of the subgroup then induce function-space operators whose
realised formulas are evaluated pointwise here.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Union

from .errors import BranchCut, IdealPoint, NoDecomposition, ZeroDivisor
from .hypernum import ELLIPTIC, HYPERBOLIC, PARABOLIC, HyperNumber, exp_imag
from .matrices import SL2, Subgroup
from .scalars import EPS, Scalar, is_exact, is_integral, scalar_eq, sqrt_scalar

ZONE_OF = {Subgroup.K: ELLIPTIC, Subgroup.A: HYPERBOLIC, Subgroup.NP: PARABOLIC}

TestFunction = Callable[[HyperNumber], HyperNumber]


@dataclass(frozen=True)
class OmegaPoint:
    """A point of the homogeneous space, written (u, v)."""

    u: Scalar
    v: Scalar

    def isclose(self, other: "OmegaPoint", eps: float | None = None) -> bool:
        return scalar_eq(self.u, other.u, EPS if eps is None else eps) and scalar_eq(
            self.v, other.v, EPS if eps is None else eps
        )


@dataclass(frozen=True)
class ReprParams:
    """Which subgroup induces, and the character parameter.

    K characters need an integer winding number; A and N' take a real
    parameter.
    """

    subgroup: Subgroup
    param: Scalar

    def __post_init__(self) -> None:
        if self.subgroup not in ZONE_OF:
            raise ValueError("induction is implemented for K, A and N'")
        if self.subgroup is Subgroup.K and not is_integral(self.param):
            raise ValueError("K characters are indexed by integers")


@dataclass(frozen=True)
class DualAffineMap:
    """Affine map w -> scale*w + shift on dual numbers.

    The N' characters take values here rather than in the dual numbers
    themselves: chi_kappa(t) sends w to (1+2*p*kappa*t)*w +
    (kappa*t + p*kappa**2*t**2).
    """

    scale: HyperNumber
    shift: HyperNumber

    def __call__(self, w: HyperNumber) -> HyperNumber:
        return self.scale * w + self.shift

    def compose(self, inner: "DualAffineMap") -> "DualAffineMap":
        return DualAffineMap(
            self.scale * inner.scale, self.scale * inner.shift + self.shift
        )

    def isclose(self, other: "DualAffineMap", eps: float | None = None) -> bool:
        return self.scale.isclose(other.scale, eps) and self.shift.isclose(
            other.shift, eps
        )


def s_map(w: OmegaPoint) -> SL2:
    """The section (u, v) -> (1/sqrt(v)) * (v, u; 0, 1); exact when v is
    a rational square."""
    if w.v <= 0:
        raise ValueError("the section is defined on the upper half-plane v > 0")
    r = sqrt_scalar(w.v)
    return SL2(w.v / _ex(r), w.u / _ex(r), 0, 1 / _ex(r))


def _ex(x: Scalar) -> Scalar:
    return Fraction(x) if isinstance(x, int) else x


def _s_inverse(w: OmegaPoint) -> SL2:
    r = sqrt_scalar(w.v)
    return SL2(1 / _ex(r), -w.u / _ex(r), 0, w.v / _ex(r))


def decompose(g: SL2, subgroup: Subgroup) -> tuple[OmegaPoint, SL2]:
    """Split g = s(omega) * h with h in the subgroup.

    Always possible for K; N' needs d > 0 and A needs d**2 > c**2,
    otherwise ``NoDecomposition``.
    """
    a, b, c, d = g.entries
    if subgroup is Subgroup.K:
        den = c * c + d * d
        v = 1 / _ex(den)
        u = (a * c + b * d) / _ex(den)
    elif subgroup is Subgroup.NP:
        if (is_exact(d) and d <= 0) or (not is_exact(d) and d <= EPS):
            raise NoDecomposition("N' factor needs a positive lower-right entry")
        omega = OmegaPoint(b / _ex(d), 1 / _ex(d * d))
        return omega, SL2(1, 0, c / _ex(d), 1)
    elif subgroup is Subgroup.A:
        den = d * d - c * c
        if (is_exact(den) and den <= 0) or (not is_exact(den) and den <= EPS):
            raise NoDecomposition("A factor needs d**2 > c**2")
        v = 1 / _ex(den)
        u = (b * d - a * c) / _ex(den)
    else:
        raise ValueError("decomposition is implemented for K, A and N'")
    omega = OmegaPoint(u, v)
    h = _s_inverse(omega) @ g
    _check_shape(h, subgroup)
    return omega, h


def _check_shape(h: SL2, subgroup: Subgroup) -> None:
    if subgroup is Subgroup.K:
        ok = scalar_eq(h.a, h.d) and scalar_eq(h.b, -h.c)
    elif subgroup is Subgroup.NP:
        ok = scalar_eq(h.a, 1) and scalar_eq(h.d, 1) and scalar_eq(h.b, 0)
    else:
        ok = scalar_eq(h.a, h.d) and scalar_eq(h.b, h.c)
    if not ok:
        raise NoDecomposition(f"factor {h!r} is not in {subgroup.value}")


def g_action(g: SL2, w: OmegaPoint, subgroup: Subgroup) -> OmegaPoint:
    """Plane action of the matrix (a,b;c,d), by subgroup:

    K : ((au+b)(cu+d) + acv**2, v) / ((cu+d)**2 + (cv)**2)
    A : same with both plus signs flipped to minus
    N': ((au+b)/(cu+d), v/(cu+d)**2)

    These are the affine parts of the Moebius action in the matching
    zone; composing matrices composes actions (a left action).
    """
    a, b, c, d = g.entries
    u, v = w.u, w.v
    if subgroup is Subgroup.NP:
        t0 = c * u + d
        if t0 == 0:
            raise IdealPoint("orbit point escapes to infinity")
        return OmegaPoint((a * u + b) / _ex(t0), v / _ex(t0 * t0))
    sign = -ZONE_OF[subgroup]  # +1 for K, -1 for A
    den = (c * u + d) ** 2 + sign * (c * v) ** 2
    if den == 0:
        raise IdealPoint("orbit point escapes to infinity")
    num_u = (a * u + b) * (c * u + d) + sign * a * c * v * v
    return OmegaPoint(num_u / _ex(den), v / _ex(den))


def r_factor(g: SL2, w: OmegaPoint, subgroup: Subgroup) -> SL2:
    """The subgroup factor of g**-1 * s(w).

    Closed forms, with (a,b;c,d) the entries of g**-1:

    K : (cu+d, -cv; cv, cu+d) / sqrt((cu+d)**2 + (cv)**2)
    A : (cu+d,  cv; cv, cu+d) / sqrt((cu+d)**2 - (cv)**2)
    N': (1, 0; vc/(cu+d), 1)
    """
    _, _, c, d = g.inverse().entries
    u, v = w.u, w.v
    t0 = c * u + d
    if subgroup is Subgroup.NP:
        if t0 == 0:
            raise IdealPoint("vanishing denominator in the N' factor")
        return SL2(1, 0, v * c / _ex(t0), 1)
    sign = -ZONE_OF[subgroup]
    den = t0 * t0 + sign * (c * v) ** 2
    if den == 0:
        raise IdealPoint("vanishing denominator in the subgroup factor")
    if den < 0:
        raise NoDecomposition("negative discriminant: no A factor here")
    r = sqrt_scalar(den)
    if subgroup is Subgroup.K:
        return SL2(t0 / _ex(r), -c * v / _ex(r), c * v / _ex(r), t0 / _ex(r))
    return SL2(t0 / _ex(r), c * v / _ex(r), c * v / _ex(r), t0 / _ex(r))


def character(params: ReprParams, t: Scalar) -> Union[HyperNumber, DualAffineMap]:
    """Character value on the subgroup element of parameter t.

    K: exp(i*n*t); A: exp(h*sigma*t); N': the affine dual map
    w -> (1 + 2p*kappa*t) w + (kappa*t + p*kappa**2*t**2), which is
    exact on rationals and composes additively in t.
    """
    if params.subgroup is Subgroup.K:
        return exp_imag(ELLIPTIC, params.param * t)
    if params.subgroup is Subgroup.A:
        return exp_imag(HYPERBOLIC, params.param * t)
    kt = params.param * t
    return DualAffineMap(
        HyperNumber(PARABOLIC, 1, 2 * kt),
        HyperNumber(PARABOLIC, kt, kt * kt),
    )


def _half_power(base: HyperNumber, num: Scalar) -> HyperNumber:
    """base ** (num/2) for unit-modulus planar numbers.

    Integer exponents are computed by exact multiplication; genuine
    half-powers go through the polar form (principal branch), which for
    the hyperbolic zone needs a positive real part.
    """
    if is_integral(num) and int(num) % 2 == 0:
        return base ** (int(num) // 2)
    e = float(num) / 2.0
    if base.sigma == ELLIPTIC:
        theta = math.atan2(float(base.v), float(base.u))
        m = float(base.modulus_sq())
        r = m ** (e / 2.0)
        return HyperNumber(ELLIPTIC, r * math.cos(e * theta), r * math.sin(e * theta))
    if base.sigma == HYPERBOLIC:
        m = float(base.modulus_sq())
        if m <= 0 or float(base.u) <= 0:
            raise BranchCut("hyperbolic half-power needs u > 0 and positive modulus")
        phi = math.atanh(float(base.v) / float(base.u))
        r = m ** (e / 2.0)
        return HyperNumber(HYPERBOLIC, r * math.cosh(e * phi), r * math.sinh(e * phi))
    raise BranchCut("no fractional powers in the parabolic zone")


def rep_apply(
    params: ReprParams, g: SL2, f: TestFunction, w: HyperNumber
) -> HyperNumber:
    """Evaluate the induced operator at one point: [rho(g) f](w).

    With (a,b;c,d) = g**-1 and the zone matching the subgroup:

    K : ((c*conj(w)+d)/(cw+d))**(n/2)     * f((aw+b)/(cw+d))
    A : ((c*conj(w)+d)/(cw+d))**(sigma/2) * f((aw+b)/(cw+d))
    N': (1 - 2p*kappa*v*c/(cu+d)) * f((aw+b)/(cw+d))
        - kappa*v*c/(cu+d) + p*(kappa*v*c)**2/(cu+d)**2

    The measure factor of the abstract induction formula is already
    absorbed in these realisations.
    """
    zone = ZONE_OF[params.subgroup]
    if w.sigma != zone:
        raise ValueError(
            f"{params.subgroup.value} representation acts on zone {zone} numbers"
        )
    if params.subgroup in (Subgroup.K, Subgroup.NP) and not w.v > 0:
        raise ValueError("the function space lives on the upper half-plane v > 0")
    a, b, c, d = g.inverse().entries
    den = c * w + d
    if den.modulus_sq() == 0:
        raise ZeroDivisor("denominator cw + d is a zero divisor at this point")
    image = (a * w + b) * den.reciprocal()
    if params.subgroup is Subgroup.NP:
        kappa = params.param
        q = kappa * w.v * c / _ex(c * w.u + d)
        prefactor = HyperNumber(PARABOLIC, 1, -2 * q)
        return prefactor * f(image) + HyperNumber(PARABOLIC, -q, q * q)
    base = (c * w.conjugate() + d) * den.reciprocal()
    prefactor = _half_power(base, params.param)
    return prefactor * f(image)
