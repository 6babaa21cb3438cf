"""Rotation-compatible vector algebra on the parabolic plane.

Ordinary dual-number multiplication only yields the trivial vertical
shear; the interesting parabolic rotations come from the Moebius action
of the unitriangular subgroups N (upper) and N' (lower).  Reverting
their invariants into definitions equips R^2 with, per subgroup:

==========  =====================  =====================
quantity    tag N                  tag N'
==========  =====================  =====================
modulus     u**2 - v               u**2 / (v + 1)
argument    u                      1 / u
zero        (0, 0)                 (INF, -1)
conjugate   (-u, v)                (-u, v)
==========  =====================  =====================

Rotation by angle s adds s to the argument and preserves the modulus.
The vector product adds arguments and multiplies moduli; the exotic sum
adds moduli and takes the modulus-weighted mean of arguments.  Negative
moduli (points inside the parabola) are admitted everywhere.

For N' the zero-argument elements are ideal: we store them as
``(INF, n - 1)`` where ``n`` is the modulus, so the additive zero is
the classical ``(INF, -1)`` and the multiplicative unit is ``(INF, 0)``.
Multiplying by such an element scales the modulus and fixes the
argument, i.e. coincides with scalar multiplication by ``n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import (
    BranchCut,
    IdealPoint,
    NormUndefined,
    TagMismatch,
    ZeroDivisor,
    ZeroScale,
)
from .matrices import Subgroup
from .scalars import (
    INF,
    ExtScalar,
    Scalar,
    is_exact,
    is_inf,
    is_integral,
    recip,
    scalar_eq,
)

_TAGS = (Subgroup.N, Subgroup.NP)


def _check_tags(w1: "DualVec", w2: "DualVec") -> None:
    if w1.tag is not w2.tag:
        raise TagMismatch(f"tags differ: {w1.tag.value} vs {w2.tag.value}")


@dataclass(frozen=True)
class LinCoord:
    """Coordinates in which the exotic addition is componentwise.

    They are the coefficients of a point written as
    ``a * (1, 0) + b * (-1, 0)``; the modulus reads off as ``a + b``.
    """

    a: Scalar
    b: Scalar

    def __add__(self, other: "LinCoord") -> "LinCoord":
        return LinCoord(self.a + other.a, self.b + other.b)

    def norm(self) -> Scalar:
        return self.a + self.b


@dataclass(frozen=True)
class DualVec:
    """A plane point carrying the rotation algebra of its tag.

    ``u`` is ``INF`` only for tag N' and only on zero-argument ideal
    points, where ``v`` encodes the modulus as ``v + 1``.
    """

    tag: Subgroup
    u: ExtScalar
    v: Scalar

    def __post_init__(self) -> None:
        if self.tag not in _TAGS:
            raise ValueError(f"tag must be N or N', got {self.tag!r}")
        if is_inf(self.u) and self.tag is not Subgroup.NP:
            raise ValueError("only N' admits ideal points")

    # -- constructors ---------------------------------------------------

    @classmethod
    def zero(cls, tag: Subgroup) -> "DualVec":
        """Additive identity: (0,0) for N, (INF,-1) for N'."""
        if tag is Subgroup.N:
            return cls(Subgroup.N, 0, 0)
        return cls(Subgroup.NP, INF, -1)

    @classmethod
    def unit(cls, tag: Subgroup) -> "DualVec":
        """Multiplicative identity: zero argument, modulus one."""
        return cls.from_arg_norm(tag, 0, 1)

    @classmethod
    def from_arg_norm(cls, tag: Subgroup, a: ExtScalar, n: Scalar) -> "DualVec":
        """The point with argument ``a`` and modulus ``n``.

        Inverse of (arg, norm) where that pair is injective.  The
        degenerate pair (INF, 0) maps to the zero vector by convention.
        """
        if tag is Subgroup.N:
            if is_inf(a):
                raise IdealPoint("N has no point of infinite argument")
            return cls(Subgroup.N, a, a * a - n)
        if is_inf(a):
            if n == 0:
                return cls.zero(Subgroup.NP)
            raise IdealPoint("infinite argument forces zero modulus for N'")
        if a == 0:
            return cls(Subgroup.NP, INF, n - 1)
        if n == 0:
            raise IdealPoint("no finite N' point has nonzero argument and zero modulus")
        u = recip(a)
        return cls(Subgroup.NP, u, u * u / n - 1)

    @classmethod
    def from_real(cls, tag: Subgroup, x: Scalar) -> "DualVec":
        """Embed a real scalar as the zero-argument point of modulus x."""
        return cls.from_arg_norm(tag, 0, x)

    @classmethod
    def from_linear(cls, tag: Subgroup, lin: LinCoord) -> "DualVec":
        """Inverse of :meth:`to_linear`."""
        a, b = lin.a, lin.b
        if tag is Subgroup.N:
            s = a + b
            if s == 0:
                raise IdealPoint("linear coordinates with a + b = 0 leave the N chart")
            u = (a - b) / _exactify(s)
            return cls(Subgroup.N, u, u * u - s)
        d = a - b
        if d == 0:
            # Zero-argument ideal point of modulus a + b.
            return cls(Subgroup.NP, INF, a + b - 1)
        u = (a + b) / _exactify(d)
        return cls(Subgroup.NP, u, (a + b) / _exactify(d * d) - 1)

    # -- basic data ------------------------------------------------------

    def is_ideal(self) -> bool:
        return is_inf(self.u)

    def is_zero(self) -> bool:
        z = DualVec.zero(self.tag)
        if self.is_ideal() != z.is_ideal():
            return False
        if self.is_ideal():
            return scalar_eq(self.v, z.v)
        return scalar_eq(self.u, z.u) and scalar_eq(self.v, z.v)

    def norm(self) -> Scalar:
        """The rotation-invariant modulus."""
        if self.tag is Subgroup.N:
            return self.u * self.u - self.v
        if self.is_ideal():
            return self.v + 1
        if self.v == -1:
            raise NormUndefined("N' modulus undefined on the line v = -1")
        return self.u * self.u / _exactify(self.v + 1)

    def arg(self) -> ExtScalar:
        """The rotation-additive argument (u for N, 1/u for N')."""
        if self.tag is Subgroup.N:
            return self.u
        return recip(self.u)

    def conjugate(self) -> "DualVec":
        """(-u, v); fixes the modulus and negates the argument."""
        u = self.u if self.is_ideal() else -self.u
        return DualVec(self.tag, u, self.v)

    # -- rotations ---------------------------------------------------------

    def rotate(self, s: Scalar) -> "DualVec":
        """Rotation by angle s: modulus kept, argument increased by s.

        Closed forms: N sends (u, v) to (u+s, v+2su+s**2); N' follows
        1/u' = 1/u + s.  A finite N' point whose new argument vanishes
        moves to the corresponding zero-argument ideal element.
        """
        if self.tag is Subgroup.N:
            return DualVec(Subgroup.N, self.u + s, self.v + 2 * s * self.u + s * s)
        if self.is_zero():
            return self
        if self.is_ideal():
            if s == 0:
                return self
            return DualVec.from_arg_norm(Subgroup.NP, s, self.norm())
        if self.u == 0:
            return self  # the vertical axis is pointwise fixed
        den = 1 + s * self.u
        if den == 0:
            return DualVec(Subgroup.NP, INF, self.norm() - 1)
        u2 = self.u / _exactify(den)
        v2 = u2 * u2 * (self.v + 1) / _exactify(self.u * self.u) - 1
        return DualVec(Subgroup.NP, u2, v2)

    # -- multiplication -----------------------------------------------------

    def mul(self, other: "DualVec | Scalar") -> "DualVec":
        """Vector product: arguments add, moduli multiply.

        Plain scalars are promoted to zero-argument vectors, which makes
        ``x * w`` agree with :meth:`scale`.
        """
        if not isinstance(other, DualVec):
            return self.scale(other)
        _check_tags(self, other)
        if self.tag is Subgroup.N:
            u, v, u2, v2 = self.u, self.v, other.u, other.v
            s = u + u2
            return DualVec(Subgroup.N, s, s * s - (v - u * u) * (v2 - u2 * u2))
        if self.is_zero() or other.is_zero():
            return DualVec.zero(Subgroup.NP)
        if other.is_ideal():
            return self.scale(other.v + 1)
        if self.is_ideal():
            return other.scale(self.v + 1)
        u, v, u2, v2 = self.u, self.v, other.u, other.v
        s = u + u2
        if s == 0:
            # Opposite arguments: the product is the zero-argument ideal
            # element whose modulus is the product of moduli (w*conj(w)
            # always lands here).
            return DualVec(Subgroup.NP, INF, self.norm() * other.norm() - 1)
        return DualVec(
            Subgroup.NP,
            u * u2 / _exactify(s),
            (v + 1) * (v2 + 1) / _exactify(s * s) - 1,
        )

    def scale(self, a: Scalar) -> "DualVec":
        """Scalar multiple: argument kept, modulus scaled by a.

        The same identities cover negative a.  For N' the closed form
        divides by a, so a = 0 raises ``ZeroScale``.
        """
        if self.tag is Subgroup.N:
            return DualVec(Subgroup.N, self.u, a * self.v + self.u * self.u * (1 - a))
        if a == 0:
            raise ZeroScale("N' scalar formula divides by the factor")
        if self.is_ideal():
            return DualVec(Subgroup.NP, INF, a * (self.v + 1) - 1)
        return DualVec(Subgroup.NP, self.u, (self.v + 1) / _exactify(a) - 1)

    def __mul__(self, other):
        if isinstance(other, (DualVec, int, float, Fraction)):
            return self.mul(other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float, Fraction)):
            return self.scale(other)
        return NotImplemented

    # -- exotic addition -----------------------------------------------------

    def neg(self) -> "DualVec":
        """Additive inverse: (u, 2u**2 - v) for N, (u, -v - 2) for N'."""
        if self.tag is Subgroup.N:
            return DualVec(Subgroup.N, self.u, 2 * self.u * self.u - self.v)
        return DualVec(Subgroup.NP, self.u, -self.v - 2)

    def add(self, other: "DualVec") -> "DualVec":
        """Exotic sum: moduli add; arguments average weighted by moduli.

        A zero modulus sum collapses to the tag's zero vector.
        """
        _check_tags(self, other)
        n1, n2 = self.norm(), other.norm()
        total = n1 + n2
        if total == 0:
            return DualVec.zero(self.tag)
        weighted = _arg_weight(self, n1) + _arg_weight(other, n2)
        return DualVec.from_arg_norm(self.tag, weighted / _exactify(total), total)

    def __add__(self, other):
        if isinstance(other, DualVec):
            return self.add(other)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, DualVec):
            return self.add(other.neg())
        return NotImplemented

    def __neg__(self) -> "DualVec":
        return self.neg()

    # -- real/imaginary split --------------------------------------------------

    def real_part(self) -> "DualVec":
        """The zero-argument component, of modulus (1 - arg)*norm."""
        return self._split()[0]

    def imag_part(self) -> "DualVec":
        """The argument-one component, of modulus arg*norm."""
        return self._split()[1]

    def _split(self) -> tuple["DualVec", "DualVec"]:
        if self.tag is Subgroup.NP and self.is_zero():
            return DualVec.zero(self.tag), DualVec.zero(self.tag)
        a = self.arg()
        if is_inf(a):
            raise IdealPoint("real/imaginary split needs a finite argument")
        n = self.norm()
        re_norm = (1 - a) * n
        im_norm = a * n
        re = DualVec.from_arg_norm(self.tag, 0, re_norm)
        if self.tag is Subgroup.NP and im_norm == 0:
            im = DualVec.zero(self.tag)
        else:
            im = DualVec.from_arg_norm(self.tag, 1, im_norm)
        return re, im

    # -- de Moivre power ----------------------------------------------------------

    def power(self, e: Scalar) -> "DualVec":
        """Argument times e, modulus to the power e."""
        a = self.arg()
        if is_inf(a):
            raise IdealPoint("power needs a finite argument")
        n = self.norm()
        if is_integral(e):
            k = int(e)
            if n == 0 and k < 0:
                raise ZeroDivisor("negative power of a zero-modulus vector")
            nn = (Fraction(n) if is_exact(n) else n) ** k
        else:
            if n < 0:
                raise BranchCut("fractional power of a negative modulus")
            if n == 0:
                if e < 0:
                    raise ZeroDivisor("negative power of a zero-modulus vector")
                nn = 0.0
            else:
                nn = float(n) ** float(e)
        return DualVec.from_arg_norm(self.tag, a * e, nn)

    # -- linearisation ------------------------------------------------------------

    def to_linear(self) -> LinCoord:
        """Coordinates of the point in the componentwise-addition chart."""
        if self.tag is Subgroup.N:
            n = self.norm()
            two = _exactify(2)
            return LinCoord(n * (1 + self.u) / two, n * (1 - self.u) / two)
        if self.is_ideal():
            m = self.v + 1
            return LinCoord(m / _exactify(2), m / _exactify(2))
        if self.v == -1:
            raise NormUndefined("N' linearisation undefined on the line v = -1")
        den = 2 * (self.v + 1)
        return LinCoord(
            self.u * (self.u + 1) / _exactify(den),
            self.u * (self.u - 1) / _exactify(den),
        )

    def isclose(self, other: "DualVec", eps: float | None = None) -> bool:
        if self.tag is not other.tag or self.is_ideal() != other.is_ideal():
            return False
        if not self.is_ideal():
            if eps is None:
                if not scalar_eq(self.u, other.u):
                    return False
            elif not scalar_eq(self.u, other.u, eps):
                return False
        if eps is None:
            return scalar_eq(self.v, other.v)
        return scalar_eq(self.v, other.v, eps)

    def __repr__(self) -> str:
        return f"DualVec[{self.tag.value}]({self.u}, {self.v})"


def _exactify(x: Scalar) -> Scalar:
    """Make division exact for int operands (int/int would give float)."""
    return Fraction(x) if isinstance(x, int) else x


def _arg_weight(w: DualVec, n: Scalar) -> Scalar:
    """arg(w) * norm(w), with zero-modulus vectors contributing nothing.

    That convention extends the weighted mean over the null points
    (modulus zero, infinite argument), which collapse to the origin of
    the linear chart anyway.
    """
    if n == 0:
        return 0
    a = w.arg()
    assert not is_inf(a)  # nonzero modulus forces a finite argument
    return a * n


def tropical_add(w1: DualVec, w2: DualVec, mode: str = "min") -> DualVec:
    """Lexicographic min/max of two finite points.

    An alternative rotation-invariant addition in the min-plus /
    max-plus spirit; exact ties on u fall through to v (floats compare
    u within the global tolerance first).
    """
    _check_tags(w1, w2)
    if w1.is_ideal() or w2.is_ideal():
        raise IdealPoint("tropical addition needs finite components")
    if mode not in ("min", "max"):
        raise ValueError(f"mode must be 'min' or 'max', got {mode!r}")
    first = _lex_less(w1, w2)
    if mode == "min":
        return w1 if first else w2
    return w2 if first else w1


def _lex_less(w1: DualVec, w2: DualVec) -> bool:
    if is_exact(w1.u) and is_exact(w2.u):
        u_tie = w1.u == w2.u
    else:
        u_tie = scalar_eq(w1.u, w2.u)
    if not u_tie:
        return w1.u < w2.u
    return w1.v < w2.v
