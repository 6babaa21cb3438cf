"""Exception types raised by the algebra and geometry layers."""


class WheelError(Exception):
    """Base class for all library errors."""


class ZoneMismatch(WheelError):
    """Binary operation on planar numbers living in different zones."""


class TagMismatch(WheelError):
    """Binary operation on dual vectors with different subgroup tags."""


class BackendMismatch(WheelError):
    """Exact scalar requested where the value is transcendental."""


class ZeroDivisor(WheelError, ZeroDivisionError):
    """Inversion of an element whose squared modulus vanishes."""


class DegenerateMap(WheelError):
    """A matrix annihilated a homogeneous point (both components zero)."""


class NormUndefined(WheelError):
    """The parabolic modulus has a vanishing denominator at this point."""


class IdealPoint(WheelError):
    """The result escapes to an ideal element the caller did not admit."""


class ZeroScale(WheelError):
    """Scalar multiplication by zero where the formula divides by it."""


class NoDecomposition(WheelError):
    """The group element is not in the image of the section-times-subgroup map."""


class BranchCut(WheelError):
    """Fractional power has no principal value on this element."""
