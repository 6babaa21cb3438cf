"""Exact planar rotation algebra and its wheel figures.

One imaginary unit with iota**2 in {-1, 0, +1} gives the complex, dual
and double numbers; Moebius actions of the SL(2,R) subgroups K, N, N'
and A give the elliptic, parabolic and hyperbolic rotations.  The
package carries the exact (rational) arithmetic for all of it, the
non-trivial parabolic vector algebra reconstructed from the rotation
invariants, the induced representations built from the subgroup
characters, and a CLI that draws the orbit/spoke wheel figures.
"""

from .errors import (
    BackendMismatch,
    BranchCut,
    DegenerateMap,
    IdealPoint,
    NoDecomposition,
    NormUndefined,
    TagMismatch,
    WheelError,
    ZeroDivisor,
    ZeroScale,
    ZoneMismatch,
)
from .hypernum import ELLIPTIC, HYPERBOLIC, PARABOLIC, ZONES, HyperNumber, exp_imag
from .matrices import (
    SL2,
    Mat2H,
    MoebiusPoint,
    Subgroup,
    cayley_conjugate,
    cayley_matrix,
    generator,
    mat2_mul,
    moebius_apply,
    subgroup_element,
)
from .orbits import (
    DEFAULT_LEVELS,
    DEFAULT_SPOKES,
    FigureCase,
    PlotConfig,
    collect_curves,
    emit,
    level_value,
    sample_orbit,
    sample_spokes,
)
from .parabolic import DualVec, LinCoord, tropical_add
from .representations import (
    DualAffineMap,
    OmegaPoint,
    ReprParams,
    TestFunction,
    character,
    decompose,
    g_action,
    r_factor,
    rep_apply,
    s_map,
)
from .scalars import EPS, INF, ExtScalar, Scalar

__version__ = "0.1.0"

__all__ = [
    "BackendMismatch",
    "BranchCut",
    "DegenerateMap",
    "IdealPoint",
    "NoDecomposition",
    "NormUndefined",
    "TagMismatch",
    "WheelError",
    "ZeroDivisor",
    "ZeroScale",
    "ZoneMismatch",
    "ELLIPTIC",
    "HYPERBOLIC",
    "PARABOLIC",
    "ZONES",
    "HyperNumber",
    "exp_imag",
    "SL2",
    "Mat2H",
    "MoebiusPoint",
    "Subgroup",
    "cayley_conjugate",
    "cayley_matrix",
    "generator",
    "mat2_mul",
    "moebius_apply",
    "subgroup_element",
    "DEFAULT_LEVELS",
    "DEFAULT_SPOKES",
    "FigureCase",
    "PlotConfig",
    "collect_curves",
    "emit",
    "level_value",
    "sample_orbit",
    "sample_spokes",
    "DualVec",
    "LinCoord",
    "tropical_add",
    "DualAffineMap",
    "OmegaPoint",
    "ReprParams",
    "TestFunction",
    "character",
    "decompose",
    "g_action",
    "r_factor",
    "rep_apply",
    "s_map",
    "EPS",
    "INF",
    "ExtScalar",
    "Scalar",
]
