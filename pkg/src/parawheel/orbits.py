"""Level curves and spokes of the five rotation wheels.

Each case pairs a modulus (whose level sets are the blue orbit curves)
with an argument (whose constant sets are the green spokes):

=====  ====================  =====================
case   modulus               constant-argument set
=====  ====================  =====================
E      x**2 + y**2           ray at polar angle
P0     x (trivial polar)     line through origin of given slope
P      x**2 - y              vertical line x = angle
P'     x**2 / (y + 1)        vertical line x = 1/angle
H      x**2 - y**2           ray through (cosh a, sinh a)
=====  ====================  =====================

Parabolas are sampled by sweeping x and solving the level equation for
y, so every emitted point satisfies its defining equation to machine
accuracy; output is deterministic for a fixed configuration.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

Point = tuple[float, float]


class FigureCase(Enum):
    E = "E"
    P0 = "P0"
    P = "P"
    PP = "Pp"
    H = "H"


# Orbit families used when no explicit levels are requested.  P and P'
# follow the printed wheel figures: parabolas u**2 - v = 1 - i/2 for
# i = 0..5, and confocal parabolas u**2/(v+1) = 1/(i**3/2 + 1) for
# i = 0..4; E and H use radii-squared 0.04*i**2 around the unit rim.
DEFAULT_LEVELS: dict[FigureCase, tuple[float, ...]] = {
    FigureCase.E: tuple(0.04 * i * i for i in range(6)),
    FigureCase.H: tuple(-0.04 * i * i for i in range(6)),
    FigureCase.P: tuple(1.0 - 0.5 * i for i in range(6)),
    FigureCase.PP: tuple(1.0 / (0.5 * i**3 + 1.0) for i in range(5)),
    FigureCase.P0: (-1.0, -0.5, 0.5, 1.0),
}

DEFAULT_SPOKES: dict[FigureCase, tuple[float, ...]] = {
    FigureCase.E: tuple(k * math.pi / 6 for k in range(12)),
    FigureCase.H: tuple(-2.0 + 0.5 * k for k in range(9)),
    FigureCase.P: tuple(-1.5 + 0.5 * k for k in range(7)),
    FigureCase.PP: (-2.0, -1.5, -1.0, -0.5, 0.5, 1.0, 1.5, 2.0),
    FigureCase.P0: tuple(-1.5 + 0.5 * k for k in range(7)),
}

DEFAULT_RANGE = (-1.5, 1.5, -2.0, 2.0)


@dataclass(frozen=True)
class PlotConfig:
    """What to draw: one case, its levels and spokes, and the window."""

    case: FigureCase
    levels: tuple[float, ...] = ()
    spokes: tuple[float, ...] = ()
    samples: int = 256
    window: tuple[float, float, float, float] = DEFAULT_RANGE
    fmt: str = "csv"

    def __post_init__(self) -> None:
        if self.samples < 2:
            raise ValueError("samples must be at least 2")
        xmin, xmax, ymin, ymax = self.window
        if not (xmin < xmax and ymin < ymax):
            raise ValueError("window must satisfy xmin < xmax and ymin < ymax")
        if self.fmt not in ("csv", "svg"):
            raise ValueError(f"format must be csv or svg, got {self.fmt!r}")


class Curve(NamedTuple):
    kind: str  # "orbit" or "spoke"
    value: float  # the level or the angle
    points: list[Point]


def level_value(case: FigureCase, x: float, y: float) -> float:
    """Evaluate the case's modulus at a plane point."""
    if case is FigureCase.E:
        return x * x + y * y
    if case is FigureCase.H:
        return x * x - y * y
    if case is FigureCase.P:
        return x * x - y
    if case is FigureCase.PP:
        if y == -1.0:
            raise ZeroDivisionError("modulus undefined on the line y = -1")
        return x * x / (y + 1.0)
    return x  # P0: the trivial signed modulus


def _linspace(a: float, b: float, n: int) -> list[float]:
    step = (b - a) / (n - 1)
    return [a + step * k for k in range(n - 1)] + [b]


def _clip(points: Iterable[Point], window) -> list[Point]:
    xmin, xmax, ymin, ymax = window
    return [
        (x, y) for x, y in points if xmin <= x <= xmax and ymin <= y <= ymax
    ]


def sample_orbit(case: FigureCase, level: float, config: PlotConfig) -> list[Point]:
    """Points of the modulus level set inside the window.

    A level that misses the window yields an empty list; a level outside
    the case's admissible range (negative for E) raises ``ValueError``.
    """
    xmin, xmax, ymin, ymax = config.window
    n = config.samples
    level = float(level)
    if case is FigureCase.E:
        if level < 0:
            raise ValueError("circle level sets need a nonnegative level")
        r = math.sqrt(level)
        ts = _linspace(0.0, 2.0 * math.pi, n)
        pts = [(r * math.cos(t), r * math.sin(t)) for t in ts]
    elif case is FigureCase.H:
        if level > 0:
            # Left/right branch pair x = +-sqrt(level + y**2).
            ys = _linspace(ymin, ymax, n)
            pts = [(math.sqrt(level + y * y), y) for y in ys]
            pts += [(-math.sqrt(level + y * y), y) for y in ys]
        elif level < 0:
            xs = _linspace(xmin, xmax, n)
            pts = [(x, math.sqrt(x * x - level)) for x in xs]
            pts += [(x, -math.sqrt(x * x - level)) for x in xs]
        else:
            xs = _linspace(xmin, xmax, n)
            pts = [(x, x) for x in xs] + [(x, -x) for x in xs]
    elif case is FigureCase.P:
        xs = _linspace(xmin, xmax, n)
        pts = [(x, x * x - level) for x in xs]
    elif case is FigureCase.PP:
        if level == 0:
            pts = [(0.0, y) for y in _linspace(ymin, ymax, n)]
        else:
            xs = _linspace(xmin, xmax, n)
            pts = [(x, x * x / level - 1.0) for x in xs]
    else:  # P0: a single vertical line at the signed level
        pts = [(level, y) for y in _linspace(ymin, ymax, n)]
    return _clip(pts, config.window)


def sample_spokes(case: FigureCase, angle: float, config: PlotConfig) -> list[Point]:
    """Points of the constant-argument set for the given angle."""
    xmin, xmax, ymin, ymax = config.window
    n = config.samples
    angle = float(angle)
    if case is FigureCase.E:
        reach = math.hypot(max(abs(xmin), abs(xmax)), max(abs(ymin), abs(ymax)))
        ts = _linspace(0.0, reach, n)
        pts = [(t * math.cos(angle), t * math.sin(angle)) for t in ts]
    elif case is FigureCase.H:
        reach = max(abs(xmin), abs(xmax), abs(ymin), abs(ymax))
        ts = _linspace(0.0, reach, n)
        pts = [(t * math.cosh(angle), t * math.sinh(angle)) for t in ts]
    elif case is FigureCase.P:
        pts = [(angle, y) for y in _linspace(ymin, ymax, n)]
    elif case is FigureCase.PP:
        if angle == 0:
            return []  # the zero-argument spoke sits at infinity
        x = 1.0 / angle
        pts = [(x, y) for y in _linspace(ymin, ymax, n)]
    else:  # P0: line through the origin with slope = angle
        pts = [(x, angle * x) for x in _linspace(xmin, xmax, n)]
    return _clip(pts, config.window)


def collect_curves(config: PlotConfig) -> list[Curve]:
    """All orbits then all spokes of the configuration, in input order."""
    curves = [
        Curve("orbit", float(lv), sample_orbit(config.case, lv, config))
        for lv in config.levels
    ]
    curves += [
        Curve("spoke", float(sp), sample_spokes(config.case, sp, config))
        for sp in config.spokes
    ]
    return curves


def _fmt(x: float) -> str:
    return format(float(x), ".14e")


def _emit_csv(config: PlotConfig, curves: list[Curve]) -> bytes:
    lines = ["case,kind,level_or_angle,x,y"]
    name = config.case.value
    for kind, value, points in curves:
        for x, y in points:
            lines.append(f"{name},{kind},{_fmt(value)},{_fmt(x)},{_fmt(y)}")
    return ("\n".join(lines) + "\n").encode("ascii")


_SVG_COLORS = {"orbit": "#1f77b4", "spoke": "#2ca02c"}


def _emit_svg(config: PlotConfig, curves: list[Curve]) -> bytes:
    xmin, xmax, ymin, ymax = config.window
    width, height = xmax - xmin, ymax - ymin
    stroke = width / 300.0
    parts = [
        '<svg xmlns="http://www.w3.org/2000/svg" '
        f'viewBox="{xmin:g} {ymin:g} {width:g} {height:g}">',
        # flip the y axis so the picture is in the usual orientation
        f'<g fill="none" stroke-width="{stroke:g}" '
        f'transform="translate(0,{ymin + ymax:g}) scale(1,-1)">',
    ]
    for kind, value, points in curves:
        if not points:
            continue
        d = "M " + " L ".join(f"{x:.8g} {y:.8g}" for x, y in points)
        parts.append(
            f'<path class="{kind}" data-value="{value:g}" '
            f'stroke="{_SVG_COLORS[kind]}" d="{d}"/>'
        )
    parts.append("</g>")
    parts.append("</svg>")
    return ("\n".join(parts) + "\n").encode("ascii")


def emit(config: PlotConfig) -> bytes:
    """Serialise the configured curves as CSV rows or an SVG document."""
    curves = collect_curves(config)
    if config.fmt == "csv":
        return _emit_csv(config, curves)
    return _emit_svg(config, curves)
