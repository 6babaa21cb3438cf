"""Matplotlib rendering of the wheel figures.

Companion to the CSV/SVG emitter: the same sampled curves, drawn to an
image file (blue orbits, green spokes).
"""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .orbits import (
    DEFAULT_LEVELS,
    DEFAULT_SPOKES,
    Curve,
    FigureCase,
    PlotConfig,
    collect_curves,
)

_COLORS = {"orbit": "#1f77b4", "spoke": "#2ca02c"}


def render(config: PlotConfig, path: str, curves: list[Curve] | None = None) -> None:
    """Draw the configured curves and save them to ``path``."""
    if curves is None:
        curves = collect_curves(config)
    xmin, xmax, ymin, ymax = config.window
    fig, ax = plt.subplots(figsize=(4.0, 4.0 * (ymax - ymin) / (xmax - xmin)))
    for kind, _, points in curves:
        if not points:
            continue
        ax.plot(
            [p[0] for p in points],
            [p[1] for p in points],
            color=_COLORS[kind],
            linewidth=0.8,
        )
    ax.set_xlim(xmin, xmax)
    ax.set_ylim(ymin, ymax)
    ax.set_aspect("equal")
    ax.set_title(config.case.value)
    ax.axhline(0, color="0.8", linewidth=0.5, zorder=0)
    ax.axvline(0, color="0.8", linewidth=0.5, zorder=0)
    fig.savefig(path, dpi=150, bbox_inches="tight")
    plt.close(fig)


def default_config(case: FigureCase, samples: int = 256) -> PlotConfig:
    """The case's wheel with its standard orbit family and spokes."""
    return PlotConfig(
        case=case,
        levels=DEFAULT_LEVELS[case],
        spokes=DEFAULT_SPOKES[case],
        samples=samples,
    )
