"""Command-line wheel emitter.

Default mode streams one case's orbits and spokes as CSV or SVG::

    parawheel --case P --levels -1,0,1 --samples 128 --format csv --out p.csv

An optional ``--figure`` renders the same curves with matplotlib next to
the delimited output.  ``parawheel report`` writes the whole five-wheel
gallery (CSV + PNG per case) into a directory.

Exit codes: 0 on success, 2 on a configuration error.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .orbits import DEFAULT_LEVELS, DEFAULT_RANGE, FigureCase, PlotConfig, collect_curves, emit

_CASES = [c.value for c in FigureCase]


def _float_list(text: str) -> list[float]:
    text = text.strip()
    if not text:
        return []
    try:
        return [float(tok) for tok in text.split(",")]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma list of numbers: {text!r}") from exc


def _range4(text: str) -> tuple[float, float, float, float]:
    vals = _float_list(text)
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("range needs xmin,xmax,ymin,ymax")
    return tuple(vals)  # type: ignore[return-value]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="parawheel",
        description="Emit level curves and spokes of the planar rotation wheels.",
    )
    sub = parser.add_subparsers(dest="command")

    emit_p = sub.add_parser("emit", help="stream one case as CSV or SVG (default)")
    emit_p.add_argument("--case", required=True, choices=_CASES)
    emit_p.add_argument(
        "--levels",
        type=_float_list,
        default=None,
        help="comma list of orbit levels (default: the case's standard family)",
    )
    emit_p.add_argument(
        "--spokes",
        type=_float_list,
        default=None,
        help="comma list of spoke angles (default: none)",
    )
    emit_p.add_argument("--samples", type=int, default=256)
    emit_p.add_argument(
        "--range",
        type=_range4,
        default=DEFAULT_RANGE,
        metavar="XMIN,XMAX,YMIN,YMAX",
    )
    emit_p.add_argument("--format", choices=("csv", "svg"), default="csv")
    emit_p.add_argument("--out", default="-", help="output path, or - for stdout")
    emit_p.add_argument(
        "--figure",
        default=None,
        metavar="PATH",
        help="also render the curves with matplotlib to this image file",
    )

    report_p = sub.add_parser(
        "report", help="write CSV plus rendered PNG for all five wheels"
    )
    report_p.add_argument("--outdir", default="wheel-report")
    report_p.add_argument("--samples", type=int, default=256)
    return parser


def _run_emit(args: argparse.Namespace) -> int:
    case = FigureCase(args.case)
    levels = args.levels if args.levels is not None else DEFAULT_LEVELS[case]
    spokes = args.spokes if args.spokes is not None else []
    config = PlotConfig(
        case=case,
        levels=tuple(levels),
        spokes=tuple(spokes),
        samples=args.samples,
        window=tuple(args.range),
        fmt=args.format,
    )
    payload = emit(config)
    if args.out == "-":
        sys.stdout.buffer.write(payload)
    else:
        Path(args.out).write_bytes(payload)
    if args.figure:
        from .figures import render

        render(config, args.figure, collect_curves(config))
    return 0


def _run_report(args: argparse.Namespace) -> int:
    from .figures import default_config, render

    outdir = Path(args.outdir)
    outdir.mkdir(parents=True, exist_ok=True)
    for case in FigureCase:
        config = default_config(case, samples=args.samples)
        (outdir / f"wheel_{case.value}.csv").write_bytes(emit(config))
        render(config, str(outdir / f"wheel_{case.value}.png"))
    print(f"wrote {2 * len(FigureCase)} files to {outdir}", file=sys.stderr)
    return 0


def _glue_values(argv: list[str]) -> list[str]:
    """Join list-valued flags with their argument so that negative
    levels such as ``--levels -1,-0.75`` survive argparse."""
    listy = ("--levels", "--spokes", "--range")
    out: list[str] = []
    i = 0
    while i < len(argv):
        if argv[i] in listy and i + 1 < len(argv):
            out.append(argv[i] + "=" + argv[i + 1])
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _glue_values(list(sys.argv[1:] if argv is None else argv))
    if argv and argv[0] not in ("emit", "report", "-h", "--help"):
        argv = ["emit"] + argv
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command is None:
        parser.print_help(sys.stderr)
        return 2
    try:
        if args.command == "emit":
            return _run_emit(args)
        return _run_report(args)
    except (ValueError, OSError) as exc:
        print(f"parawheel: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
