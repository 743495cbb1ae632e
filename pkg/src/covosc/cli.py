"""Deterministic command-line emitters for scans, grids, and observables.

Every command writes a single CSV or JSON file whose bytes depend only on
the configuration: a provenance header echoes the config, rows carry the
numbers, and a footer records the internal cross-check metrics.  Exit codes:
0 success, 1 usage error, 2 a numerical cross-check missed its tolerance,
3 output could not be written.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .covariant import (
    momentum_wavefunction,
    normalization_quadrature,
    spacetime_wavefunction,
)
from .errors import DomainError, QuadratureError
from .oscillator import mode_cutoff
from .parton import (
    PROTON_MASS_GEV,
    axis_scales,
    boost_entropy,
    ellipse_samples,
    interaction_time_ratio,
    rapidity_from_energy,
)
from .reduced import (
    ReducedState,
    density_quadrature,
    density_series,
    effective_temperature,
    entropy,
    entropy_from_weights,
    purity,
    purity_series,
)

OUT_DIR_ENV = "COVOSC_OUT_DIR"
ELLIPSE_POINTS = 64

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_TOLERANCE = 2
EXIT_IO = 3


class UsageError(Exception):
    """Bad command line or inconsistent flags."""


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on bad flags; route through UsageError so
    # the tool can keep 2 for numerical-tolerance failures
    def error(self, message):
        raise UsageError(message)


def _parse_range(text: str) -> list:
    parts = text.split(":")
    if len(parts) != 3:
        raise UsageError(f"range must be MIN:MAX:STEP, got {text!r}")
    try:
        lo, hi, step = (float(p) for p in parts)
    except ValueError as exc:
        raise UsageError(f"range must be numeric MIN:MAX:STEP, got {text!r}") from exc
    if not all(math.isfinite(x) for x in (lo, hi, step)):
        raise UsageError(f"range bounds must be finite, got {text!r}")
    if step <= 0.0:
        raise UsageError(f"range step must be positive, got {step}")
    if hi < lo:
        raise UsageError(f"empty range: max {hi} is below min {lo}")
    count = int(math.floor((hi - lo) / step + 1e-9)) + 1
    return [lo + i * step for i in range(count)]


def _resolve_etas(args, command: str, extra: str = "") -> list:
    if args.eta is not None and args.eta_range is not None:
        raise UsageError("--eta and --eta-range are mutually exclusive")
    if args.eta is not None:
        return [float(args.eta)]
    if args.eta_range is not None:
        return _parse_range(args.eta_range)
    raise UsageError(f"{command} requires --eta or --eta-range{extra}")


def cmd_entropy_scan(args):
    etas = _resolve_etas(args, "entropy-scan")
    tol = args.tol_series
    config = {
        "eta": args.eta,
        "eta_range": args.eta_range,
        "kmax": args.kmax,
        "tol_series": tol,
        "format": args.format,
    }
    columns = ["eta", "entropy", "purity", "temperature"]
    rows = []
    worst_entropy = 0.0
    worst_purity = 0.0
    for eta in etas:
        k_max = args.kmax if args.kmax is not None else mode_cutoff(eta, 1e-14)
        state = ReducedState.from_eta(eta, k_max)
        entropy_closed = entropy(eta)
        purity_closed = purity(eta)
        temperature = effective_temperature(eta).temperature
        rows.append([float(eta), entropy_closed, purity_closed, temperature])
        worst_entropy = max(
            worst_entropy, abs(entropy_closed - entropy_from_weights(state))
        )
        worst_purity = max(worst_purity, abs(purity_closed - purity_series(state)))
    footer = {
        "max_entropy_series_diff": worst_entropy,
        "max_purity_series_diff": worst_purity,
        "tol_series": tol,
    }
    failures = []
    if worst_entropy > tol:
        failures.append(
            f"entropy series disagrees with closed form by {worst_entropy:.3e} "
            f"(tolerance {tol:.3e})"
        )
    if worst_purity > tol:
        failures.append(
            f"purity series disagrees with closed form by {worst_purity:.3e} "
            f"(tolerance {tol:.3e})"
        )
    return config, columns, rows, footer, failures


def cmd_density_grid(args):
    grid = _parse_range(args.grid)
    config = {
        "eta": args.eta,
        "grid": args.grid,
        "kmax": args.kmax,
        "tol_series": args.tol_series,
        "tol_quad": args.tol_quad,
        "format": args.format,
    }
    state = ReducedState.from_eta(args.eta, args.kmax)
    points = np.asarray(grid)
    series = density_series(state, points[:, None], points[None, :])
    columns = ["x", "xp", "series", "quadrature", "abs_diff"]
    rows = []
    max_diff = 0.0
    for i, x in enumerate(grid):
        for j, xp in enumerate(grid):
            by_quad = density_quadrature(args.eta, x, xp, abs_tol=args.tol_quad)
            diff = abs(float(series[i, j]) - by_quad)
            max_diff = max(max_diff, diff)
            rows.append([x, xp, float(series[i, j]), by_quad, diff])
    footer = {"max_abs_diff": max_diff, "tol_series": args.tol_series}
    failures = []
    if max_diff > args.tol_series:
        failures.append(
            f"series and quadrature disagree by {max_diff:.3e} "
            f"(tolerance {args.tol_series:.3e})"
        )
    return config, columns, rows, footer, failures


def cmd_squeeze(args):
    grid = _parse_range(args.grid)
    config = {
        "eta": args.eta,
        "grid": args.grid,
        "ellipse_points": ELLIPSE_POINTS,
        "tol_quad": args.tol_quad,
        "format": args.format,
    }
    columns = ["section", "a", "b", "amplitude"]
    rows = []
    for z in grid:
        for t in grid:
            rows.append(["spacetime", z, t, spacetime_wavefunction(args.eta, z, t)])
    for qz in grid:
        for q0 in grid:
            rows.append(["momentum", qz, q0, momentum_wavefunction(args.eta, qz, q0)])
    for z, t in ellipse_samples(args.eta, ELLIPSE_POINTS):
        rows.append(
            ["spacetime-ellipse", float(z), float(t),
             spacetime_wavefunction(args.eta, z, t)]
        )
        # the momentum-side contour is the coordinate-side one relabeled
        qz, q0 = -float(z), float(t)
        rows.append(
            ["momentum-ellipse", qz, q0, momentum_wavefunction(args.eta, qz, q0)]
        )
    norm = normalization_quadrature(args.eta)
    error = abs(norm - 1.0)
    footer = {"normalization": norm, "normalization_error": error,
              "tol_quad": args.tol_quad}
    failures = []
    if error > args.tol_quad:
        failures.append(
            f"normalization off by {error:.3e} (tolerance {args.tol_quad:.3e})"
        )
    return config, columns, rows, footer, failures


def cmd_parton(args):
    sources = [args.eta is not None, args.eta_range is not None,
               args.energy is not None]
    if sum(sources) > 1:
        raise UsageError("--eta, --eta-range and --energy are mutually exclusive")
    if args.energy is not None:
        pairs = [(args.energy, rapidity_from_energy(args.energy, args.mass).value)]
    else:
        pairs = [(None, eta) for eta in _resolve_etas(args, "parton", " or --energy")]
    config = {
        "eta": args.eta,
        "eta_range": args.eta_range,
        "energy": args.energy,
        "mass": args.mass,
        "bridge": args.bridge,
        "tol_series": args.tol_series,
        "format": args.format,
    }
    columns = ["energy", "eta", "time_ratio", "entropy"]
    rows = []
    worst = 0.0
    for energy, eta in pairs:
        ratio = interaction_time_ratio(eta)
        scales = axis_scales(eta)
        worst = max(
            worst,
            abs(ratio - scales.minor**2) / max(1.0, abs(ratio)),
            abs(scales.major * scales.minor - 1.0),
        )
        rows.append([energy, float(eta), ratio, boost_entropy(eta, args.bridge)])
    footer = {"max_scale_check_diff": worst, "tol_series": args.tol_series}
    failures = []
    if worst > args.tol_series:
        failures.append(
            f"axis-scale cross-check off by {worst:.3e} "
            f"(tolerance {args.tol_series:.3e})"
        )
    return config, columns, rows, footer, failures


_COMMANDS = {
    "entropy-scan": cmd_entropy_scan,
    "density-grid": cmd_density_grid,
    "squeeze": cmd_squeeze,
    "parton": cmd_parton,
}


def _format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, str):
        return value
    if isinstance(value, (int, np.integer)) and not isinstance(value, bool):
        return str(int(value))
    return repr(float(value))


def _emit(path: Path, fmt: str, command: str, config, columns, rows, footer):
    if fmt == "csv":
        lines = [
            "# "
            + json.dumps(
                {"command": command, "config": config, "version": __version__},
                sort_keys=True,
            ),
            ",".join(columns),
        ]
        lines.extend(",".join(_format_cell(v) for v in row) for row in rows)
        lines.append("# " + json.dumps({"footer": footer}, sort_keys=True))
        text = "\n".join(lines) + "\n"
    else:
        document = {
            "command": command,
            "version": __version__,
            "config": config,
            "columns": columns,
            "rows": [[None if v is None else v for v in row] for row in rows],
            "footer": footer,
        }
        text = json.dumps(document, indent=2, sort_keys=True) + "\n"
    path.write_text(text, encoding="utf-8")


def _resolve_out(args) -> Path:
    if args.out is not None:
        return Path(args.out)
    base = os.environ.get(OUT_DIR_ENV, ".")
    suffix = "csv" if args.format == "csv" else "json"
    return Path(base) / f"{args.command}.{suffix}"


def _add_common(parser) -> None:
    parser.add_argument(
        "--format", choices=("csv", "json"), default="csv",
        help="output format (default: csv)",
    )
    parser.add_argument(
        "--out", default=None,
        help=f"output path (default: ${OUT_DIR_ENV}/<command>.<ext>, "
             "falling back to the working directory)",
    )


def _build_parser() -> _Parser:
    parser = _Parser(
        prog="covosc",
        description="Squeezed-state scans and light-cone boost observables.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    scan = sub.add_parser(
        "entropy-scan",
        help="entropy, purity and effective temperature over a rapidity range",
    )
    scan.add_argument("--eta", type=float, help="single coupling rapidity")
    scan.add_argument("--eta-range", dest="eta_range", metavar="MIN:MAX:STEP",
                      help="inclusive rapidity range (use --eta-range=MIN:MAX:STEP)")
    scan.add_argument("--kmax", type=int, help="series order override")
    scan.add_argument("--tol-series", dest="tol_series", type=float, default=1e-10,
                      help="closed-form vs series cross-check tolerance")
    _add_common(scan)

    grid = sub.add_parser(
        "density-grid",
        help="reduced density matrix on a grid, series vs quadrature",
    )
    grid.add_argument("--eta", type=float, required=True,
                      help="coupling rapidity")
    grid.add_argument("--grid", default="-2:2:0.5", metavar="MIN:MAX:STEP",
                      help="grid for both axes (use --grid=MIN:MAX:STEP)")
    grid.add_argument("--kmax", type=int, help="series order override")
    grid.add_argument("--tol-series", dest="tol_series", type=float, default=1e-8,
                      help="series vs quadrature agreement tolerance")
    grid.add_argument("--tol-quad", dest="tol_quad", type=float, default=1e-10,
                      help="requested quadrature accuracy per point")
    _add_common(grid)

    squeeze = sub.add_parser(
        "squeeze",
        help="boosted wave function on a grid plus 1-sigma contour samples",
    )
    squeeze.add_argument("--eta", type=float, required=True,
                         help="boost rapidity")
    squeeze.add_argument("--grid", default="-2:2:0.5", metavar="MIN:MAX:STEP",
                         help="grid for both coordinates (use --grid=MIN:MAX:STEP)")
    squeeze.add_argument("--tol-quad", dest="tol_quad", type=float, default=1e-8,
                         help="normalization cross-check tolerance")
    _add_common(squeeze)

    parton = sub.add_parser(
        "parton",
        help="boost-squeeze observables by rapidity or beam energy",
    )
    parton.add_argument("--eta", type=float, help="single boost rapidity")
    parton.add_argument("--eta-range", dest="eta_range", metavar="MIN:MAX:STEP",
                        help="inclusive rapidity range (use --eta-range=MIN:MAX:STEP)")
    parton.add_argument("--energy", type=float,
                        help="beam energy in GeV (rapidity from arccosh(E/m))")
    parton.add_argument("--mass", type=float, default=PROTON_MASS_GEV,
                        help=f"beam rest mass in GeV (default {PROTON_MASS_GEV})")
    parton.add_argument("--bridge", choices=("factor2", "identity"),
                        default="factor2",
                        help="boost-to-coupling rapidity convention for entropy")
    parton.add_argument("--tol-series", dest="tol_series", type=float,
                        default=1e-12, help="axis-scale cross-check tolerance")
    _add_common(parton)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help exits through argparse
        code = exc.code if exc.code is not None else 0
        return code if isinstance(code, int) else EXIT_USAGE

    handler = _COMMANDS[args.command]
    try:
        config, columns, rows, footer, failures = handler(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DomainError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuadratureError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_TOLERANCE

    out_path = _resolve_out(args)
    try:
        _emit(out_path, args.format, args.command, config, columns, rows, footer)
    except OSError as exc:
        print(f"cannot write {out_path}: {exc}", file=sys.stderr)
        return EXIT_IO

    if failures:
        for failure in failures:
            print(f"tolerance failure: {failure}", file=sys.stderr)
        return EXIT_TOLERANCE
    print(out_path)
    return EXIT_OK


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
