"""Command-line front end emitting scan data as deterministic CSV or JSON.

Every command writes one table: a header of glossary symbols and one
record per scan point, all floats serialized with 17 significant digits.
Identical invocations produce byte-identical files; timing metadata is
opt-in for that reason. Exit status is 0 on success, 2 for an invalid
configuration, 3 when the numerics refuse the requested point.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import CatGateError
from .gate import GateParams, perfect_cat
from .metrics import (
    AcceptanceWindow,
    fidelity_cat_scan,
    fidelity_scl_scan,
    mixed_fidelity,
    outcome_density,
    window_probability,
)
from .numerics import Grid1D
from .phase_map import PhasePoint, map_disk
from .states import CoherentParams
from .wigner import (
    default_axes,
    wigner_cat_reference,
    wigner_mehler,
    wigner_output_quadrature,
)

__all__ = ["RunConfig", "run", "main"]


@dataclass(frozen=True)
class RunConfig:
    """One fully resolved invocation: command, its parameters, destination."""

    command: str
    parameters: dict = field(repr=False)
    output_path: str | None
    format: str
    timings: bool = False


def _fmt(value: float) -> str:
    return "%.17g" % value


def _int_list(text: str, flag: str) -> list[int]:
    """Parse '1,5,15' or '1:25' (inclusive range) or a mix of both."""
    out: list[int] = []
    try:
        for token in text.split(","):
            if ":" in token:
                lo, hi = token.split(":")
                out.extend(range(int(lo), int(hi) + 1))
            else:
                out.append(int(token))
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects integers like 1,5,15 or 1:25")
    if not out or any(v < 0 for v in out):
        raise argparse.ArgumentTypeError(f"{flag} expects nonnegative integers")
    return out


def _float_list(text: str, flag: str) -> list[float]:
    try:
        return [float(token) for token in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects numbers like 0,1.5,2")


def _axis_spec(text: str, flag: str) -> Grid1D:
    parts = text.split(":")
    if len(parts) != 3:
        raise argparse.ArgumentTypeError(f"{flag} expects min:max:count")
    try:
        lo, hi, count = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise argparse.ArgumentTypeError(f"{flag} expects min:max:count")
    if count < 2:
        raise argparse.ArgumentTypeError(f"{flag} needs count >= 2")
    try:
        return Grid1D(lo, hi, count)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"{flag}: {exc}")


def _axis_echo(axis: Grid1D) -> dict:
    return {"min": axis.x_min, "max": axis.x_max, "count": axis.count}


def _run_fidelity_scan(p: dict):
    rows = []
    for x0 in p["x0"]:
        for n in p["n"]:
            rows.append([n, p["y_m"], x0, p["p0"], fidelity_scl_scan(n, p["y_m"], x0, p["p0"])])
    return ["n", "y_m", "x0", "p0", "F_scl"], rows, {}


def _run_cat_fidelity(p: dict):
    rows = []
    for x0 in p["x0"]:
        y_m = x0 if p["ym_equals_x0"] else p["y_m"]
        for n in p["n"]:
            rows.append([n, y_m, x0, p["p0"], fidelity_cat_scan(n, y_m, x0, p["p0"])])
    return ["n", "y_m", "x0", "p0", "F_cat"], rows, {}


def _run_wigner(p: dict):
    params = GateParams(p["n"], p["y_m"])
    inp = CoherentParams(p["x0"], p["p0"])
    x_default, p_default = default_axes(params, inp)
    x_axis = p["x_axis"] or x_default
    p_axis = p["p_axis"] or p_default

    columns = ["x", "p"]
    grids = []
    metadata: dict = {"engine": p["engine"]}
    if p["engine"] in ("mehler", "both"):
        columns.append("W_mehler" if p["engine"] == "both" else "W")
        grids.append(wigner_mehler(params, inp, x_axis, p_axis))
    if p["engine"] in ("quadrature", "both"):
        columns.append("W_quadrature" if p["engine"] == "both" else "W")
        grids.append(wigner_output_quadrature(params, inp, x_axis, p_axis))
    if p["engine"] == "both":
        diff = float(np.max(np.abs(grids[0].values - grids[1].values)))
        metadata["max_abs_difference"] = diff
    if p["with_cat"]:
        columns.append("W_cat")
        grids.append(wigner_cat_reference(perfect_cat(params, inp), x_axis, p_axis))

    xs, ps = x_axis.xs, p_axis.xs
    rows = []
    for i in range(x_axis.count):
        for j in range(p_axis.count):
            rows.append([float(xs[i]), float(ps[j])] + [float(g.values[i, j]) for g in grids])
    return columns, rows, metadata


def _run_prob_density(p: dict):
    ys = [p["y_m"]] if p["y_m"] is not None else list(p["y_axis"].xs)
    rows = []
    for n in p["n"]:
        for y in ys:
            rows.append([n, float(y), p["x0"], outcome_density(n, p["x0"], float(y))])
    return ["n", "y_m", "x0", "P"], rows, {}


def _run_mixed_fidelity(p: dict):
    rows = []
    for n in p["n"]:
        for d in p["d"]:
            window = AcceptanceWindow(p["x0"], d)
            rows.append(
                [
                    n,
                    p["x0"],
                    d,
                    mixed_fidelity(n, p["x0"], window),
                    window_probability(n, p["x0"], window),
                ]
            )
    return ["n", "x0", "d", "F_mix", "P"], rows, {}


def _run_scl_map(p: dict):
    params = GateParams(p["n"], p["y_m"])
    disk = map_disk(params, PhasePoint(p["x0"], p["p0"]), p["radius"], p["samples"])
    rows = []
    for label, points in (("source", disk.source), ("upper", disk.upper), ("lower", disk.lower)):
        rows.extend([label, pt.q, pt.p] for pt in points)
    metadata = {
        "dropped": disk.dropped,
        "upper_count": len(disk.upper),
        "lower_count": len(disk.lower),
    }
    return ["branch", "q", "p"], rows, metadata


_HANDLERS = {
    "fidelity-scan": _run_fidelity_scan,
    "cat-fidelity": _run_cat_fidelity,
    "wigner": _run_wigner,
    "prob-density": _run_prob_density,
    "mixed-fidelity": _run_mixed_fidelity,
    "scl-map": _run_scl_map,
}


def _render_csv(columns: list[str], rows: list[list]) -> str:
    lines = [",".join(columns)]
    for row in rows:
        lines.append(",".join(v if isinstance(v, str) else _fmt(v) for v in row))
    return "\n".join(lines) + "\n"


def _json_text(value) -> str:
    """Serialize with %.17g floats; json.dumps would shorten them."""
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        return _fmt(value)
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(_json_text(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ",".join(json.dumps(str(k)) + ":" + _json_text(v) for k, v in value.items()) + "}"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def _render_json(config: RunConfig, columns, rows, metadata) -> str:
    document = {
        "config": {
            "command": config.command,
            "parameters": config.parameters,
            "format": config.format,
            "out": config.output_path,
        },
        "columns": columns,
        "rows": rows,
        "metadata": metadata,
    }
    return _json_text(document) + "\n"


def _echo_parameters(p: dict) -> dict:
    echo = {}
    for key, value in p.items():
        if isinstance(value, Grid1D):
            echo[key] = _axis_echo(value)
        else:
            echo[key] = value
    return echo


def run(config: RunConfig) -> int:
    """Execute one resolved invocation; returns the process exit status."""
    try:
        started = time.perf_counter()
        columns, rows, metadata = _HANDLERS[config.command](config.parameters)
        elapsed = time.perf_counter() - started
        if config.timings:
            metadata["timings"] = {"compute_seconds": elapsed}
        if config.format == "csv":
            text = _render_csv(columns, rows)
        else:
            echoed = RunConfig(
                command=config.command,
                parameters=_echo_parameters(config.parameters),
                output_path=config.output_path,
                format=config.format,
                timings=config.timings,
            )
            text = _render_json(echoed, columns, rows, metadata)
    except CatGateError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except ValueError as exc:
        print(f"invalid configuration: {exc}", file=sys.stderr)
        return 2
    if config.output_path is None:
        sys.stdout.write(text)
    else:
        with open(config.output_path, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    return 0


def _add_common(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--format", choices=("csv", "json"), default="csv", help="output format")
    sub.add_argument("--out", default=None, metavar="PATH", help="output file (default stdout)")
    sub.add_argument(
        "--timings",
        action="store_true",
        help="include wall-clock timings in JSON metadata (breaks byte-identical reruns)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="catgate",
        description="Measured-gate cat-state simulations: fidelity scans, "
        "outcome statistics, Wigner maps, phase-space mapping.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    fs = sub.add_parser("fidelity-scan", help="exact-vs-semiclassical fidelity over n and x0")
    fs.add_argument("--n", type=lambda s: _int_list(s, "--n"), required=True,
                    help="photon numbers, e.g. 1,5,15 or 1:25")
    fs.add_argument("--x0", type=lambda s: _float_list(s, "--x0"), default=[0.0],
                    help="input displacements (comma list)")
    fs.add_argument("--ym", type=float, default=0.0, help="homodyne outcome")
    fs.add_argument("--p0", type=float, default=0.0, help="input momentum")
    _add_common(fs)

    cf = sub.add_parser("cat-fidelity", help="exact-output vs ideal-cat fidelity")
    cf.add_argument("--n", type=lambda s: _int_list(s, "--n"), required=True,
                    help="photon numbers, e.g. 1,5,15 or 1:25")
    cf.add_argument("--x0", type=lambda s: _float_list(s, "--x0"), default=[0.0],
                    help="input displacements (comma list)")
    cf.add_argument("--ym", type=float, default=None, help="homodyne outcome (default 0)")
    cf.add_argument("--ym-equals-x0", action="store_true",
                    help="take the outcome equal to each x0 (the centered case)")
    cf.add_argument("--p0", type=float, default=0.0, help="input momentum")
    _add_common(cf)

    wg = sub.add_parser("wigner", help="output-state Wigner map on a grid")
    wg.add_argument("--n", type=int, required=True, help="resource photon number")
    wg.add_argument("--x0", type=float, default=0.0, help="input displacement")
    wg.add_argument("--p0", type=float, default=0.0, help="input momentum")
    wg.add_argument("--ym", type=float, default=0.0, help="homodyne outcome")
    wg.add_argument("--engine", choices=("mehler", "quadrature", "both"), default="mehler",
                    help="series engine, integration oracle, or both side by side")
    wg.add_argument("--with-cat", action="store_true",
                    help="append the ideal-cat reference Wigner column")
    wg.add_argument("--x-range", type=lambda s: _axis_spec(s, "--x-range"), default=None,
                    metavar="MIN:MAX:COUNT", help="x axis (default spans the output support)")
    wg.add_argument("--p-range", type=lambda s: _axis_spec(s, "--p-range"), default=None,
                    metavar="MIN:MAX:COUNT", help="p axis (default spans the output support)")
    _add_common(wg)

    pd = sub.add_parser("prob-density", help="homodyne outcome density")
    pd.add_argument("--n", type=lambda s: _int_list(s, "--n"), required=True,
                    help="photon numbers, e.g. 0,1,5")
    pd.add_argument("--x0", type=float, default=0.0, help="input displacement")
    pd.add_argument("--ym", type=float, default=None,
                    help="single outcome (omit to scan --x-range)")
    pd.add_argument("--x-range", type=lambda s: _axis_spec(s, "--x-range"), default=None,
                    metavar="MIN:MAX:COUNT",
                    help="outcome scan axis (default x0-5:x0+5:201)")
    _add_common(pd)

    mf = sub.add_parser("mixed-fidelity", help="window-averaged cat fidelity vs window width")
    mf.add_argument("--n", type=lambda s: _int_list(s, "--n"), required=True,
                    help="photon numbers, e.g. 1,5,15")
    mf.add_argument("--x0", type=float, default=0.0, help="input displacement and window center")
    mf.add_argument("--d", type=lambda s: _float_list(s, "--d"), required=True,
                    help="acceptance-window widths, e.g. 0.1,0.5,1,2")
    _add_common(mf)

    sm = sub.add_parser("scl-map", help="semiclassical image of an uncertainty disk")
    sm.add_argument("--n", type=int, required=True, help="resource photon number")
    sm.add_argument("--ym", type=float, default=0.0, help="homodyne outcome")
    sm.add_argument("--x0", type=float, default=0.0, help="disk center q")
    sm.add_argument("--p0", type=float, default=0.0, help="disk center p")
    sm.add_argument("--radius", type=float, default=1.0, help="disk radius")
    sm.add_argument("--samples", type=int, default=256, help="total lattice size (>= 8)")
    _add_common(sm)

    return parser


def _resolve(args: argparse.Namespace, parser: argparse.ArgumentParser) -> RunConfig:
    cmd = args.command
    if cmd == "fidelity-scan":
        params = {"n": args.n, "x0": args.x0, "y_m": args.ym, "p0": args.p0}
    elif cmd == "cat-fidelity":
        if args.ym_equals_x0 and args.ym is not None:
            parser.error("--ym conflicts with --ym-equals-x0")
        params = {
            "n": args.n,
            "x0": args.x0,
            "y_m": 0.0 if args.ym is None else args.ym,
            "p0": args.p0,
            "ym_equals_x0": args.ym_equals_x0,
        }
    elif cmd == "wigner":
        if args.n < 0:
            parser.error("--n must be nonnegative")
        params = {
            "n": args.n,
            "x0": args.x0,
            "p0": args.p0,
            "y_m": args.ym,
            "engine": args.engine,
            "with_cat": args.with_cat,
            "x_axis": args.x_range,
            "p_axis": args.p_range,
        }
    elif cmd == "prob-density":
        y_axis = args.x_range
        if args.ym is None and y_axis is None:
            y_axis = Grid1D(args.x0 - 5.0, args.x0 + 5.0, 201)
        params = {"n": args.n, "x0": args.x0, "y_m": args.ym, "y_axis": y_axis}
    elif cmd == "mixed-fidelity":
        if any(d <= 0 for d in args.d):
            parser.error("--d widths must be positive")
        params = {"n": args.n, "x0": args.x0, "d": args.d}
    else:
        if args.n < 0:
            parser.error("--n must be nonnegative")
        if args.samples < 8:
            parser.error("--samples must be at least 8")
        if args.radius <= 0:
            parser.error("--radius must be positive")
        params = {
            "n": args.n,
            "y_m": args.ym,
            "x0": args.x0,
            "p0": args.p0,
            "radius": args.radius,
            "samples": args.samples,
        }
    return RunConfig(
        command=cmd,
        parameters=params,
        output_path=args.out,
        format=args.format,
        timings=args.timings,
    )


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return run(_resolve(args, parser))


if __name__ == "__main__":
    sys.exit(main())
