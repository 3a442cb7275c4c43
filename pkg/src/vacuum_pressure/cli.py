"""
Command-line front end.

    vacuum-pressure constants
    vacuum-pressure bulk --omega-p-ev 10 --model step:2,0.05
    vacuum-pressure casimir --distance-m 1e-7
    vacuum-pressure net --distance-m 1e-6 --inner step:2,0.05 --outer vacuum
    vacuum-pressure crossover --bracket-m 1e-7,2e-6 --inner step:2,0.05
    vacuum-pressure film --thickness-m 1e-10 --omega-p-ev 10
    vacuum-pressure film --dispersion --kd-range 0,10,21
    vacuum-pressure sweep --target net --variable distance-m --lo 1e-7 --hi 2e-6 --steps 40

Exit status: 0 success, 1 usage error, 2 domain or numerical error.
Guard flags never change the exit status.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

import numpy as np

from . import bulk_pressure as bulk
from . import plasmon_film as film
from . import plate_forces as plates
from .dielectric import (
    Constant,
    DielectricModel,
    DrudePlasma,
    Exponential,
    Sharp,
    SmoothExponential,
    Step,
    Vacuum,
    effective_inverse_c_cubed,
    load_tabulated_model,
)
from .errors import VacuumPressureError
from .numerics import Bracket, central_difference
from .units import CONSTANTS, ev_to_angular_frequency, pascal_to_newton_per_cm2

EXIT_OK, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2

SUBCOMMANDS = ("constants", "bulk", "casimir", "net", "crossover", "film", "sweep")
SWEEP_VARIABLES = {
    "bulk": ("omega-p-ev",),
    "casimir": ("distance-m", "omega-p-ev"),
    "net": ("distance-m", "omega-p-ev"),
    "film": ("thickness-m", "omega-p-ev"),
}


class UsageError(Exception):
    pass


@dataclass
class RunRequest:
    subcommand: str
    parameters: dict[str, Any] = field(default_factory=dict)
    output_format: str = "json"

    def __post_init__(self):
        if self.subcommand not in SUBCOMMANDS:
            raise UsageError(f"unknown subcommand {self.subcommand!r}")
        if self.output_format not in ("json", "csv"):
            raise UsageError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    lo: float
    hi: float
    steps: int
    scale: str = "linear"

    def __post_init__(self):
        if not self.lo < self.hi:
            raise UsageError("sweep requires lo < hi")
        if self.steps < 2:
            raise UsageError("sweep requires steps >= 2")
        if self.scale not in ("linear", "log"):
            raise UsageError(f"unknown sweep scale {self.scale!r}")
        if self.scale == "log" and self.lo <= 0:
            raise UsageError("log sweep requires lo > 0")

    def grid(self) -> list[float]:
        if self.scale == "log":
            pts = np.geomspace(self.lo, self.hi, self.steps)
        else:
            pts = np.linspace(self.lo, self.hi, self.steps)
        pts[0], pts[-1] = self.lo, self.hi
        return [float(p) for p in pts]


# ---------------------------------------------------------------------------
# serialization


def _fmt_float(x: float) -> str:
    if not math.isfinite(x):
        return "null"
    return format(x, ".17g")


def dumps(obj: Any) -> str:
    """JSON with fixed key order (as inserted) and 17-significant-digit floats."""
    if isinstance(obj, bool) or obj is None:
        return json.dumps(obj)
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {dumps(v)}" for k, v in obj.items()) + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def _csv_cell(v: Any) -> str:
    if isinstance(v, (float, np.floating)):
        return "" if not math.isfinite(v) else _fmt_float(float(v))
    if isinstance(v, (list, tuple)):
        return ";".join(str(x) for x in v)
    if v is None:
        return ""
    return str(v)


def to_csv(rows: list[dict]) -> str:
    if not rows:
        return ""
    header: list[str] = []
    for row in rows:
        header.extend(k for k in row if k not in header)
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_csv_cell(row.get(k)) for k in header])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# parameter parsing


def parse_model(spec: str, omega_p: float) -> DielectricModel:
    """Mini-grammar: ``vacuum``, ``const:E``, ``step:E,F``, ``drude:Xev``, ``table:PATH``."""
    kind, _, arg = spec.partition(":")
    try:
        if kind == "vacuum" and not arg:
            return Vacuum()
        if kind == "const":
            return Constant(float(arg))
        if kind == "step":
            eps, frac = (float(x) for x in arg.split(","))
            return Step(eps, frac, omega_p)
        if kind == "drude":
            if not arg.lower().endswith("ev"):
                raise UsageError("drude plasma energy needs an 'ev' suffix, e.g. drude:10ev")
            return DrudePlasma(ev_to_angular_frequency(float(arg[:-2])))
        if kind == "table":
            return load_tabulated_model(arg)
    except ValueError as exc:
        if isinstance(exc, VacuumPressureError):
            raise
        raise UsageError(f"bad model spec {spec!r}: {exc}") from None
    raise UsageError(f"unknown model spec {spec!r}")


def parse_cutoff(kind: str, omega_p: float, width_ev: float | None):
    if kind == "sharp":
        return Sharp(omega_p)
    if kind == "smooth":
        width = ev_to_angular_frequency(width_ev) if width_ev else 0.1 * omega_p
        return SmoothExponential(omega_p, width)
    if kind == "exponential":
        return Exponential(omega_p)
    raise UsageError(f"unknown cutoff {kind!r}")


def _floats(text: str, n: int, name: str) -> list[float]:
    try:
        vals = [float(x) for x in str(text).split(",")]
    except ValueError:
        raise UsageError(f"{name} must be {n} comma-separated numbers") from None
    if len(vals) != n:
        raise UsageError(f"{name} must be {n} comma-separated numbers")
    return vals


def _need(params: dict, key: str):
    value = params.get(key)
    if value is None:
        raise UsageError(f"missing required parameter --{key.replace('_', '-')}")
    return value


def _record(value, unit, error_estimate=0.0, guards=(), provenance=None, **extra) -> dict:
    rec = {"value": value, "unit": unit}
    rec.update(extra)
    rec["error_estimate"] = error_estimate
    rec["guards"] = list(guards)
    rec["provenance"] = provenance or {}
    return rec


# ---------------------------------------------------------------------------
# subcommand handlers; each returns a result record (dict)


def _omega_p(params) -> float:
    return ev_to_angular_frequency(params.get("omega_p_ev", 10.0))


def _do_constants(params) -> dict:
    return _record(CONSTANTS.as_table(), None, provenance={"source": "CODATA 2018"})


def _do_bulk(params) -> dict:
    wp = _omega_p(params)
    model = parse_model(params.get("model", "vacuum"), wp)
    cutoff = parse_cutoff(params.get("cutoff", "sharp"), wp, params.get("smooth_width_ev"))
    route = params.get("route", "continuum")
    if params.get("box_m"):
        box = bulk.BoxGeometry(*_floats(params["box_m"], 3, "--box-m"))
        res = bulk.pressure_discrete_box(box, model, cutoff)
    elif route == "continuum":
        res = bulk.pressure_continuum(model, cutoff)
    elif route == "closed-form":
        res = bulk.pressure_closed_form(wp, effective_inverse_c_cubed(model, cutoff))
    elif route == "excess":
        res = bulk.pressure_excess(model, cutoff)
    elif route == "naive":
        res = bulk.pressure_naive_thermodynamic(wp)
    else:
        raise UsageError(f"unknown bulk route {route!r}")
    prov = dict(res.provenance, cutoff=cutoff.label(), model=model.label())
    return _record(res.pressure, "Pa", res.error_estimate, res.guards, prov,
                   value_n_per_cm2=pascal_to_newton_per_cm2(res.pressure))


def _do_casimir(params) -> dict:
    d = float(_need(params, "distance_m"))
    wp = _omega_p(params)
    regime = plates.regime_of(d, wp)
    guards = list(plates._regime_guards(regime))
    if params.get("route", "ideal") == "regularized":
        cutoff = Exponential(float(params.get("cutoff_ratio", 100.0)) * plates.C / d)
        energy = plates.casimir_energy_regularized(d, cutoff)

        def e(x: float) -> float:
            return plates.casimir_energy_regularized(x, cutoff).energy

        value = -central_difference(e, d, 1e-3 * d)
        guards += list(energy.guards)
        prov = {"route": "regularized_finite_difference", "cutoff": cutoff.label(),
                "energy_per_area_J_m2": energy.energy}
        err = 1e-3 * abs(value)
    else:
        value = plates.ideal_casimir_pressure(d)
        prov = {"route": "ideal"}
        err = 0.0
    return _record(value, "Pa", err, guards, prov, regime=regime,
                   value_n_per_cm2=pascal_to_newton_per_cm2(value))


def _plate_config(params, d: float) -> plates.PlateConfiguration:
    wp = _omega_p(params)
    return plates.PlateConfiguration(
        d=d,
        inner=parse_model(params.get("inner", "vacuum"), wp),
        outer=parse_model(params.get("outer", "vacuum"), wp),
        wall_omega_p=wp,
        cutoff=parse_cutoff(params.get("cutoff", "sharp"), wp, params.get("smooth_width_ev")),
    )


def _do_net(params) -> dict:
    cfg = _plate_config(params, float(_need(params, "distance_m")))
    res = plates.net_pressure_asymmetric(cfg)
    return _record(res.pressure, "Pa", res.error_estimate, res.guards, res.provenance,
                   regime=res.regime, value_n_per_cm2=pascal_to_newton_per_cm2(res.pressure))


def _do_crossover(params) -> dict:
    lo, hi = _floats(_need(params, "bracket_m"), 2, "--bracket-m")
    bracket = Bracket(lo, hi)
    cfg = _plate_config(params, hi)
    d_star = plates.find_sign_crossover(cfg, bracket)
    return _record(d_star, "m", 1e-15 * hi, (), {
        "inner": cfg.inner.label(), "outer": cfg.outer.label(),
        "cutoff": cfg.effective_cutoff.label(),
        "approximations": [plates.APPROX_VACUUM_CASIMIR],
    })


def _do_film(params) -> dict:
    wp = _omega_p(params)
    d = float(_need(params, "thickness_m"))
    cfg = film.FilmConfig(d, wp)
    p = film.film_pressure(cfg)
    return _record(p, "Pa", film.film_coefficient_error() * p / film.dimensionless_film_coefficient(),
                   cfg.guards, {"route": "analytic", "coefficient": film.dimensionless_film_coefficient(),
                                "fermi_pressure_scale_Pa": film.fermi_pressure_scale()},
                   value_n_per_cm2=pascal_to_newton_per_cm2(p))


def _dispersion_rows(params) -> list[dict]:
    lo, hi, steps = _floats(_need(params, "kd_range"), 3, "--kd-range")
    if steps < 2 or steps != int(steps) or not lo < hi or lo < 0:
        raise UsageError("--kd-range needs 0 <= lo < hi and integer steps >= 2")
    kd = np.linspace(lo, hi, int(steps))
    unit_film = film.FilmConfig(1.0, 1.0)
    br = film.plasmon_dispersion(kd, unit_film)
    return [{"kd": float(x), "omega_even_over_omega_p": float(e), "omega_odd_over_omega_p": float(o)}
            for x, e, o in zip(kd, br.omega_even, br.omega_odd)]


HANDLERS: dict[str, Callable[[dict], dict]] = {
    "constants": _do_constants,
    "bulk": _do_bulk,
    "casimir": _do_casimir,
    "net": _do_net,
    "crossover": _do_crossover,
    "film": _do_film,
}


# ---------------------------------------------------------------------------
# run


def _flatten(rec: dict) -> dict:
    row = {k: v for k, v in rec.items() if k != "provenance"}
    return row


def run(request: RunRequest) -> tuple[int, str]:
    """Execute one request; returns (exit status, serialized output)."""
    params = dict(request.parameters)
    inputs = {"subcommand": request.subcommand}
    inputs.update({k: v for k, v in sorted(params.items()) if v is not None and v is not False})
    try:
        if request.subcommand == "sweep":
            sweep = SweepSpec(
                variable=_need(params, "variable"), lo=float(_need(params, "lo")),
                hi=float(_need(params, "hi")), steps=int(_need(params, "steps")),
                scale=params.get("scale", "linear"),
            )
            rows = run_sweep(RunRequest(_need(params, "target"), params, request.output_format),
                             sweep, workers=int(params.get("workers", 1)))
            if request.output_format == "csv":
                return EXIT_OK, to_csv(rows)
            return EXIT_OK, dumps({"inputs": inputs, "rows": rows}) + "\n"
        if request.subcommand == "film" and params.get("dispersion"):
            rows = _dispersion_rows(params)
            if request.output_format == "csv":
                return EXIT_OK, to_csv(rows)
            return EXIT_OK, dumps({"inputs": inputs, "rows": rows}) + "\n"
        result = HANDLERS[request.subcommand](params)
    except UsageError:
        raise
    except (VacuumPressureError, ArithmeticError) as exc:
        err = {"type": type(exc).__name__, "message": str(exc)}
        best = getattr(exc, "best_estimate", None)
        if best is not None:
            err["best_estimate"] = best
        if request.output_format == "csv":
            return EXIT_DOMAIN, to_csv([{"error": err["type"], "message": err["message"]}])
        return EXIT_DOMAIN, dumps({"inputs": inputs, "error": err}) + "\n"

    if request.output_format == "csv":
        if request.subcommand == "constants":
            rows = [{"name": k, "value": v["value"], "unit": v["unit"]}
                    for k, v in result["value"].items()]
        else:
            rows = [_flatten(result)]
        return EXIT_OK, to_csv(rows)
    return EXIT_OK, dumps({"inputs": inputs, "result": result}) + "\n"


def _sweep_point(target: str, params: dict, key: str, x: float) -> dict:
    p = dict(params)
    p[key] = x
    row: dict[str, Any] = {key: x}
    try:
        rec = HANDLERS[target](p)
    except UsageError:
        raise
    except (VacuumPressureError, ArithmeticError) as exc:
        row.update(value=math.nan, error_estimate=math.nan, guards=[],
                   error=f"{type(exc).__name__}: {exc}")
        return row
    row.update(value=rec["value"], unit=rec["unit"], error_estimate=rec["error_estimate"],
               guards=rec["guards"], error="")
    return row


def run_sweep(request: RunRequest, sweep: SweepSpec, workers: int = 1) -> list[dict]:
    """One row per grid point, in grid order regardless of ``workers``."""
    target = request.subcommand
    if target not in SWEEP_VARIABLES:
        raise UsageError(f"cannot sweep subcommand {target!r}")
    if sweep.variable not in SWEEP_VARIABLES[target]:
        raise UsageError(f"{target} cannot sweep {sweep.variable!r}; "
                         f"choose from {', '.join(SWEEP_VARIABLES[target])}")
    key = sweep.variable.replace("-", "_")
    grid = sweep.grid()
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda x: _sweep_point(target, request.parameters, key, x), grid))
    return [_sweep_point(target, request.parameters, key, x) for x in grid]


# ---------------------------------------------------------------------------
# argparse


class _Parser(argparse.ArgumentParser):
    # abbreviations would let "--distance" stand in for "--distance-m"
    def __init__(self, *args, **kwargs):
        kwargs.setdefault("allow_abbrev", False)
        super().__init__(*args, **kwargs)

    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _add_common(p: argparse.ArgumentParser, *, model=False, plates_=False, cutoff=True):
    p.add_argument("--omega-p-ev", type=float, help="wall plasma energy hbar*omega_p in eV (default 10)")
    if cutoff:
        p.add_argument("--cutoff", choices=["sharp", "smooth", "exponential"])
        p.add_argument("--smooth-width-ev", type=float, help="roll-off width of the smooth cutoff, eV")
    if model:
        p.add_argument("--model", help="vacuum | const:E | step:E,F | drude:Xev | table:PATH")
    if plates_:
        p.add_argument("--inner", help="medium between the plates (model grammar as --model)")
        p.add_argument("--outer", help="medium outside the plates")
    p.add_argument("--output", choices=["json", "csv"])
    p.add_argument("--config", help="JSON file whose keys mirror the long flags")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="vacuum-pressure", description=__doc__.split("\n\n")[0].strip())
    sub = parser.add_subparsers(dest="subcommand", parser_class=_Parser)

    p = sub.add_parser("constants", help="print the physical constant table")
    p.add_argument("--output", choices=["json", "csv"])
    p.add_argument("--config")

    p = sub.add_parser("bulk", help="bulk zero-point radiation pressure")
    _add_common(p, model=True)
    p.add_argument("--route", choices=["continuum", "closed-form", "excess", "naive"])
    p.add_argument("--box-m", help="Lx,Ly,Lz in metres; selects the discrete mode sum")

    p = sub.add_parser("casimir", help="parallel-plate Casimir pressure")
    _add_common(p, cutoff=False)
    p.add_argument("--distance-m", type=float)
    p.add_argument("--route", choices=["ideal", "regularized"])
    p.add_argument("--cutoff-ratio", type=float, help="d*omega_c/c for --route regularized")

    p = sub.add_parser("net", help="net plate pressure with different inner/outer media")
    _add_common(p, plates_=True)
    p.add_argument("--distance-m", type=float)

    p = sub.add_parser("crossover", help="gap where the net plate pressure changes sign")
    _add_common(p, plates_=True)
    p.add_argument("--bracket-m", help="lo,hi in metres")

    p = sub.add_parser("film", help="surface-plasmon squeeze pressure on a thin film")
    _add_common(p, cutoff=False)
    p.add_argument("--thickness-m", type=float)
    p.add_argument("--dispersion", action="store_true", help="emit plasmon dispersion rows")
    p.add_argument("--kd-range", help="lo,hi,steps of k*d for --dispersion")

    p = sub.add_parser("sweep", help="evaluate a subcommand over a parameter grid")
    _add_common(p, model=True, plates_=True)
    p.add_argument("--target", choices=sorted(SWEEP_VARIABLES))
    p.add_argument("--variable", help="flag name to sweep, e.g. distance-m")
    p.add_argument("--lo", type=float)
    p.add_argument("--hi", type=float)
    p.add_argument("--steps", type=int)
    p.add_argument("--scale", choices=["linear", "log"])
    p.add_argument("--workers", type=int)
    p.add_argument("--distance-m", type=float)
    p.add_argument("--thickness-m", type=float)
    return parser


def _apply_config(parser: argparse.ArgumentParser, argv: Sequence[str]) -> argparse.Namespace:
    args = parser.parse_args(argv)
    if not getattr(args, "config", None):
        return args
    try:
        with open(args.config, encoding="utf-8") as fh:
            config = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config {args.config}: {exc}") from None
    if not isinstance(config, dict):
        raise UsageError("config must be a JSON object")
    known = vars(args)
    extra = []
    for key, value in config.items():
        dest = key.lstrip("-").replace("-", "_")
        if dest not in known or dest in ("subcommand", "config"):
            raise UsageError(f"unknown config key {key!r}")
        if known[dest] is None or known[dest] is False:
            if isinstance(value, bool):
                if value:
                    extra.append("--" + dest.replace("_", "-"))
            else:
                extra += ["--" + dest.replace("_", "-"), str(value)]
    return parser.parse_args(list(argv) + extra)


def request_from_argv(argv: Sequence[str]) -> RunRequest:
    parser = build_parser()
    args = _apply_config(parser, argv)
    if not args.subcommand:
        raise UsageError("a subcommand is required: " + ", ".join(SUBCOMMANDS))
    params = {k: v for k, v in vars(args).items()
              if k not in ("subcommand", "output", "config") and v is not None}
    return RunRequest(args.subcommand, params, args.output or "json")


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        request = request_from_argv(argv)
        status, text = run(request)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
