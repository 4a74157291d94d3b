"""Scenario-driven command line: dispersion, lossmap, eit-spectrum, propagate.

Each subcommand loads one INI scenario, runs the corresponding sweep (grid
points are pure-function evaluations, optionally distributed over processes)
and writes deterministic CSV files; byte-identical output is guaranteed for
any ``--jobs`` setting because results are assembled in grid order by a
single collector.  ``--plot`` adds minimal SVG renderings.  Exit codes:
0 success, 2 configuration error, 3 numeric failure, 4 I/O error.  Log lines
go to stderr as ``LEVEL key=value ...`` (never colored, so NO_COLOR is
honored trivially).
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import replace
from pathlib import Path
from typing import Any, Callable, Iterable, Sequence

import numpy as np

from . import __version__
from .config import ScenarioConfig, load_config
from .csvio import round_trip_ok, write_csv
from .dispersion import (
    AbyssNotFoundError,
    Polarization,
    find_abyss,
    group_velocity,
    sp_wavevector,
)
from .eit import alpha_closed, alpha_resonant
from .errors import ConfigError, NumericError
from .materials import nimm, silver
from .propagation import PropagationScenario, propagate_pulse
from .quantization import DIPOLE_EA0, coupling_constant, mode_normalization
from .svgplot import line_plot

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3
EXIT_IO = 4


def log(level: str, **kv: Any) -> None:
    parts = [level] + [f"{k}={v}" for k, v in kv.items()]
    print(" ".join(parts), file=sys.stderr)


def _map_ordered(fn: Callable, items: Sequence, jobs: int) -> list:
    """Apply ``fn`` over ``items`` preserving order, optionally in parallel."""
    if jobs <= 1 or len(items) < 4:
        return [fn(item) for item in items]
    chunk = max(1, len(items) // (4 * jobs))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _footer(cfg: ScenarioConfig) -> dict[str, str]:
    return {"config_hash": cfg.config_hash, "tool_version": __version__}


# ----------------------------------------------------------------- dispersion

def _dispersion_row(args: tuple) -> list[float]:
    (omega, m1, m2, pol, kappa0, omega_e) = args
    point = sp_wavevector(m1, m2, omega, pol)
    try:
        v0 = group_velocity(m1, m2, omega, pol) if point.bound else math.nan
    except (NumericError, ValueError):
        v0 = math.nan
    bound_tm = sp_wavevector(m1, m2, omega, Polarization.TM).bound
    try:
        bound_te = sp_wavevector(m1, m2, omega, Polarization.TE).bound
    except NumericError:
        bound_te = False
    return [
        omega / omega_e,
        point.k_par,
        point.kappa,
        point.kappa / kappa0,
        v0,
        1.0 if bound_tm else 0.0,
        1.0 if bound_te else 0.0,
    ]


def cmd_dispersion(cfg: ScenarioConfig, out: Path, plot: bool, jobs: int) -> list[Path]:
    band = cfg["band"]
    omegas = np.linspace(
        band["omega_min_over_we"] * cfg.omega_e,
        band["omega_max_over_we"] * cfg.omega_e,
        band["n_points"],
    )
    tasks = [
        (float(w), cfg.medium1, cfg.medium2, cfg.polarization, band["kappa0"], cfg.omega_e)
        for w in omegas
    ]
    rows = _map_ordered(_dispersion_row, tasks, jobs)
    header = [
        "omega_over_we[1]",
        "k_par[1/m]",
        "kappa[1/m]",
        "kappa_over_kappa0[1]",
        "v0[m/s]",
        "bound_TM[1]",
        "bound_TE[1]",
    ]
    files = [write_csv(out / "dispersion.csv", header, rows, _footer(cfg))]
    log("INFO", cmd="dispersion", points=len(rows), out=str(files[0]))

    if plot:
        xs = [r[0] for r in rows]
        ours = [abs(r[3]) for r in rows]
        ref = [
            abs(sp_wavevector(cfg.medium1, silver(), float(w), Polarization.TM).kappa)
            / band["kappa0"]
            for w in omegas
        ]
        files.append(
            line_plot(
                out / "fig_losses.svg",
                [(xs, ours, cfg.medium2.label or "medium2"), (xs, ref, "silver reference")],
                xlabel="omega/omega_e",
                ylabel="|kappa|/kappa0",
                title="surface-mode loss across the band",
                logy=True,
            )
        )
    return files


# -------------------------------------------------------------------- lossmap

def _lossmap_block(args: tuple) -> tuple[list[list[float]], list[float]]:
    (ratio, gamma_e, omega_m, m1, omegas, kappa0, omega_e, band) = args
    m2 = nimm(gamma_m=ratio * gamma_e, omega_m=omega_m)
    rows = []
    for w in omegas:
        point = sp_wavevector(m1, m2, float(w), Polarization.TM)
        rows.append([ratio, w / omega_e, point.kappa / kappa0])
    try:
        abyss = find_abyss(m1, m2, band, Polarization.TM)
        track = [ratio, abyss.omega0 / omega_e, abyss.kappa_at_omega0 / kappa0]
    except AbyssNotFoundError:
        track = [ratio, math.nan, math.nan]
    return rows, track


def cmd_lossmap(cfg: ScenarioConfig, out: Path, plot: bool, jobs: int) -> list[Path]:
    band = cfg["band"]
    lm = cfg["lossmap"]
    gamma_e = cfg["materials"]["gamma_e"]
    omega_m = cfg["materials"]["omega_m"]
    omegas = np.linspace(
        band["omega_min_over_we"] * cfg.omega_e,
        band["omega_max_over_we"] * cfg.omega_e,
        band["n_points"],
    )
    if lm["n_gamma"] == 1:
        ratios = np.array([lm["gamma_ratio_min"]])
    else:
        ratios = np.geomspace(lm["gamma_ratio_min"], lm["gamma_ratio_max"], lm["n_gamma"])
    band_limits = (float(omegas[0]), float(omegas[-1]))
    tasks = [
        (float(r), gamma_e, omega_m, cfg.medium1, omegas, band["kappa0"], cfg.omega_e, band_limits)
        for r in ratios
    ]
    blocks = _map_ordered(_lossmap_block, tasks, jobs)

    map_rows = [row for rows, _ in blocks for row in rows]
    track_rows = [track for _, track in blocks]
    header_map = ["gamma_m_over_gamma_e[1]", "omega_over_we[1]", "kappa_over_kappa0[1]"]
    header_track = ["gamma_m_over_gamma_e[1]", "omega0_over_we[1]", "kappa0_min_over_kappa0[1]"]
    files = [
        write_csv(out / "lossmap.csv", header_map, map_rows, _footer(cfg)),
        write_csv(out / "abyss_track.csv", header_track, track_rows, _footer(cfg)),
    ]
    log("INFO", cmd="lossmap", gammas=len(ratios), points=len(map_rows))

    if plot:
        curves = []
        for ratio in (ratios[0], ratios[len(ratios) // 2], ratios[-1]):
            m2 = nimm(gamma_m=float(ratio) * gamma_e, omega_m=omega_m)
            ys = [
                abs(sp_wavevector(cfg.medium1, m2, float(w), Polarization.TM).kappa)
                / band["kappa0"]
                for w in omegas
            ]
            curves.append(([w / cfg.omega_e for w in omegas], ys, f"gamma_m/gamma_e={ratio:.2g}"))
        files.append(
            line_plot(
                out / "fig_lossmap.svg",
                curves,
                xlabel="omega/omega_e",
                ylabel="|kappa|/kappa0",
                title="loss abyss vs magnetic decoherence",
                logy=True,
            )
        )
    return files


# --------------------------------------------------------------- eit-spectrum

def _resolve_alpha0_v0(cfg: ScenarioConfig) -> tuple[float, float]:
    """alpha0 and v0: configured values, or derived from the interface mode."""
    eit = cfg["eit"]
    pulse = cfg["pulse"]
    omega31 = pulse["omega31_over_we"] * cfg.omega_e
    v0 = pulse["v0"]
    if v0 == 0.0:
        v0 = group_velocity(cfg.medium1, cfg.medium2, omega31, cfg.polarization)
    alpha0 = eit["alpha0"]
    if eit["n"] == 0.0:
        return 0.0, v0
    if eit["alpha0_from_mode"]:
        point = sp_wavevector(cfg.medium1, cfg.medium2, omega31, cfg.polarization)
        norm = mode_normalization(cfg.medium1, cfg.medium2, point, eit["ly"])
        g = coupling_constant(norm, point, DIPOLE_EA0)
        params = cfg.lambda_params(eit["omega"][0])
        params = replace(params, k1s=abs(point.k1), k1c=abs(point.k1))
        alpha0 = alpha_resonant(params, abs(g.g) ** 2, v0)
    return alpha0, v0


def cmd_eit_spectrum(cfg: ScenarioConfig, out: Path, plot: bool, jobs: int) -> list[Path]:
    eit = cfg["eit"]
    alpha0, _ = _resolve_alpha0_v0(cfg)
    gamma31 = eit["gamma31_linewidth"]
    span = eit["nu_span_over_gamma31"] * gamma31
    nus = np.linspace(-span, span, eit["n_nu"])
    x = eit["x"]

    rows = []
    for om in eit["omega"]:
        params = cfg.lambda_params(om)
        for nu in nus:
            resp = alpha_closed(params, alpha0, float(nu))
            rows.append(
                [
                    nu / gamma31,
                    om / gamma31,
                    resp.alpha.real * x,
                    resp.alpha.imag * x,
                    resp.G.real,
                    resp.G.imag,
                ]
            )
    header = [
        "nu_over_Gamma31[1]",
        "Omega_over_Gamma31[1]",
        "Re_alpha_x[1]",
        "Im_alpha_x[1]",
        "Re_G[1]",
        "Im_G[1]",
    ]
    files = [write_csv(out / "eit_spectrum.csv", header, rows, _footer(cfg))]
    log("INFO", cmd="eit-spectrum", omegas=len(eit["omega"]), points=len(rows))

    if plot:
        curves = []
        for om in eit["omega"]:
            params = cfg.lambda_params(om)
            ys = [alpha_closed(params, alpha0, float(nu)).alpha.real * x for nu in nus]
            curves.append(([nu / gamma31 for nu in nus], ys, f"Omega/Gamma31={om / gamma31:.2g}"))
        files.append(
            line_plot(
                out / "fig_eit_spectrum.svg",
                curves,
                xlabel="nu/Gamma31",
                ylabel="Re(alpha) x",
                title="transparency window of the layered probe",
            )
        )
    return files


# ------------------------------------------------------------------ propagate

def _propagate_one(args: tuple) -> tuple:
    (scenario, gamma31, delta_t) = args
    t, env, metrics = propagate_pulse(scenario)
    profile = [[tv * gamma31, av] for tv, av in zip(t, np.abs(env))]
    return profile, metrics


def cmd_propagate(cfg: ScenarioConfig, out: Path, plot: bool, jobs: int) -> list[Path]:
    pulse = cfg["pulse"]
    alpha0, v0 = _resolve_alpha0_v0(cfg)
    gamma31 = cfg["eit"]["gamma31_linewidth"]
    delta_t = pulse["delta_t"]

    combos = [(xi, om) for xi in pulse["x"] for om in pulse["omega"]]
    tasks = []
    for xi, om in combos:
        scenario = PropagationScenario(
            delta_t=delta_t,
            x=xi,
            v0=v0,
            kappa31=pulse["kappa31"],
            alpha0=alpha0,
            eit=cfg.lambda_params(om),
            n_nu=pulse["n_nu"],
            nu_span=pulse["nu_span_factor"] / delta_t,
        )
        tasks.append((scenario, gamma31, delta_t))
    results = _map_ordered(_propagate_one, tasks, jobs)

    files: list[Path] = []
    metrics_rows = []
    header_profile = ["t_Gamma31[1]", "abs_envelope[1]"]
    for (xi, om), (profile, metrics) in zip(combos, results):
        i_x = pulse["x"].index(xi)
        i_om = pulse["omega"].index(om)
        files.append(
            write_csv(out / f"pulse_x{i_x}_om{i_om}.csv", header_profile, profile, _footer(cfg))
        )
        metrics_rows.append(
            [
                xi,
                om / gamma31,
                metrics.delay / delta_t,
                metrics.amp_ratio,
                metrics.vg,
                metrics.l_sp,
            ]
        )
    header_metrics = [
        "x[m]",
        "Omega_over_Gamma31[1]",
        "delay_over_dt[1]",
        "amp_ratio[1]",
        "vg[m/s]",
        "l_sp[m]",
    ]
    files.append(write_csv(out / "metrics.csv", header_metrics, metrics_rows, _footer(cfg)))

    if len(pulse["omega"]) >= 2:
        slope_rows = []
        for xi in pulse["x"]:
            ballistic = xi / v0
            pts = [
                (om, row[2] * delta_t - ballistic)
                for (xr, om), row in zip(combos, metrics_rows)
                if xr == xi and row[2] * delta_t - ballistic > 0
            ]
            if len(pts) >= 2:
                fit = np.polyfit(np.log([p[0] for p in pts]), np.log([p[1] for p in pts]), 1)
                slope_rows.append([xi, float(fit[0])])
            else:
                slope_rows.append([xi, math.nan])
        files.append(
            write_csv(out / "slope.csv", ["x[m]", "delay_slope[1]"], slope_rows, _footer(cfg))
        )
    log("INFO", cmd="propagate", runs=len(combos), out=str(out))

    if plot:
        om0 = pulse["omega"][0]
        curves = []
        t_axis = [row[0] for row in results[0][0]]
        input_env = [
            math.exp(-0.5 * (tv / (delta_t * gamma31)) ** 2) for tv in t_axis
        ]
        curves.append((t_axis, input_env, "input"))
        for i_x, xi in enumerate(pulse["x"]):
            idx = combos.index((xi, om0))
            profile = results[idx][0]
            curves.append(([r[0] for r in profile], [r[1] for r in profile], f"x={xi:g} m"))
        files.append(
            line_plot(
                out / "fig_pulses.svg",
                curves,
                xlabel="t Gamma31",
                ylabel="|envelope|",
                title="slow-light propagation of the surface probe",
            )
        )
    return files


# ----------------------------------------------------------------------- main

_COMMANDS = {
    "dispersion": cmd_dispersion,
    "lossmap": cmd_lossmap,
    "eit-spectrum": cmd_eit_spectrum,
    "propagate": cmd_propagate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="polariton-lab",
        description="surface-polariton dispersion, loss control and slow-light sweeps",
    )
    parser.add_argument("command", choices=sorted(_COMMANDS))
    parser.add_argument("--config", type=Path, default=None, help="scenario INI file")
    parser.add_argument("--plot", action="store_true", help="also write SVG plots")
    parser.add_argument("--jobs", type=int, default=os.cpu_count() or 1)
    parser.add_argument("--out", type=Path, default=None, help="output directory")
    parser.add_argument(
        "--validate", action="store_true", help="re-read outputs and check byte round-trip"
    )
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config)
        out = args.out if args.out is not None else Path(cfg["output"]["directory"])
        out.mkdir(parents=True, exist_ok=True)
        log("INFO", cmd=args.command, config=str(args.config), hash=cfg.config_hash,
            jobs=args.jobs, out=str(out))
        files = _COMMANDS[args.command](cfg, out, args.plot, max(1, args.jobs))
        if args.validate:
            for f in files:
                if f.suffix == ".csv" and not round_trip_ok(f):
                    log("ERROR", validate=str(f), status="round-trip-mismatch")
                    return EXIT_IO
            log("INFO", validate="ok", files=len(files))
    except ConfigError as exc:
        log("ERROR", kind="config", detail=str(exc))
        return EXIT_CONFIG
    except (NumericError, ValueError) as exc:
        log("ERROR", kind="numeric", detail=str(exc))
        return EXIT_NUMERIC
    except OSError as exc:
        log("ERROR", kind="io", detail=str(exc))
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    raise SystemExit(main())
