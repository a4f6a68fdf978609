"""Pipeline stage drivers behind the CLI subcommands.

Each ``cmd_*`` takes a validated :class:`RunConfig` and returns a
:class:`ReportRecord` holding every intermediate quantity, not only the
final one. Python warnings raised anywhere in a stage land in the record.
"""
from __future__ import annotations

import functools
import warnings

import numpy as np

from . import ledger as ledger_mod
from . import macro, modes, vacuum
from .config import ConfigError, RunConfig, parse_quantity
from .material import MaterialParams, MESusceptibility
from .report import ReportRecord, dimensionless, quantity

STRESS_NORMALIZATION = "T_zz prefactor n0/(4 pi)"
MOMENTUM_CONVENTION = "mode-set momentum density = mean over +z/-z pair, summed over polarizations"


def _collect_warnings(fn):
    @functools.wraps(fn)
    def wrapper(cfg: RunConfig, *args, system: str | None = None, **kwargs) -> ReportRecord:
        system = system or cfg.output_units
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            record = fn(cfg, *args, system=system, **kwargs)
        for w in caught:
            message = str(w.message)
            if message not in record.warnings:
                record.warnings.append(message)
        record.config = cfg.raw
        record.notes = {**cfg.notes, **record.notes}
        record.conventions["unit_system"] = system
        return record

    return wrapper


def _rel_diff(a: float, b: float) -> float:
    scale = max(abs(a), abs(b))
    return 0.0 if scale == 0.0 else abs(a - b) / scale


def _material(cfg: RunConfig) -> MaterialParams:
    if "material" not in cfg.raw:
        raise ConfigError("[material] section is required for this command")
    return cfg.material()


def working_susceptibility(cfg: RunConfig) -> MESusceptibility:
    """Susceptibility seen by vacuum modes below the cutoff.

    Given directly as ``[vacuum] delta_chi`` or back-solved from
    ``[vacuum] T0_target``; split antisymmetrically between chi_xy and chi_yx.
    """
    if cfg.has("vacuum", "delta_chi"):
        dchi = cfg.values[("vacuum", "delta_chi")]
    elif cfg.has("vacuum", "T0_target"):
        dchi = vacuum.required_delta_chi(
            cfg.values[("vacuum", "T0_target")], cfg.cutoff().lambda_c, vacuum.mode_sum_prefactor()
        )
    else:
        raise ConfigError("[vacuum] section with lambda_c and delta_chi or T0_target is required")
    return MESusceptibility(dchi / 2.0, -dchi / 2.0)


def vacuum_result(cfg: RunConfig, lambda_c: float | None = None) -> vacuum.VacuumStressResult:
    base = cfg.material() if "material" in cfg.raw else MaterialParams()
    m = base.with_susceptibility(working_susceptibility(cfg))
    cutoff = cfg.cutoff() if lambda_c is None else vacuum.CutoffSpec(lambda_c)
    return vacuum.vacuum_stress(m, cutoff)


def _vacuum_quantities(vac: vacuum.VacuumStressResult, system: str) -> dict:
    return {
        "T0": quantity(vac.T0, "stress", system),
        "g0": quantity(vac.g0, "momentum_density", system),
        "prefactor_C": dimensionless(vac.prefactor_C),
        "lambda_c": quantity(vac.lambda_c, "length", system),
        "delta_chi": dimensionless(vac.delta_chi),
    }


def _vacuum_record_parts(vac: vacuum.VacuumStressResult):
    return dict(vac.conventions), list(vac.warnings)


@_collect_warnings
def cmd_mode_stress(cfg: RunConfig, *, system: str) -> ReportRecord:
    m = _material(cfg)
    omega = cfg.require("beam", "omega")
    E0k = cfg.require("beam", "E0k")
    if not omega > 0:
        raise ConfigError("[beam] omega must be > 0")
    closed = modes.net_mode_stress(omega, E0k, m)
    quad = modes.net_mode_stress_quadrature(omega, E0k, m, modes.DEFAULT_POINTS)
    quad_fine = modes.net_mode_stress_quadrature(omega, E0k, m, modes.RICHARDSON_POINTS)
    avg = modes.averaged_momentum_density(omega, E0k, m)
    avg_q = modes.averaged_momentum_density_quadrature(omega, E0k, m)
    results = {
        "delta_chi": dimensionless(m.susceptibility.delta_chi),
        "n0": dimensionless(m.n0),
        "net_stress_closed": quantity(closed, "stress", system),
        "net_stress_quadrature": quantity(quad, "stress", system),
        "relative_difference": dimensionless(_rel_diff(closed, quad)),
        "richardson_difference": quantity(abs(quad_fine - quad), "stress", system),
        "g_avg_closed": quantity(avg.g_avg, "momentum_density", system),
        "g_avg_quadrature": quantity(avg_q.g_avg, "momentum_density", system),
        "dg_dt_avg_quadrature": dimensionless(avg_q.dg_dt_avg / modes.momentum_rate_scale(omega, E0k, m)),
        "dT_dz_avg_quadrature": quantity(avg_q.dT_dz_avg, "force_density", system),
    }
    conventions = {
        "quadrature": {
            "rule": "periodic trapezoid",
            "points": modes.DEFAULT_POINTS,
            "richardson_points": modes.RICHARDSON_POINTS,
        },
        "stress_normalization": STRESS_NORMALIZATION,
        "momentum_density": MOMENTUM_CONVENTION,
        "dg_dt_avg_quadrature": "relative to omega * mode energy density / c",
    }
    return ReportRecord("mode-stress", {}, results, conventions)


def parse_sweep(spec: str, cfg: RunConfig) -> np.ndarray:
    """``lambda_c=START:STOP:N`` -> N geometrically spaced cutoffs (Gaussian cm)."""
    name, _, rng = spec.partition("=")
    if name.strip() != "lambda_c":
        raise ConfigError(f"--sweep: only lambda_c can be swept, got {name!r}")
    parts = rng.split(":")
    if len(parts) != 3:
        raise ConfigError("--sweep: expected lambda_c=START:STOP:N")
    start = parse_quantity(parts[0], "length", cfg.input_units)
    stop = parse_quantity(parts[1], "length", cfg.input_units)
    try:
        n = int(parts[2])
    except ValueError:
        raise ConfigError(f"--sweep: N must be an integer, got {parts[2]!r}") from None
    if n < 1 or not start > 0 or not stop > 0:
        raise ConfigError("--sweep: need START, STOP > 0 and N >= 1")
    return np.geomspace(start, stop, n)


@_collect_warnings
def cmd_vacuum(cfg: RunConfig, sweep: str | None = None, *, system: str) -> ReportRecord:
    vac = vacuum_result(cfg)
    conventions, warn = _vacuum_record_parts(vac)
    results = _vacuum_quantities(vac, system)
    results["T0_closed_form"] = quantity(
        vacuum.vacuum_stress_closed_form(vac.delta_chi, vac.lambda_c), "stress", system
    )
    results["mode_density_model"] = vac.mode_density_model
    record = ReportRecord("vacuum", {}, results, conventions, warnings=warn)
    if sweep:
        rows = []
        header = None
        for lam in parse_sweep(sweep, cfg):
            point = vacuum_result(cfg, float(lam))
            q = _vacuum_quantities(point, system)
            rows.append({k: q[k] for k in ("lambda_c", "T0", "g0")})
            if header is None:
                header = [f"{k}[{q[k]['unit']}]" for k in ("lambda_c", "T0", "g0")]
        results["sweep"] = rows
        record.columns = [header] + [[r[k]["value"] for k in ("lambda_c", "T0", "g0")] for r in rows]
    return record


def _ledger(cfg: RunConfig, mode: str):
    vac = vacuum_result(cfg)
    return vac, ledger_mod.net_force(cfg.geometry(), vac.T0, mode)


def _ledger_results(ledger: ledger_mod.ForceLedger, system: str) -> dict:
    return {
        "mode": ledger.mode,
        "topology": ledger.geometry.topology,
        "entries": [
            {
                "label": e.label,
                "force_density": quantity(e.force_density, "force_density", system),
                "provenance": e.provenance,
            }
            for e in ledger.entries
        ],
        "net": quantity(ledger.net, "force_density", system),
        "T0": quantity(ledger.T0, "stress", system),
        "T0_over_L": quantity(ledger.T0 / ledger.geometry.L, "force_density", system),
    }


@_collect_warnings
def cmd_ledger(cfg: RunConfig, mode: str = "full", *, system: str) -> ReportRecord:
    vac, led = _ledger(cfg, mode)
    conventions, warn = _vacuum_record_parts(vac)
    record = ReportRecord("ledger", {}, _ledger_results(led, system), conventions, warnings=warn + list(led.warnings))
    fd_unit = record.results["net"]["unit"]
    record.columns = [["label", f"force_density[{fd_unit}]", "provenance"]] + [
        [e["label"], e["force_density"]["value"], e["provenance"]] for e in record.results["entries"]
    ]
    return record


def _flow(cfg: RunConfig, T0: float) -> macro.FlowResult:
    geom = cfg.geometry()
    if not cfg.has("material", "viscosity"):
        raise ConfigError("[material] viscosity is required for flow estimates")
    return macro.tube_flow(T0, geom.a, geom.L, cfg.values[("material", "viscosity")])


def _flow_results(flow: macro.FlowResult, system: str) -> dict:
    return {
        "T0": quantity(flow.T0, "stress", system),
        "U_vac": quantity(flow.U_vac, "speed", system),
        "Phi": quantity(flow.Phi, "flow_rate", system),
        "P": quantity(flow.P, "power", system),
    }


@_collect_warnings
def cmd_flow(cfg: RunConfig, *, system: str) -> ReportRecord:
    vac = vacuum_result(cfg)
    flow = _flow(cfg, vac.T0)
    conventions, warn = _vacuum_record_parts(vac)
    results = _flow_results(flow, system)
    results["discrepancy_note"] = macro.POWER_DISCREPANCY_NOTE
    return ReportRecord("flow", {}, results, conventions, warnings=warn)


@_collect_warnings
def cmd_radiometer(cfg: RunConfig, *, system: str) -> ReportRecord:
    vac = vacuum_result(cfg)
    r = macro.radiometer_spin(
        vac.T0,
        cfg.require("radiometer", "vane_area"),
        cfg.require("radiometer", "arm"),
        cfg.require("radiometer", "gamma"),
    )
    conventions, warn = _vacuum_record_parts(vac)
    results = {
        "T0": quantity(vac.T0, "stress", system),
        "torque": quantity(r.torque, "torque", system),
        "omega_vac": quantity(r.omega_vac, "angular_frequency", system),
        "dissipation": quantity(r.dissipation, "power", system),
    }
    return ReportRecord("radiometer", {}, results, conventions, warnings=warn)


@_collect_warnings
def cmd_transient(cfg: RunConfig, *, system: str) -> ReportRecord:
    vac = vacuum_result(cfg)
    initial = MESusceptibility(
        cfg.get("transient", "chi_initial_xy", 0.0), cfg.get("transient", "chi_initial_yx", 0.0)
    )
    final = working_susceptibility(cfg)
    t = macro.transient_impulse(vac, initial, final)
    conventions, warn = _vacuum_record_parts(vac)
    results = {
        **_vacuum_quantities(vac, system),
        "delta_chi_initial": dimensionless(initial.delta_chi),
        "delta_chi_final": dimensionless(final.delta_chi),
        "impulse_density": quantity(t.impulse_density, "momentum_density", system),
        "ramp_energy_note": t.ramp_energy_note,
    }
    return ReportRecord("transient", {}, results, conventions, warnings=warn)


@_collect_warnings
def cmd_audit(
    cfg: RunConfig, mode: str = "full", fields_steady: bool | None = None, *, system: str
) -> ReportRecord:
    vac, led = _ledger(cfg, mode)
    flow = _flow(cfg, vac.T0)
    steady = cfg.get("audit", "fields_steady", True) if fields_steady is None else fields_steady
    audit = ledger_mod.first_law_audit(led, flow, steady)
    conventions, warn = _vacuum_record_parts(vac)
    results = {
        "ledger": _ledger_results(led, system),
        "flow": _flow_results(flow, system),
        "net_force_density": quantity(audit.net_force_density, "force_density", system),
        "implied_power": quantity(audit.implied_power, "power", system),
        "fields_steady": audit.fields_steady,
        "verdict": audit.verdict,
        "discrepancy_note": macro.POWER_DISCREPANCY_NOTE,
    }
    return ReportRecord("audit", {}, results, conventions, warnings=warn + list(led.warnings))
