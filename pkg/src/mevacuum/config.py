"""Run configuration: INI ingestion, validation and unit handling.

A config is an INI file with named sections. Every dimensional value is
written either as a bare number, read in the canonical unit of the
``[units] input`` system, or as ``<number> <unit>`` with any unit from
:data:`mevacuum.units.UNITS` of the right dimension. Everything is
converted to Gaussian on load.

Example::

    [schema]
    version = mevacuum-config/1

    [units]
    input = si
    output = si

    [material]
    epsilon = 2.0
    viscosity = 3.75e-5 Pa*s
    chi_xy = 1e-4
    chi_yx = -1e-4

    [vacuum]
    lambda_c = 1 nm
    T0_target = 0.03 Pa

    [geometry]
    a = 1 mm
    L = 2 m
    me_segment = 0.9 m, 1.1 m
    topology = closed-loop

    [notes]
    material.viscosity = back-solved to reproduce 100 um/s
"""
from __future__ import annotations

import configparser
import math
from dataclasses import dataclass, field
from pathlib import Path

from . import units
from .ledger import CLOSED_LOOP, OPEN_TUBE, Geometry
from .material import MaterialParams, MESusceptibility, induced_susceptibility
from .vacuum import CutoffSpec

SCHEMA = "mevacuum-config/1"


class ConfigError(ValueError):
    """A config file failed validation; the message names the field."""


# (section, key) -> dimension
FIELDS: dict[tuple[str, str], str] = {
    ("material", "epsilon"): "dimensionless",
    ("material", "mu"): "dimensionless",
    ("material", "viscosity"): "viscosity",
    ("material", "chi_xy"): "dimensionless",
    ("material", "chi_yx"): "dimensionless",
    ("material", "alpha"): "me_coupling",
    ("material", "E_applied"): "electric_field",
    ("material", "B_applied"): "magnetic_field",
    ("vacuum", "lambda_c"): "length",
    ("vacuum", "delta_chi"): "dimensionless",
    ("vacuum", "T0_target"): "stress",
    ("geometry", "a"): "length",
    ("geometry", "L"): "length",
    ("geometry", "me_segment"): "length",
    ("beam", "omega"): "angular_frequency",
    ("beam", "E0k"): "electric_field",
    ("radiometer", "vane_area"): "area",
    ("radiometer", "arm"): "length",
    ("radiometer", "gamma"): "rotational_friction",
    ("transient", "chi_initial_xy"): "dimensionless",
    ("transient", "chi_initial_yx"): "dimensionless",
}
TEXT_FIELDS = {("geometry", "topology"), ("audit", "fields_steady")}
KNOWN_SECTIONS = {"schema", "units", "notes"} | {s for s, _ in FIELDS} | {s for s, _ in TEXT_FIELDS}


@dataclass
class RunConfig:
    """Validated config. Numeric values are Gaussian floats."""

    input_units: str = "gaussian"
    output_units: str = "gaussian"
    values: dict[tuple[str, str], object] = field(default_factory=dict)
    raw: dict[str, dict[str, str]] = field(default_factory=dict)
    notes: dict[str, str] = field(default_factory=dict)

    def has(self, section: str, key: str) -> bool:
        return (section, key) in self.values

    def get(self, section: str, key: str, default=None):
        return self.values.get((section, key), default)

    def require(self, section: str, key: str):
        if (section, key) not in self.values:
            raise ConfigError(f"[{section}] {key}: required for this command")
        return self.values[(section, key)]

    # -- stage builders ---------------------------------------------------

    def material(self) -> MaterialParams:
        s = self._susceptibility()
        try:
            return MaterialParams(
                epsilon=self.get("material", "epsilon", 1.0),
                mu=self.get("material", "mu", 1.0),
                susceptibility=s,
                viscosity=self.get("material", "viscosity", 0.01),
            )
        except ValueError as exc:
            raise ConfigError(f"[material] {exc}") from None

    def _susceptibility(self) -> MESusceptibility:
        if self.has("material", "chi_xy"):
            return MESusceptibility(self.values[("material", "chi_xy")], self.values[("material", "chi_yx")])
        return induced_susceptibility(
            self.values[("material", "alpha")],
            self.values[("material", "E_applied")],
            self.values[("material", "B_applied")],
        )

    def cutoff(self) -> CutoffSpec:
        try:
            return CutoffSpec(lambda_c=self.require("vacuum", "lambda_c"))
        except ValueError as exc:
            if isinstance(exc, ConfigError):
                raise
            raise ConfigError(f"[vacuum] lambda_c: {exc}") from None

    def geometry(self) -> Geometry:
        seg = self.require("geometry", "me_segment")
        try:
            return Geometry(
                a=self.require("geometry", "a"),
                L=self.require("geometry", "L"),
                me_segment=tuple(seg),
                topology=self.get("geometry", "topology", CLOSED_LOOP),
            )
        except ConfigError:
            raise
        except ValueError as exc:
            raise ConfigError(f"[geometry] {exc}") from None


def parse_quantity(text: str, dimension: str, system: str) -> float:
    """Parse ``"<number> [unit]"`` into a Gaussian float of ``dimension``."""
    parts = text.strip().split(None, 1)
    if not parts:
        raise ConfigError("empty value")
    number = parts[0]
    unit = parts[1].strip() if len(parts) > 1 else units.SYSTEM_UNITS[system][dimension]
    try:
        got = units.dimension_of(unit)
    except units.UnitError as exc:
        raise ConfigError(str(exc)) from None
    if got != dimension:
        raise ConfigError(f"unit {unit!r} is a {got}, expected a {dimension}")
    try:
        value = units.to_gaussian(number, unit)
    except (ValueError, ArithmeticError):
        raise ConfigError(f"not a number: {number!r}") from None
    if not math.isfinite(value):
        raise ConfigError(f"value must be finite, got {number!r}")
    return value


def _parse_field(section: str, key: str, text: str, system: str):
    where = f"[{section}] {key}"
    if (section, key) == ("geometry", "topology"):
        value = text.strip()
        if value not in (OPEN_TUBE, CLOSED_LOOP):
            raise ConfigError(f"{where}: topology must be {OPEN_TUBE!r} or {CLOSED_LOOP!r}, got {value!r}")
        return value
    if (section, key) == ("audit", "fields_steady"):
        value = text.strip().lower()
        if value not in ("true", "false", "yes", "no", "1", "0"):
            raise ConfigError(f"{where}: expected a boolean, got {text!r}")
        return value in ("true", "yes", "1")
    dimension = FIELDS[(section, key)]
    try:
        if (section, key) == ("geometry", "me_segment"):
            pieces = [p for p in text.split(",")]
            if len(pieces) != 2:
                raise ConfigError("expected 'start, end'")
            return [parse_quantity(p, dimension, system) for p in pieces]
        return parse_quantity(text, dimension, system)
    except ConfigError as exc:
        raise ConfigError(f"{where}: {exc}") from None


def _validate(cfg: RunConfig):
    chi_keys = [k for k in ("chi_xy", "chi_yx") if cfg.has("material", k)]
    alpha_keys = [k for k in ("alpha", "E_applied", "B_applied") if cfg.has("material", k)]
    if chi_keys and alpha_keys:
        raise ConfigError(
            f"[material] give either chi_xy/chi_yx or alpha/E_applied/B_applied, not both "
            f"(found {', '.join(chi_keys + alpha_keys)})"
        )
    if "material" in cfg.raw:
        if not chi_keys and not alpha_keys:
            raise ConfigError("[material] missing susceptibility: give chi_xy/chi_yx or alpha/E_applied/B_applied")
        if chi_keys and len(chi_keys) != 2:
            raise ConfigError("[material] chi_xy and chi_yx must be given together")
        if alpha_keys and len(alpha_keys) != 3:
            missing = {"alpha", "E_applied", "B_applied"} - set(alpha_keys)
            raise ConfigError(f"[material] induced susceptibility needs {', '.join(sorted(missing))}")
    if "vacuum" in cfg.raw:
        if not cfg.has("vacuum", "lambda_c"):
            raise ConfigError("[vacuum] lambda_c is required")
        both = cfg.has("vacuum", "delta_chi") and cfg.has("vacuum", "T0_target")
        neither = not cfg.has("vacuum", "delta_chi") and not cfg.has("vacuum", "T0_target")
        if both or neither:
            raise ConfigError("[vacuum] give exactly one of delta_chi or T0_target alongside lambda_c")
        if cfg.get("vacuum", "T0_target", 0.0) < 0:
            raise ConfigError("[vacuum] T0_target must be >= 0")


def load_config(text: str) -> RunConfig:
    """Parse and validate config text."""
    parser = configparser.ConfigParser(interpolation=None, inline_comment_prefixes=(";", "#"))
    parser.optionxform = str
    try:
        parser.read_string(text)
    except configparser.Error as exc:
        raise ConfigError(f"malformed config: {exc}") from None

    raw = {s: dict(parser.items(s)) for s in parser.sections()}
    unknown = set(raw) - KNOWN_SECTIONS
    if unknown:
        raise ConfigError(f"unknown section(s): {', '.join(sorted(unknown))}")
    version = raw.get("schema", {}).get("version", SCHEMA)
    if version != SCHEMA:
        raise ConfigError(f"[schema] version {version!r} is not supported (expected {SCHEMA!r})")

    cfg = RunConfig(raw=raw, notes=dict(raw.get("notes", {})))
    for key in ("input", "output"):
        system = raw.get("units", {}).get(key, "gaussian").strip().lower()
        if system not in units.SYSTEM_UNITS:
            raise ConfigError(f"[units] {key}: expected 'si' or 'gaussian', got {system!r}")
        setattr(cfg, f"{key}_units", system)

    for section, entries in raw.items():
        if section in ("schema", "units", "notes"):
            continue
        for key, text_value in entries.items():
            if (section, key) not in FIELDS and (section, key) not in TEXT_FIELDS:
                raise ConfigError(f"[{section}] {key}: unknown field")
            cfg.values[(section, key)] = _parse_field(section, key, text_value, cfg.input_units)
    _validate(cfg)
    return cfg


def read_config(path: str | Path) -> RunConfig:
    return load_config(Path(path).read_text())
