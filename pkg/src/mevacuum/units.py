"""Physical constants and the pinned unit table.

Everything inside the package is Gaussian (cgs). SI appears only where the
CLI reads configs and writes reports, and goes through :func:`convert_units`.

Conversion factors are stored as exact rationals. Converting an exact value
(``int``, ``Fraction``, ``Decimal`` or a numeric string) returns a
``Fraction`` and round-trips exactly. A ``float`` input is converted exactly,
then rounded once to the nearest float on the way out.
"""
from __future__ import annotations

from decimal import Decimal
from fractions import Fraction
from numbers import Rational
from typing import Union

#: reduced Planck constant, erg s (CODATA 2018)
HBAR = 1.054571817e-27
#: speed of light in vacuum, cm/s (exact)
C_LIGHT = 2.99792458e10

Number = Union[int, float, Fraction, Decimal, str]


class UnitError(ValueError):
    """Unknown unit, or a conversion between incompatible dimensions."""


# 1 statvolt = 299.792458 V, so 1 V/m = 1e4 / 299792458 statV/cm
_V_PER_M = Fraction(10**4, 299792458)

# unit -> (dimension, factor to the Gaussian unit of that dimension)
UNITS: dict[str, tuple[str, Fraction]] = {
    "1": ("dimensionless", Fraction(1)),
    # length
    "cm": ("length", Fraction(1)),
    "m": ("length", Fraction(100)),
    "mm": ("length", Fraction(1, 10)),
    "um": ("length", Fraction(1, 10**4)),
    "nm": ("length", Fraction(1, 10**7)),
    "angstrom": ("length", Fraction(1, 10**8)),
    # area / volume
    "cm2": ("area", Fraction(1)),
    "m2": ("area", Fraction(10**4)),
    "mm2": ("area", Fraction(1, 100)),
    "cm3": ("volume", Fraction(1)),
    "m3": ("volume", Fraction(10**6)),
    # time / frequency
    "s": ("time", Fraction(1)),
    "rad/s": ("angular_frequency", Fraction(1)),
    # stress / pressure
    "dyn/cm2": ("stress", Fraction(1)),
    "Pa": ("stress", Fraction(10)),
    # force density
    "dyn/cm3": ("force_density", Fraction(1)),
    "N/m3": ("force_density", Fraction(1, 10)),
    # dynamic viscosity
    "P": ("viscosity", Fraction(1)),
    "cP": ("viscosity", Fraction(1, 100)),
    "Pa*s": ("viscosity", Fraction(10)),
    # kinematics
    "cm/s": ("speed", Fraction(1)),
    "m/s": ("speed", Fraction(100)),
    "um/s": ("speed", Fraction(1, 10**4)),
    "cm3/s": ("flow_rate", Fraction(1)),
    "m3/s": ("flow_rate", Fraction(10**6)),
    # energy / power
    "erg": ("energy", Fraction(1)),
    "J": ("energy", Fraction(10**7)),
    "erg/s": ("power", Fraction(1)),
    "W": ("power", Fraction(10**7)),
    "nW": ("power", Fraction(1, 100)),
    # momentum density
    "g/(cm2*s)": ("momentum_density", Fraction(1)),
    "kg/(m2*s)": ("momentum_density", Fraction(1, 10)),
    # rotation
    "dyn*cm": ("torque", Fraction(1)),
    "N*m": ("torque", Fraction(10**7)),
    "dyn*cm*s": ("rotational_friction", Fraction(1)),
    "N*m*s": ("rotational_friction", Fraction(10**7)),
    # fields
    "statV/cm": ("electric_field", Fraction(1)),
    "V/m": ("electric_field", _V_PER_M),
    "G": ("magnetic_field", Fraction(1)),
    "T": ("magnetic_field", Fraction(10**4)),
    # ME coupling alpha: chi = alpha * E * B
    "1/(statV/cm*G)": ("me_coupling", Fraction(1)),
    "1/(V/m*T)": ("me_coupling", 1 / (_V_PER_M * 10**4)),
}

# canonical unit of each dimension in the two reporting systems
SYSTEM_UNITS: dict[str, dict[str, str]] = {
    "gaussian": {
        "dimensionless": "1",
        "length": "cm",
        "area": "cm2",
        "volume": "cm3",
        "time": "s",
        "angular_frequency": "rad/s",
        "stress": "dyn/cm2",
        "force_density": "dyn/cm3",
        "viscosity": "P",
        "speed": "cm/s",
        "flow_rate": "cm3/s",
        "energy": "erg",
        "power": "erg/s",
        "momentum_density": "g/(cm2*s)",
        "torque": "dyn*cm",
        "rotational_friction": "dyn*cm*s",
        "electric_field": "statV/cm",
        "magnetic_field": "G",
        "me_coupling": "1/(statV/cm*G)",
    },
    "si": {
        "dimensionless": "1",
        "length": "m",
        "area": "m2",
        "volume": "m3",
        "time": "s",
        "angular_frequency": "rad/s",
        "stress": "Pa",
        "force_density": "N/m3",
        "viscosity": "Pa*s",
        "speed": "m/s",
        "flow_rate": "m3/s",
        "energy": "J",
        "power": "W",
        "momentum_density": "kg/(m2*s)",
        "torque": "N*m",
        "rotational_friction": "N*m*s",
        "electric_field": "V/m",
        "magnetic_field": "T",
        "me_coupling": "1/(V/m*T)",
    },
}


def dimension_of(unit: str) -> str:
    try:
        return UNITS[unit][0]
    except KeyError:
        raise UnitError(f"unknown unit {unit!r}") from None


def _exact(value: Number) -> Fraction:
    if isinstance(value, (Fraction, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(Decimal(value.strip()))
    return Fraction(value)


def convert_units(value: Number, from_unit: str, to_unit: str):
    """Convert ``value`` between two units of the same dimension.

    Raises :class:`UnitError` on unknown units or a dimension mismatch.
    Floats in give a float out; every exact input type gives a ``Fraction``.
    """
    dim_from, f_from = UNITS.get(from_unit, (None, None))
    dim_to, f_to = UNITS.get(to_unit, (None, None))
    if dim_from is None:
        raise UnitError(f"unknown unit {from_unit!r}")
    if dim_to is None:
        raise UnitError(f"unknown unit {to_unit!r}")
    if dim_from != dim_to:
        raise UnitError(
            f"cannot convert {from_unit!r} ({dim_from}) to {to_unit!r} ({dim_to})"
        )
    if isinstance(value, float) and value != value:
        return value
    result = _exact(value) * f_from / f_to
    if isinstance(value, float):
        return float(result)
    return result


def to_gaussian(value: Number, unit: str) -> float:
    """Convert to the Gaussian unit of the same dimension, as a float."""
    dim = dimension_of(unit)
    return float(convert_units(_exact(value), unit, SYSTEM_UNITS["gaussian"][dim]))


def from_gaussian(value: float, dimension: str, system: str) -> tuple[float, str]:
    """Express a Gaussian float in ``system``; returns ``(value, unit)``."""
    unit = SYSTEM_UNITS[system][dimension]
    return convert_units(float(value), SYSTEM_UNITS["gaussian"][dimension], unit), unit
