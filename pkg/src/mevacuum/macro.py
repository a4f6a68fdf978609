"""Macroscopic consequences of a hypothetical steady vacuum stress.

All inputs and outputs are Gaussian: dyn/cm^2, cm, poise, erg/s.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .material import MESusceptibility, delta_chi
from .vacuum import VacuumStressResult

#: the formulas give ~5 pW at the working point, not the quoted order of 1 nW
POWER_DISCREPANCY_NOTE = (
    "P = T0 * Phi evaluated at the stated working point (T0 = 0.03 Pa, a = 1 mm, "
    "L = 2 m, U = 100 um/s) is about 4.7e-12 W; the quoted order of magnitude "
    "'~1 nW' is not reproduced by these formulas"
)
RAMP_ENERGY_NOTE = (
    "the field ramp supplies the energy for the transient impulse; "
    "no ramp-energy formula is available, so none is computed"
)


@dataclass(frozen=True)
class FlowResult:
    U_vac: float
    Phi: float
    P: float
    T0: float


@dataclass(frozen=True)
class RadiometerResult:
    torque: float
    omega_vac: float
    dissipation: float


@dataclass(frozen=True)
class TransientResult:
    impulse_density: float
    ramp_energy_note: str = RAMP_ENERGY_NOTE


def _positive(**values):
    for name, value in values.items():
        if not value > 0:
            raise ValueError(f"{name} must be > 0, got {value!r}")


def poiseuille_speed(T0: float, a: float, L: float, eta: float) -> float:
    """Centreline speed T0 a^2 / (4 eta L) of pressure-driven pipe flow."""
    _positive(a=a, L=L, eta=eta)
    return T0 * a**2 / (4.0 * eta * L)


def flow_rate(a: float, U: float) -> float:
    """Volumetric rate pi a^2 U / 2 for a parabolic profile of peak speed U."""
    _positive(a=a)
    return math.pi * a**2 * U / 2.0


def dissipated_power(T0: float, Phi: float) -> float:
    return T0 * Phi


def tube_flow(T0: float, a: float, L: float, eta: float) -> FlowResult:
    U = poiseuille_speed(T0, a, L, eta)
    Phi = flow_rate(a, U)
    return FlowResult(U_vac=U, Phi=Phi, P=dissipated_power(T0, Phi), T0=T0)


def radiometer_spin(T0: float, vane_area: float, arm: float, gamma: float) -> RadiometerResult:
    """Steady spin of a vane radiometer against pivot friction.

    Torque is the stress on one vane times its lever arm; the steady angular
    velocity balances it against friction gamma * omega.
    """
    _positive(vane_area=vane_area, arm=arm, gamma=gamma)
    torque = T0 * vane_area * arm
    omega = torque / gamma
    return RadiometerResult(torque=torque, omega_vac=omega, dissipation=gamma * omega**2)


def transient_impulse(
    vac: VacuumStressResult, chi_initial: MESusceptibility, chi_final: MESusceptibility
) -> TransientResult:
    """Momentum per volume delivered while the susceptibility ramps.

    The vacuum momentum density is linear in delta_chi, so the impulse is the
    change in delta_chi as a fraction of the one ``vac`` was computed at.
    """
    if vac.delta_chi == 0.0:
        raise ValueError("cannot rescale a vacuum result computed at delta_chi = 0")
    change = delta_chi(chi_final) - delta_chi(chi_initial)
    return TransientResult(impulse_density=change / vac.delta_chi * vac.g0)
