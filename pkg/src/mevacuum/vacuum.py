"""Cutoff-regularized vacuum stress and momentum density.

Each zero-point mode carries hbar*omega/2. Modes are counted with the
free-space phase-space density V d^3q / (2 pi)^3 up to q_c = 2 pi / lambda_c,
and every mode is treated as an axial counter-propagating pair: no angular
projection is applied. A +q/-q pair is counted once, so the sum runs over a
half-ball in q. Along the radial wavenumber this is the 1-D integral

    T0 = int_0^{q_c} dq  V q^2 / (4 pi^2) * net_mode_stress(c q, E_q)

whose closed form is ``pi**2 * delta_chi * hbar * c / lambda_c**4``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .material import MaterialParams, MESusceptibility
from .modes import net_mode_stress, net_mode_stress_quadrature
from .units import C_LIGHT, HBAR

ONE_DIMENSIONAL_AXIS = "one-dimensional-axis"
#: closed form of the mode-sum prefactor under the conventions above
PREFACTOR_CLOSED_FORM = math.pi**2
_PROBE_CHI = 1e-3

AMPLITUDE_CONVENTION = (
    "E0k chosen so the cycle-averaged mode energy (eps E^2 + n0^2 E^2 / mu) / (8 pi) "
    "integrated over the quantization volume equals hbar*omega/2"
)
MODE_DENSITY_CONVENTION = (
    "free-space density V d^3q/(2 pi)^3 over a half-ball |q| < 2 pi/lambda_c, "
    "each mode treated as an axial +z/-z pair, omega = c q"
)


@dataclass(frozen=True)
class CutoffSpec:
    lambda_c: float
    mode_density_model: str = ONE_DIMENSIONAL_AXIS

    def __post_init__(self):
        if not self.lambda_c > 0:
            raise ValueError(f"lambda_c must be > 0, got {self.lambda_c!r}")
        if self.mode_density_model != ONE_DIMENSIONAL_AXIS:
            raise ValueError(
                f"only the {ONE_DIMENSIONAL_AXIS!r} mode density is implemented, "
                f"got {self.mode_density_model!r}"
            )

    @property
    def q_c(self) -> float:
        return 2.0 * math.pi / self.lambda_c


@dataclass(frozen=True)
class VacuumStressResult:
    """Vacuum stress T0 (dyn/cm^2) and momentum density g0 = T0 / c."""

    T0: float
    g0: float
    prefactor_C: float
    lambda_c: float
    delta_chi: float
    mode_density_model: str = ONE_DIMENSIONAL_AXIS
    method: str = "closed"
    warnings: tuple[str, ...] = field(default=())

    @property
    def conventions(self) -> dict:
        return {
            "internal_units": "gaussian",
            "mode_density_model": self.mode_density_model,
            "mode_density": MODE_DENSITY_CONVENTION,
            "amplitude": AMPLITUDE_CONVENTION,
            "cutoff": "sharp, q_c = 2 pi / lambda_c",
            "integration": self.method,
        }


def quantized_amplitude(omega: float, quantization_volume: float, epsilon: float) -> float:
    """Zero-point amplitude E0k with E0k^2 = 4 pi hbar omega / (eps V).

    Follows from setting (eps + n0^2/mu) E0k^2 V / (16 pi) = hbar omega / 2.
    """
    if not quantization_volume > 0:
        raise ValueError(f"quantization volume must be > 0, got {quantization_volume!r}")
    return math.sqrt(4.0 * math.pi * HBAR * omega / (epsilon * quantization_volume))


def _gauss_panels(q_c: float, panels: int, order: int):
    x, w = np.polynomial.legendre.leggauss(order)
    edges = np.linspace(0.0, q_c, panels + 1)
    nodes, weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        half = 0.5 * (b - a)
        nodes.append(0.5 * (a + b) + half * x)
        weights.append(half * w)
    return np.concatenate(nodes), np.concatenate(weights)


def _spectral_density(q: float, m: MaterialParams, volume: float, quadrature: bool) -> float:
    omega = C_LIGHT * q
    E0 = quantized_amplitude(omega, volume, m.epsilon)
    if quadrature:
        stress = net_mode_stress_quadrature(omega, E0, m)
    else:
        stress = net_mode_stress(omega, E0, m)
    return volume * q**2 / (4.0 * math.pi**2) * stress


def integrate_mode_sum(
    m: MaterialParams,
    cutoff: CutoffSpec,
    panels: int = 4,
    order: int = 4,
    quadrature: bool = False,
    volume: float = 1.0,
) -> float:
    """Composite Gauss-Legendre integral of the mode-sum spectral density.

    ``quadrature=True`` evaluates every node through periodic time averaging
    of the mode fields instead of the closed-form net stress. Node
    contributions are reduced in fixed order so results are reproducible.
    """
    if m.susceptibility.delta_chi == 0.0:
        return 0.0
    nodes, weights = _gauss_panels(cutoff.q_c, panels, order)
    total = 0.0
    for q, w in zip(nodes, weights):
        total += w * _spectral_density(float(q), m, volume, quadrature)
    return total


def mode_sum_prefactor(panels: int = 4, order: int = 4) -> float:
    """Dimensionless C in T0 = C * delta_chi * hbar c / lambda_c^4, by integration."""
    probe = MaterialParams(susceptibility=MESusceptibility(_PROBE_CHI, 0.0))
    raw = integrate_mode_sum(probe, CutoffSpec(lambda_c=1.0), panels, order)
    return raw / (_PROBE_CHI * HBAR * C_LIGHT)


def vacuum_stress(
    m: MaterialParams,
    cutoff: CutoffSpec,
    method: str = "closed",
    panels: int = 4,
    order: int = 4,
) -> VacuumStressResult:
    """Integrate the net mode stress over the vacuum spectrum up to the cutoff.

    ``method`` selects the per-mode net stress: ``"closed"`` (first-order
    formula) or ``"quadrature"`` (time-averaged mode fields). Both integrate
    the spectrum numerically; the prefactor is reported alongside.
    """
    if method not in ("closed", "quadrature"):
        raise ValueError(f"method must be 'closed' or 'quadrature', got {method!r}")
    dchi = m.susceptibility.delta_chi
    if not math.isfinite(dchi):
        raise ValueError(f"delta_chi must be finite, got {dchi!r}")
    raw = integrate_mode_sum(m, cutoff, panels, order, quadrature=(method == "quadrature"))
    g0 = raw / C_LIGHT
    T0 = g0 * C_LIGHT
    return VacuumStressResult(
        T0=T0,
        g0=g0,
        prefactor_C=mode_sum_prefactor(panels, order),
        lambda_c=cutoff.lambda_c,
        delta_chi=dchi,
        mode_density_model=cutoff.mode_density_model,
        method=method,
        warnings=tuple(m.susceptibility.linearization_warnings()),
    )


def vacuum_stress_closed_form(
    delta_chi: float, lambda_c: float, prefactor_C: float = PREFACTOR_CLOSED_FORM
) -> float:
    return prefactor_C * delta_chi * HBAR * C_LIGHT / lambda_c**4


def required_delta_chi(
    T_target: float, lambda_c: float, prefactor_C: float = PREFACTOR_CLOSED_FORM
) -> float:
    """Delta chi that produces a vacuum stress ``T_target`` (dyn/cm^2) at ``lambda_c``."""
    if not T_target >= 0:
        raise ValueError(f"T_target must be >= 0, got {T_target!r}")
    if not lambda_c > 0:
        raise ValueError(f"lambda_c must be > 0, got {lambda_c!r}")
    return T_target * lambda_c**4 / (prefactor_C * HBAR * C_LIGHT)
