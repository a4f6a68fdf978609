"""Counter-propagating plane-wave modes in the ME medium.

For polarization 1 the mode is E = E0 cos(k z - w t) e1, B = n E0 cos(...) e2;
for polarization 2, E = E0 cos(...) e2, B = -n E0 cos(...) e1, with the signed
index n from :func:`mevacuum.material.refractive_index` and k = n w / c.

Two routes to every time average are provided: first-order closed forms and
periodic quadrature of the full field expressions. The quadrature route keeps
all orders in chi and serves as the oracle for the closed forms.

Normalization conventions
-------------------------
``stress_zz`` uses the prefactor ``n0 / (4 pi)``. With it the net stress of a
counter-propagating mode set is exactly ``delta_chi * eps * E0**2 / (4 pi)``.

The momentum density of a mode set is the mean over the +z/-z pair, summed
over both polarizations. To first order in chi this gives
``delta_chi * eps * E0**2 / (4 pi c)``, i.e. T_zz = c g.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .material import MINUS_Z, PLUS_Z, MaterialParams, refractive_index
from .units import C_LIGHT

DEFAULT_POINTS = 1024
RICHARDSON_POINTS = 2048
MIN_POINTS = 16

E1 = np.array([1.0, 0.0, 0.0])
E2 = np.array([0.0, 1.0, 0.0])


@dataclass(frozen=True)
class PlaneWaveMode:
    omega: float
    direction: int = PLUS_Z
    polarization: int = 1
    amplitude: float = 1.0

    def __post_init__(self):
        if not self.omega > 0:
            raise ValueError(f"omega must be > 0, got {self.omega!r}")
        if not self.amplitude >= 0:
            raise ValueError(f"amplitude must be >= 0, got {self.amplitude!r}")
        if self.direction not in (PLUS_Z, MINUS_Z):
            raise ValueError(f"direction must be +1 or -1, got {self.direction!r}")
        if self.polarization not in (1, 2):
            raise ValueError(f"polarization must be 1 or 2, got {self.polarization!r}")

    def index(self, m: MaterialParams) -> float:
        return refractive_index(m, self.direction, self.polarization)

    def wavenumber(self, m: MaterialParams) -> float:
        """Signed wavenumber n w / c."""
        return self.index(m) * self.omega / C_LIGHT

    def reversed(self) -> "PlaneWaveMode":
        return PlaneWaveMode(self.omega, -self.direction, self.polarization, self.amplitude)


@dataclass(frozen=True)
class FieldSnapshot:
    """E and B at (z, t). Vectors have shape (3,) or (3, N) for sampled t."""

    E: np.ndarray
    B: np.ndarray
    z: float | np.ndarray
    t: float | np.ndarray


@dataclass(frozen=True)
class ModeAverages:
    g_avg: float
    dg_dt_avg: float
    T_zz_avg: float
    dT_dz_avg: float


def mode_set(omega: float, E0k: float) -> list[PlaneWaveMode]:
    """Both directions and both polarizations at one frequency."""
    return [
        PlaneWaveMode(omega, d, pol, E0k)
        for pol in (1, 2)
        for d in (PLUS_Z, MINUS_Z)
    ]


def _signed_index(mode: PlaneWaveMode, m: MaterialParams, dtype):
    if dtype is np.float64:
        return mode.index(m)
    # rebuilt in the wider type so n and B keep the extra digits
    n0 = np.sqrt(dtype(m.epsilon) * dtype(m.mu))
    s = m.susceptibility
    if mode.polarization == 1:
        return mode.direction * n0 + dtype(s.chi_xy)
    return mode.direction * n0 - dtype(s.chi_yx)


def _profiles(mode: PlaneWaveMode, m: MaterialParams, dtype=np.float64):
    n = _signed_index(mode, m, dtype)
    e1, e2 = E1.astype(dtype), E2.astype(dtype)
    if mode.polarization == 1:
        return n, e1, n * e2
    return n, e2, -n * e1


def mode_fields(mode: PlaneWaveMode, m: MaterialParams, z=0.0, t=0.0, dtype=np.float64) -> FieldSnapshot:
    """Sampled fields. ``dtype=np.longdouble`` keeps extra digits where
    near-cancelling counter-propagating terms are subtracted."""
    n, e_hat, b_hat = _profiles(mode, m, dtype)
    k = n * dtype(mode.omega) / dtype(C_LIGHT)
    phase = k * np.asarray(z, dtype=dtype) - dtype(mode.omega) * np.asarray(t, dtype=dtype)
    amp = dtype(mode.amplitude) * np.cos(phase)
    return FieldSnapshot(
        E=np.multiply.outer(e_hat, amp), B=np.multiply.outer(b_hat, amp), z=z, t=t
    )


def mode_field_rates(mode: PlaneWaveMode, m: MaterialParams, z=0.0, t=0.0):
    """Analytic derivatives ``(dE/dt, dB/dt, dE/dz, dB/dz)`` of one mode."""
    n, e_hat, b_hat = _profiles(mode, m)
    k = n * mode.omega / C_LIGHT
    s = mode.amplitude * np.sin(k * np.asarray(z) - mode.omega * np.asarray(t))
    dt = mode.omega * s
    dz = -k * s
    return (
        np.multiply.outer(e_hat, dt),
        np.multiply.outer(b_hat, dt),
        np.multiply.outer(e_hat, dz),
        np.multiply.outer(b_hat, dz),
    )


def _momentum_bilinear(Ea, Ba, Eb, Bb, m: MaterialParams) -> np.ndarray:
    chi = m.susceptibility.tensor()
    # chi acts on the leading (vector) axis
    chiT_Eb = np.tensordot(chi.T, Eb, axes=(1, 0))
    chi_Ba = np.tensordot(chi, Ba, axes=(1, 0))
    total = (
        (m.epsilon - 1.0 / m.mu) * np.cross(Ea, Bb, axis=0)
        + np.cross(Ea, chiT_Eb, axis=0) / m.mu
        + np.cross(chi_Ba, Bb, axis=0) / m.mu
    )
    return total / (4.0 * math.pi * C_LIGHT)


def momentum_density(snap: FieldSnapshot, m: MaterialParams) -> np.ndarray:
    """g = [(eps - 1/mu) E x B + E x (chi^T E)/mu + (chi B) x B/mu] / (4 pi c)."""
    return _momentum_bilinear(snap.E, snap.B, snap.E, snap.B, m)


def momentum_density_rate(mode: PlaneWaveMode, m: MaterialParams, z=0.0, t=0.0) -> np.ndarray:
    """Partial time derivative of a single mode's momentum density."""
    snap = mode_fields(mode, m, z, t)
    dE, dB, _, _ = mode_field_rates(mode, m, z, t)
    return _momentum_bilinear(dE, dB, snap.E, snap.B, m) + _momentum_bilinear(
        snap.E, snap.B, dE, dB, m
    )


def stress_zz(snap: FieldSnapshot, m: MaterialParams):
    """T^zz = -(n0 / 4 pi) [eps E^2 / 2 - B^2 / (2 mu)]."""
    E2_ = np.sum(snap.E**2, axis=0)
    B2_ = np.sum(snap.B**2, axis=0)
    dt = E2_.dtype.type
    return -(m.n0 / (4.0 * math.pi)) * (dt(0.5) * dt(m.epsilon) * E2_ - dt(0.5) * B2_ / dt(m.mu))


def stress_zz_gradient(mode: PlaneWaveMode, m: MaterialParams, z=0.0, t=0.0):
    """dT^zz/dz of a single mode."""
    snap = mode_fields(mode, m, z, t)
    _, _, dE, dB = mode_field_rates(mode, m, z, t)
    EdE = np.sum(snap.E * dE, axis=0)
    BdB = np.sum(snap.B * dB, axis=0)
    return -(m.n0 / (4.0 * math.pi)) * (m.epsilon * EdE - BdB / m.mu)


def time_average(f: Callable, period: float, n_points: int = DEFAULT_POINTS) -> float:
    """Mean of ``f`` over one period by the periodic trapezoidal rule.

    ``f`` is called once with the array of sample times. The rule is exact for
    trigonometric polynomials of degree below ``n_points`` and converges
    geometrically for smooth periodic integrands.
    """
    if not period > 0:
        raise ValueError(f"period must be > 0, got {period!r}")
    if n_points < MIN_POINTS:
        raise ValueError(f"n_points must be >= {MIN_POINTS}, got {n_points}")
    t = period * np.arange(n_points) / n_points
    values = np.broadcast_to(np.asarray(f(t), dtype=float), t.shape)
    bad = ~np.isfinite(values)
    if bad.any():
        i = int(np.argmax(bad))
        raise FloatingPointError(f"non-finite integrand {float(values[i])!r} at t={float(t[i])!r}")
    return float(np.mean(values))


def richardson_estimate(f: Callable, period: float, n_points: int = DEFAULT_POINTS):
    """Return ``(average, |I(n) - I(2n)|)`` as a convergence certificate."""
    coarse = time_average(f, period, n_points)
    fine = time_average(f, period, 2 * n_points)
    return fine, abs(fine - coarse)


def net_mode_stress(omega: float, E0k: float, m: MaterialParams) -> float:
    """Time-averaged sum over polarizations of T(+k) - T(-k), closed form."""
    return m.susceptibility.delta_chi * m.epsilon * E0k**2 / (4.0 * math.pi)


def net_mode_stress_quadrature(
    omega: float,
    E0k: float,
    m: MaterialParams,
    n_points: int = DEFAULT_POINTS,
    z: float = 0.0,
    swap_directions: bool = False,
) -> float:
    """Same quantity by sampling the full mode fields over one period.

    Fields are built in extended precision: the +k and -k stresses agree to
    about n0/delta_chi digits, which in float64 alone would cap the relative
    accuracy near 1e-16 * n0 / |delta_chi|.
    """
    period = 2.0 * math.pi / omega
    sign = -1.0 if swap_directions else 1.0

    def integrand(t):
        total = 0.0
        for mode in mode_set(omega, E0k):
            total = total + sign * mode.direction * stress_zz(mode_fields(mode, m, z, t, np.longdouble), m)
        return total

    return time_average(integrand, period, n_points)


def averaged_momentum_density(omega: float, E0k: float, m: MaterialParams) -> ModeAverages:
    """Closed-form steady averages for the counter-propagating mode set.

    Steady susceptibility makes both the time derivative of g and the axial
    stress gradient average to zero.
    """
    g = net_mode_stress(omega, E0k, m) / C_LIGHT
    return ModeAverages(g_avg=g, dg_dt_avg=0.0, T_zz_avg=g * C_LIGHT, dT_dz_avg=0.0)


def averaged_momentum_density_quadrature(
    omega: float, E0k: float, m: MaterialParams, n_points: int = DEFAULT_POINTS, z: float = 0.0
) -> ModeAverages:
    """Quadrature over one period of the full, all-orders field expressions."""
    period = 2.0 * math.pi / omega
    modes = mode_set(omega, E0k)

    def g_z(t):
        return 0.5 * sum(momentum_density(mode_fields(md, m, z, t), m)[2] for md in modes)

    def dg_dt(t):
        return 0.5 * sum(momentum_density_rate(md, m, z, t)[2] for md in modes)

    def dT_dz(t):
        return sum(md.direction * stress_zz_gradient(md, m, z, t) for md in modes)

    return ModeAverages(
        g_avg=time_average(g_z, period, n_points),
        dg_dt_avg=time_average(dg_dt, period, n_points),
        T_zz_avg=net_mode_stress_quadrature(omega, E0k, m, n_points, z),
        dT_dz_avg=time_average(dT_dz, period, n_points),
    )


def momentum_rate_scale(omega: float, E0k: float, m: MaterialParams) -> float:
    """omega * u / c with u the cycle-averaged energy density of the four modes.

    This is the size of the individual momentum-rate terms that cancel when
    averaged, and the yardstick for "dg/dt averages to zero".
    """
    u = 4 * (m.epsilon + m.n0**2 / m.mu) * E0k**2 / (16.0 * math.pi)
    return omega * u / C_LIGHT
