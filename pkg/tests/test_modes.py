import math

import numpy as np
import pytest
import sympy as sp

import oracles
from mevacuum.material import MINUS_Z, PLUS_Z, MaterialParams, MESusceptibility, refractive_index
from mevacuum.modes import (
    FieldSnapshot,
    PlaneWaveMode,
    averaged_momentum_density,
    averaged_momentum_density_quadrature,
    mode_fields,
    mode_set,
    momentum_density,
    momentum_rate_scale,
    net_mode_stress,
    net_mode_stress_quadrature,
    richardson_estimate,
    stress_zz,
    time_average,
)
from mevacuum.units import C_LIGHT

OMEGA = 3.0e15


def material(eps=2.0, mu=1.0, chi_xy=1e-4, chi_yx=-1e-4):
    return MaterialParams(epsilon=eps, mu=mu, susceptibility=MESusceptibility(chi_xy, chi_yx))


def values(m, E0):
    s = m.susceptibility
    return dict(epsilon=m.epsilon, mu=m.mu, chi_xy=s.chi_xy, chi_yx=s.chi_yx, E0=E0, c=C_LIGHT)


# -- mode_fields ------------------------------------------------------------


def test_fields_zero_phase_pol1():
    m = material()
    snap = mode_fields(PlaneWaveMode(OMEGA, PLUS_Z, 1, 2.0), m)
    np.testing.assert_array_equal(snap.E, [2.0, 0, 0])
    np.testing.assert_array_equal(snap.B, [0, refractive_index(m, PLUS_Z, 1) * 2.0, 0])


def test_fields_zero_phase_pol2():
    m = material()
    snap = mode_fields(PlaneWaveMode(OMEGA, PLUS_Z, 2, 2.0), m)
    np.testing.assert_array_equal(snap.E, [0, 2.0, 0])
    np.testing.assert_array_equal(snap.B, [-refractive_index(m, PLUS_Z, 2) * 2.0, 0, 0])


def test_fields_vanish_at_cosine_node():
    snap = mode_fields(PlaneWaveMode(OMEGA, PLUS_Z, 1, 1.0), material(), z=0.0, t=math.pi / 2 / OMEGA)
    assert np.max(np.abs(snap.E)) < 1e-15
    assert np.max(np.abs(snap.B)) < 1e-15


@pytest.mark.parametrize("direction", [PLUS_Z, MINUS_Z])
def test_field_orientation(direction):
    t = np.linspace(0, 1e-15, 7)
    m = material()
    s1 = mode_fields(PlaneWaveMode(OMEGA, direction, 1), m, 1e-5, t)
    s2 = mode_fields(PlaneWaveMode(OMEGA, direction, 2), m, 1e-5, t)
    assert not s1.E[1:].any() and not s1.B[[0, 2]].any()
    assert not s2.E[[0, 2]].any() and not s2.B[1:].any()
    # propagation direction from E x B
    assert np.all(direction * np.cross(s1.E, s1.B, axis=0)[2] >= 0)
    assert np.all(direction * np.cross(s2.E, s2.B, axis=0)[2] >= 0)


def test_wavenumber_is_derived():
    mode = PlaneWaveMode(OMEGA, MINUS_Z, 2, 1.0)
    m = material()
    assert mode.wavenumber(m) == refractive_index(m, MINUS_Z, 2) * OMEGA / C_LIGHT
    assert set(mode.__dataclass_fields__) == {"omega", "direction", "polarization", "amplitude"}


@pytest.mark.parametrize("kwargs", [{"omega": 0.0}, {"omega": 1.0, "amplitude": -1.0}, {"omega": 1.0, "polarization": 3}])
def test_mode_invariants(kwargs):
    with pytest.raises(ValueError):
        PlaneWaveMode(**kwargs)


# -- momentum density -------------------------------------------------------


def _avg_gz(mode, m):
    return time_average(lambda t: momentum_density(mode_fields(mode, m, 0.0, t), m)[2], 2 * math.pi / mode.omega)


def test_isotropic_single_mode_momentum():
    m = material(eps=2.5, mu=1.2, chi_xy=0.0, chi_yx=0.0)
    got = _avg_gz(PlaneWaveMode(OMEGA, PLUS_Z, 1, 3.0), m)
    expected = (m.epsilon - 1 / m.mu) * m.n0 * 9.0 / (8 * math.pi * C_LIGHT)
    assert got == pytest.approx(expected, rel=1e-13)
    symbolic = oracles.evaluate(oracles.averaged_single_mode_g(1, 1), **values(m, 3.0))
    assert got == pytest.approx(symbolic, rel=1e-13)
    pair = sum(_avg_gz(md, m) for md in mode_set(OMEGA, 3.0))
    assert abs(pair) < 1e-14 * abs(expected)


def test_momentum_with_no_electric_field():
    m = material(chi_xy=0.03, chi_yx=-0.02, mu=1.5)
    B = np.array([0.7, -1.3, 0.0])
    g = momentum_density(FieldSnapshot(E=np.zeros(3), B=B, z=0.0, t=0.0), m)
    # (chi B) x B with chi B = (chi_xy B_y, chi_yx B_x, 0)
    chiB = np.array([0.03 * B[1], -0.02 * B[0], 0.0])
    expected_z = chiB[0] * B[1] - chiB[1] * B[0]
    assert g[0] == g[1] == 0.0
    assert g[2] == pytest.approx(expected_z / (4 * math.pi * m.mu * C_LIGHT), rel=1e-14)


@pytest.mark.parametrize("chi_xy, chi_yx", [(1e-4, -1e-4), (3e-3, 1e-3), (-2e-3, 5e-4)])
def test_full_mode_set_momentum(chi_xy, chi_yx):
    m = material(eps=2.2, chi_xy=chi_xy, chi_yx=chi_yx)
    E0 = 1.7
    quad = averaged_momentum_density_quadrature(OMEGA, E0, m).g_avg
    # all orders in chi
    exact = oracles.evaluate(oracles.pair_mean_momentum_expression(), **values(m, E0))
    assert quad == pytest.approx(exact, rel=1e-11)
    first_order = m.susceptibility.delta_chi * m.epsilon * E0**2 / (4 * math.pi * C_LIGHT)
    chi2 = max(abs(chi_xy), abs(chi_yx)) ** 2
    assert quad == pytest.approx(first_order, rel=2 * chi2)
    assert averaged_momentum_density(OMEGA, E0, m).g_avg == pytest.approx(first_order, rel=1e-15)


# -- stress ------------------------------------------------------------------


def test_stress_of_empty_fields():
    assert stress_zz(FieldSnapshot(np.zeros(3), np.zeros(3), 0.0, 0.0), material()) == 0.0


def test_isotropic_single_mode_stress_vanishes():
    m = material(eps=2.0, chi_xy=0.0, chi_yx=0.0)
    t = np.linspace(0, 2e-15, 33)
    T = stress_zz(mode_fields(PlaneWaveMode(OMEGA, PLUS_Z, 1, 1.0), m, 0.0, t), m)
    assert np.max(np.abs(T)) < 1e-16


def test_single_mode_stress_is_first_order_in_chi():
    x = sp.symbols("x")
    expr = oracles.t_zz(1, 1, oracles.n0 / (4 * sp.pi)).subs({oracles.cxy: x, oracles.phi: 0})
    series = sp.series(expr, x, 0, 2).removeO()
    first = sp.simplify(series.coeff(x, 1))
    assert sp.simplify(series.coeff(x, 0)) == 0
    for chi in (1e-5, 1e-4):
        m = material(eps=2.0, chi_xy=chi, chi_yx=0.0)
        got = stress_zz(mode_fields(PlaneWaveMode(OMEGA, PLUS_Z, 1, 1.0), m), m)
        lin = float(first.subs({oracles.eps: 2.0, oracles.mu: 1.0, oracles.E0: 1.0})) * chi
        assert got != 0.0
        assert got == pytest.approx(lin, rel=chi)


def test_net_mode_stress_examples():
    assert net_mode_stress(OMEGA, 1.0, material(chi_xy=0.0, chi_yx=0.0)) == 0.0
    m = material(eps=2.0, chi_xy=1e-4, chi_yx=-1e-4)
    # frozen from 2e-4 * 2 / (4 pi)
    assert net_mode_stress(OMEGA, 1.0, m) == pytest.approx(3.183098861837907e-05, rel=1e-15)
    assert net_mode_stress_quadrature(OMEGA, 1.0, m) == pytest.approx(3.183098861837907e-05, rel=1e-9)
    assert net_mode_stress(OMEGA, 2.0, m) == 4 * net_mode_stress(OMEGA, 1.0, m)


def test_net_stress_matches_symbolic_oracle():
    m = material(eps=3.1, mu=1.4, chi_xy=2e-3, chi_yx=7e-4)
    quad = net_mode_stress_quadrature(OMEGA, 0.8, m)
    symbolic = oracles.evaluate(oracles.net_stress_expression(), **values(m, 0.8))
    assert quad == pytest.approx(symbolic, rel=1e-10)
    assert net_mode_stress(OMEGA, 0.8, m) == pytest.approx(symbolic, rel=1e-14)


def test_literal_prefactor_differs_by_n0():
    # with the printed 1/(4 pi) prefactor the result carries sqrt(eps/mu), not eps
    literal = oracles.net_stress_expression("literal")
    normalized = oracles.net_stress_expression()
    assert sp.simplify(normalized / literal - oracles.n0) == 0


def test_swapping_directions_flips_sign():
    m = material(chi_xy=4e-4, chi_yx=1e-4)
    assert net_mode_stress_quadrature(OMEGA, 1.0, m, swap_directions=True) == pytest.approx(
        -net_mode_stress_quadrature(OMEGA, 1.0, m), rel=1e-15
    )


# -- time averaging ----------------------------------------------------------


def test_time_average_examples():
    w = 2.0e3
    assert abs(time_average(lambda t: np.sin(2 * w * t), math.pi / w)) < 1e-12
    assert time_average(lambda t: np.cos(w * t) ** 2, 2 * math.pi / w) == pytest.approx(0.5, abs=1e-12)
    assert time_average(lambda t: 4.25, 1.0) == 4.25


def test_time_average_rejects_bad_arguments():
    with pytest.raises(ValueError):
        time_average(np.sin, 0.0)
    with pytest.raises(ValueError):
        time_average(np.sin, 1.0, n_points=8)


def test_time_average_reports_offending_time():
    def f(t):
        out = np.ones_like(t)
        out[5] = np.nan
        return out

    with pytest.raises(FloatingPointError, match=r"t=0\.078125"):
        time_average(f, 2.0, n_points=128)


def test_richardson_certificate():
    value, err = richardson_estimate(lambda t: np.cos(3 * t) ** 4, 2 * math.pi, 16)
    assert value == pytest.approx(3 / 8, abs=1e-15)
    assert err < 1e-15


# -- averages ------------------------------------------------------------------


def test_averages_vanish_in_isotropic_medium():
    a = averaged_momentum_density(OMEGA, 1.0, material(chi_xy=0.0, chi_yx=0.0))
    assert (a.g_avg, a.dg_dt_avg, a.T_zz_avg, a.dT_dz_avg) == (0.0, 0.0, 0.0, 0.0)


def test_averages_example():
    a = averaged_momentum_density(OMEGA, 1.0, material(eps=2.0))
    assert a.g_avg == pytest.approx(3.183098861837907e-05 / C_LIGHT, rel=1e-15)
    assert a.T_zz_avg / a.g_avg == pytest.approx(C_LIGHT, rel=1e-15)


def test_quadrature_averages_of_derivatives_vanish():
    m = material(chi_xy=2e-3, chi_yx=-1e-3)
    q = averaged_momentum_density_quadrature(OMEGA, 1.0, m, z=0.37e-4)
    assert abs(q.dg_dt_avg) <= 1e-12 * momentum_rate_scale(OMEGA, 1.0, m)
    k_scale = m.n0 * OMEGA / C_LIGHT
    assert abs(q.dT_dz_avg) <= 1e-12 * k_scale * m.epsilon / (4 * math.pi)
