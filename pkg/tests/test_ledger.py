import pytest

from mevacuum.ledger import (
    CLOSED_LOOP,
    OPEN_TUBE,
    Geometry,
    ProvenanceError,
    UnsteadyFieldsError,
    bulk_region_force,
    first_law_audit,
    net_force,
    stress_profile,
    surface_force,
    surface_momentum_deltas,
)
from mevacuum.macro import tube_flow
from mevacuum.material import MINUS_Z, PLUS_Z, MaterialParams, MESusceptibility

LOOP = Geometry(a=0.1, L=200.0, me_segment=(90.0, 110.0), topology=CLOSED_LOOP)
TUBE = Geometry(a=0.1, L=200.0, me_segment=(0.0, 20.0), topology=OPEN_TUBE)


def test_bulk_forces():
    assert bulk_region_force(1) == 0.0
    assert bulk_region_force(2) == 0.0
    with pytest.raises(UnsteadyFieldsError, match="transient"):
        bulk_region_force(1, steady=False)


def test_surface_forces():
    assert surface_force(0.3, 200.0, "12") == pytest.approx(1.5e-3, rel=1e-15)
    assert surface_force(0.3, 200.0, "21") == pytest.approx(-1.5e-3, rel=1e-15)
    assert surface_force(0.0, 5.0, "12") == 0.0
    with pytest.raises(ValueError):
        surface_force(0.3, 0.0, "12")


def test_naive_and_full_ledgers():
    naive = net_force(LOOP, 0.3, "naive")
    full = net_force(LOOP, 0.3, "full")
    assert [e.label for e in naive.entries] == ["f1", "f2", "f12"]
    assert [e.label for e in full.entries] == ["f1", "f2", "f12", "f21"]
    assert naive.net == pytest.approx(0.3 / 200.0, rel=1e-15)
    assert full.net == 0.0
    assert {e.provenance for e in full.entries if e.label in ("f1", "f2")} == {"bulk"}


def test_open_tube_full_cancels_too():
    assert net_force(TUBE, 0.3, "full").net == 0.0
    assert net_force(TUBE, 0.3, "naive").net == pytest.approx(1.5e-3)


def test_zero_stress():
    for mode in ("naive", "full"):
        assert net_force(LOOP, 0.0, mode).net == 0.0


def test_degenerate_segment():
    g = Geometry(a=0.1, L=10.0, me_segment=(5.0, 5.0))
    led = net_force(g, 0.3, "naive")
    assert led.net == 0.0
    assert led.warnings


def test_geometry_validation():
    with pytest.raises(ValueError):
        Geometry(a=0.1, L=10.0, me_segment=(5.0, 11.0))
    with pytest.raises(ValueError):
        Geometry(a=0.0, L=10.0, me_segment=(0.0, 1.0))
    with pytest.raises(ValueError):
        Geometry(a=0.1, L=10.0, me_segment=(0.0, 1.0), topology="torus")


def test_stress_profile_gradient_is_surface_force():
    T0, h = 0.3, 1e-3
    for surface in ("12", "21"):
        origin = LOOP.me_segment[1] if surface == "12" else LOOP.me_segment[0]
        z = origin + 37.0
        slope = (stress_profile(LOOP, T0, z + h, surface) - stress_profile(LOOP, T0, z - h, surface)) / (2 * h)
        # force density is minus the stress divergence
        assert -slope == pytest.approx(surface_force(T0, LOOP.L, surface), rel=1e-9)
    # periodic along the loop
    assert stress_profile(LOOP, T0, 5.0) == pytest.approx(stress_profile(LOOP, T0, 205.0))


def test_audit_verdicts():
    flow = tube_flow(0.3, 0.1, 200.0, 3.75e-4)
    bad = first_law_audit(net_force(LOOP, 0.3, "naive"), flow, True)
    assert bad.verdict == "first-law-violation" and bad.implied_power > 0
    good = first_law_audit(net_force(LOOP, 0.3, "full"), flow, True)
    assert good.verdict == "consistent" and good.implied_power == 0.0
    ramp = first_law_audit(net_force(LOOP, 0.3, "naive"), flow, False)
    assert ramp.verdict == "consistent"
    zero = first_law_audit(net_force(LOOP, 0.0, "naive"), tube_flow(0.0, 0.1, 200.0, 3.75e-4), True)
    assert zero.verdict == "consistent"


def test_audit_rejects_mixed_provenance():
    with pytest.raises(ProvenanceError):
        first_law_audit(net_force(LOOP, 0.3, "naive"), tube_flow(0.31, 0.1, 200.0, 3.75e-4))


@pytest.mark.parametrize("direction", [PLUS_Z, MINUS_Z])
def test_surface_momentum_bookkeeping(direction):
    m = MaterialParams(epsilon=2.0, susceptibility=MESusceptibility(1e-4, -3e-4))
    d = surface_momentum_deltas(3e15, 1.0, m, direction)
    assert d["enter"][1] == -d["exit"][1]
    assert d["enter"][1] > 0
    assert {d["enter"][0], d["exit"][0]} == {"12", "21"}
    assert d["enter"][0] == ("21" if direction == PLUS_Z else "12")
