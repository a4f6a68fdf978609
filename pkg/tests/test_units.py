from fractions import Fraction

import pytest
from hypothesis import assume, given, strategies as st

from mevacuum.units import SYSTEM_UNITS, UNITS, UnitError, convert_units, from_gaussian, to_gaussian


def test_stress_factor():
    assert convert_units("0.3", "dyn/cm2", "Pa") == Fraction(3, 100)
    assert convert_units(0.3, "dyn/cm2", "Pa") == 0.03


def test_viscosity_factor():
    assert convert_units("3.75e-4", "P", "Pa*s") == Fraction("3.75e-5")


def test_dimension_mismatch():
    with pytest.raises(UnitError, match="stress"):
        convert_units(1.0, "Pa", "cm3")


def test_unknown_unit():
    with pytest.raises(UnitError):
        convert_units(1.0, "furlong", "m")


def test_field_factors():
    # 1 statV/cm = 29979.2458 V/m, 1 T = 1e4 G
    assert convert_units(1, "statV/cm", "V/m") == Fraction("29979.2458")
    assert convert_units(1, "T", "G") == 10**4


def test_every_dimension_has_both_systems():
    assert set(SYSTEM_UNITS["si"]) == set(SYSTEM_UNITS["gaussian"])
    for system in SYSTEM_UNITS.values():
        for dim, unit in system.items():
            assert UNITS[unit][0] == dim


def test_gaussian_helpers():
    assert to_gaussian("2", "m") == 200.0
    assert from_gaussian(0.3, "stress", "si") == (0.03, "Pa")


PAIRS = [(a, b) for a in UNITS for b in UNITS if UNITS[a][0] == UNITS[b][0]]


@given(st.sampled_from(PAIRS), st.floats(allow_nan=False, allow_infinity=False))
def test_exact_round_trip(pair, x):
    a, b = pair
    exact = Fraction(x)
    assert convert_units(convert_units(exact, a, b), b, a) == exact


@given(st.sampled_from(PAIRS), st.decimals(allow_nan=False, allow_infinity=False, places=6))
def test_decimal_round_trip(pair, d):
    a, b = pair
    assert convert_units(convert_units(d, a, b), b, a) == Fraction(d)


@given(st.sampled_from(PAIRS), st.floats(min_value=-1e200, max_value=1e200, allow_nan=False))
def test_float_round_trip_within_one_ulp(pair, x):
    import math

    a, b = pair
    assume(x == 0.0 or abs(x) > 1e-290)
    back = convert_units(convert_units(x, a, b), b, a)
    assert abs(back - x) <= math.ulp(x)
