"""Equatorial light-speed splitting: frozen regressions + invariants."""

import math

import numpy as np
import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from framedrag import kerr
from framedrag.constants import GravSource
from framedrag.errors import GuardViolation
from framedrag.kerr import (
    KerrPoint,
    _light_speed_full_raw,
    blackhole_scan,
    horizon_radius,
    kerr_phase_difference,
    kerr_time_delay,
    kerr_time_delay_full,
    light_speed_full,
    light_speed_pair,
    light_speed_weak,
    local_two_way_speed,
    metric_components_kerr,
    null_residual,
    roundtrip_mean_speed,
)

EARTH = GravSource(r_s=0.009, a=3.9)
BH = GravSource(r_s=3.0e4, a=7.5e3)


# --- frozen-value regressions (50-digit oracle) -----------------------------

def test_full_speeds_frozen():
    point = KerrPoint(source=BH, r=6.0e4)
    assert math.isclose(light_speed_full(point, "co"),
                        0.77158073738157208735, rel_tol=1e-14)
    assert math.isclose(light_speed_full(point, "counter"),
                        -0.64802032473852899213, rel_tol=1e-14)


def test_horizon_frozen():
    assert math.isclose(horizon_radius(BH), 27990.38105676658, rel_tol=1e-12)


def test_earth_weak_delay_and_phase_frozen():
    point = KerrPoint(source=EARTH, r=6.37e7)
    length = math.pi * 6.37e7
    assert math.isclose(kerr_time_delay(point, length),
                        3.4621633325275272e-9, rel_tol=1e-12)
    assert math.isclose(kerr_phase_difference(point, length, 2.0e6, mode="weak"),
                        0.0069243266660333738, rel_tol=1e-12)


def test_earth_full_phase_close_to_weak():
    point = KerrPoint(source=EARTH, r=6.37e7)
    length = math.pi * 6.37e7
    full = kerr_phase_difference(point, length, 2.0e6, mode="full")
    weak = kerr_phase_difference(point, length, 2.0e6, mode="weak")
    # truncation difference is ~2e-15 relative here; double rounding of the
    # full route dominates what we can resolve
    assert math.isclose(full, weak, rel_tol=1e-8)


@pytest.mark.parametrize("r_over_rs,delay", [
    (2.0, 93162.3563121),
    (100.0, 951.994769086),
    (1000.0, 94.3421187783),
])
def test_scan_delays_frozen(r_over_rs, delay):
    point = KerrPoint(source=BH, r=r_over_rs * BH.r_s)
    assert math.isclose(kerr_time_delay_full(point, 2.0 * math.pi * point.r),
                        delay, rel_tol=1e-9)


def test_scan_innermost_frozen():
    scan = blackhole_scan(BH, 2.0e6, 3.5e3)
    assert len(scan.r_over_rs) == 512
    assert math.isclose(scan.r_over_rs[0], 1.05 * horizon_radius(BH) / BH.r_s,
                        rel_tol=1e-12)
    assert math.isclose(scan.phase_rad[0] / 2.0e6, 3522652.4319607281, rel_tol=1e-9)
    assert scan.visibility[0] == 0.0


# --- structural properties ---------------------------------------------------

@st.composite
def outside_points(draw):
    r_s = draw(st.floats(1e-3, 1e6))
    spin_frac = draw(st.floats(0.0, 0.5))
    source = GravSource(r_s=r_s, a=spin_frac * r_s)
    mult = draw(st.floats(1.001, 1e6))
    return KerrPoint(source=source, r=mult * horizon_radius(source))


@given(outside_points())
@settings(max_examples=200, deadline=None)
def test_speed_ordering_and_product(point):
    co = light_speed_full(point, "co")
    counter = light_speed_full(point, "counter")
    assert co > 0.0
    assert counter < co
    r_s, r = point.source.r_s, point.r
    if r > r_s:  # outside the ergosphere the counter branch goes backwards
        assert counter < 0.0
    # exact algebraic identity c_+ * |c_-| = |1 - r_s/r|
    assert math.isclose(co * abs(counter), abs(1.0 - r_s / r),
                        rel_tol=1e-12, abs_tol=1e-300)


@given(outside_points())
@settings(max_examples=200, deadline=None)
def test_null_residual_property(point):
    assert null_residual(point, "co") <= 1e-12
    assert null_residual(point, "counter") <= 1e-12


@given(st.floats(1e-3, 1e6), st.floats(0.0, 0.5), st.floats(2.0, 1e6))
@settings(max_examples=200, deadline=None)
def test_spin_reversal_antisymmetry(r_s, spin_frac, mult):
    a = spin_frac * r_s
    r = mult * r_s
    assert _light_speed_full_raw(r_s, -a, r, "co") == pytest.approx(
        -_light_speed_full_raw(r_s, a, r, "counter"), rel=1e-15)
    assert _light_speed_full_raw(r_s, -a, r, "counter") == pytest.approx(
        -_light_speed_full_raw(r_s, a, r, "co"), rel=1e-15)


@given(outside_points(), st.floats(1.0, 1e8))
@settings(max_examples=100, deadline=None)
def test_full_phase_is_omega_times_delay(point, length):
    delay = kerr_time_delay_full(point, length)
    phase = kerr_phase_difference(point, length, 2.0e6, mode="full")
    assert phase == pytest.approx(2.0e6 * delay, rel=1e-14)
    assert delay >= 0.0


@given(st.floats(1e-9, 1e-3), st.floats(0.0, 1.0))
@settings(max_examples=200, deadline=None)
def test_weak_tracks_full_in_weak_field(rs_over_r, spin_frac):
    source = GravSource(r_s=rs_over_r, a=spin_frac * rs_over_r * 1e-2)
    point = KerrPoint(source=source, r=1.0)
    for direction in ("co", "counter"):
        weak = light_speed_weak(point, direction)
        full = light_speed_full(point, direction)
        assert weak == pytest.approx(full, rel=10.0 * rs_over_r ** 2 + 1e-13)


def test_weak_guard_raises_and_forces():
    point = KerrPoint(source=BH, r=3.5e4)
    with pytest.raises(GuardViolation):
        light_speed_weak(point, "co")
    forced = light_speed_weak(point, "co", force=True)
    assert forced > 0.0
    with pytest.raises(GuardViolation):
        roundtrip_mean_speed(point)
    with pytest.raises(GuardViolation):
        local_two_way_speed(point)


def test_point_inside_horizon_rejected():
    r_plus = horizon_radius(BH)
    with pytest.raises(ValueError):
        KerrPoint(source=BH, r=0.999 * r_plus)
    KerrPoint(source=BH, r=1.0001 * r_plus)  # just outside is fine


def test_super_extremal_point_has_no_horizon_constraint():
    # Earth-like sources (a > r_s/2) admit any positive radius
    KerrPoint(source=EARTH, r=1e-6)
    with pytest.raises(ValueError):
        horizon_radius(EARTH)


def test_pair_magnitudes_and_ergosphere_flag():
    outside = light_speed_pair(KerrPoint(source=BH, r=6.0e4), mode="full")
    assert not outside.counter_dragged_forward
    assert outside.c_counter > 0.0  # magnitude
    inside = light_speed_pair(KerrPoint(source=BH, r=2.95e4), mode="full")
    assert inside.counter_dragged_forward


def test_metric_components_earth():
    comps = metric_components_kerr(KerrPoint(source=EARTH, r=6.37e7))
    assert comps.g_tt == pytest.approx(1.0 - 0.009 / 6.37e7, rel=1e-15)
    assert comps.g_tphi == pytest.approx(-0.009 * 3.9 / 6.37e7, rel=1e-15)
    assert comps.g_phiphi == -6.37e7 ** 2


def test_two_way_speeds_weak_field():
    point = KerrPoint(source=EARTH, r=6.37e7)
    rs_over_r = 0.009 / 6.37e7
    assert roundtrip_mean_speed(point) == pytest.approx(1.0 / (1.0 + rs_over_r),
                                                        rel=1e-15)
    assert abs(local_two_way_speed(point) - 1.0) <= 1e-15


def test_scan_rejects_points_inside_horizon():
    with pytest.raises(ValueError, match="horizon"):
        blackhole_scan(BH, 2.0e6, 3.5e3, r_over_rs=np.array([0.5, 2.0]))


def test_scan_shapes_and_ranges():
    scan = blackhole_scan(BH, 2.0e6, 3.5e3, r_max=500.0, n_points=64)
    assert scan.r_over_rs.shape == scan.phase_rad.shape == scan.visibility.shape == (64,)
    assert scan.r_over_rs[-1] == pytest.approx(500.0)
    assert np.all(scan.visibility >= 0.0) and np.all(scan.visibility <= 1.0)
    assert np.all(np.diff(scan.r_over_rs) > 0.0)
