"""Config parsing, default/override precedence, and domain-object assembly."""

import math

import pytest

from framedrag.constants import GravSource
from framedrag.scenario import (
    EARTH_SURFACE_DEFAULTS,
    FIBER_LOOP_DEFAULTS,
    Scenario,
    load_config,
    parse_config,
    parse_override,
)


# --- parsing -------------------------------------------------------------------

def test_parse_override_types():
    assert parse_override("point.r=6.37e6") == ("point.r", 6.37e6)
    key, value = parse_override("scan.points=128")
    assert value == 128 and isinstance(value, int)
    assert parse_override(" light.sigma = 3500 ") == ("light.sigma", 3500.0)


@pytest.mark.parametrize("item,match", [
    ("point.r", "key=value"),
    ("nope.r=1.0", "unknown config key"),
    ("point.r=abc", "a number"),
    ("scan.points=1.5", "an integer"),
    ("point.r=inf", "finite"),
])
def test_parse_override_rejects(item, match):
    with pytest.raises(ValueError, match=match):
        parse_override(item)


def test_parse_config_comments_and_duplicates():
    values = parse_config(
        "# full-line comment\n"
        "\n"
        "point.r = 1.0e3  # trailing comment\n"
        "light.omega0 = 2e6\n"
        "point.r = 2.0e3\n")
    assert values == {"point.r": 2.0e3, "light.omega0": 2.0e6}


def test_parse_config_reports_line_numbers():
    with pytest.raises(ValueError, match="<config>:3"):
        parse_config("point.r = 1.0\n\nbogus line\n")
    with pytest.raises(ValueError, match="custom.cfg:1"):
        parse_config("nope = 2\n", origin="custom.cfg")


def test_load_config(tmp_path):
    path = tmp_path / "run.cfg"
    path.write_text("point.r = 6.37e6\nsource.rs = 0.009\n")
    values = load_config(path)
    assert values["point.r"] == 6.37e6
    assert values["source.rs"] == 0.009


# --- precedence ------------------------------------------------------------------

def test_assemble_precedence():
    scenario = Scenario.assemble(
        EARTH_SURFACE_DEFAULTS,
        config={"point.r": 1.0e3, "light.sigma": 1.0e3},
        overrides={"point.r": 2.0e3},
    )
    assert scenario.get("point.r") == 2.0e3       # --set beats config
    assert scenario.get("light.sigma") == 1.0e3   # config beats defaults
    assert scenario.get("light.omega0") == 2.0e6  # default survives
    assert scenario.effective()["point.r"] == 2.0e3


def test_assemble_rejects_unknown_keys():
    with pytest.raises(ValueError, match="unknown config key"):
        Scenario.assemble({}, config={"typo.key": 1.0})


def test_require_and_get():
    scenario = Scenario.assemble({}, overrides={"point.r": 5.0})
    assert scenario.require("point.r") == 5.0
    assert scenario.get("light.sigma", 42.0) == 42.0
    assert not scenario.has("light.sigma")
    with pytest.raises(ValueError, match="missing required"):
        scenario.require("light.sigma")


# --- domain-object builders --------------------------------------------------------

def test_source_geometric_beats_si():
    scenario = Scenario.assemble(
        {}, overrides={"source.rs": 0.009, "source.a": 3.9, "source.mass": 1.0e30})
    source = scenario.source()
    assert source.r_s == 0.009 and source.a == 3.9


def test_source_from_mass():
    scenario = Scenario.assemble(
        {}, overrides={"source.mass": 5.972e24,
                       "source.angular_momentum": 7.07e33})
    source = scenario.source()
    reference = GravSource.from_mass(5.972e24, 7.07e33)
    assert source.r_s == reference.r_s
    assert source.a == reference.a


def test_source_missing():
    with pytest.raises(ValueError, match="missing source"):
        Scenario.assemble({}).source()


def test_point_and_path_length():
    scenario = Scenario.assemble(EARTH_SURFACE_DEFAULTS)
    assert scenario.point().r == 6.37e7
    assert scenario.path_length() == math.pi * 6.37e7
    explicit = Scenario.assemble(EARTH_SURFACE_DEFAULTS,
                                 overrides={"path.length": 123.0})
    assert explicit.path_length() == 123.0


def test_wavepacket_builder():
    packet = Scenario.assemble(EARTH_SURFACE_DEFAULTS).wavepacket()
    assert packet.omega0 == 2.0e6
    assert packet.sigma == 3.5e3


def test_turntable_exclusivity():
    with pytest.raises(ValueError, match="exactly one"):
        Scenario.assemble(
            {}, overrides={"turntable.radius": 0.2, "turntable.omega": 1.0,
                           "turntable.velocity": 1.0e-9}).turntable()


def test_turntable_user_velocity_suppresses_default_omega():
    scenario = Scenario.assemble(FIBER_LOOP_DEFAULTS,
                                 overrides={"turntable.velocity": 2.0e-9})
    table = scenario.turntable()
    assert table.v == 2.0e-9
    # and the defaults path still resolves omega when nothing is given
    table_default = Scenario.assemble(FIBER_LOOP_DEFAULTS).turntable()
    assert table_default.omega_rot == 2.0 * math.pi


def test_turntable_missing_rate():
    with pytest.raises(ValueError, match="turntable.omega or turntable.velocity"):
        Scenario.assemble({}, overrides={"turntable.radius": 0.2}).turntable()


def test_turntable_windings_and_arm():
    scenario = Scenario.assemble(
        FIBER_LOOP_DEFAULTS, overrides={"turntable.windings": 3})
    table = scenario.turntable()
    assert table.windings == 3
    assert table.arm_length == 1.0e4  # arms.length doubles as the arm length


def test_fiber_arms_builder():
    arms = Scenario.assemble(FIBER_LOOP_DEFAULTS).fiber_arms()
    assert arms.length == 1.0e4
    assert arms.delta_length == 0.01
    assert arms.model.n(8.0e6) == pytest.approx(1.4525, rel=1e-12)
    assert arms.v == pytest.approx(2.0 * math.pi * 0.2 / 299792458.0, rel=1e-15)
