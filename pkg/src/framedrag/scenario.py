"""Scenario configuration: flat key=value files, defaults, and overrides.

Config files are plain text, one ``section.key = value`` per line, with
``#`` comments.  Command-line ``--set`` flags override file values, which
override per-command defaults.  Exactly one of ``turntable.omega`` and
``turntable.velocity`` may be given; supplying either suppresses the
default of the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Mapping

from .constants import CONSTANTS, GravSource, PhysicalConstants
from .fiber import FiberArms, RefractiveModel
from .interference import Wavepacket
from .kerr import KerrPoint
from .turntable import TurntableConfig

__all__ = [
    "Scenario",
    "KNOWN_KEYS",
    "load_config",
    "parse_config",
    "parse_override",
    "EARTH_SURFACE_DEFAULTS",
    "BLACK_HOLE_DEFAULTS",
    "EQUIVALENCE_DEFAULTS",
    "FEASIBILITY_DEFAULTS",
    "FIBER_LOOP_DEFAULTS",
    "HOM_DEFAULTS",
]

_INT_KEYS = frozenset({
    "turntable.windings",
    "interference.bins",
    "scan.points",
    "sweep.points",
})

KNOWN_KEYS = frozenset({
    "source.rs",
    "source.a",
    "source.mass",
    "source.angular_momentum",
    "point.r",
    "path.length",
    "light.omega0",
    "light.sigma",
    "turntable.radius",
    "turntable.omega",
    "turntable.velocity",
    "turntable.windings",
    "arms.length",
    "arms.delta_length",
    "medium.a",
    "medium.b",
    "medium.k0",
    "interference.delta_t",
    "interference.bins",
    "scan.r_max",
    "scan.points",
    "sweep.omega_max",
    "sweep.points",
}) | _INT_KEYS


def _parse_value(key: str, raw: str) -> float | int:
    raw = raw.strip()
    try:
        if key in _INT_KEYS:
            return int(raw)
        value = float(raw)
    except ValueError:
        kind = "an integer" if key in _INT_KEYS else "a number"
        raise ValueError(f"config key {key!r} expects {kind}, got {raw!r}") from None
    if not math.isfinite(value):
        raise ValueError(f"config key {key!r} must be finite, got {raw!r}")
    return value


def parse_override(item: str) -> tuple[str, float | int]:
    """Parse one ``key=value`` override (the --set flag payload)."""
    if "=" not in item:
        raise ValueError(f"override must look like key=value, got {item!r}")
    key, raw = item.split("=", 1)
    key = key.strip()
    if key not in KNOWN_KEYS:
        raise ValueError(f"unknown config key {key!r}")
    return key, _parse_value(key, raw)


def parse_config(text: str, origin: str = "<config>") -> dict[str, float | int]:
    values: dict[str, float | int] = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        try:
            key, value = parse_override(body)
        except ValueError as exc:
            raise ValueError(f"{origin}:{lineno}: {exc}") from None
        values[key] = value
    return values


def load_config(path) -> dict[str, float | int]:
    with open(path, "r", encoding="utf-8") as handle:
        return parse_config(handle.read(), origin=str(path))


# Default parameter bundles, one per command.  Values are the worked
# scenarios the reports are meant to reproduce out of the box.
EARTH_SURFACE_DEFAULTS: Mapping[str, float | int] = {
    "source.rs": 0.009,
    "source.a": 3.9,
    "point.r": 6.37e7,
    "light.omega0": 2.0e6,
    "light.sigma": 3.5e3,
}

BLACK_HOLE_DEFAULTS: Mapping[str, float | int] = {
    "source.rs": 3.0e4,
    "source.a": 7.5e3,
    "light.omega0": 2.0e6,
    "light.sigma": 3.5e3,
    "scan.r_max": 1.0e3,
    "scan.points": 512,
}

EQUIVALENCE_DEFAULTS: Mapping[str, float | int] = {
    "source.rs": 0.009,
    "source.a": 3.9,
    "point.r": 6.37e6,
    "turntable.radius": 0.2,
}

FEASIBILITY_DEFAULTS: Mapping[str, float | int] = {
    "light.sigma": 3.3e3,
    "turntable.radius": 5.0,
    "turntable.omega": 2.0 * math.pi,
    "turntable.windings": 0,
    "arms.length": 1.0e4,
    "arms.delta_length": 0.01,
    "medium.a": 1.0e5,
    "medium.b": 1.44,
    "medium.k0": 8.0e6,
}

FIBER_LOOP_DEFAULTS: Mapping[str, float | int] = {
    "turntable.radius": 0.2,
    "turntable.omega": 2.0 * math.pi,
    "arms.length": 1.0e4,
    "arms.delta_length": 0.01,
    "medium.a": 1.0e5,
    "medium.b": 1.44,
    "medium.k0": 8.0e6,
    "light.omega0": 8.0e6,
    "light.sigma": 4000.0 * math.pi,
    "sweep.omega_max": 20.0,
    "sweep.points": 512,
}

HOM_DEFAULTS: Mapping[str, float | int] = {
    "light.omega0": 2.0e6,
    "light.sigma": 3.5e3,
    "interference.bins": 1024,
}


@dataclass(frozen=True)
class Scenario:
    """Merged parameter bundle: per-command defaults under user values."""

    defaults: Mapping[str, float | int] = field(default_factory=dict)
    user: Mapping[str, float | int] = field(default_factory=dict)

    @classmethod
    def assemble(cls, defaults: Mapping[str, float | int],
                 config: Mapping[str, float | int] | None = None,
                 overrides: Mapping[str, float | int] | None = None) -> "Scenario":
        user: dict[str, float | int] = {}
        user.update(config or {})
        user.update(overrides or {})
        for key in user:
            if key not in KNOWN_KEYS:
                raise ValueError(f"unknown config key {key!r}")
        return cls(defaults=dict(defaults), user=user)

    def has(self, key: str) -> bool:
        return key in self.user or key in self.defaults

    def get(self, key: str, fallback: Any = None) -> Any:
        if key in self.user:
            return self.user[key]
        return self.defaults.get(key, fallback)

    def require(self, key: str) -> float | int:
        value = self.get(key)
        if value is None:
            raise ValueError(f"missing required config key {key!r}")
        return value

    def effective(self) -> dict[str, float | int]:
        merged = dict(self.defaults)
        merged.update(self.user)
        return merged

    # --- domain-object builders (validation happens in the constructors) ---

    def source(self) -> GravSource:
        has_geometric = "source.rs" in self.user or "source.a" in self.user
        has_si = "source.mass" in self.user
        if has_si and not has_geometric:
            return GravSource.from_mass(
                self.require("source.mass"),
                self.get("source.angular_momentum", 0.0),
            )
        if self.has("source.rs"):
            return GravSource(r_s=float(self.require("source.rs")),
                              a=float(self.get("source.a", 0.0)))
        if self.has("source.mass"):
            return GravSource.from_mass(
                self.require("source.mass"),
                self.get("source.angular_momentum", 0.0),
            )
        raise ValueError("missing source parameters (source.rs/source.a or source.mass)")

    def point(self) -> KerrPoint:
        return KerrPoint(source=self.source(), r=float(self.require("point.r")))

    def path_length(self) -> float:
        if self.has("path.length"):
            return float(self.require("path.length"))
        return math.pi * float(self.require("point.r"))

    def wavepacket(self) -> Wavepacket:
        return Wavepacket.gaussian(float(self.require("light.omega0")),
                                   float(self.require("light.sigma")))

    def turntable(self, constants: PhysicalConstants = CONSTANTS) -> TurntableConfig:
        r_t = float(self.require("turntable.radius"))
        windings = int(self.get("turntable.windings", 0))
        arm = self.get("arms.length")
        arm = float(arm) if arm is not None else None
        omega_user = "turntable.omega" in self.user
        vel_user = "turntable.velocity" in self.user
        if omega_user and vel_user:
            raise ValueError(
                "give exactly one of turntable.omega and turntable.velocity"
            )
        if vel_user:
            v = float(self.user["turntable.velocity"])
        elif omega_user:
            return TurntableConfig.from_angular_frequency(
                r_t, float(self.user["turntable.omega"]),
                speed_of_light=constants.c, windings=windings, arm_length=arm)
        elif "turntable.velocity" in self.defaults:
            v = float(self.defaults["turntable.velocity"])
        elif "turntable.omega" in self.defaults:
            return TurntableConfig.from_angular_frequency(
                r_t, float(self.defaults["turntable.omega"]),
                speed_of_light=constants.c, windings=windings, arm_length=arm)
        else:
            raise ValueError("missing turntable.omega or turntable.velocity")
        return TurntableConfig.from_velocity(
            r_t, v, speed_of_light=constants.c, windings=windings, arm_length=arm)

    def refractive_model(self) -> RefractiveModel:
        return RefractiveModel(
            A=float(self.require("medium.a")),
            B=float(self.require("medium.b")),
            k0=float(self.require("medium.k0")),
        )

    def fiber_arms(self, constants: PhysicalConstants = CONSTANTS) -> FiberArms:
        table = self.turntable(constants)
        return FiberArms(
            length=float(self.require("arms.length")),
            delta_length=float(self.get("arms.delta_length", 0.0)),
            model=self.refractive_model(),
            v=table.v,
        )
