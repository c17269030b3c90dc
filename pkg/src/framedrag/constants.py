"""Physical constants, geometric units, and gravitating-source parameters.

Everything downstream works in geometric units (c = G = 1): lengths and
times in metres, wavenumbers and angular frequencies in inverse metres,
velocities as fractions of c.  SI values enter only through the explicit
conversion helpers in this module.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

__all__ = [
    "PhysicalConstants",
    "CONSTANTS",
    "GravSource",
    "schwarzschild_radius",
    "spin_parameter",
    "velocity_si_to_natural",
    "velocity_natural_to_si",
]


@dataclass(frozen=True)
class PhysicalConstants:
    """SI constants used for unit conversion.

    c is exact by definition; G is the CODATA value rounded to the digits
    the rest of the pipeline is sensitive to.  The Earth entries are the
    canonical mass, mean radius and spin angular momentum used for the
    stock Earth scenarios.
    """

    c: float = 299_792_458.0          # m/s, exact
    G: float = 6.674e-11              # m^3 kg^-1 s^-2
    earth_mass: float = 5.972e24      # kg
    earth_radius: float = 6.371e6     # m
    earth_angular_momentum: float = 7.07e33  # kg m^2 / s


CONSTANTS = PhysicalConstants()


def schwarzschild_radius(mass: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Schwarzschild radius r_s = 2 G M / c^2 of a mass in kg, in metres."""
    if not math.isfinite(mass) or mass < 0.0:
        raise ValueError(f"mass must be finite and non-negative, got {mass!r}")
    return 2.0 * constants.G * mass / constants.c**2


def spin_parameter(mass: float, angular_momentum: float,
                   constants: PhysicalConstants = CONSTANTS) -> float:
    """Spin parameter a = J / (M c) in metres.

    ``angular_momentum`` is the SI spin angular momentum in kg m^2/s.
    """
    if not math.isfinite(mass) or mass <= 0.0:
        raise ValueError(f"mass must be finite and positive, got {mass!r}")
    if not math.isfinite(angular_momentum):
        raise ValueError("angular momentum must be finite")
    return angular_momentum / (mass * constants.c)


def velocity_si_to_natural(v_mps: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Convert a velocity in m/s to a fraction of c.  Requires |v| < c."""
    if not math.isfinite(v_mps):
        raise ValueError("velocity must be finite")
    if abs(v_mps) >= constants.c:
        raise ValueError(f"|v| must be strictly below c, got {v_mps!r} m/s")
    return v_mps / constants.c


def velocity_natural_to_si(v: float, constants: PhysicalConstants = CONSTANTS) -> float:
    """Convert a velocity from a fraction of c back to m/s."""
    if not math.isfinite(v) or abs(v) >= 1.0:
        raise ValueError(f"|v| must be strictly below 1, got {v!r}")
    return v * constants.c


@dataclass(frozen=True)
class GravSource:
    """A rotating gravitating body, described by r_s and a (both metres).

    ``r_s`` is the Schwarzschild radius, ``a = J/(Mc)`` the spin parameter.
    ``r_s = 0`` is allowed and gives flat space.  A source with a <= r_s/2
    is sub-extremal and has a real horizon.
    """

    r_s: float
    a: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.r_s) or self.r_s < 0.0:
            raise ValueError(f"r_s must be finite and non-negative, got {self.r_s!r}")
        if not math.isfinite(self.a) or self.a < 0.0:
            raise ValueError(f"a must be finite and non-negative, got {self.a!r}")

    @property
    def sub_extremal(self) -> bool:
        """True when a <= r_s/2, i.e. the source has a real horizon."""
        return self.a <= 0.5 * self.r_s

    @classmethod
    def from_mass(cls, mass: float, angular_momentum: float,
                  constants: PhysicalConstants = CONSTANTS) -> "GravSource":
        """Build a source from SI mass (kg) and spin angular momentum (kg m^2/s)."""
        return cls(
            r_s=schwarzschild_radius(mass, constants),
            a=spin_parameter(mass, angular_momentum, constants),
        )
