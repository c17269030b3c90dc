"""Turntable kinematics and the rotating-mass equivalence.

Two independent matching procedures fix the turntable speed that mimics a
rotating mass of Schwarzschild radius r_s and spin parameter a at radius r:

* metric matching — rescale the Kerr time coordinate by
  sqrt((1-v^2)/(1-r_s/r)) and equate the off-diagonal metric components,
  giving v = (r_s a / r^2) / sqrt(1 - r_s/r + r_s^2 a^2 / r^4);
* time-shift matching — equate the co/counter round-trip arrival-time
  splits of the two settings, giving v = X / sqrt(1 + X^2) with
  X = r_s a / (r r_t) for a turntable of radius r_t.

All velocities are fractions of c; lengths are metres.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .constants import GravSource
from .kerr import KerrPoint, LightSpeedPair, MetricComponents

__all__ = [
    "TurntableConfig",
    "EquivalenceResult",
    "metric_components_rotating",
    "time_rescale_factor",
    "equivalence_velocity_metric",
    "equivalence_velocity_timeshift",
    "turntable_roundtrip_shift",
    "kerr_roundtrip_shift",
    "sagnac_light_speeds",
    "sagnac_phase",
    "min_velocity_for_visibility",
    "windings_for_visibility_loss",
    "winding_arm_length",
    "winding_hom_exponent",
    "two_way_phase_turntable",
    "g_force",
]

STANDARD_GRAVITY = 9.81  # m/s^2, as used for the quoted g-force figures


def _check_speed(v: float) -> None:
    if not 0.0 <= v < 1.0 or not math.isfinite(v):
        raise ValueError(f"tangential speed must satisfy 0 <= v < 1, got {v!r}")


@dataclass(frozen=True)
class TurntableConfig:
    """A spinning platform carrying the interferometer.

    Exactly one of ``omega_rot`` (rad/s) or ``v`` (fraction of c) is given;
    the other is derived through v = Omega r_t / c.  ``windings`` counts
    extra fiber loops per arm; arm lengths default to the half-way meeting
    convention L = (2N+1) pi r_t sqrt(1-v^2).
    """

    r_t: float
    v: float
    omega_rot: float
    windings: int = 0
    arm_length: float | None = None

    def __post_init__(self) -> None:
        if not math.isfinite(self.r_t) or self.r_t <= 0.0:
            raise ValueError(f"turntable radius must be positive, got {self.r_t!r}")
        _check_speed(self.v)
        if self.windings < 0:
            raise ValueError(f"windings must be >= 0, got {self.windings!r}")
        if self.arm_length is not None and self.arm_length <= 0.0:
            raise ValueError(f"arm_length must be positive, got {self.arm_length!r}")

    @classmethod
    def from_velocity(cls, r_t: float, v: float, *, speed_of_light: float,
                      windings: int = 0, arm_length: float | None = None) -> "TurntableConfig":
        _check_speed(v)
        omega = v * speed_of_light / r_t
        return cls(r_t=r_t, v=v, omega_rot=omega, windings=windings, arm_length=arm_length)

    @classmethod
    def from_angular_frequency(cls, r_t: float, omega_rot: float, *, speed_of_light: float,
                               windings: int = 0, arm_length: float | None = None) -> "TurntableConfig":
        v = omega_rot * r_t / speed_of_light
        return cls(r_t=r_t, v=v, omega_rot=omega_rot, windings=windings, arm_length=arm_length)

    @property
    def default_arm_length(self) -> float:
        return winding_arm_length(self.r_t, self.v, self.windings)

    @property
    def effective_arm_length(self) -> float:
        return self.arm_length if self.arm_length is not None else self.default_arm_length


@dataclass(frozen=True)
class EquivalenceResult:
    """Turntable velocity matching a rotating-mass scenario.

    ``v`` is the exact closed form of the selected method, ``v_approx``
    drops the small quadratic term under the square root, and ``v_leading``
    is the first-order value r_s a / (r^2 or r r_t).  All are fractions of
    c, signed non-negative.  Inputs are echoed for reporting.
    """

    v: float
    v_approx: float
    v_leading: float
    method: str
    source: GravSource
    r: float
    r_t: float | None = None


def metric_components_rotating(v: float, r_t: float) -> MetricComponents:
    """(1+1) rotating-frame metric components (1-v^2, -v r_t, -r_t^2)."""
    _check_speed(v)
    if r_t <= 0.0:
        raise ValueError(f"turntable radius must be positive, got {r_t!r}")
    return MetricComponents(g_tt=1.0 - v * v, g_tphi=-v * r_t, g_phiphi=-r_t * r_t)


def time_rescale_factor(source: GravSource, r: float, v: float) -> float:
    """Time rescaling sqrt((1-v^2)/(1-r_s/r)) that aligns the two metrics."""
    _check_speed(v)
    if r <= source.r_s:
        raise ValueError(
            f"time rescaling needs r > r_s, got r = {r!r}, r_s = {source.r_s!r}"
        )
    return math.sqrt((1.0 - v * v) / (1.0 - source.r_s / r))


def equivalence_velocity_metric(source: GravSource, r: float) -> EquivalenceResult:
    """Turntable speed that reproduces the rotating-mass metric at radius r.

    Exact form (r_s a / r^2) / sqrt(1 - r_s/r + r_s^2 a^2 / r^4); the
    ``v_approx`` variant keeps only (1 - r_s/r) under the root and
    ``v_leading`` is the first-order r_s a / r^2.
    """
    point = KerrPoint(source=source, r=r)  # validates r against the horizon
    r_s, a = source.r_s, source.a
    if r <= r_s:
        raise ValueError(f"metric matching needs r > r_s, got r = {r!r}")
    x = r_s * a / (r * r)
    v = x / math.sqrt(1.0 - r_s / r + x * x)
    v_approx = x / math.sqrt(1.0 - r_s / r)
    return EquivalenceResult(
        v=v, v_approx=v_approx, v_leading=x,
        method="metric", source=source, r=point.r,
    )


def equivalence_velocity_timeshift(source: GravSource, r: float, r_t: float, *,
                                   metric_time: bool = False) -> EquivalenceResult:
    """Turntable speed equating round-trip time shifts at turntable radius r_t.

    Solving turntable shift = rotating-mass shift gives v = X/sqrt(1+X^2)
    with X = r_s a / (r r_t); the small-X limit is the quoted
    v = +-r_s a / (r r_t).  With ``metric_time=True`` the mass-side shift
    is measured against the rescaled time coordinate (X divided by
    sqrt(1-r_s/r)), which for r_t = r reproduces the metric-matching
    velocity.
    """
    point = KerrPoint(source=source, r=r)
    if r_t <= 0.0:
        raise ValueError(f"turntable radius must be positive, got {r_t!r}")
    r_s, a = source.r_s, source.a
    x = r_s * a / (r * r_t)
    if metric_time:
        if r <= r_s:
            raise ValueError(f"metric-time matching needs r > r_s, got r = {r!r}")
        x /= math.sqrt(1.0 - r_s / r)
    v = x / math.sqrt(1.0 + x * x)
    return EquivalenceResult(
        v=v, v_approx=x / math.sqrt(1.0 + x * x), v_leading=x,
        method="timeshift", source=source, r=point.r, r_t=r_t,
    )


def turntable_roundtrip_shift(v: float, r_t: float) -> float:
    """Arrival-time split 2 pi r_t v / (sqrt(1-v^2) (1-v)) per revolution.

    Uses the dilated circumference L = 2 pi r_t / sqrt(1-v^2) and the
    co-rotating closing time L/(1-v) - L.
    """
    _check_speed(v)
    circumference = 2.0 * math.pi * r_t / math.sqrt(1.0 - v * v)
    return circumference / (1.0 - v) - circumference


def kerr_roundtrip_shift(source: GravSource, r: float) -> float:
    """Rotating-mass round-trip arrival split 2 pi r_s a / r."""
    if r <= 0.0:
        raise ValueError(f"r must be positive, got {r!r}")
    return 2.0 * math.pi * source.r_s * source.a / r


def sagnac_light_speeds(v: float) -> LightSpeedPair:
    """Rotating-frame coordinate light speeds (1+v, 1-v)."""
    _check_speed(v)
    return LightSpeedPair(c_co=1.0 + v, c_counter=1.0 - v)


def sagnac_phase(omega: float, length: float, v: float) -> float:
    """Sagnac phase difference 2 omega v L / (1 - v^2) around a loop L."""
    _check_speed(v)
    if length <= 0.0:
        raise ValueError(f"length must be positive, got {length!r}")
    if omega <= 0.0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    return 2.0 * omega * v * length / (1.0 - v * v)


def min_velocity_for_visibility(radius: float, sigma: float, windings: int = 0) -> tuple[float, float]:
    """Speed where fringe loss becomes significant on a platform of given radius.

    Returns (exact, leading) with exact = 1/sqrt(4 pi^2 r_eff^2 sigma^2 + 1)
    and leading = 1/(2 pi r_eff sigma), where r_eff = (2N+1) r accounts for
    N extra fiber windings.
    """
    if radius <= 0.0 or sigma <= 0.0:
        raise ValueError(f"radius and sigma must be positive, got {radius!r}, {sigma!r}")
    if windings < 0:
        raise ValueError(f"windings must be >= 0, got {windings!r}")
    r_eff = (2 * windings + 1) * radius
    scale = 2.0 * math.pi * r_eff * sigma
    exact = 1.0 / math.sqrt(scale * scale + 1.0)
    return exact, 1.0 / scale


def windings_for_visibility_loss(radius: float, sigma: float, v: float) -> int:
    """Smallest winding count N with min_velocity(..., N) <= v."""
    _check_speed(v)
    if v == 0.0:
        raise ValueError("v = 0 cannot reach significant visibility loss")
    if radius <= 0.0 or sigma <= 0.0:
        raise ValueError(f"radius and sigma must be positive, got {radius!r}, {sigma!r}")
    # exact >= condition: 4 pi^2 ((2N+1) r)^2 sigma^2 >= 1/v^2 - 1
    needed = math.sqrt(max(1.0 / (v * v) - 1.0, 0.0)) / (2.0 * math.pi * radius * sigma)
    n = math.ceil((needed - 1.0) / 2.0)
    return max(n, 0)


def winding_arm_length(r_t: float, v: float, windings: int = 0) -> float:
    """Arm length (2N+1) pi r_t sqrt(1-v^2) of the half-way meeting layout."""
    _check_speed(v)
    if r_t <= 0.0:
        raise ValueError(f"turntable radius must be positive, got {r_t!r}")
    if windings < 0:
        raise ValueError(f"windings must be >= 0, got {windings!r}")
    return (2 * windings + 1) * math.pi * r_t * math.sqrt(1.0 - v * v)


def winding_hom_exponent(sigma: float, v: float, r_t: float, windings: int = 0) -> float:
    """Coincidence-dip exponent sigma^2 dt^2 / 2 for the wound-fiber layout.

    Equals 8 sigma^2 v^2 (2N+1)^2 pi^2 r_t^2 / (1 - v^2); crossing 2 marks
    the significant-loss threshold used by min_velocity_for_visibility.
    """
    length = winding_arm_length(r_t, v, windings)
    delta_t = 4.0 * v * length / (1.0 - v * v)
    return 0.5 * (sigma * delta_t) ** 2


def two_way_phase_turntable(v: float, r_t: float, omega: float,
                            length: float | None = None) -> tuple[float, float, float]:
    """Round-trip phases of the two arms and their difference.

    Each arm sends light out and back over the same fiber of length L
    (default pi r_t sqrt(1-v^2)), one leg co-rotating at 1+v and one
    counter-rotating at 1-v; phases are accumulated against on-platform
    proper time.  The out/back legs commute, so the difference vanishes
    identically — the round-trip speed of light on the platform is
    isotropic.
    """
    _check_speed(v)
    if r_t <= 0.0:
        raise ValueError(f"turntable radius must be positive, got {r_t!r}")
    if omega <= 0.0:
        raise ValueError(f"omega must be positive, got {omega!r}")
    if length is None:
        length = math.pi * r_t * math.sqrt(1.0 - v * v)
    elif length <= 0.0:
        raise ValueError(f"length must be positive, got {length!r}")
    proper = math.sqrt(1.0 - v * v)
    t_a = length / (1.0 + v) + length / (1.0 - v)
    t_b = length / (1.0 - v) + length / (1.0 + v)
    phi_a = omega * t_a * proper
    phi_b = omega * t_b * proper
    return phi_a, phi_b, phi_a - phi_b


def g_force(v: float, r_t: float, *, speed_of_light: float) -> float:
    """Centripetal acceleration (v c)^2 / r_t in units of 9.81 m/s^2."""
    _check_speed(v)
    if r_t <= 0.0:
        raise ValueError(f"turntable radius must be positive, got {r_t!r}")
    v_si = v * speed_of_light
    return v_si * v_si / r_t / STANDARD_GRAVITY
