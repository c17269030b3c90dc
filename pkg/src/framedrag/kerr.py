"""Equatorial light propagation around a rotating mass.

The (1+1)-dimensional line element used throughout restricts the rotating
body's exterior metric to the equatorial plane and azimuthal motion,

    ds^2 = (1 - r_s/r) dt^2 - (2 r_s a / r) dt dphi - r^2 dphi^2,

with the dphi^2 coefficient truncated at O(a^2/r^2).  Coordinate light
speeds come from the null condition of the untruncated equatorial metric
(dphi^2 coefficient r^2 + a^2 (1 + r_s/r)), expressed as tangential proper
distance per coordinate time:

    dx/dt = r_s a / (r sqrt(P)) +- sqrt(r_s^2 a^2 / (r^2 P) + 1 - r_s/r),
    P     = r^2 + a^2 (1 + r_s/r).

The ``co`` branch takes the plus sign and is the direction favoured by
frame dragging; the ``counter`` branch takes the minus sign and is signed
negative outside the ergosphere (r > r_s).  Between horizon and ergosphere
both branches are dragged forward and come out positive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .constants import GravSource
from .errors import GuardViolation

__all__ = [
    "KerrPoint",
    "MetricComponents",
    "LightSpeedPair",
    "ScanResult",
    "metric_components_kerr",
    "light_speed_full",
    "light_speed_weak",
    "light_speed_pair",
    "null_residual",
    "kerr_phase_difference",
    "kerr_time_delay",
    "kerr_time_delay_full",
    "roundtrip_mean_speed",
    "local_two_way_speed",
    "horizon_radius",
    "blackhole_scan",
]

WEAK_FIELD_GUARD = 0.01

_DIRECTIONS = ("co", "counter")


@dataclass(frozen=True)
class MetricComponents:
    """(1+1) metric components (g_tt, g_tphi, g_phiphi).

    ``g_tphi`` stores half the dt-dphi coefficient of the line element, so
    the quadratic form reads g_tt dt^2 + 2 g_tphi dt dphi + g_phiphi dphi^2.
    """

    g_tt: float
    g_tphi: float
    g_phiphi: float

    @property
    def determinant(self) -> float:
        return self.g_tt * self.g_phiphi - self.g_tphi**2


@dataclass(frozen=True)
class LightSpeedPair:
    """Magnitudes of the two tangential light speeds at a point.

    ``counter_dragged_forward`` flags points inside the ergosphere where
    the counter branch is forced to co-rotate (its signed speed is
    positive there).
    """

    c_co: float
    c_counter: float
    counter_dragged_forward: bool = False


@dataclass(frozen=True)
class KerrPoint:
    """An equatorial field point at Boyer-Lindquist radius ``r`` (metres).

    For sub-extremal sources the point must lie outside the horizon.
    """

    source: GravSource
    r: float

    def __post_init__(self) -> None:
        if not math.isfinite(self.r) or self.r <= 0.0:
            raise ValueError(f"r must be finite and positive, got {self.r!r}")
        if self.source.sub_extremal and self.source.r_s > 0.0:
            r_plus = horizon_radius(self.source)
            if self.r <= r_plus:
                raise ValueError(
                    f"r = {self.r!r} m is not outside the horizon r+ = {r_plus!r} m"
                )

    @property
    def delta(self) -> float:
        """Horizon function Delta = r^2 - r_s r + a^2 (> 0 outside r+)."""
        return self.r * (self.r - self.source.r_s) + self.source.a**2


def _check_direction(direction: str) -> None:
    if direction not in _DIRECTIONS:
        raise ValueError(f"direction must be one of {_DIRECTIONS}, got {direction!r}")


def _speed_terms(r_s: float, a: float, r: float) -> tuple[float, float]:
    """Drag term D and root term S of the coordinate light speeds.

    Returns (D, S) with c_co = D + S and c_counter = D - S.  S^2 equals
    Delta / P, so the root argument going negative is exactly the point
    crossing inside the horizon.
    """
    big_p = r * r + a * a * (1.0 + r_s / r)
    drag = r_s * a / (r * math.sqrt(big_p))
    arg = drag * drag + (1.0 - r_s / r)
    if arg < 0.0:
        raise ValueError(
            f"light-speed root argument {arg!r} < 0 at r = {r!r} m "
            "(point is inside the horizon)"
        )
    return drag, math.sqrt(arg)


def _light_speed_full_raw(r_s: float, a: float, r: float, direction: str) -> float:
    drag, root = _speed_terms(r_s, a, r)
    # Combining drag and root with the same sign is cancellation-free; the
    # opposite branch loses ~half the mantissa near the ergosphere where
    # |D| ~ S, so recover it from the root product (D + S)(D - S) = -g_tt.
    big = drag + root if drag >= 0.0 else drag - root
    small = -(1.0 - r_s / r) / big if big != 0.0 else 0.0
    if direction == "co":
        return big if drag >= 0.0 else small
    return small if drag >= 0.0 else big


def metric_components_kerr(point: KerrPoint) -> MetricComponents:
    """(1+1) metric components (1 - r_s/r, -r_s a/r, -r^2) at a point."""
    r_s, a, r = point.source.r_s, point.source.a, point.r
    return MetricComponents(
        g_tt=1.0 - r_s / r,
        g_tphi=-r_s * a / r,
        g_phiphi=-r * r,
    )


def light_speed_full(point: KerrPoint, direction: str) -> float:
    """Signed coordinate light speed from the full null condition.

    Parameters
    ----------
    point : KerrPoint
        Field point; must be outside the horizon.
    direction : {"co", "counter"}
        Branch of the null condition.  ``counter`` is negative outside the
        ergosphere and positive (dragged forward) inside it.
    """
    _check_direction(direction)
    return _light_speed_full_raw(point.source.r_s, point.source.a, point.r, direction)


def light_speed_weak(point: KerrPoint, direction: str, *,
                     guard: float = WEAK_FIELD_GUARD, force: bool = False) -> float:
    """Signed weak-field light speed +-(1 - r_s/(2r) +- r_s a/r^2).

    Valid only for r_s/r and a/r below ``guard`` (default 0.01); pass
    ``force=True`` to evaluate the truncation anyway.
    """
    _check_direction(direction)
    r_s, a, r = point.source.r_s, point.source.a, point.r
    _apply_weak_guard(r_s, a, r, guard, force)
    drag = r_s * a / (r * r)
    radial = 1.0 - r_s / (2.0 * r)
    return radial + drag if direction == "co" else -(radial - drag)


def _apply_weak_guard(r_s: float, a: float, r: float, guard: float, force: bool) -> None:
    if force:
        return
    if r_s / r >= guard or a / r >= guard:
        raise GuardViolation(
            f"weak-field expansion invalid: r_s/r = {r_s / r:.3e}, "
            f"a/r = {a / r:.3e}, guard = {guard:g} (use force/--override-guards)"
        )


def light_speed_pair(point: KerrPoint, mode: str = "full", *,
                     guard: float = WEAK_FIELD_GUARD, force: bool = False) -> LightSpeedPair:
    """Both light speeds at a point, reported as magnitudes.

    ``mode`` selects the full null-condition solution or the weak-field
    expansion.
    """
    if mode == "full":
        co = light_speed_full(point, "co")
        counter = light_speed_full(point, "counter")
    elif mode == "weak":
        co = light_speed_weak(point, "co", guard=guard, force=force)
        counter = light_speed_weak(point, "counter", guard=guard, force=force)
    else:
        raise ValueError(f"mode must be 'full' or 'weak', got {mode!r}")
    return LightSpeedPair(
        c_co=co,
        c_counter=abs(counter),
        counter_dragged_forward=counter > 0.0,
    )


def _gphiphi_untruncated(r_s: float, a: float, r: float) -> float:
    return -(r * r + a * a + r_s * a * a / r)


def null_residual(point: KerrPoint, direction: str) -> float:
    """Relative residual of ds^2/dt^2 for a full-mode light speed.

    The returned speed u is tangential proper distance per coordinate
    time, so dphi/dt = -u/sqrt(P) in the sign convention of
    ``metric_components_kerr`` (whose cross term makes the favoured
    direction negative dphi).  Substituting into the untruncated
    equatorial line element must annihilate it; the residual is
    normalised by the largest term entering the cancellation.
    """
    _check_direction(direction)
    r_s, a, r = point.source.r_s, point.source.a, point.r
    u = _light_speed_full_raw(r_s, a, r, direction)
    big_p = r * r + a * a * (1.0 + r_s / r)
    omega = -u / math.sqrt(big_p)
    g_tt = 1.0 - r_s / r
    g_tphi = -r_s * a / r
    g_pp = _gphiphi_untruncated(r_s, a, r)
    residual = g_tt + 2.0 * g_tphi * omega + g_pp * omega * omega
    scale = max(abs(g_tt), abs(g_pp) * omega * omega)
    if scale == 0.0:
        # counter branch exactly on the ergosphere boundary: u = 0 and
        # every term vanishes, so the null condition holds identically
        return abs(residual)
    return abs(residual) / scale


def kerr_time_delay(point: KerrPoint, length: float) -> float:
    """Weak-field arrival-time difference 2 L r_s a / r^2 over a path L."""
    _check_positive(length, "length")
    r_s, a, r = point.source.r_s, point.source.a, point.r
    return 2.0 * length * r_s * a / (r * r)


def kerr_time_delay_full(point: KerrPoint, length: float) -> float:
    """Arrival-time difference L (1/|c_counter| - 1/c_co) from the full speeds.

    Evaluated through the algebraic identity

        1/|c_counter| - 1/c_co = 2 min(D, S) / |1 - r_s/r|,

    which avoids the catastrophic cancellation of subtracting two nearly
    equal inverse speeds in the weak-field regime (D and S as in
    ``_speed_terms``).  Diverges at the ergosphere radius r = r_s, where
    the counter branch has zero coordinate speed.
    """
    _check_positive(length, "length")
    r_s, a, r = point.source.r_s, point.source.a, point.r
    drag, root = _speed_terms(r_s, a, r)
    denom = 1.0 - r_s / r
    if denom == 0.0:
        return math.inf
    return length * 2.0 * min(drag, root) / abs(denom)


def kerr_phase_difference(point: KerrPoint, length: float, omega: float,
                          mode: str = "weak", *, guard: float = WEAK_FIELD_GUARD,
                          force: bool = False) -> float:
    """Counter-minus-co propagation phase difference around a path.

    Parameters
    ----------
    point : KerrPoint
    length : float
        One-way path length in metres (pi r for a half loop, 2 pi r for a
        full loop).
    omega : float
        Angular frequency of the light in inverse metres.
    mode : {"weak", "full"}
        ``weak`` returns 2 omega L (r_s a / r^2)(1 + r_s/r) and enforces
        the weak-field guard; ``full`` returns
        omega L (1/|c_counter| - 1/c_co) from the full speeds.
    """
    _check_positive(length, "length")
    _check_positive(omega, "omega")
    r_s, a, r = point.source.r_s, point.source.a, point.r
    if mode == "weak":
        _apply_weak_guard(r_s, a, r, guard, force)
        return 2.0 * omega * length * (r_s * a / (r * r)) * (1.0 + r_s / r)
    if mode == "full":
        return omega * kerr_time_delay_full(point, length)
    raise ValueError(f"mode must be 'weak' or 'full', got {mode!r}")


def roundtrip_mean_speed(point: KerrPoint, *, guard: float = WEAK_FIELD_GUARD,
                         force: bool = False) -> float:
    """Two-way coordinate light speed 1/(1 + r_s/r) over a closed tangential path."""
    r_s, a, r = point.source.r_s, point.source.a, point.r
    _apply_weak_guard(r_s, a, r, guard, force)
    return 1.0 / (1.0 + r_s / r)


def local_two_way_speed(point: KerrPoint, *, guard: float = WEAK_FIELD_GUARD,
                        force: bool = False) -> float:
    """Two-way speed measured by a static local observer.

    Rescales the coordinate mean speed by dt/dtau = (1 - r_s/r)^(-1);
    equals 1/(1 - (r_s/r)^2), i.e. unity up to O((r_s/r)^2).
    """
    r_s, r = point.source.r_s, point.r
    mean = roundtrip_mean_speed(point, guard=guard, force=force)
    return mean / (1.0 - r_s / r)


def horizon_radius(source: GravSource) -> float:
    """Outer horizon r+ = r_s/2 + sqrt((r_s/2)^2 - a^2).

    Errors for super-extremal sources (a > r_s/2), which have no horizon.
    """
    if not source.sub_extremal:
        raise ValueError(
            f"no horizon: source is super-extremal (a = {source.a!r} > r_s/2 = {source.r_s / 2.0!r})"
        )
    half = 0.5 * source.r_s
    return half + math.sqrt(half * half - source.a**2)


@dataclass(frozen=True)
class ScanResult:
    """Radial scan output: r', accumulated phase difference, visibility."""

    r_over_rs: np.ndarray
    phase_rad: np.ndarray
    visibility: np.ndarray


def blackhole_scan(source: GravSource, omega: float, sigma: float, *,
                   r_over_rs: np.ndarray | None = None,
                   r_min: float | None = None, r_max: float = 1.0e3,
                   n_points: int = 512) -> ScanResult:
    """Phase difference and visibility versus radius around a black hole.

    At each radius r = r' r_s a closed tangential loop L = 2 pi r is
    traversed in both directions; the full-mode arrival-time difference
    Delta t sets the phase omega * Delta t and the Gaussian fringe
    visibility exp(-(Delta t * sigma)^2).

    Parameters
    ----------
    source : GravSource
        Must be sub-extremal (the scan is anchored to the horizon).
    omega, sigma : float
        Carrier frequency and spectral width, inverse metres.
    r_over_rs : ndarray, optional
        Explicit radii in units of r_s.  When omitted, a logarithmic grid
        of ``n_points`` samples from 1.05 r+/r_s to ``r_max`` is used.
    """
    _check_positive(omega, "omega")
    _check_positive(sigma, "sigma")
    if source.r_s <= 0.0:
        raise ValueError("blackhole_scan requires r_s > 0")
    r_plus = horizon_radius(source)  # errors for super-extremal sources
    if r_over_rs is None:
        if n_points < 2:
            raise ValueError(f"n_points must be at least 2, got {n_points!r}")
        lo = 1.05 * r_plus / source.r_s if r_min is None else r_min
        if lo >= r_max:
            raise ValueError(f"empty radial range [{lo!r}, {r_max!r}]")
        grid = np.geomspace(lo, r_max, n_points)
    else:
        grid = np.asarray(r_over_rs, dtype=float)
        if grid.ndim != 1 or grid.size == 0:
            raise ValueError("r_over_rs must be a non-empty 1-d array")

    r = grid * source.r_s
    bad = r <= r_plus
    if np.any(bad):
        offending = grid[bad][0]
        raise ValueError(
            f"scan sample r' = {offending!r} lies inside the horizon "
            f"(r+/r_s = {r_plus / source.r_s!r})"
        )

    r_s, a = source.r_s, source.a
    big_p = r * r + a * a * (1.0 + r_s / r)
    drag = r_s * a / (r * np.sqrt(big_p))
    root = np.sqrt(drag * drag + (1.0 - r_s / r))
    length = 2.0 * np.pi * r
    with np.errstate(divide="ignore"):
        delta_t = length * 2.0 * np.minimum(drag, root) / np.abs(1.0 - r_s / r)
    phase = omega * delta_t
    visibility = np.exp(-np.square(delta_t * sigma))
    return ScanResult(r_over_rs=grid, phase_rad=phase, visibility=visibility)


def _check_positive(value: float, name: str) -> None:
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} must be finite and positive, got {value!r}")
