"""Single-photon and two-photon interference observables.

Delays are lengths (metres) and spectra live on inverse-metre grids, so a
"time" delay Δt multiplies a wavenumber directly to give phase.  The
two-photon (Hong-Ou-Mandel) coincidence comes in three independent routes:
a Gaussian closed form, an adaptive-quadrature characteristic function for
arbitrary spectra, and a discretized Fock-state oracle that does explicit
beamsplitter mode bookkeeping (used to cross-check the other two).
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from . import _kernels
from .errors import GuardViolation

__all__ = [
    "Wavepacket",
    "InterferenceResult",
    "SpectrumNormalizationWarning",
    "load_spectrum",
    "single_photon_prob",
    "single_photon_prob_gaussian",
    "single_photon_prob_quadrature",
    "gaussian_visibility",
    "hom_coincidence_gaussian",
    "hom_coincidence_general",
    "hom_visibility",
    "fock_grid",
    "fock_oracle_hom",
]

NARROWBAND_GUARD = 0.2  # sigma/omega0 bound for the closed-form detection probability
MAX_FOCK_BINS = 2048

_QUAD_OPTS = dict(epsabs=1.0e-13, epsrel=1.0e-11, limit=500)
_GAUSS_WINDOW = 12.0  # integration half-width in units of sigma


class SpectrumNormalizationWarning(UserWarning):
    """A tabulated spectrum needed renormalization on construction."""


@dataclass(frozen=True)
class Wavepacket:
    """Photon spectral density |f(omega)|^2.

    ``gaussian`` packets are defined by center ``omega0`` and width
    ``sigma`` (density (1/(pi sigma^2))^(1/2) exp(-(omega-omega0)^2/sigma^2));
    ``tabulated`` packets carry an explicit (omega, density) grid, are
    renormalized on construction, and are treated downstream as
    trapezoid-weighted spectral atoms.  For tabulated packets omega0 is
    the grid mean and sigma is sqrt(2) times the grid standard deviation,
    matching the exp(-(omega-omega0)^2/sigma^2) width convention above
    (for which sigma is sqrt(2) times the spectral std).
    """

    omega0: float
    sigma: float
    shape: str = "gaussian"
    grid_omega: np.ndarray | None = None
    grid_density: np.ndarray | None = None

    def __post_init__(self) -> None:
        if self.shape not in ("gaussian", "tabulated"):
            raise ValueError(f"shape must be 'gaussian' or 'tabulated', got {self.shape!r}")
        if not math.isfinite(self.omega0) or self.omega0 <= 0.0:
            raise ValueError(f"omega0 must be positive, got {self.omega0!r}")
        if not math.isfinite(self.sigma) or self.sigma <= 0.0:
            raise ValueError(f"sigma must be positive, got {self.sigma!r}")
        if self.shape == "tabulated":
            if self.grid_omega is None or self.grid_density is None:
                raise ValueError("tabulated packets need grid_omega and grid_density")
        elif self.grid_omega is not None or self.grid_density is not None:
            raise ValueError("gaussian packets take no grid arrays")

    @classmethod
    def gaussian(cls, omega0: float, sigma: float) -> "Wavepacket":
        return cls(omega0=omega0, sigma=sigma, shape="gaussian")

    @classmethod
    def tabulated(cls, omegas, density) -> "Wavepacket":
        omegas = np.asarray(omegas, dtype=float)
        density = np.asarray(density, dtype=float)
        if omegas.ndim != 1 or omegas.shape != density.shape or omegas.size < 2:
            raise ValueError("tabulated spectrum needs matching 1-d arrays of length >= 2")
        if not np.all(np.diff(omegas) > 0.0):
            raise ValueError("tabulated frequencies must be strictly increasing")
        if np.any(density < 0.0) or not np.any(density > 0.0):
            raise ValueError("tabulated density must be non-negative and not all zero")
        if np.any(omegas <= 0.0):
            raise ValueError("tabulated frequencies must be positive")
        norm = float(_trapz_weights(omegas) @ density)
        if not math.isfinite(norm) or norm <= 0.0:
            raise ValueError(f"spectrum is not normalizable (integral {norm!r})")
        if abs(norm - 1.0) > 1.0e-10:
            warnings.warn(
                f"input spectrum integrated to {norm!r}; renormalized to 1",
                SpectrumNormalizationWarning,
                stacklevel=2,
            )
        density = density / norm
        weights = _trapz_weights(omegas) * density
        weights /= weights.sum()
        mean = float(weights @ omegas)
        var = float(weights @ (omegas - mean) ** 2)
        width = math.sqrt(2.0 * var) if var > 0.0 else np.spacing(mean)
        omegas.flags.writeable = False
        density.flags.writeable = False
        return cls(omega0=mean, sigma=width,
                   shape="tabulated", grid_omega=omegas, grid_density=density)

    def density(self, omega):
        """Spectral density at ``omega`` (vectorized; zero outside a tabulated grid)."""
        if self.shape == "gaussian":
            u = (np.asarray(omega, dtype=float) - self.omega0) / self.sigma
            return np.exp(-u * u) / (math.sqrt(math.pi) * self.sigma)
        return np.interp(omega, self.grid_omega, self.grid_density, left=0.0, right=0.0)


@dataclass(frozen=True)
class InterferenceResult:
    """One interference scenario: delay, phase, visibility, probability."""

    delta_t: float
    delta_phi: float
    visibility: float
    probability: float

    def __post_init__(self) -> None:
        if not -1.0e-12 <= self.visibility <= 1.0 + 1.0e-12:
            raise ValueError(f"visibility out of [0, 1]: {self.visibility!r}")
        if not -1.0e-12 <= self.probability <= 1.0 + 1.0e-12:
            raise ValueError(f"probability out of [0, 1]: {self.probability!r}")


def _trapz_weights(grid: np.ndarray) -> np.ndarray:
    w = np.empty_like(grid)
    w[1:-1] = 0.5 * (grid[2:] - grid[:-2])
    w[0] = 0.5 * (grid[1] - grid[0])
    w[-1] = 0.5 * (grid[-1] - grid[-2])
    return w


def load_spectrum(path) -> Wavepacket:
    """Load a tabulated spectrum from two-column text (omega_inv_m, density).

    Lines starting with '#' are comments; the density is renormalized on
    load (with a warning if it was off).
    """
    data = np.loadtxt(path, comments="#", ndmin=2)
    if data.shape[1] != 2:
        raise ValueError(f"spectrum file must have two columns, got {data.shape[1]}")
    return Wavepacket.tabulated(data[:, 0], data[:, 1])


def single_photon_prob(delta_phi: float) -> float:
    """Monochromatic detection probability (1 + sin(delta_phi)) / 2."""
    return 0.5 * (1.0 + math.sin(delta_phi))


def gaussian_visibility(delta_t: float, sigma: float) -> float:
    """Single-photon fringe visibility exp(-(delta_t sigma)^2)."""
    if sigma <= 0.0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    x = delta_t * sigma
    return math.exp(-x * x)


def single_photon_prob_gaussian(delta_phi: float, omega0: float, sigma: float, *,
                                guard: float = NARROWBAND_GUARD, force: bool = False) -> float:
    """Closed-form detection probability (1 + exp(-(dPhi sigma/omega0)^2) sin dPhi)/2.

    Valid for narrowband packets; the guard rejects sigma/omega0 >= 0.2 by
    default (``force=True`` overrides).  The independent quadrature route
    is ``single_photon_prob_quadrature``.
    """
    if omega0 <= 0.0 or sigma <= 0.0:
        raise ValueError(f"omega0 and sigma must be positive, got {omega0!r}, {sigma!r}")
    if not force and sigma >= guard * omega0:
        raise GuardViolation(
            f"narrowband assumption invalid: sigma/omega0 = {sigma / omega0:.3e}, "
            f"guard = {guard:g} (use force/--override-guards)"
        )
    x = delta_phi * sigma / omega0
    return 0.5 * (1.0 + math.exp(-x * x) * math.sin(delta_phi))


def _centered_cosine_transform(packet: Wavepacket, delta_t: float) -> float:
    """integral of density(omega) cos((omega - omega0) dt) d omega by quadrature."""
    omega0, sigma = packet.omega0, packet.sigma

    def centered(u: float) -> float:
        return float(packet.density(omega0 + u))

    half = _GAUSS_WINDOW * sigma
    if packet.shape == "tabulated":
        half = max(half, float(packet.grid_omega[-1] - packet.grid_omega[0]))
    if delta_t == 0.0:
        left, _ = quad(centered, -half, 0.0, **_QUAD_OPTS)
        right, _ = quad(centered, 0.0, half, **_QUAD_OPTS)
        return left + right
    left, _ = quad(centered, -half, 0.0, weight="cos", wvar=delta_t, **_QUAD_OPTS)
    right, _ = quad(centered, 0.0, half, weight="cos", wvar=delta_t, **_QUAD_OPTS)
    return left + right


def single_photon_prob_quadrature(delta_phi: float, packet: Wavepacket) -> float:
    """Detection probability by integrating (1 + sin(omega dt))/2 over the spectrum.

    The delay is delta_phi/omega0.  Serves as the independent check of
    ``single_photon_prob_gaussian`` in its narrowband regime.
    """
    delta_t = delta_phi / packet.omega0
    # density is even about omega0, so only the cosine part survives:
    # <sin(omega dt)> = sin(omega0 dt) * integral(density * cos(u dt)).
    envelope = _centered_cosine_transform(packet, delta_t)
    return 0.5 * (1.0 + math.sin(packet.omega0 * delta_t) * envelope)


def hom_coincidence_gaussian(sigma: float, delta_t: float) -> float:
    """Gaussian-packet coincidence probability (1 - exp(-sigma^2 dt^2/2))/2."""
    if sigma <= 0.0:
        raise ValueError(f"sigma must be positive, got {sigma!r}")
    return 0.5 - 0.5 * math.exp(-0.5 * (sigma * delta_t) ** 2)


def hom_coincidence_general(packet: Wavepacket, delta_t: float) -> float:
    """Coincidence probability (1 - |chi(dt)/chi(0)|^2)/2 for any spectrum.

    chi is the spectral characteristic function.  Gaussian packets are
    integrated by adaptive quadrature (independent of the closed form);
    tabulated packets are summed as discrete spectral atoms, so a
    symmetric two-point spectrum at omega0 +- d gives the
    (1 - cos^2(d dt))/2 beat pattern exactly.  The chi(0) normalization
    makes the coincidence vanish identically at zero delay.
    """
    if packet.shape == "tabulated":
        weights = _trapz_weights(packet.grid_omega) * packet.grid_density
        chi = weights @ np.exp(-1j * packet.grid_omega * delta_t)
        chi0 = weights.sum()
        ratio2 = abs(chi / chi0) ** 2
    else:
        # |chi(dt)| reduces to the centered cosine transform because the
        # density is even about omega0; the carrier phase drops in |.|.
        envelope = _centered_cosine_transform(packet, delta_t)
        chi0 = _centered_cosine_transform(packet, 0.0)
        ratio2 = (envelope / chi0) ** 2
    return 0.5 - 0.5 * ratio2


def hom_visibility(p0: float, pmax: float) -> float:
    """Dip visibility 1 - p0/pmax."""
    if pmax == 0.0:
        raise ValueError("visibility undefined for pmax = 0")
    if not 0.0 <= p0 <= pmax <= 0.5:
        raise ValueError(f"need 0 <= p0 <= pmax <= 0.5, got p0={p0!r}, pmax={pmax!r}")
    return 1.0 - p0 / pmax


def fock_grid(packet: Wavepacket, bins: int = 1024) -> tuple[np.ndarray, np.ndarray]:
    """Discretize a spectrum into (frequencies, normalized weights) for the Fock oracle.

    Tabulated packets use their own grid (``bins`` ignored); Gaussian
    packets are sampled on a uniform grid spanning +-6 sigma.
    """
    if packet.shape == "tabulated":
        omegas = np.asarray(packet.grid_omega, dtype=float)
        weights = _trapz_weights(omegas) * packet.grid_density
    else:
        if bins < 2:
            raise ValueError(f"bins must be >= 2, got {bins!r}")
        omegas = np.linspace(packet.omega0 - 6.0 * packet.sigma,
                             packet.omega0 + 6.0 * packet.sigma, bins)
        weights = _trapz_weights(omegas) * packet.density(omegas)
    if omegas.size > MAX_FOCK_BINS:
        raise ValueError(f"Fock oracle capped at {MAX_FOCK_BINS} bins, got {omegas.size}")
    return omegas, weights / weights.sum()


def fock_oracle_hom(packet: Wavepacket, delta_t: float, bins: int = 1024) -> float:
    """Coincidence probability from the discretized two-photon Fock state.

    Builds the post-beamsplitter state by explicit mode-operator
    bookkeeping on a ``bins``-point grid and sums coincidence amplitudes
    pairwise — an O(bins^2) route independent of the characteristic-
    function formulas it is used to test.
    """
    omegas, weights = fock_grid(packet, bins)
    p_coinc, _ = _kernels.hom_pair_probabilities(weights, omegas, delta_t)
    return p_coinc
