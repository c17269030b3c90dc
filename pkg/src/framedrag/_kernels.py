"""Two-photon beamsplitter pair sums.

The discretized coincidence oracle scales as O(M^2) in the number of
spectral bins — the only genuinely hot loop in the package.  The inner
kernel is compiled with numba when available; setting the environment
variable ``FRAMEDRAG_DISABLE_NUMBA`` (to anything but ``0``) selects a
vectorized numpy fallback instead.  Both paths perform the same explicit
pairwise mode-operator bookkeeping; neither may collapse the sum into the
factorized characteristic-function shortcut used by the closed forms the
oracle exists to check.
"""

from __future__ import annotations

import math
import os

import numpy as np

__all__ = ["hom_pair_probabilities", "kernel_backend"]

_njit_kernel = None


def _numba_disabled() -> bool:
    flag = os.environ.get("FRAMEDRAG_DISABLE_NUMBA", "")
    return flag not in ("", "0")


def kernel_backend() -> str:
    """Name of the kernel implementation the next call will use."""
    if _numba_disabled():
        return "numpy"
    return "numba" if _get_njit_kernel() is not None else "numpy"


def _get_njit_kernel():
    global _njit_kernel
    if _njit_kernel is None:
        try:
            from numba import njit
        except ImportError:
            _njit_kernel = False
            return None
        _njit_kernel = njit(cache=True)(_pair_sums_loops)
    return _njit_kernel or None


def _pair_sums_loops(amp: np.ndarray, phase: np.ndarray) -> tuple[float, float]:
    # amp[x] = sqrt(w_x); phase[y] = exp(-i omega_y dt).  For each ordered
    # frequency pair the beamsplitter sends the two-photon amplitude
    # C_xy = amp_x amp_y phase_y into (C_xy - C_yx)/2 coincidence and
    # (C_xy + C_yx)/2 bunching components.
    m = amp.shape[0]
    coinc = 0.0
    bunch = 0.0
    for x in range(m):
        cx = amp[x] * phase[x]
        for y in range(m):
            c_xy = amp[x] * amp[y] * phase[y]
            c_yx = amp[y] * cx
            d = c_xy - c_yx
            s = c_xy + c_yx
            coinc += d.real * d.real + d.imag * d.imag
            bunch += s.real * s.real + s.imag * s.imag
    return 0.25 * coinc, 0.25 * bunch


def _pair_sums_numpy(amp: np.ndarray, phase: np.ndarray) -> tuple[float, float]:
    c = np.outer(amp, amp * phase)
    d = c - c.T
    s = c + c.T
    coinc = 0.25 * float(np.sum(d.real**2 + d.imag**2))
    bunch = 0.25 * float(np.sum(s.real**2 + s.imag**2))
    return coinc, bunch


def hom_pair_probabilities(weights: np.ndarray, omegas: np.ndarray,
                           delta_t: float) -> tuple[float, float]:
    """Coincidence and bunching probabilities of the discretized two-photon state.

    ``weights`` are normalized spectral weights (sum 1) on the frequency
    grid ``omegas``; ``delta_t`` is the relative delay in metres.  Returns
    (p_coincidence, p_bunching); the two sum to 1 up to rounding.
    """
    weights = np.ascontiguousarray(weights, dtype=np.float64)
    omegas = np.ascontiguousarray(omegas, dtype=np.float64)
    if weights.shape != omegas.shape or weights.ndim != 1 or weights.size == 0:
        raise ValueError("weights and omegas must be matching non-empty 1-d arrays")
    if not math.isfinite(delta_t):
        raise ValueError(f"delta_t must be finite, got {delta_t!r}")
    amp = np.sqrt(weights)
    phase = np.exp(-1j * omegas * delta_t)
    if not _numba_disabled():
        kernel = _get_njit_kernel()
        if kernel is not None:
            return kernel(amp, phase)
    return _pair_sums_numpy(amp, phase)
