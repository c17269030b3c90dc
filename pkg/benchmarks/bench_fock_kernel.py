"""Timing: numba pair-sum kernel vs the pure-numpy fallback.

The discretized two-photon coincidence is the only O(M^2) hot spot in
the package; everything else is closed-form.  Run with

    python3 benchmarks/bench_fock_kernel.py

The numba path is selected by default; FRAMEDRAG_DISABLE_NUMBA=1 picks
the fallback (the flag is read per call, so both are timed in one
process).  Results also double as a consistency probe: the two backends
must agree to ~1e-15.
"""

import os
import time

import numpy as np

from framedrag._kernels import hom_pair_probabilities, kernel_backend
from framedrag.interference import Wavepacket, fock_grid

SIZES = (256, 1024, 2048)
REPEATS = 5
DELTA_T = 2.0e-4


def _time_backend(disable_numba: bool, omegas: np.ndarray,
                  weights: np.ndarray) -> tuple[float, float]:
    os.environ["FRAMEDRAG_DISABLE_NUMBA"] = "1" if disable_numba else "0"
    hom_pair_probabilities(weights, omegas, DELTA_T)  # warmup / JIT compile
    best = float("inf")
    value = 0.0
    for _ in range(REPEATS):
        start = time.perf_counter()
        value, _ = hom_pair_probabilities(weights, omegas, DELTA_T)
        best = min(best, time.perf_counter() - start)
    return best, value


def main() -> None:
    packet = Wavepacket.gaussian(2.0e6, 3.5e3)
    print(f"{'M':>6} {'numba [ms]':>12} {'numpy [ms]':>12} {'speedup':>9} {'|diff|':>10}")
    for size in SIZES:
        omegas, weights = fock_grid(packet, size)
        t_numba, p_numba = _time_backend(False, omegas, weights)
        t_numpy, p_numpy = _time_backend(True, omegas, weights)
        print(f"{size:>6} {t_numba * 1e3:>12.3f} {t_numpy * 1e3:>12.3f} "
              f"{t_numpy / t_numba:>9.2f} {abs(p_numba - p_numpy):>10.2e}")
    os.environ.pop("FRAMEDRAG_DISABLE_NUMBA", None)
    print(f"active backend with flag unset: {kernel_backend()}")


if __name__ == "__main__":
    main()
