"""Registry of formula anchors used in run reports.

Every numeric output line a command prints carries one of these anchor
tags, and ``docs/formulas.md`` documents each tag with its derivation.  A
docs test walks this table, so adding an output line means adding its
anchor here and a matching entry there.
"""

from __future__ import annotations

ANCHORS: dict[str, str] = {
    # geometry / rotating mass
    "schwarzschild-radius": "r_s = 2 G M / c^2",
    "spin-parameter": "a = J / (M c)",
    "metric-kerr": "(g_tt, g_tphi, g_phiphi) = (1 - r_s/r, -r_s a/r, -r^2)",
    "metric-rotating": "(g_tt, g_tphi, g_phiphi) = (1 - v^2, -v r_t, -r_t^2)",
    "horizon-radius": "r+ = r_s/2 + sqrt((r_s/2)^2 - a^2)",
    "light-speed-full": "c_+- = r_s a/(r sqrt(P)) +- sqrt(r_s^2 a^2/(r^2 P) + 1 - r_s/r), P = r^2 + a^2 (1 + r_s/r)",
    "light-speed-weak": "c_+- = +-(1 - r_s/(2 r) +- r_s a/r^2)",
    "kerr-phase-weak": "dPhi = 2 omega L (r_s a/r^2)(1 + r_s/r)",
    "kerr-phase-full": "dPhi = omega L (1/|c_-| - 1/c_+)",
    "kerr-delay-weak": "dt = 2 L r_s a/r^2",
    "kerr-delay-full": "dt = L (1/|c_-| - 1/c_+) = 2 L min(D, S)/|1 - r_s/r|",
    "roundtrip-mean-speed": "c_mean = 1/(1 + r_s/r)",
    "local-two-way-speed": "c_local = c_mean/(1 - r_s/r) = 1/(1 - (r_s/r)^2)",
    # turntable / equivalence
    "time-rescale-factor": "sqrt((1 - v^2)/(1 - r_s/r))",
    "equivalence-metric": "v = (r_s a/r^2)/sqrt(1 - r_s/r + r_s^2 a^2/r^4)",
    "equivalence-metric-approx": "v = (r_s a/r^2)/sqrt(1 - r_s/r)",
    "equivalence-timeshift": "v = X/sqrt(1 + X^2), X = r_s a/(r r_t)",
    "equivalence-leading": "v = r_s a/(r^2 or r r_t)",
    "turntable-roundtrip-shift": "dt = 2 pi r_t v/(sqrt(1 - v^2)(1 - v))",
    "kerr-roundtrip-shift": "dt = 2 pi r_s a/r",
    "angular-frequency": "Omega = v c/r_t",
    "sagnac-speeds": "c_+- = 1 +- v",
    "sagnac-phase": "dPhi = 2 omega v L/(1 - v^2)",
    "two-way-turntable-phase": "phi' = 2 omega L/sqrt(1 - v^2), difference 0",
    "min-velocity": "v_min = 1/sqrt(4 pi^2 ((2N+1) r)^2 sigma^2 + 1)",
    "min-velocity-leading": "v_min = 1/(2 pi (2N+1) r sigma)",
    "windings-needed": "smallest N with v_min(N) <= v",
    "winding-arm-length": "L = (2N+1) pi r_t sqrt(1 - v^2)",
    "winding-hom-exponent": "sigma^2 dt^2/2 = 8 sigma^2 v^2 (2N+1)^2 pi^2 r_t^2/(1 - v^2)",
    "g-force": "(v c)^2/(r_t g0), g0 = 9.81 m/s^2",
    # interference
    "single-photon-prob": "<N> = (1 + sin dPhi)/2",
    "single-photon-gaussian": "<N> = (1 + exp(-(dPhi sigma/omega0)^2) sin dPhi)/2",
    "single-photon-quadrature": "<N> = integral rho(omega) (1 + sin(omega dt))/2 domega",
    "gaussian-visibility": "V = exp(-(dt sigma)^2)",
    "hom-coincidence-gaussian": "P = (1 - exp(-sigma^2 dt^2/2))/2",
    "hom-coincidence-general": "P = (1 - |chi(dt)/chi(0)|^2)/2",
    "hom-fock-oracle": "P from discretized two-photon beamsplitter pair sums",
    "hom-visibility": "V = 1 - P_0/P_max",
    "hom-delay-fiber-loop": "dt = 4 v L/(1 - v^2)",
    # moving medium
    "refractive-index": "n(k) = A/k + B",
    "refractive-index-slope": "n'(k) = -A/k^2",
    "refractive-index-curvature": "n''(k) = 2 A/k^3",
    "phase-velocity-composition": "v_p = (1/n +- v)/(1 +- v/n)",
    "effective-lab-velocity": "c' = (1 - v^2)/(n -+ v)",
    "group-velocity-moving": "v_g = v_p (1 - k n'(k)/(n -+ v))",
    "gvd-moving": "d2omega/dk2 = (1 - v^2)[-(2n' + k n'')/(n -+ v)^2 + 2 k n'^2/(n -+ v)^3]",
    "inverse-group-velocity": "alpha_+- = 1/v_g_+-",
    "beta-coefficient": "beta_+- = -(d2omega/dk2)/(2 v_g^3)",
    "delta-alpha": "delta_alpha = alpha_+ - alpha_-",
    "beta-sum": "beta_sum = beta_+ + beta_-",
    "fiber-phase-difference": "dPhi' = 2 v L omega0/(1 - v^2) + omega0 dL n/(1 - v^2)",
    "dip-shift-total": "dt' = 4 v L/(1 - v^2) + 2 dL n/(1 - v^2) + dt_control",
    "dip-center-shift": "2 dL n v^2/(1 - v^2)",
    "dip-center-shift-approx": "2 dL n v^2",
    "coherence-length": "dx = 4 pi L' Omega R/c",
    "corrected-group-phase": "dphi = 4 omega0 v L/(1 - v^2) (1 + n'(k0) v/(1 - v^2))",
    "group-phase-correction": "n'(k0) v/(1 - v^2)",
    "downconverted-closed": "P = (1 - exp(-sigma^2 delta_alpha^2 L^2))/2",
    "downconverted-quadrature": "P = (1/2) integral rho(w) (1 - cos(2 w delta_alpha L)) dw",
}


def anchor(name: str) -> str:
    """Return the formula text for an anchor, failing loudly on unknown tags."""
    try:
        return ANCHORS[name]
    except KeyError:
        raise KeyError(f"unregistered formula anchor: {name!r}") from None
