"""Entropy functionals in nats.

Discrete
--------
    shannon:     H    = -sum p ln p                  (0 ln 0 = 0)
    renyi:       H_a  = ln(sum p^a) / (1 - a),       a > 0, a != 1
    symmetrized: Hs_s = (H_{1/(1-s)} + H_{1/(1+s)})/2 for s in [0, 1)

renyi and symmetrized collapse to shannon analytically as a -> 1 and
s -> 0; the branch switches inside 1e-9 of the limit point.

Continuous, for densities rho with a reference length L
--------------------------------------------------------
    continuous_shannon: S   = -int rho ln(rho L) dx
    continuous_renyi:   S_a = ln(int rho^a L^{a-1} dx) / (1 - a)

L makes the argument of the logarithm dimensionless; sums of a conjugate
pair use L on one side and 1/L on the other, leaving the sum L-free.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidAlpha, InvalidS
from .measure import BinnedDistribution
from .quadrature import plogp_integral, power_integral
from .states import DensityGrid

ALPHA_LIMIT_WINDOW = 1e-9
PROB_FLOOR = 1e-300


@dataclass(frozen=True)
class EntropyValue:
    """Entropy result with the functional it came from."""

    value: float
    kind: str
    params: dict = field(default_factory=dict)

    def __float__(self) -> float:
        return self.value


def _probs(dist) -> np.ndarray:
    if isinstance(dist, BinnedDistribution):
        p = dist.probabilities
    else:
        p = np.asarray(dist, dtype=np.float64)
        if p.ndim != 1 or np.any(p < -1e-12):
            raise InvalidAlpha("probabilities must be a nonnegative vector")
    return p[p > PROB_FLOOR]


def shannon(dist) -> EntropyValue:
    """H = -sum p ln p over enumerated cells; any tail mass is excluded
    (its contribution is bounded by eps(1 - ln eps))."""
    p = _probs(dist)
    return EntropyValue(float(-np.sum(p * np.log(p))), "shannon")


def renyi(dist, alpha: float) -> EntropyValue:
    """Order-alpha entropy; alpha within 1e-9 of 1 takes the Shannon limit."""
    if not np.isfinite(alpha) or alpha <= 0:
        raise InvalidAlpha(f"alpha must be positive, got {alpha}")
    if abs(alpha - 1.0) < ALPHA_LIMIT_WINDOW:
        h = shannon(dist)
        return EntropyValue(h.value, "renyi", {"alpha": alpha})
    p = _probs(dist)
    val = np.log(np.sum(p ** alpha)) / (1.0 - alpha)
    return EntropyValue(float(val), "renyi", {"alpha": alpha})


def symmetrized(dist, s: float) -> EntropyValue:
    """Average of the conjugate Renyi pair at orders 1/(1-s) and 1/(1+s)."""
    if not 0.0 <= s < 1.0:
        raise InvalidS(f"s must be in [0, 1), got {s}")
    if s < ALPHA_LIMIT_WINDOW:
        h = shannon(dist)
        return EntropyValue(h.value, "symmetrized", {"s": s})
    a = renyi(dist, 1.0 / (1.0 - s)).value
    b = renyi(dist, 1.0 / (1.0 + s)).value
    return EntropyValue(0.5 * (a + b), "symmetrized", {"s": s})


def continuous_shannon(rho: DensityGrid, ref_length: float = 1.0) -> EntropyValue:
    """S = -int rho ln(rho L) dx."""
    if ref_length <= 0:
        raise InvalidAlpha("reference length must be positive")
    val = -plogp_integral(rho, ref_length)
    return EntropyValue(float(val), "continuous-shannon", {"ref_length": ref_length})


def continuous_renyi(rho: DensityGrid, alpha: float,
                     ref_length: float = 1.0) -> EntropyValue:
    """S_a = ln(int rho^a L^{a-1} dx) / (1 - a); Shannon limit near a = 1."""
    if not np.isfinite(alpha) or alpha <= 0:
        raise InvalidAlpha(f"alpha must be positive, got {alpha}")
    if ref_length <= 0:
        raise InvalidAlpha("reference length must be positive")
    if abs(alpha - 1.0) < ALPHA_LIMIT_WINDOW:
        v = continuous_shannon(rho, ref_length)
        return EntropyValue(v.value, "continuous-renyi",
                            {"alpha": alpha, "ref_length": ref_length})
    integral = power_integral(rho, alpha) * ref_length ** (alpha - 1.0)
    val = np.log(integral) / (1.0 - alpha)
    return EntropyValue(float(val), "continuous-renyi",
                        {"alpha": alpha, "ref_length": ref_length})
