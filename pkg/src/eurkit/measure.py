"""Binned probability distributions from states and densities.

Bin conventions
---------------
Position and momentum cells are center-aligned: cell i covers
[origin + (i - 1/2) * width, origin + (i + 1/2) * width). The default
origin is 0; worked cases that partition a specific support (two cells
across a box, quarter cells across [0, L]) pass the matching offset.
Angle cells are left-edge aligned: cell n covers [n*dphi, (n+1)*dphi).

Enumeration walks every cell intersecting the state's grid and stops
once the remaining mass is below the tail threshold; what is left is
recorded, never silently dropped.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad

from .errors import (
    BinTooFine,
    DimensionMismatch,
    IncompatibleState,
    InvalidSpec,
    TailNotConverged,
)
from .quadrature import bin_masses, moment
from .spectral import sine_integral
from .states import CircleState, DensityGrid, FiniteState, _readonly


@dataclass(frozen=True)
class BinnedDistribution:
    """Probabilities over integer-indexed cells.

    bin_width None marks an exact-count distribution (basis outcomes,
    angular momentum) with no geometric cell. Otherwise cell i is
    centered at origin + i * bin_width. tail_mass is whatever the
    enumeration did not cover; probabilities + tail_mass sum to 1.
    """

    indices: np.ndarray
    probabilities: np.ndarray
    bin_width: float | None = None
    origin: float = 0.0
    tail_mass: float = 0.0
    tail_threshold: float = 1e-12

    def __post_init__(self):
        idx = np.asarray(self.indices, dtype=np.int64)
        p = np.asarray(self.probabilities, dtype=np.float64)
        if idx.shape != p.shape or p.ndim != 1:
            raise InvalidSpec("indices/probabilities shape mismatch")
        if np.any(p < -1e-12):
            raise InvalidSpec("negative bin probability")
        p = np.maximum(p, 0.0)
        if self.bin_width is not None and self.bin_width <= 0:
            raise InvalidSpec("bin width must be positive")
        total = p.sum() + self.tail_mass
        if abs(total - 1.0) > 1e-9:
            raise InvalidSpec(f"probabilities + tail = {total}, expected 1")
        if self.tail_mass >= max(self.tail_threshold, 1e-15):
            raise TailNotConverged(
                f"tail mass {self.tail_mass:.3e} at threshold {self.tail_threshold:.0e}")
        object.__setattr__(self, "indices", _readonly(idx))
        object.__setattr__(self, "probabilities", _readonly(p))

    @property
    def positions(self) -> np.ndarray:
        if self.bin_width is None:
            raise IncompatibleState("exact-count distribution has no positions")
        return self.origin + self.indices * self.bin_width

    @staticmethod
    def from_probabilities(p, tail_mass: float = 0.0,
                           tail_threshold: float = 1.0) -> "BinnedDistribution":
        """Exact-count distribution from a plain probability vector."""
        p = np.asarray(p, dtype=np.float64)
        return BinnedDistribution(np.arange(p.size), p, bin_width=None,
                                  tail_mass=tail_mass, tail_threshold=tail_threshold)

    def to_csv(self) -> str:
        lines = ["index,probability"]
        lines += [f"{i},{p:.12g}" for i, p in zip(self.indices, self.probabilities)]
        return "\n".join(lines) + "\n"


def _bin_density(rho: DensityGrid, width: float, origin: float,
                 tail_threshold: float, budget: int) -> BinnedDistribution:
    if width < rho.grid.dx * (1 - 1e-9):
        raise BinTooFine(f"width {width} below grid spacing {rho.grid.dx}")
    lo_i = int(np.floor((rho.grid.x_min - origin) / width - 0.5))
    hi_i = int(np.ceil((rho.grid.x_max - origin) / width + 0.5))
    if hi_i - lo_i + 1 > budget:
        raise TailNotConverged(
            f"{hi_i - lo_i + 1} cells exceed enumeration budget {budget}")
    idx = np.arange(lo_i, hi_i + 1)
    edges = origin + np.concatenate([idx * width - width / 2,
                                     [hi_i * width + width / 2]])
    p = bin_masses(rho, edges)
    tail = max(0.0, 1.0 - float(p.sum()))
    keep = p > 0
    return BinnedDistribution(idx[keep], p[keep], bin_width=width, origin=origin,
                              tail_mass=tail, tail_threshold=tail_threshold)


def bin_position(rho: DensityGrid, delta_x: float, origin: float = 0.0,
                 tail_threshold: float = 1e-12,
                 budget: int = 1_000_000) -> BinnedDistribution:
    """Histogram a position density into cells of width delta_x."""
    if delta_x <= 0:
        raise InvalidSpec("delta_x must be positive")
    return _bin_density(rho, delta_x, origin, tail_threshold, budget)


def bin_momentum(rho_k: DensityGrid, delta_k: float, origin: float = 0.0,
                 tail_threshold: float = 1e-12,
                 budget: int = 1_000_000) -> BinnedDistribution:
    """Histogram a momentum density into cells of width delta_k."""
    if delta_k <= 0:
        raise InvalidSpec("delta_k must be positive")
    return _bin_density(rho_k, delta_k, origin, tail_threshold, budget)


def box_momentum_bin(j) -> np.ndarray:
    """Closed-form momentum cell mass for the box state at delta_k = 2*pi/a:
    p_j = (Si((4j+2)*pi) - Si((4j-2)*pi)) / pi, independent of a."""
    j = np.asarray(j, dtype=np.int64)
    return (sine_integral((4 * j + 2) * np.pi)
            - sine_integral((4 * j - 2) * np.pi)) / np.pi


def box_momentum_distribution(a: float, j_max: int,
                              tail_threshold: float = 1e-3) -> BinnedDistribution:
    """Closed-form box momentum histogram over |j| <= j_max.

    The 1/k^2 tail decays too slowly for the default 1e-12 threshold
    (tail ~ 1/(2*pi^2*j_max)), so callers state the threshold they accept;
    the remainder is recorded as tail mass.
    """
    if a <= 0:
        raise InvalidSpec("box half-width must be positive")
    idx = np.arange(-j_max, j_max + 1)
    p = box_momentum_bin(np.abs(idx))
    tail = max(0.0, 1.0 - float(p.sum()))
    return BinnedDistribution(idx, p, bin_width=2 * np.pi / a,
                              tail_mass=tail, tail_threshold=tail_threshold)


def finite_probabilities(state: FiniteState, basis: np.ndarray) -> BinnedDistribution:
    """Outcome probabilities |<b_i|psi>|^2 in the basis given by the
    columns of a unitary matrix."""
    B = np.asarray(basis, dtype=np.complex128)
    if B.shape != (state.dim, state.dim):
        raise DimensionMismatch(f"basis shape {B.shape} for dim {state.dim}")
    p = np.abs(B.conj().T @ state.amplitudes) ** 2
    s = p.sum()
    if abs(s - 1.0) > 1e-9:
        raise InvalidSpec("basis is not unitary or state not normalized")
    return BinnedDistribution(np.arange(state.dim), p / s, bin_width=None,
                              tail_mass=0.0, tail_threshold=1.0)


def angular_momentum_probabilities(state: CircleState) -> BinnedDistribution:
    """p_m = |c_m|^2 over the coefficient window, exact count."""
    p = np.abs(state.coefficients) ** 2
    return BinnedDistribution(state.m_values, p / p.sum(), bin_width=None,
                              tail_mass=0.0, tail_threshold=1.0)


def bin_angle(state: CircleState, n_bins: int) -> BinnedDistribution:
    """Angle-cell masses q_n = int_{n*dphi}^{(n+1)*dphi} |psi(phi)|^2 dphi.

    Evaluated exactly: |psi|^2 expands into the coefficient
    autocorrelation S_d = sum_m c_{m+d} conj(c_m) and each cell integral
    of e^{i d phi} has closed form, so eigenstates give exactly 1/N.
    """
    if n_bins < 1:
        raise InvalidSpec("need at least one angle cell")
    c = state.coefficients
    W = c.size
    if W > 4096:
        raise InvalidSpec("coefficient window capped at 4096")
    dphi = 2 * np.pi / n_bins
    ds = np.arange(-(W - 1), W)
    S = np.correlate(c, c, mode="full")  # S[t] = sum_m c_{m + t - (W-1)} conj(c_m)
    n = np.arange(n_bins)
    lo = n * dphi
    hi = lo + dphi
    q = np.full(n_bins, float(np.real(S[W - 1])) * dphi / (2 * np.pi))
    nz = ds != 0
    d_nz = ds[nz][:, None].astype(np.float64)
    cell = (np.exp(1j * d_nz * hi[None, :]) - np.exp(1j * d_nz * lo[None, :])) \
        / (2j * np.pi * d_nz)
    q += np.real(S[nz][:, None] * cell).sum(axis=0)
    q = np.maximum(q, 0.0)
    return BinnedDistribution(n, q / q.sum(), bin_width=dphi, origin=dphi / 2,
                              tail_mass=0.0, tail_threshold=1.0)


def std_dev(rho) -> float:
    """Standard deviation of a density or of a distribution with positions."""
    if isinstance(rho, DensityGrid):
        m0 = moment(rho, 0)
        m1 = moment(rho, 1) / m0
        m2 = moment(rho, 2) / m0
        return float(np.sqrt(max(m2 - m1 ** 2, 0.0)))
    if isinstance(rho, BinnedDistribution):
        x = rho.positions  # raises for exact-count distributions
        p = rho.probabilities / rho.probabilities.sum()
        m1 = float(np.dot(p, x))
        return float(np.sqrt(max(np.dot(p, (x - m1) ** 2), 0.0)))
    raise IncompatibleState(f"no std_dev for {type(rho).__name__}")


def second_moment_shrink(rho: DensityGrid, fraction: float = 0.5) -> float:
    """Convergence diagnostic for grid-limited spreads: relative change of
    sigma when the grid is cut to its central fraction. Values well above
    ~0.01 flag a second moment still growing with the window; the box
    state's momentum spread trips this, its variance diverges with the
    covered k range while a Gaussian's does not."""
    from .states import GridSpec
    g = rho.grid
    half = int(g.n * fraction / 2)
    mid = g.n // 2
    inner_grid = GridSpec(g.x_min + (mid - half) * g.dx, g.dx, 2 * half)
    inner = DensityGrid(inner_grid, rho.values[mid - half:mid + half])
    full = std_dev(rho)
    if full == 0:
        return 0.0
    return abs(full - std_dev(inner)) / full


# ======================================================================
# sphere cells
# ======================================================================

@dataclass(frozen=True)
class SphereBinnedDistribution:
    """Cell masses q_ij over a (theta, phi) product partition of the
    sphere with the sin(theta) measure."""

    q: np.ndarray
    theta_edges: np.ndarray
    phi_edges: np.ndarray

    def __post_init__(self):
        q = np.asarray(self.q, dtype=np.float64)
        if q.ndim != 2:
            raise InvalidSpec("q must be 2d")
        if np.any(q < -1e-12):
            raise InvalidSpec("negative sphere cell mass")
        if abs(q.sum() - 1.0) > 1e-9:
            raise InvalidSpec("sphere cells must sum to 1")
        object.__setattr__(self, "q", _readonly(np.maximum(q, 0.0)))
        object.__setattr__(self, "theta_edges", _readonly(np.asarray(self.theta_edges)))
        object.__setattr__(self, "phi_edges", _readonly(np.asarray(self.phi_edges)))

    def to_csv(self) -> str:
        lines = ["i,j,q"]
        for i in range(self.q.shape[0]):
            for j in range(self.q.shape[1]):
                lines.append(f"{i},{j},{self.q[i, j]:.12g}")
        return "\n".join(lines) + "\n"


def sphere_bins(density, n_theta: int, n_phi: int,
                samples: int = 2048) -> SphereBinnedDistribution:
    """Cell masses for a callable density(theta, phi) >= 0, integrated with
    the sin(theta) measure on each cell and normalized over the sphere."""
    if n_theta < 1 or n_phi < 1:
        raise InvalidSpec("need at least one cell per axis")
    te = np.linspace(0.0, np.pi, n_theta + 1)
    pe = np.linspace(0.0, 2 * np.pi, n_phi + 1)
    q = np.empty((n_theta, n_phi))
    for i in range(n_theta):
        ts = np.linspace(te[i], te[i + 1], samples)
        for j in range(n_phi):
            ps = np.linspace(pe[j], pe[j + 1], samples // 8)
            vals = density(ts[:, None], ps[None, :]) * np.sin(ts)[:, None]
            q[i, j] = np.trapezoid(np.trapezoid(vals, ps, axis=1), ts)
    q /= q.sum()
    return SphereBinnedDistribution(q, te, pe)


def sphere_bin(l: int, d_theta: float) -> float:
    """Equatorial band mass of the maximal-m spherical harmonic: the
    |Y_l^l|^2 density is proportional to sin(theta)^{2l}; returns the mass
    within |theta - pi/2| <= d_theta/2 under the sin(theta) measure."""
    if l < 0:
        raise InvalidSpec("l must be >= 0")
    if not 0 < d_theta <= np.pi:
        raise InvalidSpec("d_theta must be in (0, pi]")
    total, _ = quad(lambda t: np.sin(t) ** (2 * l + 1), 0.0, np.pi,
                    epsabs=1e-13, epsrel=1e-12, limit=200, points=[np.pi / 2])
    val, _ = quad(lambda t: np.sin(t) ** (2 * l + 1),
                  np.pi / 2 - d_theta / 2, np.pi / 2 + d_theta / 2,
                  epsabs=1e-13, epsrel=1e-12, limit=200)
    return float(val / total)
