"""State families: grid wavefunctions, densities, finite vectors, circle states.

Conventions
-----------
A grid wavefunction psi lives on uniform samples x_i = x_min + i*dx,
i = 0..n-1, normalized so that sum |psi_i|^2 dx = 1. Densities are
real nonnegative samples integrating to 1 on the same kind of grid.
Piecewise-constant densities additionally carry their exact segments
(lo, hi, value) so that moments and bin masses integrate analytically.

Circle states hold Fourier coefficients c_m over an integer window,
psi(phi) = (2*pi)^{-1/2} * sum_m c_m e^{i m phi}, with sum |c_m|^2 = 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .errors import (
    DimensionMismatch,
    GridMismatch,
    GridTooNarrow,
    InvalidSpec,
    Undersampled,
    ZeroNorm,
)

NORM_FLOOR = 1e-300


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a)
    a.setflags(write=False)
    return a


# ======================================================================
# grids
# ======================================================================

@dataclass(frozen=True)
class GridSpec:
    """Uniform sampling grid: points x_min + i*dx for i in 0..n-1."""

    x_min: float
    dx: float
    n: int

    def __post_init__(self):
        if self.n < 2 or self.dx <= 0 or not np.isfinite(self.x_min):
            raise InvalidSpec(f"bad grid: x_min={self.x_min} dx={self.dx} n={self.n}")

    @staticmethod
    def centered(extent: float, n: int = 4096) -> "GridSpec":
        """Symmetric grid with x = 0 a sample point (x_min = -(n/2)*dx)."""
        dx = extent / n
        return GridSpec(-(n // 2) * dx, dx, n)

    @staticmethod
    def midpoint(extent: float, n: int = 4096) -> "GridSpec":
        """Symmetric grid with samples at half-offsets, (i + 1/2 - n/2)*dx.

        Points come in +/- pairs and any x that is an integer multiple of
        dx falls midway between two samples. Used for states with jump
        edges, where midpoint alignment makes sampling errors second order.
        """
        dx = extent / n
        return GridSpec(-extent / 2 + dx / 2, dx, n)

    @property
    def points(self) -> np.ndarray:
        return _grid_points(self.x_min, self.dx, self.n)

    @property
    def x_max(self) -> float:
        return self.x_min + (self.n - 1) * self.dx

    @property
    def extent(self) -> float:
        return self.n * self.dx

    def covers(self, lo: float, hi: float) -> bool:
        return self.x_min <= lo and self.x_max >= hi


@lru_cache(maxsize=64)
def _grid_points(x_min: float, dx: float, n: int) -> np.ndarray:
    return _readonly(x_min + dx * np.arange(n))


def same_grid(a: GridSpec, b: GridSpec) -> None:
    if a.n != b.n or abs(a.dx - b.dx) > 1e-12 * a.dx or abs(a.x_min - b.x_min) > 1e-9 * a.dx:
        raise GridMismatch(f"grids differ: {a} vs {b}")


# ======================================================================
# grid states and densities
# ======================================================================

@dataclass(frozen=True)
class GridWavefunction:
    """Complex wavefunction samples on a GridSpec, unit norm.

    density_pieces, when present, is the exact piecewise-constant |psi|^2
    as a tuple of (lo, hi, value) segments.
    """

    grid: GridSpec
    values: np.ndarray
    density_pieces: tuple | None = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.complex128)
        if v.shape != (self.grid.n,):
            raise DimensionMismatch(f"{v.shape} values on n={self.grid.n} grid")
        object.__setattr__(self, "values", _readonly(v))

    @property
    def norm_squared(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2) * self.grid.dx)


@dataclass(frozen=True)
class DensityGrid:
    """Probability density samples on a GridSpec, integrating to 1.

    pieces, when present, carries the exact piecewise-constant form;
    quadrature then reduces to closed-form segment sums.
    """

    grid: GridSpec
    values: np.ndarray
    pieces: tuple | None = None

    def __post_init__(self):
        v = np.asarray(self.values, dtype=np.float64)
        if v.shape != (self.grid.n,):
            raise DimensionMismatch(f"{v.shape} values on n={self.grid.n} grid")
        if np.any(v < -1e-12):
            raise InvalidSpec("negative density values")
        object.__setattr__(self, "values", _readonly(np.maximum(v, 0.0)))


def position_density(psi: GridWavefunction) -> DensityGrid:
    """|psi|^2 on the position grid, inheriting exact pieces if known."""
    return DensityGrid(psi.grid, np.abs(psi.values) ** 2, pieces=psi.density_pieces)


# ======================================================================
# finite and circle states
# ======================================================================

@dataclass(frozen=True)
class FiniteState:
    """Normalized complex amplitude vector in C^D."""

    amplitudes: np.ndarray

    def __post_init__(self):
        v = np.asarray(self.amplitudes, dtype=np.complex128)
        if v.ndim != 1 or v.size < 1:
            raise InvalidSpec("finite state needs a nonempty vector")
        object.__setattr__(self, "amplitudes", _readonly(v))

    @property
    def dim(self) -> int:
        return self.amplitudes.size


@dataclass(frozen=True)
class CircleState:
    """Angular-momentum coefficients c_m for m in m_min..m_min+len-1."""

    m_min: int
    coefficients: np.ndarray

    def __post_init__(self):
        c = np.asarray(self.coefficients, dtype=np.complex128)
        if c.ndim != 1 or c.size < 1:
            raise InvalidSpec("circle state needs at least one coefficient")
        object.__setattr__(self, "coefficients", _readonly(c))

    @property
    def m_max(self) -> int:
        return self.m_min + self.coefficients.size - 1

    @property
    def m_values(self) -> np.ndarray:
        return np.arange(self.m_min, self.m_min + self.coefficients.size)


@dataclass(frozen=True)
class MixtureState:
    """Convex mixture of grid wavefunctions on a shared grid."""

    weights: np.ndarray
    components: tuple

    def __post_init__(self):
        w = np.asarray(self.weights, dtype=np.float64)
        comps = tuple(self.components)
        if w.ndim != 1 or w.size != len(comps) or w.size < 1:
            raise DimensionMismatch("weights/components length mismatch")
        if np.any(w < 0) or abs(w.sum() - 1.0) > 1e-12:
            raise InvalidSpec("weights must be nonnegative and sum to 1")
        if not all(isinstance(c, GridWavefunction) for c in comps):
            raise InvalidSpec("components must be GridWavefunction")
        for c in comps[1:]:
            same_grid(comps[0].grid, c.grid)
        object.__setattr__(self, "weights", _readonly(w))
        object.__setattr__(self, "components", comps)

    @property
    def grid(self) -> GridSpec:
        return self.components[0].grid


# ======================================================================
# normalization and constructors
# ======================================================================

def normalize(state):
    """Return a unit-norm copy of a state; ZeroNorm below the floor."""
    if isinstance(state, GridWavefunction):
        n2 = np.sum(np.abs(state.values) ** 2) * state.grid.dx
        if n2 < NORM_FLOOR:
            raise ZeroNorm("grid wavefunction norm below floor")
        return GridWavefunction(state.grid, state.values / np.sqrt(n2),
                                density_pieces=state.density_pieces)
    if isinstance(state, FiniteState):
        n2 = np.sum(np.abs(state.amplitudes) ** 2)
        if n2 < NORM_FLOOR:
            raise ZeroNorm("finite state norm below floor")
        return FiniteState(state.amplitudes / np.sqrt(n2))
    if isinstance(state, CircleState):
        n2 = np.sum(np.abs(state.coefficients) ** 2)
        if n2 < NORM_FLOOR:
            raise ZeroNorm("circle state norm below floor")
        return CircleState(state.m_min, state.coefficients / np.sqrt(n2))
    if isinstance(state, DensityGrid):
        from .quadrature import density_total
        tot = density_total(state)
        if tot < NORM_FLOOR:
            raise ZeroNorm("density integrates to ~0")
        pieces = None
        if state.pieces is not None:
            pieces = tuple((lo, hi, v / tot) for lo, hi, v in state.pieces)
        return DensityGrid(state.grid, state.values / tot, pieces=pieces)
    from .errors import IncompatibleState
    raise IncompatibleState(f"cannot normalize {type(state).__name__}")


def box_state(a: float, grid: GridSpec | None = None, n: int = 2 ** 17) -> GridWavefunction:
    """Uniform amplitude (2a)^{-1/2} on [-a, a], zero outside.

    The default grid places the edges +/-a midway between samples, which
    keeps the sampled norm exact and the discrete transform error second
    order in dx. A caller-supplied grid must satisfy the same alignment:
    a an integer multiple of dx, edges at sample midpoints.
    """
    if a <= 0:
        raise InvalidSpec("box half-width must be positive")
    if grid is None:
        grid = GridSpec.midpoint(32.0 * a, n)
    if not grid.covers(-a, a):
        raise GridTooNarrow(f"grid [{grid.x_min}, {grid.x_max}] misses [-{a}, {a}]")
    if a < 8 * grid.dx:
        raise Undersampled(f"box needs a >= 8 dx, got a/dx = {a / grid.dx:.3f}")
    m = a / grid.dx
    edge_offset = (a - grid.x_min) / grid.dx  # must be half-integral
    if abs(m - round(m)) > 1e-9 or abs(edge_offset - np.floor(edge_offset) - 0.5) > 1e-9:
        raise InvalidSpec("box edges must fall midway between grid samples")
    x = grid.points
    vals = np.where(np.abs(x) <= a, 1.0 / np.sqrt(2 * a), 0.0).astype(np.complex128)
    psi = normalize(GridWavefunction(grid, vals))
    return GridWavefunction(grid, psi.values,
                            density_pieces=((-a, a, 1.0 / (2 * a)),))


def gaussian_state(sigma: float, x0: float = 0.0, k0: float = 0.0,
                   grid: GridSpec | None = None, n: int = 4096) -> GridWavefunction:
    """Gaussian wave packet with position spread sigma, centered at x0,
    carrying mean momentum k0. |psi|^2 is normal with std sigma; the
    transform magnitude is normal in k with std 1/(2 sigma) around k0.
    """
    if sigma <= 0:
        raise InvalidSpec("sigma must be positive")
    if grid is None:
        extent = max(64.0 * sigma, 32.0 * sigma + 4.0 * abs(x0))
        grid = GridSpec(-extent / 2 + x0, extent / n, n)
    if not grid.covers(x0 - 6 * sigma, x0 + 6 * sigma):
        raise GridTooNarrow("grid narrower than 12 sigma around x0")
    if sigma < 4 * grid.dx:
        raise Undersampled(f"gaussian needs sigma >= 4 dx, got {sigma / grid.dx:.3f} dx")
    x = grid.points
    vals = (2 * np.pi * sigma ** 2) ** (-0.25) * np.exp(
        -((x - x0) ** 2) / (4 * sigma ** 2) + 1j * k0 * x)
    return normalize(GridWavefunction(grid, vals))


def _pieces_density(pieces, grid: GridSpec) -> DensityGrid:
    """Sample a piecewise-constant density; boundary points take the
    left-limit value (points at a segment's upper edge belong to it)."""
    x = grid.points
    vals = np.zeros(grid.n)
    for lo, hi, v in pieces:
        vals[(x > lo) & (x <= hi)] = v
    # left edge of the leftmost segment still belongs to it
    lo0 = min(p[0] for p in pieces)
    vals[np.isclose(x, lo0)] = [p[2] for p in pieces if p[0] == lo0][0]
    return DensityGrid(grid, vals, pieces=tuple(pieces))


def example1_density(L: float, N: int, grid: GridSpec | None = None,
                     n: int = 4096) -> DensityGrid:
    """Two uniform segments: A of length L(1 - 1/N) starting at L(N + 1/N),
    and B of length L/N placed a further distance N*L past A's end. Mass
    splits (1 - 1/N, 1/N); the variance is L^2 (N - 1/N + 1/12) exactly.
    """
    if N < 2:
        raise InvalidSpec("N must be >= 2")
    if L <= 0:
        raise InvalidSpec("L must be positive")
    a_lo, a_hi = L * (N + 1.0 / N), L * (N + 1.0)
    b_lo = a_hi + N * L
    b_hi = b_lo + L / N
    pieces = ((a_lo, a_hi, 1.0 / L), (b_lo, b_hi, 1.0 / L))
    if grid is None:
        dx = (b_hi + L) / n
        grid = GridSpec(0.0, dx, n)
    if not grid.covers(a_lo, b_hi):
        raise GridTooNarrow("grid does not cover both segments")
    return _pieces_density(pieces, grid)


def example2_density(case: str, L: float = 1.0, grid: GridSpec | None = None,
                     n: int = 4096) -> DensityGrid:
    """Equal-width comparison pair on [0, L]: case 'a' is uniform 1/L over
    the whole interval (sigma = L/sqrt(12)); case 'b' doubles the density
    on the outer quarters and vanishes in the middle half
    (sigma = sqrt(7)/2 * L/sqrt(12)).
    """
    case = str(case).lower()
    if case not in ("a", "b"):
        raise InvalidSpec("case must be 'a' or 'b'")
    if L <= 0:
        raise InvalidSpec("L must be positive")
    if case == "a":
        pieces = ((0.0, L, 1.0 / L),)
    else:
        pieces = ((0.0, L / 4, 2.0 / L), (3 * L / 4, L, 2.0 / L))
    if grid is None:
        grid = GridSpec(-L, 3.0 * L / n, n)
    if not grid.covers(0.0, L):
        raise GridTooNarrow("grid does not cover [0, L]")
    return _pieces_density(pieces, grid)


def mixture_density(mix: MixtureState):
    """Position and momentum densities of a mixture: weighted sums of the
    component densities on the shared grid and its conjugate grid."""
    from .spectral import fourier_transform
    rho_x = np.zeros(mix.grid.n)
    rho_k = None
    kgrid = None
    for w, comp in zip(mix.weights, mix.components):
        rho_x += w * np.abs(comp.values) ** 2
        ft = fourier_transform(comp)
        if rho_k is None:
            rho_k = w * np.abs(ft.values) ** 2
            kgrid = ft.grid
        else:
            rho_k += w * np.abs(ft.values) ** 2
    return DensityGrid(mix.grid, rho_x), DensityGrid(kgrid, rho_k)


# ======================================================================
# random ensembles
# ======================================================================

@dataclass(frozen=True)
class RandomEnsembleSpec:
    """Seeded family of random states; trial i uses stream (seed, i).

    kind: 'finite-haar' | 'grid-smooth' | 'circle-window' | 'mixture'
    params: dim (finite), modes/grid size (grid-smooth), window half-width
    (circle-window), ncomp (mixture).
    """

    kind: str
    seed: int
    params: dict = field(default_factory=dict)

    def __post_init__(self):
        kinds = ("finite-haar", "grid-smooth", "circle-window", "mixture")
        if self.kind not in kinds:
            raise InvalidSpec(f"unknown ensemble kind {self.kind!r}")


def _rng(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng((int(seed), int(index)))


@lru_cache(maxsize=16)
def _oscillator_modes(grid: GridSpec, nmodes: int) -> np.ndarray:
    """Lowest harmonic-oscillator eigenfunctions sampled on the grid.

    Stable two-term recurrence; orthonormal to ~1e-15 on the default
    grids since the modes decay well inside the extent.
    """
    x = grid.points
    h = np.empty((nmodes, x.size))
    h[0] = np.pi ** -0.25 * np.exp(-x ** 2 / 2)
    if nmodes > 1:
        h[1] = np.sqrt(2.0) * x * h[0]
    for m in range(2, nmodes):
        h[m] = np.sqrt(2.0 / m) * x * h[m - 1] - np.sqrt((m - 1) / m) * h[m - 2]
    h.setflags(write=False)
    return h


def smoothness_band(nmodes: int) -> float:
    """|k| band containing all but <1e-6 of any nmodes-superposition's
    momentum mass. Modes are transform eigenfunctions, so the momentum
    envelope matches the position envelope: sqrt(2 nmodes + 1) plus a
    Gaussian-decay margin."""
    return np.sqrt(2.0 * nmodes + 1.0) + 4.0


def _grid_smooth(rng: np.random.Generator, params: dict) -> GridWavefunction:
    nmodes = int(params.get("modes", 8))
    grid = params.get("grid") or GridSpec.centered(64.0, 4096)
    modes = _oscillator_modes(grid, nmodes)
    c = rng.normal(size=nmodes) + 1j * rng.normal(size=nmodes)
    vals = (c[:, None] * modes).sum(axis=0)
    return normalize(GridWavefunction(grid, vals))


def random_state(spec: RandomEnsembleSpec, index: int):
    """Draw member `index` of the ensemble; deterministic in (seed, index)."""
    rng = _rng(spec.seed, index)
    if spec.kind == "finite-haar":
        d = int(spec.params.get("dim", 4))
        if d < 2:
            raise InvalidSpec("dim must be >= 2")
        v = rng.normal(size=d) + 1j * rng.normal(size=d)
        return normalize(FiniteState(v))
    if spec.kind == "grid-smooth":
        return _grid_smooth(rng, spec.params)
    if spec.kind == "circle-window":
        w = int(spec.params.get("window", 8))
        if w < 0:
            raise InvalidSpec("window must be >= 0")
        c = rng.normal(size=2 * w + 1) + 1j * rng.normal(size=2 * w + 1)
        return normalize(CircleState(-w, c))
    if spec.kind == "mixture":
        ncomp = int(spec.params.get("ncomp", 3))
        if ncomp < 1:
            raise InvalidSpec("ncomp must be >= 1")
        comps = tuple(_grid_smooth(rng, spec.params) for _ in range(ncomp))
        w = rng.uniform(0.1, 1.0, size=ncomp)
        return MixtureState(w / w.sum(), comps)
    raise InvalidSpec(f"unknown ensemble kind {spec.kind!r}")
