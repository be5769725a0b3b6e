"""Unitary transforms between conjugate representations.

Continuous pair
---------------
    psit(k) = (2*pi)^{-1/2} int dx e^{-ikx} psi(x)
    psi(x)  = (2*pi)^{-1/2} int dk e^{+ikx} psit(k)

Discretized on a grid of n samples with spacing dx, the conjugate grid
has dk = 2*pi/(n*dx) with k = 0 always a sample (k_min = -(n/2)*dk).
Writing k_j x_i = k_min x_i + j dk x_min + 2*pi i j / n + const shows the
sum factorizes into pre-phase * FFT * post-phase with overall scale
dx/sqrt(2*pi); the pair below round-trips to machine precision and
satisfies the discrete Plancherel identity exactly.

Finite pair
-----------
The DFT matrix F_kl = n^{-1/2} exp(2*pi i k l / n) against the identity
basis, plus full mutually unbiased sets in prime dimension.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.special import sici

from .errors import (
    DimensionMismatch,
    InvalidSpec,
    NotPrime,
    NotUnitary,
    Undersampled,
    ZeroNorm,
)
from .states import CircleState, GridSpec, GridWavefunction, NORM_FLOOR


def conjugate_grid(grid: GridSpec) -> GridSpec:
    """Momentum grid paired with a position grid: dk = 2*pi/(n*dx),
    centered so that k = 0 is a sample point."""
    dk = 2 * np.pi / (grid.n * grid.dx)
    return GridSpec(-(grid.n // 2) * dk, dk, grid.n)


def is_conjugate_pair(xgrid: GridSpec, kgrid: GridSpec, tol: float = 1e-9) -> bool:
    want = conjugate_grid(xgrid)
    return (kgrid.n == want.n
            and abs(kgrid.dx - want.dx) <= tol * want.dx
            and abs(kgrid.x_min - want.x_min) <= tol * want.dx)


def _axis_shape(ndim: int, axis: int, n: int) -> list:
    shape = [1] * ndim
    shape[axis] = n
    return shape


def transform_values(values: np.ndarray, grid: GridSpec,
                     axis: int = -1) -> tuple:
    """Forward transform of samples along one axis of an array.

    Exact discrete sum (dx/sqrt(2*pi)) sum_i e^{-i k_j x_i} v_i via FFT
    with phase corrections for arbitrary x_min. Returns (values, kgrid).
    """
    kg = conjugate_grid(grid)
    values = np.asarray(values, dtype=np.complex128)
    shape = _axis_shape(values.ndim, axis, grid.n)
    i = np.arange(grid.n)
    pre = np.exp(-1j * kg.x_min * i * grid.dx).reshape(shape)
    F = np.fft.fft(values * pre, axis=axis)
    post = (np.exp(-1j * kg.points * grid.x_min)
            * (grid.dx / np.sqrt(2 * np.pi))).reshape(shape)
    return F * post, kg


def inverse_transform_values(values: np.ndarray, kgrid: GridSpec,
                             x_min: float | None = None,
                             axis: int = -1) -> tuple:
    """Inverse transform along one axis; mirror of transform_values.

    The position offset is not recoverable from momentum samples alone;
    pass x_min to land on a specific grid, default is the zero-centered
    one. Returns (values, grid).
    """
    dx = 2 * np.pi / (kgrid.n * kgrid.dx)
    if x_min is None:
        x_min = -(kgrid.n // 2) * dx
    g = GridSpec(x_min, dx, kgrid.n)
    values = np.asarray(values, dtype=np.complex128)
    shape = _axis_shape(values.ndim, axis, kgrid.n)
    pre = np.exp(1j * kgrid.points * x_min).reshape(shape)
    G = np.fft.ifft(values * pre, axis=axis) * kgrid.n
    post = (np.exp(1j * kgrid.x_min * (g.points - x_min))
            * (kgrid.dx / np.sqrt(2 * np.pi))).reshape(shape)
    return G * post, g


def fourier_transform(psi: GridWavefunction) -> GridWavefunction:
    """Forward transform onto the conjugate grid; forward followed by
    inverse with the original x_min is the identity to round-off."""
    vals, kg = transform_values(psi.values, psi.grid)
    return GridWavefunction(kg, vals)


def inverse_fourier_transform(psit: GridWavefunction,
                              x_min: float | None = None) -> GridWavefunction:
    """Inverse transform back to a position grid."""
    vals, g = inverse_transform_values(psit.values, psit.grid, x_min)
    return GridWavefunction(g, vals)


def momentum_density(psi: GridWavefunction):
    from .states import DensityGrid
    ft = fourier_transform(psi)
    return DensityGrid(ft.grid, np.abs(ft.values) ** 2)


def box_transform_closed_form(a: float, k) -> np.ndarray:
    """Transform of the box state: sqrt(1/(pi a)) * sin(a k)/k, entire in k."""
    if a <= 0:
        raise InvalidSpec("box half-width must be positive")
    k = np.asarray(k, dtype=np.float64)
    return np.sqrt(1.0 / (np.pi * a)) * a * np.sinc(a * k / np.pi)


def sine_integral(x) -> np.ndarray:
    """Si(x) = int_0^x sin(t)/t dt, vectorized, abs error ~1e-15."""
    return sici(np.asarray(x, dtype=np.float64))[0]


# ======================================================================
# circle analysis
# ======================================================================

def circle_coefficients(samples, m_min: int, m_max: int) -> CircleState:
    """Angular-momentum window coefficients from uniform angle samples.

    samples are psi(phi_s) at phi_s = 2*pi*s/S. Recovers
    c_m = sqrt(2*pi)/S * sum_s psi(phi_s) e^{-i m phi_s}, exact for
    band-limited psi when the window holds all the energy. Raises
    Undersampled when sampling cannot resolve the window or when energy
    visibly leaks outside it (discrete norm vs window norm beyond 1e-8).
    """
    v = np.asarray(samples, dtype=np.complex128)
    if m_max < m_min:
        raise InvalidSpec("m_max < m_min")
    width = m_max - m_min
    S = v.size
    if S < max(2 * width, 2):
        raise Undersampled(f"{S} samples cannot resolve a width-{width} window")
    spec = np.fft.fft(v) * (np.sqrt(2 * np.pi) / S)
    ms = np.arange(m_min, m_max + 1)
    c = spec[np.mod(ms, S)]
    total = np.sum(np.abs(v) ** 2) * (2 * np.pi / S)
    window = np.sum(np.abs(c) ** 2)
    if total < NORM_FLOOR:
        raise ZeroNorm("samples have ~zero norm")
    if abs(window - total) > 1e-8 * total:
        raise Undersampled("window misses sampled energy, widen m range")
    return CircleState(m_min, c / np.sqrt(window))


def circle_samples(state: CircleState, count: int) -> np.ndarray:
    """Synthesize psi(phi_s) on count uniform angles."""
    phis = 2 * np.pi * np.arange(count) / count
    ms = state.m_values
    return (state.coefficients[None, :] *
            np.exp(1j * phis[:, None] * ms[None, :])).sum(axis=1) / np.sqrt(2 * np.pi)


# ======================================================================
# finite bases
# ======================================================================

@dataclass(frozen=True)
class UnitaryBasisSet:
    """Collection of orthonormal bases of C^D, one unitary per basis
    (columns are the basis vectors). mutually_unbiased asserts all
    cross-basis overlaps |<a_i|b_j>|^2 = 1/D to 1e-10."""

    dim: int
    matrices: tuple
    mutually_unbiased: bool = False

    def __post_init__(self):
        mats = tuple(np.asarray(m, dtype=np.complex128) for m in self.matrices)
        if not mats:
            raise InvalidSpec("empty basis set")
        for m in mats:
            if m.shape != (self.dim, self.dim):
                raise DimensionMismatch(f"basis shape {m.shape}, dim {self.dim}")
            if np.abs(m.conj().T @ m - np.eye(self.dim)).max() > 1e-12:
                raise NotUnitary("basis matrix fails unitarity at 1e-12")
        if self.mutually_unbiased:
            for i in range(len(mats)):
                for j in range(i + 1, len(mats)):
                    ov = np.abs(mats[i].conj().T @ mats[j]) ** 2
                    if np.abs(ov - 1.0 / self.dim).max() > 1e-10:
                        raise InvalidSpec("bases are not mutually unbiased at 1e-10")
        for m in mats:
            m.setflags(write=False)
        object.__setattr__(self, "matrices", mats)

    @property
    def count(self) -> int:
        return len(self.matrices)


def dft_matrix(dim: int) -> np.ndarray:
    j = np.arange(dim)
    return np.exp(2j * np.pi * np.outer(j, j) / dim) / np.sqrt(dim)


def dft_basis(dim: int) -> UnitaryBasisSet:
    """Identity basis paired with the unitary DFT basis; the finite
    analogue of the continuous conjugate pair."""
    if dim < 2:
        raise InvalidSpec("dim must be >= 2")
    return UnitaryBasisSet(dim, (np.eye(dim, dtype=np.complex128), dft_matrix(dim)),
                           mutually_unbiased=True)


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def mub_prime(dim: int, count: int | None = None) -> UnitaryBasisSet:
    """Maximal set of D+1 mutually unbiased bases in prime dimension D.

    Odd primes use quadratic phases, basis m vector k component j:
    D^{-1/2} exp(2*pi i (j k + m j^2)/D). D = 2 uses the standard qubit
    triple. count trims the set (computational basis first).
    """
    if not _is_prime(dim):
        raise NotPrime(f"{dim} is not prime")
    if dim > 101:
        raise InvalidSpec("dim capped at 101")
    if dim == 2:
        mats = [np.eye(2, dtype=np.complex128),
                np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2),
                np.array([[1, 1], [1j, -1j]], dtype=np.complex128) / np.sqrt(2)]
    else:
        j = np.arange(dim)
        mats = [np.eye(dim, dtype=np.complex128)]
        for m in range(dim):
            phases = np.outer(j, j) + m * np.outer(j * j, np.ones(dim, dtype=np.int64))
            mats.append(np.exp(2j * np.pi * phases / dim) / np.sqrt(dim))
    if count is not None:
        if not 2 <= count <= dim + 1:
            raise InvalidSpec(f"count must be in 2..{dim + 1}")
        mats = mats[:count]
    return UnitaryBasisSet(dim, tuple(mats), mutually_unbiased=True)
