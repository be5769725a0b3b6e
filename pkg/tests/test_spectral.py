"""Transforms: Plancherel, closed forms, basis constructions."""

import numpy as np
import pytest

from eurkit import (
    CircleState,
    GridSpec,
    box_state,
    circle_coefficients,
    circle_samples,
    conjugate_grid,
    dft_basis,
    dft_matrix,
    fourier_transform,
    gaussian_state,
    inverse_fourier_transform,
    momentum_density,
    mub_prime,
)
from eurkit.errors import NotPrime
from eurkit.quadrature import density_total
from eurkit.spectral import box_transform_closed_form, sine_integral

# independently frozen values (series/quadrature, not this code)
SI_PI = 1.85193705198246617
BOX_FT_AT_1 = 0.4747491644862875  # |box transform| at k=1, a=1: sin(1)/sqrt(pi)


def test_sine_integral_frozen_points():
    assert abs(float(sine_integral(np.pi)) - SI_PI) < 1e-14
    assert float(sine_integral(0.0)) == 0.0
    # odd function
    assert abs(float(sine_integral(-2.0)) + float(sine_integral(2.0))) < 1e-15


def test_conjugate_grid_duality():
    g = GridSpec.centered(32.0, 512)
    k = conjugate_grid(g)
    assert abs(k.dx * g.dx * g.n - 2 * np.pi) < 1e-12
    gg = conjugate_grid(k)
    assert abs(gg.dx - g.dx) < 1e-15
    assert gg.n == g.n


def test_plancherel_and_round_trip(rng):
    g = GridSpec.centered(32.0, 512)
    v = rng.normal(size=512) + 1j * rng.normal(size=512)
    v *= np.exp(-g.points ** 2 / 8.0)
    from eurkit import GridWavefunction, normalize
    psi = normalize(GridWavefunction(g, v))
    ft = fourier_transform(psi)
    assert abs(ft.norm_squared - 1.0) < 1e-10
    back = inverse_fourier_transform(ft, g.x_min)
    assert np.max(np.abs(back.values - psi.values)) < 1e-10


def test_gaussian_transform_width():
    from eurkit.measure import std_dev
    psi = gaussian_state(0.8)
    rk = momentum_density(psi)
    assert abs(density_total(rk) - 1.0) < 1e-9
    assert abs(std_dev(rk) - 1.0 / (2 * 0.8)) < 1e-6


def test_box_closed_form_matches_fft():
    psi = box_state(1.0, n=2 ** 15)
    ft = fourier_transform(psi)
    k = ft.grid.points
    sel = np.abs(k) < 20.0
    exact = np.abs(box_transform_closed_form(1.0, k[sel]))
    assert np.max(np.abs(np.abs(ft.values[sel]) - exact)) < 1e-4


def test_box_closed_form_frozen_point():
    assert abs(float(box_transform_closed_form(1.0, 1.0)) - BOX_FT_AT_1) < 1e-15


def test_dft_matrix_unitary():
    for d in (2, 3, 4, 7):
        T = dft_matrix(d)
        assert np.max(np.abs(T @ T.conj().T - np.eye(d))) < 1e-12


def test_dft_basis_is_unbiased_pair():
    bs = dft_basis(5)
    assert bs.mutually_unbiased
    a, b = bs.matrices
    ov = np.abs(a.conj().T @ b)
    assert np.max(np.abs(ov - 1.0 / np.sqrt(5.0))) < 1e-12


def test_mub_prime_pairwise_overlaps():
    for d in (2, 3, 5, 7):
        bs = mub_prime(d)
        assert len(bs.matrices) == d + 1
        for i in range(len(bs.matrices)):
            m = bs.matrices[i]
            assert np.max(np.abs(m.conj().T @ m - np.eye(d))) < 1e-12
            for j in range(i + 1, len(bs.matrices)):
                ov = np.abs(m.conj().T @ bs.matrices[j])
                assert np.max(np.abs(ov - d ** -0.5)) < 1e-12


def test_mub_prime_rejects_composite():
    with pytest.raises(NotPrime):
        mub_prime(6)


def test_circle_round_trip():
    st = CircleState(-3, np.array([0.5, 0.5, 0.5, 0.0, 0.0, 0.5],
                                  dtype=np.complex128))
    samples = circle_samples(st, 64)
    back = circle_coefficients(samples, -3, 2)
    assert np.max(np.abs(back.coefficients - st.coefficients)) < 1e-12
