"""State containers: validation, construction, ensembles."""

import numpy as np
import pytest

from eurkit import (
    CircleState,
    DensityGrid,
    FiniteState,
    GridSpec,
    GridTooNarrow,
    GridWavefunction,
    InvalidSpec,
    MixtureState,
    RandomEnsembleSpec,
    ZeroNorm,
    box_state,
    example1_density,
    example2_density,
    gaussian_state,
    normalize,
    position_density,
    random_state,
)
from eurkit.measure import std_dev


def test_gridspec_points_cover():
    g = GridSpec.centered(8.0, 16)
    assert g.n == 16
    assert g.points.shape == (16,)
    assert abs(g.points[0] - g.x_min) < 1e-15
    assert g.covers(-3.0, 3.0)
    assert not g.covers(-10.0, 0.0)


def test_gridspec_rejects_bad_steps():
    with pytest.raises(InvalidSpec):
        GridSpec(0.0, -0.1, 8)
    with pytest.raises(InvalidSpec):
        GridSpec(0.0, 0.1, 0)


def test_wavefunction_norm_and_normalize():
    g = GridSpec.centered(16.0, 128)
    v = np.exp(-g.points ** 2)
    psi = GridWavefunction(g, v.astype(np.complex128))
    n2 = psi.norm_squared
    out = normalize(psi)
    assert abs(out.norm_squared - 1.0) < 1e-12
    assert abs(psi.norm_squared - n2) < 1e-15  # input untouched


def test_zero_norm_rejected():
    g = GridSpec.centered(4.0, 16)
    psi = GridWavefunction(g, np.zeros(16, dtype=np.complex128))
    with pytest.raises(ZeroNorm):
        normalize(psi)


def test_density_rejects_negative_values():
    g = GridSpec.centered(4.0, 16)
    v = np.ones(16)
    v[3] = -0.2
    with pytest.raises(InvalidSpec):
        DensityGrid(g, v)


def test_finite_state_validation():
    with pytest.raises(ZeroNorm):
        normalize(FiniteState(np.zeros(3, dtype=np.complex128)))
    st = normalize(FiniteState(np.array([3.0, 4.0j])))
    assert abs(np.abs(st.amplitudes[0]) - 0.6) < 1e-12


def test_circle_state_m_range():
    st = CircleState(-2, np.array([0.6, 0.0, 0.8]))
    assert st.m_min == -2
    assert st.m_max == 0
    assert st.m_values.tolist() == [-2, -1, 0]
    assert abs(np.sum(np.abs(st.coefficients) ** 2) - 1.0) < 1e-12


def test_mixture_weight_validation():
    g = GridSpec.centered(32.0, 256)
    a = gaussian_state(1.0, grid=g)
    b = gaussian_state(2.0, grid=g)
    with pytest.raises(InvalidSpec):
        MixtureState((0.5, 0.6), (a, b))
    mix = MixtureState((0.25, 0.75), (a, b))
    assert len(mix.components) == 2


def test_mixture_requires_common_grid():
    a = gaussian_state(1.0, grid=GridSpec.centered(16.0, 256))
    b = gaussian_state(1.0, grid=GridSpec.centered(16.0, 128))
    with pytest.raises(Exception):
        MixtureState((0.5, 0.5), (a, b))


def test_box_state_support_and_norm():
    st = box_state(1.0, n=4096)
    assert abs(st.norm_squared - 1.0) < 1e-12
    rho = position_density(st)
    x = st.grid.points
    inside = np.abs(x) <= 1.0
    assert np.all(rho.values[~inside] == 0.0)
    # uniform 1/(2a) over [-a, a]
    assert abs(np.median(rho.values[inside]) - 0.5) < 1e-12


def test_gaussian_state_moments():
    st = gaussian_state(0.7, x0=1.2, k0=-0.4)
    rho = position_density(st)
    assert abs(st.norm_squared - 1.0) < 1e-12
    assert abs(std_dev(rho) - 0.7) < 1e-6
    dx = st.grid.dx
    mean = float(np.sum(st.grid.points * rho.values) * dx)
    assert abs(mean - 1.2) < 1e-9


def test_example1_variance_closed_form():
    for N in (2, 10, 100):
        rho = example1_density(1.0, N)
        exact = N - 1.0 / N + 1.0 / 12.0
        assert abs(std_dev(rho) ** 2 - exact) / exact < 1e-10


def test_example1_needs_wide_grid():
    with pytest.raises(GridTooNarrow):
        example1_density(1.0, 10, grid=GridSpec.centered(4.0, 64))


def test_example2_sigmas():
    base = 1.0 / np.sqrt(12.0)
    sa = std_dev(example2_density("a"))
    sb = std_dev(example2_density("b"))
    assert abs(sa - base) < 1e-9
    assert abs(sb - np.sqrt(7.0) / 2.0 * base) < 1e-9


def test_random_state_deterministic_per_spec_and_index():
    spec = RandomEnsembleSpec("finite-haar", 7, {"dim": 5})
    a = random_state(spec, 3)
    b = random_state(spec, 3)
    c = random_state(spec, 4)
    assert np.array_equal(a.amplitudes, b.amplitudes)
    assert not np.array_equal(a.amplitudes, c.amplitudes)


def test_random_state_kinds():
    g = random_state(RandomEnsembleSpec("grid-smooth", 1, {}), 0)
    assert isinstance(g, GridWavefunction)
    assert abs(g.norm_squared - 1.0) < 1e-9
    c = random_state(RandomEnsembleSpec("circle-window", 1, {"window": 4}), 0)
    assert isinstance(c, CircleState)
    m = random_state(RandomEnsembleSpec("mixture", 1, {"ncomp": 3}), 0)
    assert isinstance(m, MixtureState)
    assert len(m.components) == 3
    assert abs(sum(m.weights) - 1.0) < 1e-12


def test_random_ensemble_rejects_unknown_kind():
    with pytest.raises(InvalidSpec):
        RandomEnsembleSpec("bogus", 0, {})
