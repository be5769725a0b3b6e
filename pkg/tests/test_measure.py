"""Binning and distributions: cell conventions, tails, closed forms."""

import numpy as np
import pytest

from eurkit import (
    BinnedDistribution,
    CircleState,
    FiniteState,
    GridSpec,
    angular_momentum_probabilities,
    bin_angle,
    bin_momentum,
    bin_position,
    box_momentum_distribution,
    box_state,
    dft_matrix,
    finite_probabilities,
    gaussian_state,
    momentum_density,
    position_density,
    std_dev,
)
from eurkit.errors import InvalidSpec, TailNotConverged
from eurkit.measure import box_momentum_bin, second_moment_shrink

# frozen from the closed-form cells (paper-independent quadrature)
P0 = 0.902823333580280627
P1 = 0.03179355070760682


def test_box_momentum_cells_frozen():
    assert abs(float(box_momentum_bin(0)) - P0) < 1e-14
    assert abs(float(box_momentum_bin(1)) - P1) < 1e-14


def test_box_momentum_distribution_masses():
    d = box_momentum_distribution(1.0, 200)
    assert d.bin_width == pytest.approx(2 * np.pi)
    assert abs(d.probabilities.sum() + d.tail_mass - 1.0) < 1e-12
    # 1/k^2 tail: mass beyond j_max shrinks like 1/j_max
    d2 = box_momentum_distribution(1.0, 2000, tail_threshold=1e-3)
    assert d2.tail_mass < d.tail_mass
    assert d2.tail_mass < 1e-4


def test_bin_position_cells_are_centered():
    # uniform density over [-1, 1]; width-1 cells centered at the
    # integers split the mass 1/4, 1/2, 1/4
    psi = box_state(1.0, n=2 ** 14)
    d = bin_position(position_density(psi), 1.0, 0.0)
    assert d.indices.tolist() == [-1, 0, 1]
    assert np.max(np.abs(d.probabilities - [0.25, 0.5, 0.25])) < 1e-9
    # shifting the origin by half a cell realigns the edges to 0
    d2 = bin_position(position_density(psi), 1.0, 0.5)
    assert np.max(np.abs(d2.probabilities - [0.5, 0.5])) < 1e-9


def test_bin_mass_conservation(rng):
    psi = gaussian_state(1.0)
    rho = position_density(psi)
    for width in (0.3, 1.0, 2.7):
        d = bin_position(rho, width, 0.1)
        assert abs(d.probabilities.sum() + d.tail_mass - 1.0) < 1e-12


def test_tail_threshold_enforced():
    psi = gaussian_state(1.0, grid=GridSpec.centered(64.0, 4096))
    rho = momentum_density(psi)
    # box the cells to a narrow window by choosing a huge width and an
    # origin far away: everything lands in the tail
    with pytest.raises(TailNotConverged):
        BinnedDistribution(np.array([0]), np.array([0.2]),
                           bin_width=1.0, tail_mass=0.8,
                           tail_threshold=1e-6)
    d = BinnedDistribution(np.array([0]), np.array([0.2]),
                           bin_width=1.0, tail_mass=0.8,
                           tail_threshold=0.9)
    assert d.tail_mass == pytest.approx(0.8)
    assert rho.values.sum() > 0


def test_bin_momentum_matches_closed_form_box():
    psi = box_state(1.0, n=2 ** 17)
    rk = momentum_density(psi)
    d = bin_momentum(rk, 2 * np.pi, 0.0, tail_threshold=1e-4)
    got = dict(zip(d.indices.tolist(), d.probabilities))
    assert abs(got[0] - P0) < 1e-6
    assert abs(got[1] - P1) < 1e-6
    assert abs(got[-1] - P1) < 1e-6


def test_finite_probabilities_basis():
    st = FiniteState(np.array([1.0, 0.0, 0.0, 0.0], dtype=np.complex128))
    p_id = finite_probabilities(st, np.eye(4))
    assert p_id.probabilities[0] == pytest.approx(1.0)
    p_ft = finite_probabilities(st, dft_matrix(4))
    assert np.max(np.abs(p_ft.probabilities - 0.25)) < 1e-12


def test_angular_momentum_probabilities():
    st = CircleState(-1, np.array([0.6, 0.0, 0.8]))
    p = angular_momentum_probabilities(st)
    assert p.bin_width is None
    assert p.probabilities.tolist() == pytest.approx([0.36, 0.0, 0.64])


def test_bin_angle_eigenstate_uniform():
    for n in (2, 8, 16):
        d = bin_angle(CircleState(3, np.array([1.0])), n)
        assert np.max(np.abs(d.probabilities - 1.0 / n)) < 1e-12


def test_bin_angle_mass_conservation(rng):
    c = rng.normal(size=7) + 1j * rng.normal(size=7)
    c = c / np.linalg.norm(c)
    for n in (3, 8, 12):
        d = bin_angle(CircleState(-3, c), n)
        assert abs(d.probabilities.sum() - 1.0) < 1e-12


def test_bin_angle_needs_enough_cells():
    with pytest.raises(InvalidSpec):
        bin_angle(CircleState(0, np.array([1.0])), 0)


def test_std_dev_gaussian():
    rho = position_density(gaussian_state(1.4))
    assert abs(std_dev(rho) - 1.4) < 1e-6


def test_second_moment_shrink_flags_divergence():
    g = gaussian_state(1.0, grid=GridSpec.centered(64.0, 2 ** 13))
    box = box_state(1.0, n=2 ** 13)
    stable = second_moment_shrink(position_density(g))
    growing = second_moment_shrink(momentum_density(box))
    assert stable < 1e-6
    assert growing > 0.01
