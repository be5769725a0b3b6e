"""Entropy functionals: limits, symmetry, additivity, closed forms."""

import numpy as np
import pytest

from eurkit import (
    BinnedDistribution,
    EntropyValue,
    GridSpec,
    bin_position,
    continuous_renyi,
    continuous_shannon,
    gaussian_state,
    position_density,
    renyi,
    shannon,
    symmetrized,
)
from eurkit.errors import InvalidAlpha, InvalidS

HALF_LN_2PIE = 1.41893853320467274  # (1/2) ln(2 pi e), frozen


def _dist(p):
    p = np.asarray(p, dtype=np.float64)
    return BinnedDistribution(np.arange(p.size), p / p.sum())


def test_uniform_shannon():
    assert shannon(_dist(np.ones(8))).value == pytest.approx(np.log(8.0))


def test_renyi_uniform_alpha_independent():
    d = _dist(np.ones(5))
    for a in (0.5, 0.99, 2.0, 4.0):
        assert renyi(d, a).value == pytest.approx(np.log(5.0))


def test_renyi_shannon_limit_window():
    d = _dist([0.5, 0.3, 0.2])
    h = shannon(d).value
    # inside the branch window the functional IS the Shannon sum
    assert renyi(d, 1.0).value == pytest.approx(h, abs=1e-15)
    assert renyi(d, 1.0 + 5e-10).value == pytest.approx(h, abs=1e-12)
    # just outside, the power form is continuous in alpha
    assert renyi(d, 1.0 + 1e-6).value == pytest.approx(h, abs=1e-5)


def test_renyi_monotone_in_alpha():
    d = _dist([0.6, 0.25, 0.1, 0.05])
    values = [renyi(d, a).value for a in (0.5, 0.8, 1.0, 1.5, 2.0, 4.0)]
    assert all(x >= y - 1e-12 for x, y in zip(values, values[1:]))


def test_renyi_rejects_bad_alpha():
    d = _dist([0.5, 0.5])
    with pytest.raises(InvalidAlpha):
        renyi(d, -0.5)
    with pytest.raises(InvalidAlpha):
        renyi(d, 0.0)


def test_renyi_additivity_product_distribution(rng):
    # H_alpha(q x p) = H_alpha(q) + H_alpha(p); exact for every order
    q = rng.uniform(0.05, 1.0, size=6)
    q /= q.sum()
    p = rng.uniform(0.05, 1.0, size=4)
    p /= p.sum()
    joint = np.outer(q, p).ravel()
    for a in (0.5, 1.0, 2.0, 3.0):
        lhs = renyi(_dist(joint), a).value
        rhs = renyi(_dist(q), a).value + renyi(_dist(p), a).value
        assert abs(lhs - rhs) < 1e-10


def test_symmetrized_is_conjugate_average(rng):
    p = rng.uniform(0.05, 1.0, size=5)
    d = _dist(p)
    for s in (0.1, 0.5, 0.9):
        pair = 0.5 * (renyi(d, 1.0 / (1.0 - s)).value
                      + renyi(d, 1.0 / (1.0 + s)).value)
        assert symmetrized(d, s).value == pytest.approx(pair, abs=1e-12)
    assert symmetrized(d, 0.0).value == pytest.approx(shannon(d).value)


def test_symmetrized_rejects_s_outside_domain():
    d = _dist([0.5, 0.5])
    with pytest.raises(InvalidS):
        symmetrized(d, 1.0)
    with pytest.raises(InvalidS):
        symmetrized(d, -0.5)


def test_continuous_gaussian_closed_forms():
    for sigma in (0.5, 1.0, 2.0):
        rho = position_density(gaussian_state(sigma))
        s = continuous_shannon(rho).value
        assert abs(s - (HALF_LN_2PIE + np.log(sigma))) < 1e-9
        # Renyi of a Gaussian: (1/2) ln(2 pi sigma^2) + ln(alpha)/(2(alpha-1))
        for a in (0.5, 2.0, 3.0):
            r = continuous_renyi(rho, a).value
            exact = (0.5 * np.log(2 * np.pi * sigma ** 2)
                     + np.log(a) / (2.0 * (a - 1.0)))
            assert abs(r - exact) < 1e-9


def test_continuous_ref_length_shift():
    rho = position_density(gaussian_state(1.0))
    s1 = continuous_shannon(rho, 1.0).value
    s2 = continuous_shannon(rho, 2.0).value
    assert abs((s1 - s2) - np.log(2.0)) < 1e-12


def test_binned_minus_continuous_gap_alpha_independent():
    # fine cells: H_alpha(binned) ~ S_alpha(continuous) - ln(delta).
    # The offset is the same for every order on a smooth density.
    rho = position_density(gaussian_state(1.0))
    delta = 0.05
    d = bin_position(rho, delta, 0.0)
    gaps = []
    for a in (0.5, 1.0, 2.0, 3.0):
        if a == 1.0:
            hb = shannon(d).value
            sc = continuous_shannon(rho).value
        else:
            hb = renyi(d, a).value
            sc = continuous_renyi(rho, a).value
        gaps.append(hb - sc - (-np.log(delta)))
    assert max(abs(g) for g in gaps) < 5e-3


def test_gaussian_maximizes_continuous_entropy_at_fixed_sigma(rng):
    # mix two separated Gaussians: same formula-sigma reference beats it
    from eurkit.measure import std_dev
    g = GridSpec.centered(64.0, 4096)
    a = position_density(gaussian_state(1.0, x0=-2.0, grid=g))
    b = position_density(gaussian_state(1.0, x0=2.0, grid=g))
    from eurkit import DensityGrid
    mixed = DensityGrid(g, 0.5 * a.values + 0.5 * b.values)
    sig = std_dev(mixed)
    s = continuous_shannon(mixed).value
    assert s < HALF_LN_2PIE + np.log(sig) + 1e-12


def test_entropy_value_float_protocol():
    v = shannon(_dist([0.5, 0.5]))
    assert isinstance(v, EntropyValue)
    assert float(v) == pytest.approx(np.log(2.0))
    assert v.kind == "shannon"
