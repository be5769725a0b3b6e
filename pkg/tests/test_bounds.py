"""Bound catalog: frozen constants, limits, algebraic identities."""

import numpy as np
import pytest

from eurkit import (
    RELATIONS,
    RelationSpec,
    bb_constant,
    best_mub_bound,
    bound_angle,
    bound_continuous,
    bound_deutsch,
    bound_maassen_uffink,
    bound_mub_sum,
    bound_renyi_binned,
    bound_shannon_binned,
    bound_symmetrized_binned,
    conjugate_order,
    continuous_shannon,
    deutsch_minimizer,
    gaussian_state,
    inverse_log_sobolev_rhs,
    log_sobolev_rhs,
    overlap_c_b,
    position_density,
    refined_heisenberg,
    relation_ids,
)
from eurkit.errors import InvalidAlpha, InvalidOverlap, InvalidSpec, NotConjugate

# frozen oracles, computed independently of this package
BOUND_CONT_SHANNON = 2.1447298858494002  # 1 + ln(pi)
BOUND_RENYI_2PI_A2 = 0.2616240718822741  # continuous-limit-free binned, a=2
DEUTSCH_AT_INV_SQRT2 = 0.31669436764074993
LN_8_OVER_5 = 0.47000362924573563


def test_conjugate_order_involution():
    for a in (0.6, 1.0, 1.5, 2.0, 7.0):
        b = conjugate_order(a)
        assert abs(1.0 / a + 1.0 / b - 2.0) < 1e-14
        assert conjugate_order(b) == pytest.approx(a, abs=1e-12)
    with pytest.raises(InvalidAlpha):
        conjugate_order(0.5)


def test_bb_constant_unit_at_shannon_point():
    assert bb_constant(1.0, 1.0) == pytest.approx(1.0, abs=1e-15)
    # n(alpha, beta) < 1 away from (1, 1)
    assert bb_constant(2.0, conjugate_order(2.0)) < 1.0


def test_bound_shannon_binned_frozen():
    v = bound_shannon_binned(1.0, 2 * np.pi)
    assert abs(v - (1.0 - np.log(2.0))) < 1e-9
    # depends only on the product delta_x * delta_k
    assert bound_shannon_binned(2.0, np.pi) == pytest.approx(v, abs=1e-12)
    assert bound_shannon_binned(np.pi, 2.0) == pytest.approx(v, abs=1e-12)


def test_bound_renyi_binned_frozen_and_limit():
    a = 2.0
    b = conjugate_order(a)
    v = bound_renyi_binned(a, b, 1.0, 2 * np.pi)
    assert abs(v - BOUND_RENYI_2PI_A2) < 1e-12
    # alpha -> 1 recovers the Shannon bound
    for eps in (1e-4, 1e-6):
        close = bound_renyi_binned(1.0 + eps, conjugate_order(1.0 + eps),
                                   1.0, 2 * np.pi)
        assert abs(close - bound_shannon_binned(1.0, 2 * np.pi)) < 10 * eps
    exact = bound_renyi_binned(1.0, 1.0, 1.0, 2 * np.pi)
    assert abs(exact - bound_shannon_binned(1.0, 2 * np.pi)) < 1e-9


def test_bound_renyi_requires_conjugacy():
    with pytest.raises(NotConjugate):
        bound_renyi_binned(2.0, 3.0, 1.0, 1.0)


def test_bound_symmetrized_equals_renyi_average():
    for s in (0.25, 0.5, 0.75):
        a = 1.0 / (1.0 - s)
        b = 1.0 / (1.0 + s)
        want = bound_renyi_binned(a, b, 0.7, 1.3)
        # the conjugate-pair average of the same bound is itself
        swap = bound_renyi_binned(b, a, 0.7, 1.3) \
            if b > 0.5 else want
        got = bound_symmetrized_binned(s, 0.7, 1.3)
        assert got == pytest.approx(0.5 * (want + swap), abs=1e-12)


def test_bound_continuous_frozen():
    assert abs(bound_continuous(1.0, 1.0) - BOUND_CONT_SHANNON) < 1e-12
    # the Renyi variant exceeds... no: equals at the Shannon point and
    # stays finite on either side of it
    for a in (0.75, 1.5, 3.0):
        v = bound_continuous(a, conjugate_order(a))
        assert np.isfinite(v)


def test_bound_deutsch_frozen_and_order():
    assert abs(bound_deutsch(2 ** -0.5) - DEUTSCH_AT_INV_SQRT2) < 1e-12
    for c in (0.4, 0.6, 0.9, 0.99):
        assert bound_deutsch(c) <= bound_maassen_uffink(c) + 1e-12
    # equality at c = 1 (both vanish)
    assert bound_deutsch(1.0) == pytest.approx(0.0, abs=1e-12)
    assert bound_maassen_uffink(1.0) == pytest.approx(0.0, abs=1e-12)


def test_bound_maassen_uffink_dft_value():
    for d in (2, 3, 4, 7):
        c = d ** -0.5
        assert bound_maassen_uffink(c) == pytest.approx(np.log(d), abs=1e-12)


def test_overlap_validation():
    with pytest.raises(InvalidOverlap):
        bound_deutsch(0.3, dim=4)  # below the 1/sqrt(4) floor
    with pytest.raises(InvalidOverlap):
        bound_maassen_uffink(1.5)
    with pytest.raises(InvalidOverlap):
        bound_maassen_uffink(0.0)


def test_overlap_c_b_dft():
    from eurkit import dft_matrix
    c = overlap_c_b(np.eye(4), dft_matrix(4))
    assert c == pytest.approx(0.5, abs=1e-12)


def test_bound_angle():
    for n in (2, 8, 16):
        assert bound_angle(n) == pytest.approx(np.log(n), abs=1e-15)


def test_mub_refined_equals_sanchez_at_full_set():
    for d in (2, 3, 5, 7):
        m = d + 1
        r = bound_mub_sum(m, d, "refined")
        s = bound_mub_sum(m, d, "sanchez")
        assert abs(r - s) < 1e-12


def test_mub_refined_dominates_pairwise_above_sqrt_d():
    for d in (2, 3, 4, 5, 7, 9, 11, 16):
        m_lo = int(np.ceil(1.0 + np.sqrt(d)))
        for m in range(m_lo, d + 2):
            r = bound_mub_sum(m, d, "refined")
            p = bound_mub_sum(m, d, "pairwise")
            assert r >= p - 1e-12, (d, m)


def test_best_mub_bound_is_max_of_variants():
    for d, m in ((2, 3), (4, 5), (8, 9)):
        variants = [bound_mub_sum(m, d, v)
                    for v in ("pairwise", "sanchez", "refined")]
        assert best_mub_bound(m, d) == pytest.approx(max(variants), abs=1e-15)
    # incomplete set: sanchez inapplicable, max over the other two
    assert best_mub_bound(3, 7) == pytest.approx(
        max(bound_mub_sum(3, 7, "pairwise"),
            bound_mub_sum(3, 7, "refined")), abs=1e-15)


def test_mub_refined_frozen_point():
    # M=2, D=4: M ln(MD / (M+D-1)) = 2 ln(8/5)
    assert abs(bound_mub_sum(2, 4, "refined") - 2.0 * LN_8_OVER_5) < 1e-14


def test_sanchez_needs_complete_set():
    from eurkit.errors import VariantInapplicable
    with pytest.raises(VariantInapplicable):
        bound_mub_sum(3, 4, "sanchez")


def test_log_sobolev_gaussian_equality():
    for sigma in (0.5, 1.0, 2.0):
        rho = position_density(gaussian_state(sigma))
        s = continuous_shannon(rho).value
        assert abs(s - log_sobolev_rhs(rho)) < 5e-4


def test_inverse_log_sobolev_orientation_in_ref_length():
    # Gaussian saturates at every L only if the reference enters as
    # sigma_x / L on the position side and sigma_k * L on the momentum
    # side, matching S = -int rho ln(rho L).
    from eurkit import momentum_density
    psi = gaussian_state(1.3)
    rx = position_density(psi)
    rk = momentum_density(psi)
    from eurkit.measure import std_dev
    for L in (0.5, 1.0, 2.0):
        sx = continuous_shannon(rx, L).value
        sk = continuous_shannon(rk, 1.0 / L).value
        bx = inverse_log_sobolev_rhs(std_dev(rx), L, "position")
        bk = inverse_log_sobolev_rhs(std_dev(rk), L, "momentum")
        assert abs(sx - bx) < 1e-5, L
        assert abs(sk - bk) < 1e-5, L


def test_refined_heisenberg_floor():
    assert refined_heisenberg(1.0 + np.log(np.pi)) == pytest.approx(0.5)
    # exceeding the entropy floor lifts the product bound above 1/2
    assert refined_heisenberg(2.0 + np.log(np.pi)) > 0.5


def test_deutsch_minimizer_attains_cell_floor():
    from eurkit import dft_matrix
    a = np.eye(2)
    b = dft_matrix(2)
    st = deutsch_minimizer(a[:, 0], b[:, 0])
    qa = np.abs(np.vdot(a[:, 0], st.amplitudes)) ** 2
    pb = np.abs(np.vdot(b[:, 0], st.amplitudes)) ** 2
    c = float(np.abs(np.vdot(a[:, 0], b[:, 0])))
    # the (a, b) cell value -ln q - ln p lands exactly on the bound
    assert abs((-np.log(qa) - np.log(pb)) - bound_deutsch(c)) < 1e-12


def test_deutsch_minimizer_rejects_parallel():
    from eurkit.errors import DegenerateParallel
    v = np.array([1.0, 0.0], dtype=np.complex128)
    with pytest.raises(DegenerateParallel):
        deutsch_minimizer(v, v)


def test_relation_spec_validation():
    assert len(relation_ids()) == 17
    with pytest.raises(InvalidSpec):
        RelationSpec("not-a-relation", {})
    with pytest.raises(InvalidSpec):
        RelationSpec("shannon-binned", {"alpha": 2.0})
    spec = RelationSpec("renyi-binned", {"alpha": 2.0})
    assert spec.info.sense in ("lower", "upper")
    for rid, info in RELATIONS.items():
        assert info.tol > 0
        assert info.sense in ("lower", "upper")
        assert len(info.state_kinds) >= 1
