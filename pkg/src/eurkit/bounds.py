"""Lower/upper bound formulas for every supported uncertainty relation,
the basis-overlap quantities that parameterize them, and the two-basis
minimizer construction.

All bounds are pure functions of their parameters, in nats, with the
momentum variable a wave vector (so the cell-resolution combination
enters as delta_x * delta_k / (2 pi)).

Conjugate order pairs satisfy 1/alpha + 1/beta = 2 (both > 1/2). The
factor ln(a)/(1 - a) appearing in the Renyi-type bounds is continued
analytically through a = 1 (limit -1) rather than evaluated numerically
near the pole.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import (
    DegenerateParallel,
    DimensionMismatch,
    InvalidAlpha,
    InvalidOverlap,
    InvalidS,
    InvalidSpec,
    NotConjugate,
    SupportBoundary,
    VariantInapplicable,
)
from .quadrature import fisher_information
from .states import DensityGrid, FiniteState, normalize

LOG_PI = float(np.log(np.pi))
LOG_2 = float(np.log(2.0))
ALPHA_LIMIT_WINDOW = 1e-9
CONJUGACY_TOL = 1e-12


def conjugate_order(alpha: float) -> float:
    """beta with 1/alpha + 1/beta = 2."""
    if not np.isfinite(alpha) or alpha <= 0.5:
        raise InvalidAlpha(f"no conjugate order for alpha = {alpha}")
    return alpha / (2.0 * alpha - 1.0)


def require_conjugate(alpha: float, beta: float) -> None:
    if not (np.isfinite(alpha) and np.isfinite(beta)) or alpha <= 0 or beta <= 0:
        raise InvalidAlpha(f"orders must be positive, got ({alpha}, {beta})")
    if abs(1.0 / alpha + 1.0 / beta - 2.0) > CONJUGACY_TOL:
        raise NotConjugate(f"1/{alpha} + 1/{beta} != 2")


def _log_ratio(alpha: float) -> float:
    """ln(alpha)/(1 - alpha), continued to -1 at alpha = 1."""
    if abs(alpha - 1.0) < ALPHA_LIMIT_WINDOW:
        return -1.0
    d = alpha - 1.0
    return float(-np.log1p(d) / d)


def bb_constant(alpha: float, beta: float) -> float:
    """Sharp transform-norm constant n(alpha, beta) =
    (alpha/pi)^{-1/(2 alpha)} (beta/pi)^{1/(2 beta)} for a conjugate pair.

    The order >= 1 names the side whose integral sits alone in
    (int rho^alpha)^{1/alpha} <= n(alpha, beta) (int rho~^beta)^{1/beta}.
    """
    require_conjugate(alpha, beta)
    return float((alpha / np.pi) ** (-1.0 / (2 * alpha))
                 * (beta / np.pi) ** (1.0 / (2 * beta)))


def bound_shannon_binned(delta_x: float, delta_k: float) -> float:
    """1 - ln 2 - ln(dx dk / 2 pi); negative once the cells get coarse."""
    if delta_x <= 0 or delta_k <= 0:
        raise InvalidSpec("cell widths must be positive")
    return 1.0 - LOG_2 - float(np.log(delta_x * delta_k / (2 * np.pi)))


def bound_renyi_binned(alpha: float, beta: float,
                       delta_x: float, delta_k: float) -> float:
    """-1/2 (ln a/(1-a) + ln b/(1-b)) - ln 2 - ln(dx dk / 2 pi)."""
    require_conjugate(alpha, beta)
    if delta_x <= 0 or delta_k <= 0:
        raise InvalidSpec("cell widths must be positive")
    return (-0.5 * (_log_ratio(alpha) + _log_ratio(beta)) - LOG_2
            - float(np.log(delta_x * delta_k / (2 * np.pi))))


def bound_symmetrized_binned(s: float, delta_x: float, delta_k: float) -> float:
    """1/2 ln(1-s^2) + (1/2s) ln((1+s)/(1-s)) - ln 2 - ln(dx dk / 2 pi);
    equals the average of bound_renyi_binned over the conjugate pair
    (1/(1-s), 1/(1+s)) and reduces to the Shannon form at s = 0."""
    if not 0.0 <= s < 1.0:
        raise InvalidS(f"s must be in [0, 1), got {s}")
    if s < ALPHA_LIMIT_WINDOW:
        return bound_shannon_binned(delta_x, delta_k)
    if delta_x <= 0 or delta_k <= 0:
        raise InvalidSpec("cell widths must be positive")
    return (0.5 * float(np.log1p(-s * s))
            + float(np.log((1 + s) / (1 - s))) / (2 * s)
            - LOG_2 - float(np.log(delta_x * delta_k / (2 * np.pi))))


def bound_continuous(alpha: float, beta: float) -> float:
    """-1/2 (ln a/(1-a) + ln b/(1-b)) + ln pi, the conjugacy-reduced form
    of -1/2 [(1-a)^{-1} ln(a/pi) + (1-b)^{-1} ln(b/pi)]; equals 1 + ln pi
    at alpha = beta = 1."""
    require_conjugate(alpha, beta)
    return -0.5 * (_log_ratio(alpha) + _log_ratio(beta)) + LOG_PI


def bound_continuous_rescaled(norm: float) -> float:
    """Shannon form of bound_continuous for a wavefunction of norm N
    (int rho = N^2): N^2 (1 + ln pi - 4 ln N)."""
    if norm <= 0:
        raise InvalidSpec("norm must be positive")
    n2 = norm * norm
    return n2 * (1.0 + LOG_PI - 4.0 * float(np.log(norm)))


def _check_overlap(c_b: float, dim: int | None) -> None:
    if not 0.0 < c_b <= 1.0 + 1e-12:
        raise InvalidOverlap(f"overlap must lie in (0, 1], got {c_b}")
    if dim is not None and c_b < 1.0 / np.sqrt(dim) - 1e-12:
        raise InvalidOverlap(
            f"overlap {c_b} below the dimension floor 1/sqrt({dim})")


def bound_deutsch(c_b: float, dim: int | None = None) -> float:
    """-2 ln((1 + C_B)/2)."""
    _check_overlap(c_b, dim)
    return float(-2.0 * np.log((1.0 + min(c_b, 1.0)) / 2.0))


def bound_maassen_uffink(c_b: float, dim: int | None = None) -> float:
    """-2 ln C_B; also the bound for conjugate-order Renyi pairs."""
    _check_overlap(c_b, dim)
    return float(-2.0 * np.log(min(c_b, 1.0)))


def overlap_c_b(basis_a: np.ndarray, basis_b: np.ndarray) -> float:
    """Largest overlap modulus max_ij |<a_i|b_j>| between two bases given
    as matrices with the basis vectors in columns."""
    a = np.asarray(basis_a, dtype=np.complex128)
    b = np.asarray(basis_b, dtype=np.complex128)
    if a.shape != b.shape or a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"basis shapes {a.shape} vs {b.shape}")
    return float(np.abs(a.conj().T @ b).max())


def bound_angle(n_bins: int) -> float:
    """ln N for N angle cells of width 2 pi / N."""
    if int(n_bins) != n_bins or n_bins < 1:
        raise InvalidSpec("n_bins must be a positive integer")
    return float(np.log(n_bins))


MUB_VARIANTS = ("pairwise", "sanchez", "refined")


def bound_mub_sum(m: int, d: int, variant: str) -> float:
    """Lower bound on the entropy sum over M mutually unbiased bases in
    dimension D:

        pairwise  (M/2) ln D
        sanchez   (D+1) ln((D+1)/2), complete sets (M = D+1) only
        refined   M ln(M D / (M + D - 1))

    refined coincides with sanchez at M = D+1 and beats pairwise exactly
    when M >= 1 + sqrt(D).
    """
    if variant not in MUB_VARIANTS:
        raise InvalidSpec(f"variant must be one of {MUB_VARIANTS}")
    if m < 2:
        raise InvalidSpec("need at least two bases")
    if d < 1:
        raise InvalidSpec("dimension must be >= 1")
    if variant == "pairwise":
        return 0.5 * m * float(np.log(d))
    if variant == "sanchez":
        if m != d + 1:
            raise VariantInapplicable(
                f"sanchez needs the complete set M = D+1, got M={m}, D={d}")
        return (d + 1.0) * float(np.log((d + 1.0) / 2.0))
    return m * float(np.log(m * d / (m + d - 1.0)))


def best_mub_bound(m: int, d: int) -> float:
    """Largest applicable bound_mub_sum value at (M, D)."""
    best = max(bound_mub_sum(m, d, "pairwise"), bound_mub_sum(m, d, "refined"))
    if m == d + 1:
        best = max(best, bound_mub_sum(m, d, "sanchez"))
    return best


def log_sobolev_rhs(rho: DensityGrid, ref_length: float = 1.0) -> float:
    """1/2 (1 + ln 2 pi) - 1/2 ln(L^2 I) with I the Fisher information
    int rho'^2 / rho; a lower bound on the continuous Shannon entropy,
    saturated by Gaussians."""
    if ref_length <= 0:
        raise InvalidSpec("reference length must be positive")
    if rho.pieces is not None:
        raise SupportBoundary(
            "piecewise-constant density has jump discontinuities; "
            "the derivative integral is undefined")
    info = fisher_information(rho)
    return 0.5 * (1.0 + float(np.log(2 * np.pi))) \
        - 0.5 * float(np.log(ref_length ** 2 * info))


def inverse_log_sobolev_rhs(sigma: float, ref_length: float = 1.0,
                            side: str = "position") -> float:
    """1/2 (1 + ln 2 pi) + ln(sigma_x / L) or + ln(sigma_k L): the
    Gaussian-saturated upper bound on the continuous Shannon entropy of
    the named side.

    The L placement mirrors the entropies themselves, which carry
    reference L on the position side and 1/L on the momentum side so
    that their sum is L-free; with it, a Gaussian meets the bound
    exactly for every L, and log_sobolev_rhs is its lower partner.
    """
    if sigma <= 0:
        raise InvalidSpec("sigma must be positive")
    if ref_length <= 0:
        raise InvalidSpec("reference length must be positive")
    if side not in ("position", "momentum"):
        raise InvalidSpec("side must be 'position' or 'momentum'")
    scale = sigma / ref_length if side == "position" else sigma * ref_length
    return 0.5 * (1.0 + float(np.log(2 * np.pi))) + float(np.log(scale))


def refined_heisenberg(s_sum: float) -> float:
    """1/2 exp(S_sum - 1 - ln pi): the entropic strengthening of the
    sigma_x sigma_k >= 1/2 product bound; equals 1/2 at the minimal
    entropy sum 1 + ln pi."""
    return 0.5 * float(np.exp(s_sum - 1.0 - LOG_PI))


def deutsch_minimizer(a, b) -> FiniteState:
    """The two-basis-vector state (|a> + e^{-i arg<a|b>} |b>) /
    sqrt(2 (1 + |<a|b>|)), which attains -2 ln((1 + |<a|b>|)/2) for the
    entropy-sum cell built on a and b. The free global phase is fixed
    to 1."""
    va = a.amplitudes if isinstance(a, FiniteState) else np.asarray(a, np.complex128)
    vb = b.amplitudes if isinstance(b, FiniteState) else np.asarray(b, np.complex128)
    if va.shape != vb.shape:
        raise DimensionMismatch(f"{va.shape} vs {vb.shape}")
    ov = np.vdot(va, vb)
    c = abs(ov)
    if c >= 1.0 - 1e-12:
        raise DegenerateParallel("basis vectors are parallel; the pair "
                                 "carries no uncertainty trade-off")
    phase = np.exp(-1j * np.angle(ov)) if c > 0 else 1.0
    return normalize(FiniteState(va + phase * vb))


# ======================================================================
# relation catalog
# ======================================================================

@dataclass(frozen=True)
class RelationInfo:
    """Schema entry for one relation id: which parameters it takes,
    which state families it applies to, and its default margin
    tolerance."""

    id: str
    statement: str
    params: tuple
    state_kinds: tuple
    tol: float
    sense: str = "lower"  # "lower": lhs >= rhs; "upper": bound >= measured


RELATIONS: dict[str, RelationInfo] = {
    r.id: r for r in (
        RelationInfo(
            "shannon-binned",
            "H(x bins) + H(k bins) >= 1 - ln2 - ln(dx dk / 2pi)",
            ("delta_x", "delta_k", "origin_x", "origin_k", "tail_threshold"),
            ("grid", "mixture"), 1e-7),
        RelationInfo(
            "renyi-binned",
            "H_a(x bins) + H_b(k bins) >= renyi binned bound",
            ("alpha", "beta", "delta_x", "delta_k", "origin_x", "origin_k",
             "tail_threshold"),
            ("grid", "mixture"), 1e-7),
        RelationInfo(
            "symmetrized-binned",
            "Hs_s(x bins) + Hs_s(k bins) >= symmetrized binned bound",
            ("s", "delta_x", "delta_k", "origin_x", "origin_k",
             "tail_threshold"),
            ("grid", "mixture"), 1e-7),
        RelationInfo(
            "shannon-continuous",
            "S(x) + S(k) >= 1 + ln pi",
            ("ref_length",),
            ("grid", "mixture"), 1e-5),
        RelationInfo(
            "renyi-continuous",
            "S_a(x) + S_b(k) >= continuous conjugate-pair bound",
            ("alpha", "beta", "ref_length"),
            ("grid", "mixture"), 1e-5),
        RelationInfo(
            "deutsch",
            "H(a) + H(b) >= -2 ln((1 + C_B)/2)",
            ("bases", "dim"),
            ("finite",), 1e-7),
        RelationInfo(
            "maassen-uffink",
            "H(a) + H(b) >= -2 ln C_B",
            ("bases", "dim"),
            ("finite",), 1e-7),
        RelationInfo(
            "renyi-finite",
            "H_a + H_b over a basis pair >= -2 ln C_B",
            ("alpha", "beta", "bases", "dim"),
            ("finite",), 1e-7),
        RelationInfo(
            "angle-momentum",
            "H(angle cells) + H(m) >= ln N",
            ("n_bins",),
            ("circle",), 1e-7),
        RelationInfo(
            "mub-sum-pairwise",
            "sum of H over M mutually unbiased bases >= (M/2) ln D",
            ("bases", "dim", "count"),
            ("finite",), 1e-7),
        RelationInfo(
            "mub-sum-sanchez",
            "complete-set MUB entropy sum >= (D+1) ln((D+1)/2)",
            ("bases", "dim", "count"),
            ("finite",), 1e-7),
        RelationInfo(
            "mub-sum-refined",
            "MUB entropy sum >= M ln(MD/(M+D-1))",
            ("bases", "dim", "count"),
            ("finite",), 1e-7),
        RelationInfo(
            "log-sobolev",
            "S(x) >= 1/2(1 + ln 2pi) - 1/2 ln(L^2 I)",
            ("ref_length",),
            ("grid", "density", "mixture"), 5e-4),
        RelationInfo(
            "inverse-log-sobolev",
            "S <= 1/2(1 + ln 2pi) + ln(L sigma) on the chosen side",
            ("side", "ref_length"),
            ("grid", "density", "mixture"), 1e-5, sense="upper"),
        RelationInfo(
            "refined-heisenberg",
            "sigma_x sigma_k >= 1/2 exp(S_x + S_k - 1 - ln pi)",
            (),
            ("grid", "mixture"), 1e-5),
        RelationInfo(
            "babenko-beckner",
            "(int rho^a)^{1/a} <= n(a,b) (int rho~^b)^{1/b}",
            ("alpha", "beta"),
            ("grid",), 1e-5, sense="upper"),
        RelationInfo(
            "mixed-babenko-beckner",
            "the transform-norm inequality for mixture densities",
            ("alpha", "beta"),
            ("mixture",), 1e-5, sense="upper"),
    )
}


@dataclass(frozen=True)
class RelationSpec:
    """A relation id plus the concrete parameters of one evaluation."""

    id: str
    parameters: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.id not in RELATIONS:
            raise InvalidSpec(f"unknown relation id {self.id!r}")
        info = RELATIONS[self.id]
        unknown = set(self.parameters) - set(info.params)
        if unknown:
            raise InvalidSpec(
                f"{self.id} does not take parameters {sorted(unknown)}")
        _validate_relation_params(self.id, self.parameters)

    @property
    def info(self) -> RelationInfo:
        return RELATIONS[self.id]


def _validate_relation_params(rid: str, p: dict) -> None:
    alpha = p.get("alpha")
    beta = p.get("beta")
    if alpha is not None:
        if not np.isfinite(alpha) or alpha <= 0:
            raise InvalidAlpha(f"alpha must be positive, got {alpha}")
        if beta is not None:
            require_conjugate(alpha, beta)
    if "s" in p and not 0.0 <= p["s"] < 1.0:
        raise InvalidS(f"s must be in [0, 1), got {p['s']}")
    for key in ("delta_x", "delta_k", "ref_length"):
        if key in p and p[key] <= 0:
            raise InvalidSpec(f"{key} must be positive")
    if "n_bins" in p and (int(p["n_bins"]) != p["n_bins"] or p["n_bins"] < 1):
        raise InvalidSpec("n_bins must be a positive integer")
    if "side" in p and p["side"] not in ("position", "momentum"):
        raise InvalidSpec("side must be 'position' or 'momentum'")
    if "dim" in p and p["dim"] < 1:
        raise InvalidSpec("dim must be >= 1")


def relation_ids() -> tuple:
    return tuple(RELATIONS)
