"""Relation verification: single-state reports, seeded stress ensembles,
saturation suites, structural identity checks, and a tightness prober.

Every public entry point funnels into BoundReport so the CLI and tests
consume one shape. check() evaluates a cataloged relation on one state;
stress() hammers a relation with a seeded random ensemble; the
*_check functions exercise the structural identities the relation
catalog rests on (norm interpolation, transform modulus symmetry, the
pairwise entropy decomposition); probe_tightness searches a state
family for the smallest left-hand side a relation admits.
"""

from __future__ import annotations

import dataclasses
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np
from scipy import optimize

from .bounds import (
    RELATIONS,
    RelationSpec,
    bb_constant,
    bound_angle,
    bound_continuous,
    bound_deutsch,
    bound_maassen_uffink,
    bound_mub_sum,
    bound_renyi_binned,
    bound_shannon_binned,
    bound_symmetrized_binned,
    conjugate_order,
    inverse_log_sobolev_rhs,
    log_sobolev_rhs,
    overlap_c_b,
    refined_heisenberg,
)
from .entropy import (
    continuous_renyi,
    continuous_shannon,
    renyi,
    shannon,
    symmetrized,
)
from .errors import (
    DimensionMismatch,
    EurKitError,
    IncompatibleState,
    InvalidAlpha,
    InvalidSpec,
    NotUnitary,
    OptimizerBudgetExceeded,
    ZeroNorm,
)
from .measure import (
    angular_momentum_probabilities,
    bin_angle,
    bin_momentum,
    bin_position,
    finite_probabilities,
    std_dev,
)
from .quadrature import density_total, fisher_information, power_integral
from .spectral import (
    UnitaryBasisSet,
    conjugate_grid,
    dft_basis,
    dft_matrix,
    fourier_transform,
    inverse_transform_values,
    momentum_density,
    mub_prime,
    transform_values,
)
from .states import (
    CircleState,
    DensityGrid,
    FiniteState,
    GridWavefunction,
    MixtureState,
    RandomEnsembleSpec,
    gaussian_state,
    mixture_density,
    normalize,
    position_density,
    random_state,
    same_grid,
)

__all__ = [
    "BoundReport",
    "StressSummary",
    "ProbeResult",
    "kind_of",
    "describe",
    "check",
    "effective_params",
    "stress",
    "saturation_suite",
    "babenko_beckner_check",
    "riesz_check",
    "phase_space_check",
    "deutsch_identity_check",
    "probe_tightness",
]

# identity-type checks are held to a much tighter scale than margins
IDENTITY_TOL = 1e-10
MODULUS_TOL = 1e-6
# n^2 complex phase-space grid; 2048 keeps the check under ~200 MB
PHASE_SPACE_MAX_N = 2048

_DEFAULTS = {
    "alpha": 1.0,
    "s": 0.0,
    "delta_x": 1.0,
    "delta_k": 1.0,
    "origin_x": 0.0,
    "origin_k": 0.0,
    "tail_threshold": 1e-6,
    "ref_length": 1.0,
    "n_bins": 8,
    "side": "position",
}


# ======================================================================
# reports
# ======================================================================

@dataclass(frozen=True)
class BoundReport:
    """Outcome of evaluating one relation on one state.

    margin is the inequality slack: lhs - rhs for lower bounds and
    rhs - lhs for upper bounds, so it is nonnegative whenever the
    relation holds. satisfied is margin >= -tol, tightened by any
    sub-checks recorded in diagnostics (identity deviations, mixture
    norm steps). relation is a RelationSpec for cataloged relations and
    a plain id string for structural checks.
    """

    relation: RelationSpec | str
    lhs: float
    rhs: float
    margin: float
    satisfied: bool
    tol: float
    state_descriptor: str
    diagnostics: dict = field(default_factory=dict)

    @property
    def relation_id(self) -> str:
        if isinstance(self.relation, RelationSpec):
            return self.relation.id
        return str(self.relation)

    @property
    def parameters(self) -> dict:
        if isinstance(self.relation, RelationSpec):
            return dict(self.relation.parameters)
        return {}

    def to_dict(self) -> dict:
        return {
            "relation": self.relation_id,
            "parameters": {k: _plain(v) for k, v in self.parameters.items()},
            "lhs": self.lhs,
            "rhs": self.rhs,
            "margin": self.margin,
            "satisfied": self.satisfied,
            "tol": self.tol,
            "state": self.state_descriptor,
            "diagnostics": {k: _plain(v) for k, v in self.diagnostics.items()},
        }

    @staticmethod
    def csv_header() -> str:
        return "relation,params,lhs,rhs,margin,satisfied"

    def csv_row(self) -> str:
        params = ";".join(f"{k}={_plain(v)}"
                          for k, v in sorted(self.parameters.items()))
        return (f"{self.relation_id},{params},{self.lhs:.12g},"
                f"{self.rhs:.12g},{self.margin:.12g},"
                f"{'true' if self.satisfied else 'false'}")


@dataclass(frozen=True)
class StressSummary:
    """Aggregate of a seeded stress run.

    violations counts reports whose margin fell below -tol (or whose
    sub-checks failed); errors counts trials that raised, with the
    first few messages kept for triage. min_margin/argmin locate the
    tightest state seen. Reproducible from (relation, ensemble, seed).
    """

    relation: str
    trials: int
    violations: int
    errors: int
    min_margin: float
    argmin: str
    seed: int
    tol: float
    error_descriptors: tuple = ()
    margins: tuple = ()  # (trial, margin) pairs, kept only on request

    def to_dict(self) -> dict:
        out = {
            "relation": self.relation,
            "trials": self.trials,
            "violations": self.violations,
            "errors": self.errors,
            "min_margin": self.min_margin,
            "argmin": self.argmin,
            "seed": self.seed,
            "tol": self.tol,
            "error_descriptors": list(self.error_descriptors),
        }
        if self.margins:
            out["margins"] = [[i, m] for i, m in self.margins]
        return out


@dataclass(frozen=True)
class ProbeResult:
    """Smallest left-hand side a state family admitted for a relation.

    gap = best_lhs - rhs; a gap below -tol is flagged as a violation,
    which signals an implementation bug rather than a discovery. No
    claim is made that best_lhs is a global minimum.
    """

    relation: str
    family: str
    best_lhs: float
    rhs: float
    gap: float
    best_params: tuple
    evaluations: int
    restarts: int
    seed: int
    tol: float
    violation: bool

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "family": self.family,
            "best_lhs": self.best_lhs,
            "rhs": self.rhs,
            "gap": self.gap,
            "best_params": list(self.best_params),
            "evaluations": self.evaluations,
            "restarts": self.restarts,
            "seed": self.seed,
            "tol": self.tol,
            "violation": self.violation,
        }


def _plain(v):
    if isinstance(v, (bool, int, str)):
        return v
    if isinstance(v, float):
        return float(v)
    if isinstance(v, (np.floating, np.integer)):
        return v.item()
    if isinstance(v, UnitaryBasisSet):
        return f"bases[{v.count}x{v.dim}]"
    return str(v)


# ======================================================================
# state plumbing
# ======================================================================

def kind_of(state) -> str:
    if isinstance(state, GridWavefunction):
        return "grid"
    if isinstance(state, DensityGrid):
        return "density"
    if isinstance(state, FiniteState):
        return "finite"
    if isinstance(state, CircleState):
        return "circle"
    if isinstance(state, MixtureState):
        return "mixture"
    raise IncompatibleState(f"not a state: {type(state).__name__}")


def describe(state) -> str:
    kind = kind_of(state)
    if kind == "grid" or kind == "density":
        g = state.grid
        return f"{kind}[n={g.n},dx={g.dx:.6g}]"
    if kind == "finite":
        return f"finite[dim={state.dim}]"
    if kind == "circle":
        return f"circle[m={state.m_min}..{state.m_max}]"
    k = state.weights.size
    return f"mixture[{k}comp,n={state.grid.n}]"


def _densities(state):
    """Position and momentum densities of an amplitude-bearing state."""
    if isinstance(state, GridWavefunction):
        return position_density(state), momentum_density(state)
    if isinstance(state, MixtureState):
        return mixture_density(state)
    raise IncompatibleState(
        f"{type(state).__name__} carries no transform pair")


def _position_side(state) -> DensityGrid:
    if isinstance(state, DensityGrid):
        return state
    if isinstance(state, GridWavefunction):
        return position_density(state)
    if isinstance(state, MixtureState):
        return mixture_density(state)[0]
    raise IncompatibleState(f"{type(state).__name__} has no position density")


def _basis_pair(state: FiniteState, p: dict):
    dim = int(p.get("dim") or state.dim)
    if dim != state.dim:
        raise DimensionMismatch(f"relation dim {dim}, state dim {state.dim}")
    bases = p.get("bases")
    if bases is None:
        bset = dft_basis(dim)
    elif isinstance(bases, UnitaryBasisSet):
        bset = bases
    else:
        bset = UnitaryBasisSet(dim, tuple(bases))
    if bset.dim != dim:
        raise DimensionMismatch(f"bases dim {bset.dim}, state dim {dim}")
    if bset.count < 2:
        raise InvalidSpec("need at least two bases")
    return bset.matrices[0], bset.matrices[1], dim


def _mub_set(state: FiniteState, p: dict):
    dim = int(p.get("dim") or state.dim)
    if dim != state.dim:
        raise DimensionMismatch(f"relation dim {dim}, state dim {state.dim}")
    bases = p.get("bases")
    count = p.get("count")
    if bases is None:
        bset = mub_prime(dim, None if count is None else int(count))
    else:
        if isinstance(bases, UnitaryBasisSet):
            bset = bases
        else:
            bset = UnitaryBasisSet(dim, tuple(bases), mutually_unbiased=True)
        if not bset.mutually_unbiased:
            raise InvalidSpec("basis-sum relations need a set constructed "
                              "with mutually_unbiased=True")
        if count is not None and int(count) != bset.count:
            raise InvalidSpec("count disagrees with the supplied basis set")
    if bset.dim != dim:
        raise DimensionMismatch(f"bases dim {bset.dim}, state dim {dim}")
    if bset.count < 2:
        raise InvalidSpec("need at least two bases")
    return bset, dim


# ======================================================================
# relation evaluators
# ======================================================================

def _binned_pair(state, p):
    rho_x, rho_k = _densities(state)
    q = bin_position(rho_x, p["delta_x"], p["origin_x"],
                     tail_threshold=p["tail_threshold"])
    pk = bin_momentum(rho_k, p["delta_k"], p["origin_k"],
                      tail_threshold=p["tail_threshold"])
    diag = {"tail_x": float(q.tail_mass), "tail_k": float(pk.tail_mass),
            "cells_x": int(q.probabilities.size),
            "cells_k": int(pk.probabilities.size)}
    return q, pk, diag


def _eval_shannon_binned(state, p, tol):
    q, pk, diag = _binned_pair(state, p)
    lhs = float(shannon(q)) + float(shannon(pk))
    return lhs, bound_shannon_binned(p["delta_x"], p["delta_k"]), diag


def _eval_renyi_binned(state, p, tol):
    a, b = p["alpha"], p["beta"]
    q, pk, diag = _binned_pair(state, p)
    diag.update(alpha=float(a), beta=float(b))
    lhs = float(renyi(q, a)) + float(renyi(pk, b))
    return lhs, bound_renyi_binned(a, b, p["delta_x"], p["delta_k"]), diag


def _eval_symmetrized_binned(state, p, tol):
    s = p["s"]
    q, pk, diag = _binned_pair(state, p)
    diag["s"] = float(s)
    lhs = float(symmetrized(q, s)) + float(symmetrized(pk, s))
    return lhs, bound_symmetrized_binned(s, p["delta_x"], p["delta_k"]), diag


def _eval_shannon_continuous(state, p, tol):
    rho_x, rho_k = _densities(state)
    L = p["ref_length"]
    lhs = (float(continuous_shannon(rho_x, L))
           + float(continuous_shannon(rho_k, 1.0 / L)))
    diag = {"mass_x": density_total(rho_x), "mass_k": density_total(rho_k)}
    return lhs, bound_continuous(1.0, 1.0), diag


def _eval_renyi_continuous(state, p, tol):
    a, b = p["alpha"], p["beta"]
    rho_x, rho_k = _densities(state)
    L = p["ref_length"]
    lhs = (float(continuous_renyi(rho_x, a, L))
           + float(continuous_renyi(rho_k, b, 1.0 / L)))
    diag = {"alpha": float(a), "beta": float(b),
            "mass_x": density_total(rho_x), "mass_k": density_total(rho_k)}
    return lhs, bound_continuous(a, b), diag


def _eval_deutsch(state, p, tol):
    A, B, dim = _basis_pair(state, p)
    c_b = overlap_c_b(A, B)
    lhs = (float(shannon(finite_probabilities(state, A)))
           + float(shannon(finite_probabilities(state, B))))
    return lhs, bound_deutsch(c_b, dim), {"c_b": c_b, "dim": dim}


def _eval_maassen_uffink(state, p, tol):
    A, B, dim = _basis_pair(state, p)
    c_b = overlap_c_b(A, B)
    lhs = (float(shannon(finite_probabilities(state, A)))
           + float(shannon(finite_probabilities(state, B))))
    return lhs, bound_maassen_uffink(c_b, dim), {"c_b": c_b, "dim": dim}


def _eval_renyi_finite(state, p, tol):
    a, b = p["alpha"], p["beta"]
    A, B, dim = _basis_pair(state, p)
    c_b = overlap_c_b(A, B)
    lhs = (float(renyi(finite_probabilities(state, A), a))
           + float(renyi(finite_probabilities(state, B), b)))
    diag = {"c_b": c_b, "dim": dim, "alpha": float(a), "beta": float(b)}
    return lhs, bound_maassen_uffink(c_b, dim), diag


def _eval_angle_momentum(state, p, tol):
    n_bins = int(p["n_bins"])
    lhs = (float(shannon(bin_angle(state, n_bins)))
           + float(shannon(angular_momentum_probabilities(state))))
    diag = {"n_bins": n_bins,
            "window": int(state.coefficients.size)}
    return lhs, bound_angle(n_bins), diag


def _mub_evaluator(variant):
    def _eval(state, p, tol):
        bset, dim = _mub_set(state, p)
        lhs = sum(float(shannon(finite_probabilities(state, m)))
                  for m in bset.matrices)
        rhs = bound_mub_sum(bset.count, dim, variant)
        return lhs, rhs, {"count": bset.count, "dim": dim}
    return _eval


def _eval_log_sobolev(state, p, tol):
    rho = _position_side(state)
    L = p["ref_length"]
    lhs = float(continuous_shannon(rho, L))
    rhs = log_sobolev_rhs(rho, L)
    return lhs, rhs, {"fisher": fisher_information(rho)}


def _eval_inverse_log_sobolev(state, p, tol):
    side = p["side"]
    L = p["ref_length"]
    if side == "position":
        rho, ref = _position_side(state), L
    else:
        if isinstance(state, DensityGrid):
            raise IncompatibleState(
                "momentum side needs amplitudes, not a bare density")
        rho, ref = _densities(state)[1], 1.0 / L
    sigma = std_dev(rho)
    lhs = float(continuous_shannon(rho, ref))
    rhs = inverse_log_sobolev_rhs(sigma, L, side)
    return lhs, rhs, {"sigma": sigma, "side": side}


def _eval_refined_heisenberg(state, p, tol):
    rho_x, rho_k = _densities(state)
    s_sum = (float(continuous_shannon(rho_x, 1.0))
             + float(continuous_shannon(rho_k, 1.0)))
    sx, sk = std_dev(rho_x), std_dev(rho_k)
    lhs = sx * sk
    rhs = refined_heisenberg(s_sum)
    # the chain also asserts the entropic factor stays >= 1/2;
    # the folded margin keeps satisfied <=> margin >= -tol
    diag = {"sigma_x": sx, "sigma_k": sk, "entropy_sum": s_sum,
            "floor_margin": rhs - 0.5, "_margin": min(lhs - rhs, rhs - 0.5)}
    return lhs, rhs, diag


def _norm_alpha(rho: DensityGrid, alpha: float) -> float:
    return power_integral(rho, alpha) ** (1.0 / alpha)


def _eval_babenko_beckner(state, p, tol):
    a = p["alpha"]
    b = p["beta"]
    const = bb_constant(a, b)  # validates conjugacy
    rho_x, rho_k = _densities(state)
    na = _norm_alpha(rho_x, a)
    nb = _norm_alpha(rho_k, b)
    # the side with order >= 1 is the bounded one
    if a >= 1.0:
        lhs, rhs = na, const * nb
    else:
        lhs, rhs = nb, bb_constant(b, a) * na
    diag = {"alpha": float(a), "beta": float(b),
            "norm_x": na, "norm_k": nb}
    if isinstance(state, MixtureState):
        comp = [(w, _norm_alpha(position_density(c), a),
                 _norm_alpha(momentum_density(c), b))
                for w, c in zip(state.weights, state.components)]
        wa = sum(w * nxa for w, nxa, _ in comp)
        wb = sum(w * nkb for w, _, nkb in comp)
        if a >= 1.0:
            # order >= 1 side obeys the triangle step, the conjugate
            # side <= 1 obeys the reversed one
            mink_x, mink_k = wa - na, nb - wb
            comp_slack = min(const * nkb - nxa for _, nxa, nkb in comp)
        else:
            mink_x, mink_k = na - wa, wb - nb
            comp_slack = min(bb_constant(b, a) * nxa - nkb
                             for _, nxa, nkb in comp)
        diag.update(minkowski_x=mink_x, minkowski_k=mink_k,
                    component_margin_min=comp_slack,
                    _extra_ok=bool(mink_x >= -tol and mink_k >= -tol))
    return lhs, rhs, diag


_EVALUATORS = {
    "shannon-binned": _eval_shannon_binned,
    "renyi-binned": _eval_renyi_binned,
    "symmetrized-binned": _eval_symmetrized_binned,
    "shannon-continuous": _eval_shannon_continuous,
    "renyi-continuous": _eval_renyi_continuous,
    "deutsch": _eval_deutsch,
    "maassen-uffink": _eval_maassen_uffink,
    "renyi-finite": _eval_renyi_finite,
    "angle-momentum": _eval_angle_momentum,
    "mub-sum-pairwise": _mub_evaluator("pairwise"),
    "mub-sum-sanchez": _mub_evaluator("sanchez"),
    "mub-sum-refined": _mub_evaluator("refined"),
    "log-sobolev": _eval_log_sobolev,
    "inverse-log-sobolev": _eval_inverse_log_sobolev,
    "refined-heisenberg": _eval_refined_heisenberg,
    "babenko-beckner": _eval_babenko_beckner,
    "mixed-babenko-beckner": _eval_babenko_beckner,
}


def _as_spec(relation) -> RelationSpec:
    if isinstance(relation, RelationSpec):
        return relation
    return RelationSpec(str(relation))


def effective_params(spec: RelationSpec) -> dict:
    """The parameters check() will evaluate with, defaults filled in."""
    info = spec.info
    p = {k: spec.parameters.get(k, _DEFAULTS.get(k)) for k in info.params}
    if "beta" in info.params and p.get("beta") is None:
        p["beta"] = conjugate_order(p["alpha"])
    return p


def check(state, relation, tol: float | None = None) -> BoundReport:
    """Evaluate one cataloged relation on one state.

    Unset parameters take neutral defaults (unit bin widths and
    reference length, alpha = 1 with its conjugate order, 8 angle
    cells, identity/DFT basis pair, tail threshold 1e-6). tol overrides
    the relation's default margin tolerance.
    """
    spec = _as_spec(relation)
    info = spec.info
    kind = kind_of(state)
    if kind not in info.state_kinds:
        raise IncompatibleState(
            f"{spec.id} applies to {'/'.join(info.state_kinds)} states, "
            f"got {kind}")
    tol = float(info.tol if tol is None else tol)
    p = effective_params(spec)
    lhs, rhs, diag = _EVALUATORS[spec.id](state, p, tol)
    margin = diag.pop("_margin", None)
    if margin is None:
        margin = rhs - lhs if info.sense == "upper" else lhs - rhs
    extra_ok = bool(diag.pop("_extra_ok", True))
    satisfied = bool(margin >= -tol) and extra_ok
    return BoundReport(spec, float(lhs), float(rhs), float(margin),
                       satisfied, tol, describe(state),
                       {k: _plain(v) for k, v in diag.items()})


# ======================================================================
# structural identity checks
# ======================================================================

def babenko_beckner_check(psi, alpha: float, beta: float | None = None,
                          tol: float | None = None) -> BoundReport:
    """Transform-norm inequality report for a wavefunction or mixture.

    For mixtures the report also carries the two intermediate norm
    steps (triangle on the order >= 1 side, reversed on the conjugate
    side) and the smallest per-component slack as diagnostics; both
    steps participate in `satisfied`.
    """
    rid = ("mixed-babenko-beckner" if isinstance(psi, MixtureState)
           else "babenko-beckner")
    params = {"alpha": float(alpha)}
    if beta is not None:
        params["beta"] = float(beta)
    return check(psi, RelationSpec(rid, params), tol)


def _norm_p(v: np.ndarray, order: float) -> float:
    m = float(np.abs(v).max())
    if m <= 0:
        raise ZeroNorm("zero vector has no norm inequality")
    return m * float(np.sum((np.abs(v) / m) ** order)) ** (1.0 / order)


def riesz_check(matrix, x, nu: float, tol: float = 1e-7) -> BoundReport:
    """Interpolated norm inequality for a unitary map.

    c^{1/mu} ||x||_mu <= c^{1/nu} ||T x||_nu with 1/mu + 1/nu = 1,
    nu in [1, 2], and c the largest entry modulus of T. nu = 1 uses the
    sup norm on the left (the 1/mu power of c degenerates to 1).
    """
    T = np.asarray(matrix, dtype=np.complex128)
    if T.ndim != 2 or T.shape[0] != T.shape[1]:
        raise InvalidSpec("matrix must be square")
    if np.abs(T.conj().T @ T - np.eye(T.shape[0])).max() > 1e-12:
        raise NotUnitary("matrix fails unitarity at 1e-12")
    nu = float(nu)
    if not 1.0 <= nu <= 2.0:
        raise InvalidAlpha(f"nu must lie in [1, 2], got {nu}")
    if isinstance(x, FiniteState):
        v = x.amplitudes
    else:
        try:
            v = np.asarray(x, dtype=np.complex128).ravel()
        except (TypeError, ValueError):
            raise IncompatibleState(
                f"norm interpolation needs a finite vector, "
                f"got {type(x).__name__}")
    if v.size != T.shape[0]:
        raise DimensionMismatch(f"vector size {v.size}, matrix {T.shape}")
    c = float(np.abs(T).max())
    y = T @ v
    if nu == 1.0:
        lhs = float(np.abs(v).max())
        inv_mu = 0.0
    else:
        inv_mu = 1.0 - 1.0 / nu
        lhs = c ** inv_mu * _norm_p(v, 1.0 / inv_mu)
    rhs = c ** (1.0 / nu) * _norm_p(y, nu)
    margin = rhs - lhs
    return BoundReport("riesz", lhs, rhs, float(margin),
                       bool(margin >= -tol), float(tol),
                       f"finite[dim={v.size}]",
                       {"nu": nu, "inv_mu": inv_mu, "c": c})


def _phase_space_parts(state):
    if isinstance(state, GridWavefunction):
        comps, weights = (state,), (1.0,)
    elif isinstance(state, MixtureState):
        comps, weights = state.components, state.weights
    else:
        raise IncompatibleState(
            f"phase-space check needs amplitudes, got {type(state).__name__}")
    grid = comps[0].grid
    for c in comps[1:]:
        same_grid(grid, c.grid)
    if grid.n > PHASE_SPACE_MAX_N:
        raise InvalidSpec(
            f"phase-space check holds an n^2 complex grid; n = {grid.n} "
            f"exceeds the cap {PHASE_SPACE_MAX_N}, rebuild on a coarser grid")
    F = np.zeros((grid.n, grid.n), dtype=np.complex128)
    q = np.zeros(grid.n)
    p = np.zeros(grid.n)
    for w, c in zip(weights, comps):
        ft = fourier_transform(c)
        F += w * (c.values[:, None] * np.conj(ft.values)[None, :])
        q += w * np.abs(c.values) ** 2
        p += w * np.abs(ft.values) ** 2
    q *= grid.dx
    p *= conjugate_grid(grid).dx
    return grid, F, q / q.sum(), p / p.sum()


def phase_space_check(state) -> BoundReport:
    """Two structural facts about the joint position-momentum function.

    (a) With cell weights f_ij = q_i p_j, the double sum
    -sum f_ij ln f_ij equals H(q) + H(p) to 1e-10 (entropy of a
    product is additive). (b) The modulus of the doubly transformed
    joint function equals the modulus of the original after the
    reflect-and-swap relabeling of its arguments, to 1e-6 sup norm;
    the two can differ only in phase. Both hold for mixtures, (b)
    because the joint function is linear in the state.
    """
    grid, F, q, p = _phase_space_parts(state)
    hq, hp = float(shannon(q)), float(shannon(p))
    P = np.outer(q, p)
    mask = P > 0
    lhs = float(-(P[mask] * np.log(P[mask])).sum())
    rhs = hq + hp
    dev_sum = abs(lhs - rhs)

    t1, kgrid = transform_values(F, grid, axis=0)
    t2, _ = inverse_transform_values(t1, kgrid, axis=1)
    refl = (grid.n - np.arange(grid.n)) % grid.n
    target = np.abs(F)[refl].T
    dev_mod = float(np.max(np.abs(np.abs(t2) - target)))

    satisfied = bool(dev_sum <= IDENTITY_TOL and dev_mod <= MODULUS_TOL)
    return BoundReport("phase-space", lhs, rhs, float(lhs - rhs),
                       satisfied, IDENTITY_TOL, describe(state),
                       {"sum_identity_dev": dev_sum,
                        "modulus_sup_dev": dev_mod, "n": int(grid.n)})


def deutsch_identity_check(state: FiniteState, bases=None,
                           tol: float = 1e-7) -> BoundReport:
    """Decomposition of the two-basis entropy sum into pairwise terms.

    H(a) + H(b) = sum_ij q_i p_j Q_ij with Q_ij = -ln q_i - ln p_j,
    zero-probability terms skipped with weight 0; every retained Q_ij
    must clear the overlap bound, which is what makes the minimum over
    pairs a legitimate lower bound for the sum.
    """
    A, B, dim = _basis_pair(state, {"bases": bases})
    q = finite_probabilities(state, A).probabilities
    p = finite_probabilities(state, B).probabilities
    c_b = overlap_c_b(A, B)
    qm, pm = q[q > 0], p[p > 0]
    Q = (-np.log(qm))[:, None] + (-np.log(pm))[None, :]
    total = float((np.outer(qm, pm) * Q).sum())
    hsum = float(shannon(q)) + float(shannon(p))
    dev = abs(total - hsum)
    lhs = float(Q.min())
    rhs = bound_deutsch(c_b, dim)
    margin = lhs - rhs
    satisfied = bool(margin >= -tol and dev <= IDENTITY_TOL)
    return BoundReport("deutsch-identity", lhs, rhs, float(margin),
                       satisfied, float(tol), describe(state),
                       {"identity_dev": dev, "entropy_sum": hsum,
                        "c_b": c_b, "dim": dim})


# ======================================================================
# stress ensembles
# ======================================================================

_STRUCTURAL = ("riesz", "phase-space", "deutsch-identity")


def _stress_runner(relation, params: dict, tol: float | None):
    """Resolve a relation name to (id, effective tol, per-state runner)."""
    if isinstance(relation, RelationSpec) or relation in RELATIONS:
        spec = (relation if isinstance(relation, RelationSpec)
                else RelationSpec(relation, params))
        eff = float(spec.info.tol if tol is None else tol)
        return spec.id, eff, lambda st: check(st, spec, eff)
    eff = float(1e-7 if tol is None else tol)
    if relation == "riesz":
        nu = float(params.get("nu", 1.5))
        mat = params.get("matrix")

        def run(st):
            T = dft_matrix(st.dim) if mat is None else mat
            return riesz_check(T, st, nu, tol=eff)
        return "riesz", eff, run
    if relation == "phase-space":
        return "phase-space", eff, phase_space_check
    if relation == "deutsch-identity":
        bases = params.get("bases")
        return ("deutsch-identity", eff,
                lambda st: deutsch_identity_check(st, bases, tol=eff))
    raise InvalidSpec(f"unknown relation {relation!r}")


def stress(relation, ensemble: RandomEnsembleSpec, trials: int,
           tol: float | None = None, params: dict | None = None,
           threads: int = 1, keep_margins: bool = False) -> StressSummary:
    """Evaluate a relation over seeded ensemble members 0..trials-1.

    Accepts every cataloged relation id plus the structural checks
    'riesz', 'phase-space', and 'deutsch-identity'. Per-trial errors
    are counted, not raised; the first few are kept as descriptors.
    Trial i draws from stream (ensemble.seed, i), so results are
    independent of execution order and thread count. keep_margins
    retains the per-trial (index, margin) pairs on the summary.
    """
    if trials < 1:
        raise InvalidSpec("trials must be >= 1")
    rid, eff, run = _stress_runner(relation, dict(params or {}), tol)

    def trial(i):
        try:
            return i, run(random_state(ensemble, i)), None
        except EurKitError as e:
            return i, None, f"trial {i}: {type(e).__name__}: {e}"

    if threads > 1:
        with ThreadPoolExecutor(max_workers=int(threads)) as pool:
            results = list(pool.map(trial, range(trials)))
    else:
        results = [trial(i) for i in range(trials)]

    violations = errors = 0
    min_margin = math.inf
    argmin = ""
    messages = []
    margins = []
    for i, rep, err in results:
        if err is not None:
            errors += 1
            if len(messages) < 5:
                messages.append(err)
            continue
        if not rep.satisfied:
            violations += 1
        if keep_margins:
            margins.append((i, rep.margin))
        if rep.margin < min_margin:
            min_margin = rep.margin
            argmin = f"trial {i}: {rep.state_descriptor}"
    if not math.isfinite(min_margin):
        min_margin = math.nan
    return StressSummary(rid, int(trials), violations, errors,
                         float(min_margin), argmin, int(ensemble.seed),
                         eff, tuple(messages), tuple(margins))


# ======================================================================
# saturation suite
# ======================================================================

def saturation_suite() -> list:
    """Reports for the families known to meet their bounds exactly.

    Each report's satisfied flag is re-evaluated as |margin| <= tol, so
    a comfortably-positive margin is as much a failure here as a
    violation would be.
    """
    g = gaussian_state(1.0)
    wide = gaussian_state(1.3)
    e5 = FiniteState(np.eye(5)[:, 0])
    rows = [
        (g, RelationSpec("shannon-continuous"), None),
        (g, RelationSpec("renyi-continuous", {"alpha": 2.0}), None),
        (wide, RelationSpec("babenko-beckner", {"alpha": 2.0}), None),
        (g, RelationSpec("refined-heisenberg"), None),
        (g, RelationSpec("log-sobolev"), None),
        (g, RelationSpec("inverse-log-sobolev", {"side": "position"}), None),
        (g, RelationSpec("inverse-log-sobolev", {"side": "momentum"}), None),
        (e5, RelationSpec("maassen-uffink"), 1e-12),
        (e5, RelationSpec("renyi-finite", {"alpha": 2.0}), 1e-12),
        (CircleState(3, np.ones(1)),
         RelationSpec("angle-momentum", {"n_bins": 16}), 1e-12),
        (CircleState(0, np.ones(1)),
         RelationSpec("angle-momentum", {"n_bins": 8}), 1e-12),
    ]
    reports = []
    for state, spec, tight in rows:
        rep = check(state, spec, tight)
        reports.append(dataclasses.replace(
            rep, satisfied=bool(abs(rep.margin) <= rep.tol)))
    return reports


# ======================================================================
# tightness prober
# ======================================================================

class _BudgetHit(Exception):
    pass


def _gaussian_family(params: dict):
    def make(v):
        sigma = float(np.exp(np.clip(v[0], -2.0, 2.0)))
        x0 = float(np.clip(v[1], -4.0, 4.0))
        k0 = float(np.clip(v[2], -4.0, 4.0))
        return gaussian_state(sigma, x0=x0, k0=k0)
    return 3, make


def _finite_family(params: dict):
    dim = params.get("dim")
    bases = params.get("bases")
    if dim is None and isinstance(bases, UnitaryBasisSet):
        dim = bases.dim
    dim = int(dim or 3)

    def make(v):
        amp = v[:dim] + 1j * v[dim:]
        return normalize(FiniteState(amp))
    return 2 * dim, make


def _circle_family(params: dict):
    width = 3  # coefficient window m in [-3, 3]
    size = 2 * width + 1

    def make(v):
        c = v[:size] + 1j * v[size:]
        return normalize(CircleState(-width, c))
    return 2 * size, make


_FAMILIES = {
    "gaussian": (_gaussian_family, "grid"),
    "finite": (_finite_family, "finite"),
    "circle": (_circle_family, "circle"),
}


def probe_tightness(relation, family: str = "gaussian", seed: int = 0,
                    restarts: int = 8, max_evals: int = 20000,
                    tol: float | None = None) -> ProbeResult:
    """Search a state family for the smallest lhs a relation admits.

    Derivative-free simplex descent from seeded random starts; binned
    entropies are only piecewise smooth in the family parameters, so
    gradients are not trusted. Deterministic given seed. Exhausting
    max_evals raises OptimizerBudgetExceeded carrying the best-so-far
    result. The reported minimum is the best point seen, with no claim
    of global optimality.
    """
    spec = _as_spec(relation)
    if spec.info.sense != "lower":
        raise InvalidSpec("tightness probing targets lower-bound relations")
    if family not in _FAMILIES:
        raise InvalidSpec(f"unknown family {family!r}")
    builder, fam_kind = _FAMILIES[family]
    if fam_kind not in spec.info.state_kinds:
        raise IncompatibleState(f"{spec.id} does not apply to {family} states")
    nparams, make = builder(spec.parameters)

    evals = 0
    best = [math.inf, None]

    def objective(v):
        nonlocal evals
        if evals >= max_evals:
            raise _BudgetHit()
        evals += 1
        try:
            lhs = check(make(np.asarray(v, dtype=np.float64)), spec, tol).lhs
        except EurKitError:
            return math.inf
        if lhs < best[0]:
            best[0], best[1] = lhs, tuple(float(u) for u in v)
        return lhs

    starts = [np.zeros(nparams)]
    if family != "gaussian":
        starts[0][0] = 1.0  # basis-vector-like start; all-zeros has no norm
    for r in range(1, max(1, int(restarts))):
        rng = np.random.default_rng((int(seed), r))
        starts.append(rng.normal(size=nparams))

    rhs = check(make(starts[0]), spec, tol).rhs
    eff = float(spec.info.tol if tol is None else tol)

    def result():
        gap = best[0] - rhs
        return ProbeResult(spec.id, family, float(best[0]), float(rhs),
                           float(gap), best[1] or (), evals,
                           len(starts), int(seed), eff,
                           bool(gap < -eff))

    try:
        for v0 in starts:
            optimize.minimize(objective, v0, method="Nelder-Mead",
                              options={"maxfev": max_evals, "xatol": 1e-10,
                                       "fatol": 1e-12})
    except _BudgetHit:
        raise OptimizerBudgetExceeded(
            f"optimizer budget {max_evals} exhausted", best=result())
    return result()
