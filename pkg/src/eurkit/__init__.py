"""Information-entropic uncertainty measures and the bounds they obey.

The package evaluates position/momentum, finite-dimensional, and circle
entropies (Shannon, Renyi, symmetrized, continuous) and checks the
catalog of uncertainty relations in :mod:`eurkit.bounds` against any
state, with stress sweeps, a saturation suite, and a tightness probe on
top. ``eur-kit`` exposes the same surface on the command line.
"""

from .bounds import (
    RELATIONS,
    RelationInfo,
    RelationSpec,
    bb_constant,
    best_mub_bound,
    bound_angle,
    bound_continuous,
    bound_continuous_rescaled,
    bound_deutsch,
    bound_maassen_uffink,
    bound_mub_sum,
    bound_renyi_binned,
    bound_shannon_binned,
    bound_symmetrized_binned,
    conjugate_order,
    deutsch_minimizer,
    inverse_log_sobolev_rhs,
    log_sobolev_rhs,
    overlap_c_b,
    refined_heisenberg,
    relation_ids,
)
from .entropy import (
    EntropyValue,
    continuous_renyi,
    continuous_shannon,
    renyi,
    shannon,
    symmetrized,
)
from .errors import (
    DimensionMismatch,
    EurKitError,
    GridTooNarrow,
    IncompatibleState,
    InvalidAlpha,
    InvalidSpec,
    NotUnitary,
    OptimizerBudgetExceeded,
    TailNotConverged,
    ZeroNorm,
)
from .measure import (
    BinnedDistribution,
    angular_momentum_probabilities,
    bin_angle,
    bin_momentum,
    bin_position,
    box_momentum_distribution,
    finite_probabilities,
    std_dev,
)
from .spectral import (
    UnitaryBasisSet,
    circle_coefficients,
    circle_samples,
    conjugate_grid,
    dft_basis,
    dft_matrix,
    fourier_transform,
    inverse_fourier_transform,
    momentum_density,
    mub_prime,
)
from .states import (
    CircleState,
    DensityGrid,
    FiniteState,
    GridSpec,
    GridWavefunction,
    MixtureState,
    RandomEnsembleSpec,
    box_state,
    example1_density,
    example2_density,
    gaussian_state,
    mixture_density,
    normalize,
    position_density,
    random_state,
)
from .stateio import (
    bases_from_json,
    bases_to_json,
    load_bases,
    load_state,
    named_state,
    named_state_names,
    parse_state_arg,
    save_state,
    state_from_json,
    state_to_json,
    to_json_text,
)
from .verify import (
    BoundReport,
    ProbeResult,
    StressSummary,
    check,
    deutsch_identity_check,
    phase_space_check,
    probe_tightness,
    riesz_check,
    saturation_suite,
    stress,
)

__version__ = "0.1.0"

__all__ = [
    "__version__",
    # states
    "GridSpec", "GridWavefunction", "DensityGrid", "FiniteState",
    "CircleState", "MixtureState", "RandomEnsembleSpec",
    "box_state", "gaussian_state", "example1_density", "example2_density",
    "normalize", "position_density", "mixture_density", "random_state",
    # spectral
    "fourier_transform", "inverse_fourier_transform", "momentum_density",
    "conjugate_grid", "circle_coefficients", "circle_samples",
    "UnitaryBasisSet", "dft_basis", "dft_matrix", "mub_prime",
    # measure
    "BinnedDistribution", "bin_position", "bin_momentum", "bin_angle",
    "finite_probabilities", "angular_momentum_probabilities",
    "box_momentum_distribution", "std_dev",
    # entropy
    "EntropyValue", "shannon", "renyi", "symmetrized",
    "continuous_shannon", "continuous_renyi",
    # bounds
    "RELATIONS", "RelationInfo", "RelationSpec", "relation_ids",
    "conjugate_order", "bb_constant", "bound_shannon_binned",
    "bound_renyi_binned", "bound_symmetrized_binned", "bound_continuous",
    "bound_continuous_rescaled", "bound_deutsch", "bound_maassen_uffink",
    "bound_angle", "bound_mub_sum", "best_mub_bound", "log_sobolev_rhs",
    "inverse_log_sobolev_rhs", "refined_heisenberg", "overlap_c_b",
    "deutsch_minimizer",
    # verify
    "BoundReport", "StressSummary", "ProbeResult", "check", "stress",
    "saturation_suite", "probe_tightness", "riesz_check",
    "phase_space_check", "deutsch_identity_check",
    # io
    "load_state", "save_state", "state_to_json", "state_from_json",
    "load_bases", "bases_to_json", "bases_from_json", "to_json_text",
    "named_state", "named_state_names", "parse_state_arg",
    # errors
    "EurKitError", "InvalidSpec", "InvalidAlpha", "IncompatibleState",
    "DimensionMismatch", "NotUnitary", "ZeroNorm", "GridTooNarrow",
    "TailNotConverged", "OptimizerBudgetExceeded",
]
