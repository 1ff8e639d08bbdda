"""Spectral order for commuting tuples of Hermitian matrices.

The package decides the distribution-function order A <= B by comparing the
ranges of joint spectral projections on lower orthants, and carries the
machinery that comes with it: joint spectral measures, a functional calculus
for coordinatewise maps, monotone-transport and monomial-inequality checks
for positive tuples, atom-measure dominance over downward closed sets, and
projection-valued step functions with reconstruction.

Everything is finite dimensional and numerically explicit. Comparisons take
a tolerance; defaults live next to the routines that use them.
"""

from .errors import (
    CapExceededError,
    CommutationError,
    DimensionError,
    EigenConvergenceError,
    EmptyGeneratorError,
    EvaluationError,
    HermiticityError,
    InputError,
    MassMismatchError,
    MonotonicityError,
    NormalityError,
    OrderError,
    ParameterError,
    PositivityError,
    PreconditionError,
    SpecOrderError,
    ValidationError,
)
from .gallery import (
    MEET_COMMUTATOR_DEFECT,
    MEET_FIRST,
    MEET_SECOND,
    axis_shift_family,
    crossed_dirac_diagonal_pair,
    crossed_dirac_pair,
    projection_pair_no_infimum,
)
from .functions import (
    BorelFunction,
    clipped_affine_fn,
    coordinate_fn,
    fractional_fn,
    indicator_fn,
    monomial_fn,
    parts_fns,
    product_fn,
    scalar_part_fn,
    sum_fn,
    table_fn,
)
from .linalg import (
    HermitianOperator,
    Projection,
    commutator_norm,
    hermitian_eig,
    is_psd,
    orthonormalize,
    proj_leq,
    subspace_join,
    subspace_meet,
)
from .measures import (
    AtomicMeasure,
    DominanceResult,
    DownwardClosedAtomSubset,
    EquivalenceReport,
    LowerSetGen,
    audit_iota_increasing,
    cdf_leq,
    enumerate_downward_closed,
    epsilon_fatten,
    leq_iota,
    lower_distance,
    lower_indicator_complement,
    lower_membership,
    lower_mollifier,
    lowerset_dominance,
    thm31_equivalence_check,
    tuple_scalar_measure,
)
from .order import (
    GrowthRatioReport,
    InfimumProbeReport,
    MembershipResult,
    NormalOperator,
    OrderVerdict,
    bounded_vector_membership,
    distribution_order,
    growth_ratio,
    infimum_probe,
    loewner_leq,
    monotone_transport_check,
    multi_indices,
    normal_leq,
    olson_necessity_scan,
    restricted_monotone_check,
    scaled_monomial_check,
    spectral_leq,
    spectral_leq_componentwise,
)
from .resolution import (
    ProjValuedStepFunction,
    ResolutionReport,
    difference_box,
    reconstruct_measure,
    validate_resolution,
)
from .spectral import (
    CommutingTuple,
    JointSpectralMeasure,
    calculus_scalar,
    calculus_vector,
    fractional_power,
    is_positive_tuple,
    joint_measure,
    monomial,
    parts_decompose,
    pushforward,
    validate_tuple,
)

__version__ = "0.1.0"

__all__ = [
    "AtomicMeasure",
    "BorelFunction",
    "CapExceededError",
    "MEET_COMMUTATOR_DEFECT",
    "MEET_FIRST",
    "MEET_SECOND",
    "CommutationError",
    "CommutingTuple",
    "DimensionError",
    "DominanceResult",
    "DownwardClosedAtomSubset",
    "EigenConvergenceError",
    "EmptyGeneratorError",
    "EquivalenceReport",
    "EvaluationError",
    "GrowthRatioReport",
    "HermitianOperator",
    "HermiticityError",
    "InfimumProbeReport",
    "InputError",
    "JointSpectralMeasure",
    "LowerSetGen",
    "MassMismatchError",
    "MembershipResult",
    "MonotonicityError",
    "NormalOperator",
    "NormalityError",
    "OrderError",
    "OrderVerdict",
    "ParameterError",
    "PositivityError",
    "PreconditionError",
    "ProjValuedStepFunction",
    "Projection",
    "ResolutionReport",
    "SpecOrderError",
    "ValidationError",
    "audit_iota_increasing",
    "axis_shift_family",
    "bounded_vector_membership",
    "calculus_scalar",
    "calculus_vector",
    "cdf_leq",
    "clipped_affine_fn",
    "commutator_norm",
    "coordinate_fn",
    "crossed_dirac_diagonal_pair",
    "crossed_dirac_pair",
    "difference_box",
    "distribution_order",
    "enumerate_downward_closed",
    "epsilon_fatten",
    "fractional_fn",
    "fractional_power",
    "growth_ratio",
    "hermitian_eig",
    "indicator_fn",
    "infimum_probe",
    "is_positive_tuple",
    "is_psd",
    "joint_measure",
    "leq_iota",
    "loewner_leq",
    "lower_distance",
    "lower_indicator_complement",
    "lower_membership",
    "lower_mollifier",
    "lowerset_dominance",
    "monomial",
    "monomial_fn",
    "monotone_transport_check",
    "multi_indices",
    "normal_leq",
    "olson_necessity_scan",
    "orthonormalize",
    "parts_decompose",
    "parts_fns",
    "proj_leq",
    "product_fn",
    "projection_pair_no_infimum",
    "pushforward",
    "reconstruct_measure",
    "restricted_monotone_check",
    "scalar_part_fn",
    "scaled_monomial_check",
    "spectral_leq",
    "spectral_leq_componentwise",
    "subspace_join",
    "subspace_meet",
    "sum_fn",
    "table_fn",
    "thm31_equivalence_check",
    "tuple_scalar_measure",
    "validate_resolution",
    "validate_tuple",
]
