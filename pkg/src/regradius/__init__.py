"""Regularity radius of real square matrices.

r(A, Delta) is the smallest delta >= 0 such that the interval matrix
[A - delta*Delta, A + delta*Delta] contains a singular matrix (inf when
none does).  The package provides the exact exponential search, polynomial
bounds, closed forms for totally positive / inverse nonnegative matrices,
a polynomial tridiagonal method, a finiteness decision, and a typically
cheap best-first orthant search, plus generators and a benchmark harness.
"""

from .api import regularity_radius
from .bounds import (
    BoundSet,
    bound_chebyshev_spectral,
    bound_demmel,
    bound_gamma_sandwich,
    bound_rohn_upper,
    bound_sign_vector_upper,
    bound_spectral_lower,
    compute_bounds,
    perron_root,
)
from .core import (
    INF,
    Certificate,
    CertificateFailed,
    ClassMismatch,
    DimensionTooLarge,
    EigenFailure,
    FrontierExhausted,
    GenerationFailed,
    Indeterminate,
    InfiniteRadius,
    IntervalMatrix,
    NonpositiveWeights,
    RadiusError,
    RadiusResult,
    SingularInput,
    StructureMismatch,
    Tolerances,
    ZeroRadiusMatrix,
    invert,
    norm_inf1,
    rank,
    real_spectral_radius,
    sign_vectors,
    svd,
)
from .finiteness import (
    FinitenessReport,
    finiteness_sufficient,
    is_radius_infinite,
    max_nonzeros_for_infinite,
)
from .fullsearch import (
    FullSearchReport,
    is_regular_oracle,
    nearest_singular_certificate,
    radius_allones,
    radius_full_search,
)
from .generators import FAMILIES, GeneratorSpec, generate, row_seed
from .lp import FeasibilityAnswer, LinearSystem, lp_feasible
from .orthant import OrthantTrace, delta_intersect, delta_unbounded, radius_orthant_search
from .special import (
    ClassTag,
    RankOneApprox,
    approximate_by_rank_one,
    detect_class,
    radius_inverse_nonnegative,
    radius_totally_positive,
    reduce_rank_one,
)
from .tridiag import TridiagonalMatrix, TridiagonalRadius, tridiag_is_regular, tridiag_radius

__version__ = "0.1.0"

__all__ = [
    "BoundSet",
    "Certificate",
    "CertificateFailed",
    "ClassMismatch",
    "ClassTag",
    "DimensionTooLarge",
    "EigenFailure",
    "FAMILIES",
    "FeasibilityAnswer",
    "FinitenessReport",
    "FrontierExhausted",
    "FullSearchReport",
    "GenerationFailed",
    "GeneratorSpec",
    "INF",
    "Indeterminate",
    "InfiniteRadius",
    "IntervalMatrix",
    "LinearSystem",
    "NonpositiveWeights",
    "OrthantTrace",
    "RadiusError",
    "RadiusResult",
    "RankOneApprox",
    "SingularInput",
    "StructureMismatch",
    "Tolerances",
    "TridiagonalMatrix",
    "TridiagonalRadius",
    "ZeroRadiusMatrix",
    "approximate_by_rank_one",
    "bound_chebyshev_spectral",
    "bound_demmel",
    "bound_gamma_sandwich",
    "bound_rohn_upper",
    "bound_sign_vector_upper",
    "bound_spectral_lower",
    "compute_bounds",
    "delta_intersect",
    "delta_unbounded",
    "detect_class",
    "finiteness_sufficient",
    "generate",
    "invert",
    "is_radius_infinite",
    "is_regular_oracle",
    "lp_feasible",
    "max_nonzeros_for_infinite",
    "nearest_singular_certificate",
    "norm_inf1",
    "perron_root",
    "radius_allones",
    "radius_full_search",
    "radius_inverse_nonnegative",
    "radius_orthant_search",
    "radius_totally_positive",
    "rank",
    "real_spectral_radius",
    "reduce_rank_one",
    "regularity_radius",
    "row_seed",
    "sign_vectors",
    "svd",
    "tridiag_is_regular",
    "tridiag_radius",
]
