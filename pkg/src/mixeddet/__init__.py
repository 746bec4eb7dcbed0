"""Exact mixed determinants of Hermitian tuples and pencils, real-rootedness
and interlacing predicates, and verifiers for the associated determinantal
inequalities."""

from .matcore import (
    Definiteness,
    GaussianRational,
    HermitianMatrix,
    IndexSet,
    Pencil,
    all_principal_minors,
    definiteness,
    det,
    pencil_eval,
    principal_submatrix,
)
from .polycore import (
    Inertia,
    MultiPoly,
    UniPoly,
    homogenize,
    inertia,
    interlaces,
    is_hyperbolic,
    is_nonneg_on_reals,
    isolate_real_roots,
    normalized_coeff,
    sturm_count,
)
from .mixed import (
    MinorTable,
    charpoly_from_minors,
    minor_vector,
    mixed_det,
    mixed_det_char,
    mixed_det_naive,
    mixed_det_pencil,
    multivariate_char_poly,
)
from .stability import (
    CERTIFIED_STABLE,
    CERTIFIED_UNSTABLE,
    SAMPLED_STABLE,
    StabilityVerdict,
    delta_ij,
    gws_lift,
    hermite_biehler_stable,
    hyperbolic_in_direction,
    line_restriction_test,
    multiaffine_stability_check,
)
from .theorems import (
    VerificationReport,
    charpoly_reference,
    fischer_alpha,
    fischer_k,
    majorizes,
    pinch,
    run_verification,
    verify_cmajor_cgen,
    verify_cor31,
    verify_johnson,
    verify_laguerre_kotel,
    verify_tlog,
)

__version__ = "0.1.0"

__all__ = [
    "CERTIFIED_STABLE",
    "CERTIFIED_UNSTABLE",
    "Definiteness",
    "GaussianRational",
    "HermitianMatrix",
    "IndexSet",
    "Inertia",
    "MinorTable",
    "MultiPoly",
    "Pencil",
    "SAMPLED_STABLE",
    "StabilityVerdict",
    "UniPoly",
    "VerificationReport",
    "all_principal_minors",
    "charpoly_from_minors",
    "charpoly_reference",
    "definiteness",
    "delta_ij",
    "det",
    "fischer_alpha",
    "fischer_k",
    "gws_lift",
    "hermite_biehler_stable",
    "homogenize",
    "hyperbolic_in_direction",
    "inertia",
    "interlaces",
    "is_hyperbolic",
    "is_nonneg_on_reals",
    "isolate_real_roots",
    "line_restriction_test",
    "majorizes",
    "minor_vector",
    "mixed_det",
    "mixed_det_char",
    "mixed_det_naive",
    "mixed_det_pencil",
    "multiaffine_stability_check",
    "multivariate_char_poly",
    "normalized_coeff",
    "pencil_eval",
    "pinch",
    "principal_submatrix",
    "run_verification",
    "sturm_count",
    "verify_cmajor_cgen",
    "verify_cor31",
    "verify_johnson",
    "verify_laguerre_kotel",
    "verify_tlog",
]
