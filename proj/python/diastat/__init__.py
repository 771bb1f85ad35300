"""Diastatic entropy, balanced metrics and weighted Bergman spaces on
bounded complex domains.

The heavy lifting lives in the C++ extension ``diastat._core``; this package
re-exports its public surface.
"""

from ._core import (  # noqa: F401
    BalancedReport,
    BalancedSample,
    ConvergenceReport,
    DiastatError,
    DimensionMismatchError,
    DivergentNormError,
    DomainDescriptor,
    DomainModel,
    EntropyEstimate,
    FactorizationError,
    InvalidParameterError,
    KernelApproximation,
    NoBracketError,
    PointOutsideDomainError,
    RootConstants,
    UnsupportedError,
    VanishingKernelError,
    __version__,
    balanced_threshold,
    bergman_gamma,
    build_space,
    classify_convergence,
    constants_from_root_dims,
    default_sample_points,
    entropy_homogeneous,
    entropy_scaled,
    entropy_symmetric,
    estimate_entropy,
    is_balanced_scale,
    lookup_domain,
    standard_entries,
    symmetric_root_constants,
)
