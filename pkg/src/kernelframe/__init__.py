"""Numerics for finite Blaschke products, model spaces, frames, and
their reproducing kernels, with truncated Toeplitz operators on top.

The package favors plain numpy arrays at module boundaries; the few hot
series kernels run through numba when available (KERNELFRAME_BACKEND
selects, see kernelframe._accel).
"""

__version__ = "0.1.0"

from .errors import (
    ConditioningError,
    DegenerateRootError,
    DomainError,
    KernelFrameError,
    NotAFrameError,
    NumericError,
    RootFindingError,
    SerializationError,
    ValidationError,
)
from .hardy import (
    AnalyticPolynomial,
    DiskPoint,
    eval_and_bound,
    h2_inner,
    shift,
    szego_kernel,
    szego_series,
)
from .blaschke import (
    DiskSequence,
    FiniteBlaschkeProduct,
    blaschke_factor,
    eval_product,
    perturbation_transfer,
    pseudohyperbolic,
    sequence_diagnostics,
)
from .modelspace import (
    ClarkFamily,
    ModelSpace,
    ModelVector,
    clark_basis,
    compressed_shift,
    kernel_norm_sq,
    kernel_vector,
    project,
    shift_orbit_parseval,
    tm_basis,
)
from .frames import (
    VectorFamily,
    canonical_dual,
    douglas_factor,
    frame_bounds,
    frame_transforms,
    gramian,
    gramian_matrix,
    kernel_matrix,
    pinv,
)
from .rkhs import (
    brownian_bridge_evaluator,
    gram_evaluator,
    model_evaluator,
    named_kernel_eval,
    psd_check,
    pullback_kernel,
    representer_solve,
    sinc_evaluator,
    span_kernel,
    span_kernel_from_vectors,
    szego_evaluator,
)
from .toeplitz import (
    SymbolCoefficients,
    clark_frame_condition,
    frame_image_report,
    hilbert_gramian,
    model_compression,
    toeplitz_truncation,
)

__all__ = [
    "__version__",
    "KernelFrameError",
    "DomainError",
    "ValidationError",
    "NumericError",
    "ConditioningError",
    "NotAFrameError",
    "RootFindingError",
    "DegenerateRootError",
    "SerializationError",
    "AnalyticPolynomial",
    "DiskPoint",
    "h2_inner",
    "eval_and_bound",
    "szego_kernel",
    "szego_series",
    "shift",
    "FiniteBlaschkeProduct",
    "DiskSequence",
    "blaschke_factor",
    "eval_product",
    "pseudohyperbolic",
    "sequence_diagnostics",
    "perturbation_transfer",
    "ModelSpace",
    "ModelVector",
    "ClarkFamily",
    "tm_basis",
    "kernel_vector",
    "kernel_norm_sq",
    "project",
    "compressed_shift",
    "shift_orbit_parseval",
    "clark_basis",
    "VectorFamily",
    "frame_transforms",
    "frame_bounds",
    "canonical_dual",
    "gramian",
    "gramian_matrix",
    "kernel_matrix",
    "pinv",
    "douglas_factor",
    "szego_evaluator",
    "model_evaluator",
    "span_kernel",
    "span_kernel_from_vectors",
    "brownian_bridge_evaluator",
    "sinc_evaluator",
    "gram_evaluator",
    "pullback_kernel",
    "named_kernel_eval",
    "psd_check",
    "representer_solve",
    "SymbolCoefficients",
    "toeplitz_truncation",
    "model_compression",
    "hilbert_gramian",
    "frame_image_report",
    "clark_frame_condition",
]
