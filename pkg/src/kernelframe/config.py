"""Runtime configuration: tolerances and backend selection.

Two environment variables are honored:

``KERNELFRAME_TOL``
    Overrides the default comparison tolerance (default 1e-10).
``KERNELFRAME_BACKEND``
    ``numba`` or ``numpy``. Selects the accelerated kernels or the plain
    NumPy twins. Defaults to ``numba`` when importable.
"""

import os

from .errors import ValidationError

DEFAULT_TOL = 1e-10

# Interiority guard for disk points; keeps 1/(1 - conj(lam)*z) conditioned.
EPS_BOUNDARY = 1e-12


def default_tol():
    """Comparison tolerance, honoring the KERNELFRAME_TOL override."""
    raw = os.environ.get("KERNELFRAME_TOL")
    if raw is None:
        return DEFAULT_TOL
    try:
        value = float(raw)
    except ValueError:
        raise ValidationError("KERNELFRAME_TOL is not a number: %r" % raw)
    if not value > 0:
        raise ValidationError("KERNELFRAME_TOL must be positive, got %g" % value)
    return value


def requested_backend():
    """Backend name requested via KERNELFRAME_BACKEND, or None."""
    raw = os.environ.get("KERNELFRAME_BACKEND")
    if raw is None:
        return None
    name = raw.strip().lower()
    if name not in ("numba", "numpy"):
        raise ValidationError(
            "KERNELFRAME_BACKEND must be 'numba' or 'numpy', got %r" % raw
        )
    return name
