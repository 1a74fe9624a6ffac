"""Coefficient-space Hardy numerics: inner product, evaluation, Szego kernel.

Analytic functions on the disk enter as truncated power series. The inner
product is the coefficient dot product, so every norm here is a finite sum
and every identity can be checked exactly at the working truncation.
"""

from dataclasses import dataclass

import numpy as np

from .config import EPS_BOUNDARY
from .errors import DomainError, ValidationError


@dataclass(frozen=True)
class DiskPoint:
    """A point strictly inside the open unit disk."""

    value: complex

    def __post_init__(self):
        v = complex(self.value)
        object.__setattr__(self, "value", v)
        if abs(v) >= 1.0 - EPS_BOUNDARY:
            raise DomainError(
                "point with |z| = %.17g is not strictly interior" % abs(v)
            )

    def __complex__(self):
        return self.value


def interior(point):
    """Coerce a DiskPoint or bare complex scalar to a validated complex."""
    if isinstance(point, DiskPoint):
        return point.value
    z = complex(point)
    if abs(z) >= 1.0 - EPS_BOUNDARY:
        raise DomainError("point with |z| = %.17g is not strictly interior" % abs(z))
    return z


class AnalyticPolynomial:
    """Finite power series sum_k a_k z^k stored as a coefficient vector.

    Trailing zero coefficients are trimmed to a canonical form; the zero
    polynomial is kept as the single coefficient 0.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        arr = np.atleast_1d(np.asarray(coeffs, dtype=np.complex128))
        if arr.ndim != 1 or arr.shape[0] == 0:
            raise ValidationError("coefficients must form a nonempty 1-d sequence")
        nz = np.nonzero(arr)[0]
        if nz.shape[0] == 0:
            arr = arr[:1]
        else:
            arr = arr[: nz[-1] + 1]
        self.coeffs = arr.copy()
        self.coeffs.setflags(write=False)

    @property
    def degree(self):
        return self.coeffs.shape[0] - 1

    def norm_sq(self):
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def __call__(self, z):
        # Horner from the top coefficient; stable nested evaluation.
        z = complex(z)
        acc = 0.0 + 0.0j
        for a in self.coeffs[::-1]:
            acc = acc * z + a
        return acc

    def __eq__(self, other):
        if not isinstance(other, AnalyticPolynomial):
            return NotImplemented
        return self.coeffs.shape == other.coeffs.shape and bool(
            np.all(self.coeffs == other.coeffs)
        )

    def __repr__(self):
        return "AnalyticPolynomial(%r)" % (list(self.coeffs),)


def _as_poly(f):
    return f if isinstance(f, AnalyticPolynomial) else AnalyticPolynomial(f)


def h2_inner(f, g):
    """Coefficient inner product sum_k a_k conj(b_k); shorter input zero-padded."""
    a = _as_poly(f).coeffs
    b = _as_poly(g).coeffs
    m = min(a.shape[0], b.shape[0])
    return complex(np.sum(a[:m] * np.conj(b[:m])))


@dataclass(frozen=True)
class EvalBound:
    value: complex
    bound: float
    satisfied: bool


def eval_and_bound(f, lam, tol=1e-10):
    """Evaluate f at an interior point and compare against the norm bound.

    The bound is ||f|| / sqrt(1 - |lam|^2), the operator norm of point
    evaluation, so ``satisfied`` can only fail through roundoff.
    """
    f = _as_poly(f)
    lam = interior(lam)
    value = f(lam)
    bound = float(np.sqrt(f.norm_sq() / (1.0 - abs(lam) ** 2)))
    return EvalBound(value=value, bound=bound, satisfied=bool(abs(value) <= bound + tol))


def szego_kernel(lam, z):
    """Evaluate 1/(1 - conj(lam) z) for two interior points."""
    lam = interior(lam)
    z = interior(z)
    return 1.0 / (1.0 - np.conj(lam) * z)


def szego_series(lam, trunc):
    """Coefficients of the evaluation kernel at lam, truncated at ``trunc``.

    Coefficient k is conj(lam)^k, accumulated by sequential products.
    """
    lam = interior(lam)
    out = np.empty(trunc + 1, dtype=np.complex128)
    acc = 1.0 + 0.0j
    a = np.conj(lam)
    for k in range(trunc + 1):
        out[k] = acc
        acc = acc * a
    return AnalyticPolynomial(out)


def shift(f, direction):
    """Forward shift multiplies by z; backward shift is f -> (f - f(0))/z."""
    f = _as_poly(f)
    if direction == "forward":
        return AnalyticPolynomial(np.concatenate(([0.0 + 0.0j], f.coeffs)))
    if direction == "backward":
        if f.degree == 0:
            return AnalyticPolynomial([0.0])
        return AnalyticPolynomial(f.coeffs[1:])
    raise ValidationError("direction must be 'forward' or 'backward', got %r" % direction)
