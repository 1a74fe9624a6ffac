"""Toeplitz truncations, model-space compressions, and spectral reports.

Symbols are trigonometric polynomials given by their finitely supported
Fourier coefficients. Truncations act on the degree-(N-1) polynomial
truncation with entries a_{i-j}; compressions act on a model space through
its orthonormal basis series.
"""

from dataclasses import dataclass

import numpy as np

from .errors import ConditioningError, DomainError, NumericError, ValidationError
from .frames import FrameReport, VectorFamily, frame_bounds
from .modelspace import clark_basis

SUP_NORM_SAMPLES = 2048

# Basis-series tails must sit below this before a compression is trusted.
COMPRESSION_TAIL = 1e-10


class SymbolCoefficients:
    """Finitely supported Fourier coefficients {k: a_k} of a circle symbol."""

    def __init__(self, coeffs):
        clean = {}
        for k, a in dict(coeffs).items():
            k = int(k)
            a = complex(a)
            if a != 0:
                clean[k] = a
        self.coeffs = clean

    def support(self):
        return sorted(self.coeffs)

    def is_analytic(self):
        return all(k >= 0 for k in self.coeffs)

    def conj_flip(self):
        """Coefficients of the complex conjugate symbol, conj(a_{-k}) at k."""
        return SymbolCoefficients({-k: np.conj(a) for k, a in self.coeffs.items()})

    def values_on_circle(self, n_samples=SUP_NORM_SAMPLES):
        t = np.arange(n_samples) * (2.0 * np.pi / n_samples)
        z = np.exp(1j * t)
        vals = np.zeros(n_samples, dtype=np.complex128)
        for k, a in self.coeffs.items():
            vals += a * z**k
        return vals

    def sup_norm_estimate(self, n_samples=SUP_NORM_SAMPLES):
        """(estimate, mesh): dense circle sampling with the angular step used."""
        if not self.coeffs:
            return 0.0, 2.0 * np.pi / n_samples
        vals = self.values_on_circle(n_samples)
        return float(np.max(np.abs(vals))), 2.0 * np.pi / n_samples

    def eval_at(self, z):
        z = complex(z)
        total = 0.0 + 0.0j
        for k, a in sorted(self.coeffs.items()):
            total += a * z**k
        return total

    def __repr__(self):
        return "SymbolCoefficients(%r)" % (self.coeffs,)


@dataclass(frozen=True)
class ToeplitzTruncation:
    N: int
    matrix: np.ndarray


def toeplitz_truncation(phi, N):
    """N x N truncation with entries a_{i-j}; lower triangular for analytic phi."""
    N = int(N)
    if N < 1:
        raise DomainError("truncation size must be at least 1")
    mat = np.zeros((N, N), dtype=np.complex128)
    for k, a in phi.coeffs.items():
        if -N < k < N:
            idx = np.arange(max(0, k), min(N, N + k))
            mat[idx, idx - k] = a
    return ToeplitzTruncation(N=N, matrix=mat)


def model_compression(M, phi):
    """Matrix of f -> P(phi f) in the orthonormal basis of the model space.

    Computed from the basis power series: multiply each series by the symbol,
    keep the analytic part, and take inner products against the basis. For
    phi = z this reproduces the compressed shift; for analytic polynomial
    symbols it is the polynomial applied to that matrix.
    """
    E = M.table
    n, width = E.shape
    trunc = width - 1
    tail = float(np.max(np.abs(E[:, -1]))) if width > 1 else 0.0
    if tail > COMPRESSION_TAIL:
        raise ConditioningError(
            "basis series tail %.3g too large for compression" % tail,
            suggested_degree=2 * trunc,
        )
    # Row k of prod holds the analytic part of phi * e_k; the final matmul
    # matches the compressed-shift construction exactly for phi = z.
    prod = np.zeros((n, width), dtype=np.complex128)
    for kk, a in sorted(phi.coeffs.items()):
        if kk >= 0:
            if kk <= trunc:
                prod[:, kk:] += a * E[:, : width - kk]
        else:
            if -kk <= trunc:
                prod[:, : width + kk] += a * E[:, -kk:]
    return np.ascontiguousarray((prod @ E.conj().T).T)


@dataclass(frozen=True)
class HilbertReport:
    matrix: np.ndarray
    max_eig: float
    below_pi: bool


def hilbert_gramian(N):
    """Gram matrix of the monomials on (0, 1): entries 1/(m+n+1).

    The spectrum sits inside [0, pi]; the top eigenvalue increases with N
    while the bottom one collapses to 0, so no positive lower frame bound
    survives the limit.
    """
    N = int(N)
    if N < 1:
        raise DomainError("size must be at least 1")
    idx = np.arange(N)
    mat = 1.0 / (idx[:, None] + idx[None, :] + 1.0)
    max_eig = float(np.linalg.eigvalsh(mat)[-1])
    return HilbertReport(matrix=mat, max_eig=max_eig, below_pi=bool(max_eig < np.pi))


@dataclass(frozen=True)
class FrameImageReport:
    bounds_before: FrameReport
    bounds_after: FrameReport
    symbol_bound: float
    pinv_bound: float
    symbol_bound_holds: bool


def frame_image_report(F, phi):
    """Frame bounds of {T_phi f_n} with two candidate lower bounds.

    pinv_bound = A sigma_min(T)^2 is guaranteed (a violation raises);
    symbol_bound = A/||phi||_inf^2 is the optimistic estimate obtained by
    replacing ||T^+|| with ||phi||, and the report records whether it holds.
    """
    before = frame_bounds(F)
    T = toeplitz_truncation(phi, F.dim).matrix
    image = VectorFamily(F.vectors @ T.T)
    after = frame_bounds(image)
    svals = np.linalg.svd(T, compute_uv=False)
    sigma_min = float(svals[-1])
    sup, _mesh = phi.sup_norm_estimate()
    symbol_bound = before.lower / sup**2 if sup > 0 else np.inf
    pinv_bound = before.lower * sigma_min**2
    if after.lower < pinv_bound - 1e-9:
        raise NumericError(
            "image lower bound %.6g fell below the guaranteed %.6g"
            % (after.lower, pinv_bound)
        )
    holds = bool(after.lower >= symbol_bound - 1e-9)
    return FrameImageReport(
        bounds_before=before,
        bounds_after=after,
        symbol_bound=symbol_bound,
        pinv_bound=pinv_bound,
        symbol_bound_holds=holds,
    )


@dataclass(frozen=True)
class ClarkConditionReport:
    delta: float
    delta_T: float
    condition_holds: bool
    observed_lower: float


def clark_frame_condition(M, phi, zeta=1.0 + 0.0j):
    """Lower-bound certificate for the conjugate compression on a Clark family.

    delta is the smallest |phi| over the zeros of B. delta_T collects, over
    the orthonormal Clark family at zeta, the squared residuals of the
    conjugate-symbol compression against the diagonal action conj(phi(zero)),
    pairing the k-th family member with the k-th zero. The certificate
    delta > sqrt(delta_T) guarantees observed_lower, the smallest singular
    value of the compression, is at least delta - sqrt(delta_T).
    """
    if not phi.is_analytic():
        raise DomainError("symbol must be analytic (no negative coefficients)")
    zeros = M.B.zeros
    phi_at_zeros = np.array([phi.eval_at(lam) for lam in zeros])
    delta = float(np.min(np.abs(phi_at_zeros)))
    family = clark_basis(M, zeta)
    A_conj = model_compression(M, phi.conj_flip())
    delta_T = 0.0
    for vec, pz in zip(family, phi_at_zeros):
        r = A_conj @ vec.coeffs - np.conj(pz) * vec.coeffs
        delta_T += float(np.sum(np.abs(r) ** 2))
    condition_holds = bool(delta > np.sqrt(delta_T))
    observed = float(np.linalg.svd(A_conj, compute_uv=False)[-1])
    if condition_holds and observed < (delta - np.sqrt(delta_T)) - 1e-8:
        raise NumericError(
            "observed lower bound %.6g below certificate %.6g"
            % (observed, delta - np.sqrt(delta_T))
        )
    return ClarkConditionReport(
        delta=delta,
        delta_T=delta_T,
        condition_holds=condition_holds,
        observed_lower=observed,
    )
