"""Finite frame toolkit: transforms, bounds, duals, Gramian, projections.

Vectors live in C^d; a family is a stack of m rows. The inner product is
<u, v> = sum u_k conj(v_k), matching the coefficient inner product used for
Hardy elements, so model-space families can be fed in directly as
coefficient rows.
"""

from dataclasses import dataclass

import numpy as np

from .config import default_tol
from .errors import NotAFrameError, ValidationError

# Scale-invariant rank threshold: the family is a frame when A > RANK_TOL * B.
RANK_TOL = 1e-10

SVD_CUTOFF = 1e-12


class VectorFamily:
    """A finite family of m vectors in C^d, stored as rows."""

    def __init__(self, vectors, dim=None):
        arr = np.atleast_2d(np.asarray(vectors, dtype=np.complex128))
        if arr.ndim != 2 or arr.shape[0] < 1:
            raise ValidationError("a family needs at least one vector")
        if dim is not None and arr.shape[1] != dim:
            raise ValidationError(
                "vector length %d does not match dim %d" % (arr.shape[1], dim)
            )
        self.vectors = arr.copy()
        self.vectors.setflags(write=False)

    @property
    def count(self):
        return self.vectors.shape[0]

    @property
    def dim(self):
        return self.vectors.shape[1]

    def __iter__(self):
        return iter(self.vectors)

    def __repr__(self):
        return "VectorFamily(m=%d, d=%d)" % (self.count, self.dim)


@dataclass(frozen=True)
class Transforms:
    analysis: np.ndarray
    synthesis: np.ndarray
    frame_op: np.ndarray


def frame_transforms(F):
    """Analysis/synthesis pair and the frame operator of the family.

    Synthesis has the vectors as columns; analysis is its conjugate
    transpose; frame_op = synthesis @ analysis is Hermitian positive
    semidefinite.
    """
    V = F.vectors
    synthesis = V.T.copy()
    analysis = synthesis.conj().T.copy()
    frame_op = synthesis @ analysis
    return Transforms(analysis=analysis, synthesis=synthesis, frame_op=frame_op)


@dataclass(frozen=True)
class FrameReport:
    lower: float
    upper: float
    is_frame: bool
    is_tight: bool
    is_parseval: bool
    is_riesz: bool


def frame_bounds(F, tol=None):
    """Optimal frame bounds as extreme eigenvalues of the frame operator."""
    if tol is None:
        tol = default_tol()
    S = frame_transforms(F).frame_op
    eigs = np.linalg.eigvalsh(S)
    lower = float(max(eigs[0], 0.0))
    upper = float(max(eigs[-1], 0.0))
    is_frame = bool(lower > RANK_TOL * upper)
    is_tight = bool(is_frame and abs(lower - upper) < tol * upper)
    is_parseval = bool(is_tight and abs(lower - 1.0) < tol)
    g = gramian_matrix(F)
    geigs = np.linalg.eigvalsh(g)
    is_riesz = bool(is_frame and geigs[0] > 1e-10)
    return FrameReport(
        lower=lower,
        upper=upper,
        is_frame=is_frame,
        is_tight=is_tight,
        is_parseval=is_parseval,
        is_riesz=is_riesz,
    )


def canonical_dual(F):
    """The family S^{-1} f_n; reconstruction partner of the original."""
    report = frame_bounds(F)
    if not report.is_frame:
        raise NotAFrameError("frame operator is singular; no canonical dual")
    S = frame_transforms(F).frame_op
    dual_rows = np.linalg.solve(S, F.vectors.T).T
    return VectorFamily(dual_rows)


def gramian_matrix(F):
    V = F.vectors
    return V @ V.conj().T


@dataclass(frozen=True)
class GramianReport:
    matrix: np.ndarray
    riesz: bool


def gramian(F):
    """Pairwise inner products G[m, n] = <f_m, f_n> plus the Riesz flag.

    The family is a Riesz basis exactly when it is a frame and G is
    invertible, which forces m = d.
    """
    G = gramian_matrix(F)
    eigs = np.linalg.eigvalsh(G)
    riesz = bool(eigs[0] > 1e-10 and frame_bounds(F).is_frame)
    return GramianReport(matrix=G, riesz=riesz)


def kernel_matrix(F):
    """Matrix K[i, j] = <f_i, S^{-1} f_j> of reproducing coefficients.

    K is the Gram matrix of the Parseval-equivalent family, hence a
    Hermitian idempotent of rank d; it is shared by the family and its
    canonical dual.
    """
    dual = canonical_dual(F)
    return F.vectors @ dual.vectors.conj().T


def pinv(M):
    """Moore-Penrose pseudoinverse via SVD with relative cutoff SVD_CUTOFF."""
    M = np.atleast_2d(np.asarray(M, dtype=np.complex128))
    u, s, vh = np.linalg.svd(M, full_matrices=False)
    if s.shape[0] == 0 or s[0] == 0.0:
        return np.zeros((M.shape[1], M.shape[0]), dtype=np.complex128)
    keep = s > SVD_CUTOFF * s[0]
    inv = np.zeros_like(s)
    inv[keep] = 1.0 / s[keep]
    return (vh.conj().T * inv) @ u.conj().T


@dataclass(frozen=True)
class DouglasReport:
    included: bool
    alpha_min: float
    L: np.ndarray = None


INCLUSION_TOL = 1e-9


def douglas_factor(Smat, Tmat):
    """Range-inclusion test with majorization constant and factorization.

    included: range(S) inside range(T), decided by ||(I - T T^+) S|| below
    INCLUSION_TOL. When included, L = T^+ S satisfies S = T L and alpha_min
    is the smallest alpha with S S* <= alpha T T*, computed as the largest
    Rayleigh quotient of S S* against T T* on range(T). alpha_min is inf
    when not included.
    """
    Smat = np.atleast_2d(np.asarray(Smat, dtype=np.complex128))
    Tmat = np.atleast_2d(np.asarray(Tmat, dtype=np.complex128))
    if Smat.shape[0] != Tmat.shape[0]:
        raise ValidationError(
            "S and T must share their codomain: %d != %d"
            % (Smat.shape[0], Tmat.shape[0])
        )
    Tp = pinv(Tmat)
    proj = Tmat @ Tp
    residual = Smat - proj @ Smat
    included = bool(np.linalg.norm(residual, 2) < INCLUSION_TOL)
    if not included:
        return DouglasReport(included=False, alpha_min=np.inf)
    L = Tp @ Smat
    u, s, _ = np.linalg.svd(Tmat, full_matrices=False)
    keep = s > SVD_CUTOFF * (s[0] if s.shape[0] else 0.0)
    Ur = u[:, keep]
    sr = s[keep]
    if Ur.shape[1] == 0:
        # T = 0 and inclusion passed, so S = 0 as well.
        return DouglasReport(included=True, alpha_min=0.0, L=L)
    core = (Ur.conj().T @ Smat) @ (Ur.conj().T @ Smat).conj().T
    M = core / sr[:, None] / sr[None, :]
    alpha = float(max(np.linalg.eigvalsh(M)[-1], 0.0))
    return DouglasReport(included=True, alpha_min=alpha, L=L)
