"""Finite-dimensional model space attached to a finite Blaschke product.

Internally everything lives in the orthonormal rational basis

    e_k(z) = sqrt(1-|lam_k|^2)/(1 - conj(lam_k) z) * prod_{j<k} b_{lam_j}(z),

so norms are coefficient norms, frame bounds become eigenvalue problems, and
the compressed shift is an explicit dim x dim matrix. Each basis element is
kept both as a rational evaluator and as a truncated power series.
"""

from dataclasses import dataclass

import numpy as np

from . import _accel
from .blaschke import FiniteBlaschkeProduct, eval_product
from .errors import (
    ConditioningError,
    DegenerateRootError,
    DomainError,
    NumericError,
    RootFindingError,
    ValidationError,
)
from .hardy import AnalyticPolynomial, interior

GRAM_TOL = 1e-8

# Series tails are pushed below this before Gram checks.
SERIES_TAIL = 1e-14


def auto_trunc_degree(n, rho):
    """Working truncation that pushes basis-series tails below SERIES_TAIL."""
    base = 4 * n
    if rho < 0.05:
        return base
    extra = int(np.ceil(np.log(SERIES_TAIL) / np.log(rho))) + 2 * n
    return max(base, extra)


class ModelSpace:
    """Orthonormal coordinates for the rational invariant subspace of B.

    Attributes
    ----------
    B : FiniteBlaschkeProduct
    dim : int, the number of zeros of B.
    trunc_degree : int, working truncation of all power series.
    table : (dim, trunc_degree+1) array, row k the series of e_k.
    """

    def __init__(self, B, trunc_degree, table):
        self.B = B
        self.dim = B.degree
        self.trunc_degree = trunc_degree
        self.table = table
        self.table.setflags(write=False)

    def basis_values(self, z):
        """Exact rational evaluation of all e_k at one point of the closed disk.

        Prefix products are accumulated left to right, one factor per step,
        so evaluations at the same point are bit-for-bit reproducible.
        """
        z = complex(z)
        out = np.empty(self.dim, dtype=np.complex128)
        prefix = 1.0 + 0.0j
        for k, lam in enumerate(self.B.zeros):
            if lam == 0:
                out[k] = prefix
                prefix = prefix * z
            else:
                den = 1.0 - np.conj(lam) * z
                out[k] = np.sqrt(1.0 - abs(lam) ** 2) / den * prefix
                prefix = prefix * (abs(lam) / lam) * (lam - z) / den
        return out

    def compatible(self, v):
        return (
            isinstance(v, ModelVector)
            and v.space.B == self.B
            and v.space.trunc_degree == self.trunc_degree
        )

    def __repr__(self):
        return "ModelSpace(dim=%d, trunc=%d)" % (self.dim, self.trunc_degree)


@dataclass(frozen=True, eq=False)
class ModelVector:
    """Coordinates of an element in the orthonormal basis of its space."""

    coeffs: np.ndarray
    space: ModelSpace

    def __post_init__(self):
        arr = np.asarray(self.coeffs, dtype=np.complex128)
        if arr.shape != (self.space.dim,):
            raise ValidationError(
                "coefficient length %d does not match space dimension %d"
                % (arr.shape[0] if arr.ndim == 1 else -1, self.space.dim)
            )
        arr = arr.copy()
        arr.setflags(write=False)
        object.__setattr__(self, "coeffs", arr)

    def norm_sq(self):
        return float(np.sum(np.abs(self.coeffs) ** 2))

    def evaluate(self, z):
        return complex(np.sum(self.coeffs * self.space.basis_values(z)))


def tm_basis(B, trunc_degree=None):
    """Build the model space of B at a given or automatic truncation.

    The truncation must be at least 4 * dim; the automatic choice also grows
    with max|zero| so the dropped series tails stay below SERIES_TAIL. A Gram
    deviation above GRAM_TOL raises ConditioningError carrying the suggested
    degree.
    """
    if not isinstance(B, FiniteBlaschkeProduct):
        B = FiniteBlaschkeProduct(tuple(B))
    n = B.degree
    if n < 1:
        raise DomainError("a product with no zeros has a trivial model space")
    rho = max(abs(z) for z in B.zeros)
    suggested = auto_trunc_degree(n, rho)
    if trunc_degree is None:
        trunc_degree = suggested
    trunc_degree = int(trunc_degree)
    if trunc_degree < 4 * n:
        raise ConditioningError(
            "truncation %d below the minimum %d" % (trunc_degree, 4 * n),
            suggested_degree=suggested,
        )
    table = _accel.tm_table(np.asarray(B.zeros, dtype=np.complex128), trunc_degree)
    gram = table @ table.conj().T
    dev = float(np.max(np.abs(gram - np.eye(n))))
    if dev > GRAM_TOL:
        raise ConditioningError(
            "basis Gram deviation %.3g at truncation %d" % (dev, trunc_degree),
            suggested_degree=max(suggested, 2 * trunc_degree),
        )
    return ModelSpace(B, trunc_degree, table)


def kernel_vector(M, lam):
    """Coordinates of the reproducing element at an interior point.

    Coefficient k is conj(e_k(lam)), so <v, kernel_vector(lam)> recovers the
    value of v at lam.
    """
    lam = interior(lam)
    return ModelVector(np.conj(M.basis_values(lam)), M)


def kernel_norm_sq(M, lam):
    """(1 - |B(lam)|^2)/(1 - |lam|^2), the squared norm of the kernel at lam."""
    lam = interior(lam)
    val = eval_product(M.B, lam).value
    return float((1.0 - abs(val) ** 2) / (1.0 - abs(lam) ** 2))


def project(f, M):
    """Orthogonal projection of a polynomial onto the model space."""
    if not isinstance(f, AnalyticPolynomial):
        f = AnalyticPolynomial(f)
    if f.degree > M.trunc_degree:
        raise ConditioningError(
            "polynomial degree %d exceeds working truncation %d"
            % (f.degree, M.trunc_degree),
            suggested_degree=f.degree,
        )
    a = f.coeffs
    coeffs = M.table[:, : a.shape[0]].conj() @ a
    return ModelVector(coeffs, M)


def compressed_shift(M):
    """Matrix of f -> P(z f) in the orthonormal basis.

    Its eigenvalues are the zeros of B; the adjoint fixes the kernel vectors
    at the zeros as eigenvectors.
    """
    E = M.table
    shifted = np.zeros_like(E)
    shifted[:, 1:] = E[:, :-1]
    return np.ascontiguousarray((shifted @ E.conj().T).T)


@dataclass(frozen=True)
class OrbitReport:
    partial: float
    defect: float
    tail_bound: float
    inconclusive: bool = False


# Power-norm search for the orbit tail: smallest m with ||adjoint^m|| at or
# below this contraction level. 0.5 keeps the geometric-series factor small.
ORBIT_CONTRACTION = 0.5
ORBIT_POWER_CAP = 2000


def shift_orbit_parseval(M, g, N, tol=1e-9):
    """Truncated Parseval sum of the backward-shift orbit of B against g.

    The orbit elements are the projections of the backward shifts of B,
    generated as powers of the adjoint compressed shift applied to the first
    one. Returns the partial sum over k = 1..N, the Parseval defect
    | ||g||^2 - partial |, and a rigorous geometric tail bound from operator
    power norms. When the tail bound cannot certify anything (it exceeds
    ||g||^2) the report is flagged inconclusive; otherwise a defect above
    tail_bound + tol raises NumericError.
    """
    if not M.compatible(g):
        raise ValidationError("vector does not belong to this model space")
    if N < 1:
        raise DomainError("orbit length must be at least 1, got %d" % N)
    trunc = M.trunc_degree
    theta = _accel.product_series(
        np.asarray(M.B.zeros, dtype=np.complex128), M.B.front, trunc
    )
    # First orbit element: drop the constant term and shift down, then project.
    st = theta[1:]
    u = M.table[:, : st.shape[0]].conj() @ st
    A = compressed_shift(M)
    AH = A.conj().T

    gv = g.coeffs
    gnorm_sq = float(np.sum(np.abs(gv) ** 2))
    partial = 0.0
    v = u.copy()
    for _ in range(N):
        ip = complex(np.vdot(v, gv))
        partial += abs(ip) ** 2
        v = AH @ v
    defect = abs(gnorm_sq - partial)

    # v now holds adjoint^N applied to u. Find a contraction exponent m with
    # ||adjoint^m|| <= ORBIT_CONTRACTION, falling back to any power norm < 1.
    power = np.eye(M.dim, dtype=np.complex128)
    m = 0
    q = np.inf
    best_m, best_q = None, np.inf
    while m < ORBIT_POWER_CAP:
        m += 1
        power = power @ AH
        q = float(np.linalg.norm(power, 2))
        if q < best_q:
            best_m, best_q = m, q
        if q <= ORBIT_CONTRACTION:
            break
    if best_q >= 1.0:
        return OrbitReport(partial=partial, defect=defect, tail_bound=np.inf,
                           inconclusive=True)
    if q > ORBIT_CONTRACTION:
        m, q = best_m, best_q

    wsum = 0.0
    w = v.copy()
    for _ in range(m):
        wsum += float(np.sum(np.abs(w) ** 2))
        w = AH @ w
    tail_bound = gnorm_sq * wsum / (1.0 - q * q)
    inconclusive = bool(tail_bound > gnorm_sq)
    if not inconclusive and defect > tail_bound + tol:
        raise NumericError(
            "Parseval defect %.3g exceeds tail bound %.3g + %.1g"
            % (defect, tail_bound, tol)
        )
    return OrbitReport(partial=partial, defect=defect, tail_bound=tail_bound,
                       inconclusive=inconclusive)


class ClarkFamily:
    """Orthonormal family of normalized boundary kernels, with its metadata.

    Behaves as a sequence of ModelVector. ``boundary_points`` holds the
    circle solutions in increasing phase order. The normalization phase
    follows the construction calibrated for products vanishing at the
    origin; ``origin_zero`` records whether this product actually does.
    """

    def __init__(self, vectors, boundary_points, zeta, origin_zero):
        self.vectors = tuple(vectors)
        self.boundary_points = tuple(boundary_points)
        self.zeta = zeta
        self.origin_zero = origin_zero

    def __len__(self):
        return len(self.vectors)

    def __getitem__(self, i):
        return self.vectors[i]

    def __iter__(self):
        return iter(self.vectors)

    def coefficient_matrix(self):
        return np.array([v.coeffs for v in self.vectors])


CIRCLE_TOL = 1e-8
NEWTON_RESIDUAL = 1e-12


def _fraction_coefficients(B):
    # Ascending numerator/denominator coefficients of B as p/q in lowest terms.
    p = np.array([B.front], dtype=np.complex128)
    q = np.array([1.0 + 0.0j])
    for lam in B.zeros:
        if lam == 0:
            p = np.convolve(p, np.array([0.0, 1.0 + 0.0j]))
        else:
            scale = abs(lam) / lam
            p = np.convolve(p, scale * np.array([lam, -1.0 + 0.0j]))
            q = np.convolve(q, np.array([1.0 + 0.0j, -np.conj(lam)]))
    return p, q


def _polyval_ascending(c, x):
    acc = 0.0 + 0.0j
    for a in c[::-1]:
        acc = acc * x + a
    return acc


def clark_basis(M, zeta):
    """Orthonormal basis of boundary kernels at the level set B = zeta.

    Solves p(xi) = zeta q(xi) on the unit circle (B = p/q coprime), polishes
    each root by Newton iteration, and normalizes the boundary kernels by
    1/sqrt(|B'(xi)|) with a half-angle phase. Roots are returned sorted by
    phase angle.
    """
    zeta = complex(zeta)
    if abs(abs(zeta) - 1.0) > 1e-12:
        raise DomainError("zeta must be unimodular, |zeta| = %.17g" % abs(zeta))
    B = M.B
    p, q = _fraction_coefficients(B)
    n = B.degree
    width = max(p.shape[0], q.shape[0])
    poly = np.zeros(width, dtype=np.complex128)
    poly[: p.shape[0]] += p
    poly[: q.shape[0]] -= zeta * q
    roots = np.roots(poly[::-1])
    if roots.shape[0] != n:
        raise RootFindingError(
            "expected %d boundary solutions, found %d" % (n, roots.shape[0])
        )
    dp = np.arange(1, p.shape[0]) * p[1:]
    dq = np.arange(1, q.shape[0]) * q[1:]

    polished = []
    for r in roots:
        xi = complex(r)
        for _ in range(50):
            res = _polyval_ascending(p, xi) - zeta * _polyval_ascending(q, xi)
            if abs(res) < NEWTON_RESIDUAL:
                break
            slope = _polyval_ascending(dp, xi) - zeta * _polyval_ascending(dq, xi)
            if slope == 0:
                raise RootFindingError("Newton slope vanished at %r" % xi)
            xi = xi - res / slope
        else:
            raise RootFindingError("root polish did not converge from %r" % r)
        if abs(abs(xi) - 1.0) > CIRCLE_TOL:
            raise RootFindingError(
                "solution modulus %.12g is off the circle" % abs(xi)
            )
        polished.append(xi / abs(xi))
    polished.sort(key=np.angle)

    vectors = []
    for xi in polished:
        ev = eval_product(B, xi, with_derivative=True)
        bp = abs(ev.derivative)
        if bp < 1e-10:
            raise DegenerateRootError("derivative vanishes at boundary root %r" % xi)
        phase = np.exp(0.5j * (np.angle(zeta) - np.angle(xi)))
        coeffs = phase / np.sqrt(bp) * np.conj(M.basis_values(xi))
        vectors.append(ModelVector(coeffs, M))
    origin_zero = any(z == 0 for z in B.zeros)
    return ClarkFamily(vectors, polished, zeta, origin_zero)
