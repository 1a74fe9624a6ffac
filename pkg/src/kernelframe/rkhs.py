"""Reproducing-kernel constructions and checks.

Every evaluator here is a Hermitian bivariate function: K(y, z) is analytic
in the second argument and conjugate-analytic in the first, matching the
convention K(y, z) = <element attached to y, evaluated at z>. Sampled kernel
matrices are positive semidefinite up to roundoff.
"""

from dataclasses import dataclass

import numpy as np

from . import _accel
from .blaschke import eval_product
from .errors import DomainError, SerializationError, ValidationError
from .frames import pinv
from .hardy import interior, szego_kernel
from .modelspace import kernel_vector


class KernelEvaluator:
    """A named bivariate kernel with its domain tag.

    ``kind`` is one of szego, model, span, brownian_bridge, sinc, gram,
    pullback; ``domain`` one of disk, unit_interval, real, vectors.
    Callable as K(y, z).
    """

    def __init__(self, kind, domain, fn, params=None):
        self.kind = kind
        self.domain = domain
        self._fn = fn
        self.params = dict(params or {})

    def __call__(self, y, z):
        return self._fn(y, z)

    def spec(self):
        """JSON-ready {kind, params} description, when one exists."""
        if self.kind == "pullback":
            raise SerializationError("pullback evaluators carry an opaque map")
        return {"kind": self.kind, "params": self.params}

    def __repr__(self):
        return "KernelEvaluator(kind=%r, domain=%r)" % (self.kind, self.domain)


def szego_evaluator():
    return KernelEvaluator("szego", "disk", lambda y, z: szego_kernel(y, z))


def model_evaluator(B):
    """Closed-form kernel (1 - conj(B(y)) B(z))/(1 - conj(y) z) on the disk."""

    def fn(y, z):
        y = interior(y)
        z = interior(z)
        by = eval_product(B, y).value
        bz = eval_product(B, z).value
        return (1.0 - np.conj(by) * bz) / (1.0 - np.conj(y) * z)

    from .serialize import blaschke_to_dict

    return KernelEvaluator("model", "disk", fn, {"blaschke": blaschke_to_dict(B)})


class SpanKernel(KernelEvaluator):
    """Kernel of the span of a family of model-space kernel vectors.

    Built as K(y, z) = sum_n conj(d_n(y)) k_n(z) with {d_n} the dual of the
    kernel family inside its span. Equivalently K(y, z) is the matrix element
    conj(e(y)) . C . e(z) with C = Dual^H V the span projector pulled back to
    basis coordinates; for a spanning family this reduces to the closed-form
    model kernel.
    """

    def __init__(self, M, rows, points=None):
        self.space = M
        self.family_rows = np.atleast_2d(np.asarray(rows, dtype=np.complex128))
        if self.family_rows.shape[1] != M.dim:
            raise ValidationError("family rows must have length dim")
        V = self.family_rows
        S = V.T @ V.conj()
        Sp = pinv(S)
        self.dual_rows = (Sp @ V.T).T
        self._C = self.dual_rows.conj().T @ V
        self.points = tuple(points) if points is not None else None

        def fn(y, z):
            ey = M.basis_values(interior(y))
            ez = M.basis_values(interior(z))
            return complex(np.conj(ey) @ self._C @ ez)

        params = {}
        if self.points is not None:
            params["points"] = [[p.real, p.imag] for p in self.points]
        super().__init__("span", "disk", fn, params)

    def element_at(self, z):
        """Coordinates of the reproducing element attached to z."""
        dz = self.dual_rows @ self.space.basis_values(interior(z))
        return np.conj(dz) @ self.family_rows


def span_kernel(M, points):
    """Span kernel of the kernel vectors at the given interior points."""
    pts = [interior(p) for p in points]
    if not pts:
        raise ValidationError("at least one point is required")
    rows = np.array([kernel_vector(M, p).coeffs for p in pts])
    return SpanKernel(M, rows, points=pts)


def span_kernel_from_vectors(M, rows):
    """Span kernel of an arbitrary coefficient family in the model space."""
    return SpanKernel(M, rows)


def brownian_bridge_evaluator(n_terms):
    n_terms = int(n_terms)
    if n_terms < 1:
        raise DomainError("series truncation must be at least 1")

    def fn(y, z):
        y = float(y)
        z = float(z)
        if not (0.0 <= y <= 1.0 and 0.0 <= z <= 1.0):
            raise DomainError("arguments must lie in [0, 1]")
        return _accel.brownian_sum(y, z, n_terms)

    return KernelEvaluator("brownian_bridge", "unit_interval", fn, {"N": n_terms})


def sinc_evaluator(rate):
    rate = float(rate)
    if not rate > 0:
        raise DomainError("rate must be positive")

    def fn(y, z):
        dt = float(y) - float(z)
        if dt == 0.0:
            return 1.0
        return float(np.sin(rate * dt) / (rate * dt))

    return KernelEvaluator("sinc", "real", fn, {"R": rate})


def gram_evaluator(points=None):
    """Inner-product kernel K(u, v) = <u, v> on vectors.

    Arguments may be raw vectors or, when ``points`` is supplied, integer
    indices into that list.
    """
    stored = None
    if points is not None:
        stored = [np.asarray(p, dtype=np.complex128) for p in points]

    def resolve(x):
        if stored is not None and isinstance(x, (int, np.integer)):
            return stored[int(x)]
        return np.asarray(x, dtype=np.complex128)

    def fn(y, z):
        u = resolve(y)
        v = resolve(z)
        return complex(np.sum(u * np.conj(v)))

    params = {}
    if stored is not None:
        params["points"] = [[[c.real, c.imag] for c in p] for p in stored]
    return KernelEvaluator("gram", "vectors", fn, params)


def pullback_kernel(K, point_map):
    """Compose a kernel with a point map: K'(x1, x2) = K(map x1, map x2)."""

    def fn(y, z):
        return K(point_map(y), point_map(z))

    return KernelEvaluator("pullback", K.domain, fn, {"inner": K.kind})


_NAMED = {
    "szego": lambda params: szego_evaluator(),
    "brownian_bridge": lambda params: brownian_bridge_evaluator(params["N"]),
    "sinc": lambda params: sinc_evaluator(params["R"]),
}


def named_kernel_eval(kind, params, y, z):
    """One-shot evaluation of a named closed-form kernel."""
    if kind not in _NAMED:
        raise ValidationError("unknown named kernel %r" % kind)
    return _NAMED[kind](dict(params or {}))(y, z)


@dataclass(frozen=True)
class PsdReport:
    psd: bool
    min_eig: float
    max_asymmetry: float


def psd_check(K, sample):
    """Sampled positivity check for a kernel evaluator.

    The sampled matrix is split into Hermitian part and skew remainder; the
    verdict requires both a negligible skew part (a genuinely non-Hermitian
    "kernel" is not positive) and eigenvalues of the Hermitian part above
    -1e-9 relative to the largest one.
    """
    sample = list(sample)
    if not sample:
        raise ValidationError("sample must be nonempty")
    m = len(sample)
    mat = np.empty((m, m), dtype=np.complex128)
    for i, y in enumerate(sample):
        for j, z in enumerate(sample):
            mat[i, j] = K(y, z)
    herm = (mat + mat.conj().T) / 2.0
    max_asym = float(np.max(np.abs(mat - mat.conj().T)) / 2.0)
    eigs = np.linalg.eigvalsh(herm)
    min_eig = float(eigs[0])
    max_eig = float(eigs[-1])
    scale = max(1.0, max_eig, float(np.max(np.abs(mat))))
    hermitian_ok = max_asym <= 1e-8 * scale
    psd = bool(hermitian_ok and min_eig > -1e-9 * max(1.0, max_eig))
    return PsdReport(psd=psd, min_eig=min_eig, max_asymmetry=max_asym)


@dataclass(frozen=True)
class RepresenterSolution:
    weights: np.ndarray
    w: np.ndarray
    residual: float


def representer_solve(points, targets):
    """Minimum-norm interpolation weights in the span of the data points.

    Q is the Gram matrix <x_i, x_j>, weights = pinv(Q) targets, and
    w = sum_i weights_i x_i. The residual compares Q weights against the
    orthogonal projection of the targets onto range(Q), so consistent
    problems report roundoff-level values even when Q is singular.
    """
    X = np.atleast_2d(np.asarray(points, dtype=np.complex128))
    y = np.asarray(targets, dtype=np.complex128)
    if y.shape != (X.shape[0],):
        raise ValidationError(
            "target length %d does not match %d points" % (y.shape[0], X.shape[0])
        )
    Q = X @ X.conj().T
    weights = pinv(Q) @ y
    w = weights @ X
    # Range projector built independently from the SVD of Q.
    u, s, _ = np.linalg.svd(Q)
    keep = s > 1e-12 * s[0] if s.shape[0] and s[0] > 0 else np.zeros_like(s, dtype=bool)
    Ur = u[:, keep]
    projected = Ur @ (Ur.conj().T @ y)
    residual = float(np.linalg.norm(Q @ weights - projected))
    return RepresenterSolution(weights=weights, w=w, residual=residual)
