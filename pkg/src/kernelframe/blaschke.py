"""Blaschke factors and finite products, disk geometry, sequence diagnostics.

Factor convention: b_lam(z) = (|lam|/lam) (lam - z)/(1 - conj(lam) z) for
lam != 0 and b_0(z) = z, which keeps products continuous in the zero and
b_lam(0) = |lam| real.
"""

from dataclasses import dataclass, field

import numpy as np

from . import _accel
from .errors import DomainError, NumericError, ValidationError
from .hardy import interior

POLE_GUARD = 1e-14

# A factor is treated as vanishing at z when its numerator does; used by the
# derivative to switch away from logarithmic differentiation.
FACTOR_ZERO_TOL = 1e-14


def blaschke_factor(lam, z):
    """Single factor b_lam(z); lam interior, z anywhere off the pole."""
    lam = interior(lam)
    z = complex(z)
    if lam == 0:
        return z
    den = 1.0 - np.conj(lam) * z
    if abs(den) < POLE_GUARD:
        raise NumericError("evaluation point within %g of a pole" % POLE_GUARD)
    return (abs(lam) / lam) * (lam - z) / den


def _factor_derivative(lam, z):
    # d/dz of b_lam; for lam = 0 the factor is z itself.
    if lam == 0:
        return 1.0 + 0.0j
    den = 1.0 - np.conj(lam) * z
    return (abs(lam) / lam) * (abs(lam) ** 2 - 1.0) / (den * den)


@dataclass(frozen=True)
class FiniteBlaschkeProduct:
    """front * prod_j b_{zeros[j]}, all zeros strictly interior, |front| = 1."""

    zeros: tuple
    front: complex = 1.0 + 0.0j

    def __post_init__(self):
        zs = tuple(interior(z) for z in self.zeros)
        object.__setattr__(self, "zeros", zs)
        front = complex(self.front)
        if abs(abs(front) - 1.0) > 1e-10:
            raise DomainError("front constant must be unimodular, |front| = %.17g" % abs(front))
        object.__setattr__(self, "front", front)

    @property
    def degree(self):
        return len(self.zeros)

    def __call__(self, z):
        return eval_product(self, z).value

    def values(self, zs):
        """Vectorized evaluation over an array of points (no pole check)."""
        return _accel.blaschke_values(
            np.asarray(self.zeros, dtype=np.complex128), self.front, np.asarray(zs)
        )


@dataclass(frozen=True)
class BlaschkeEval:
    value: complex
    derivative: complex = None


def eval_product(B, z, with_derivative=False):
    """Evaluate the product (and optionally its derivative) at one point.

    The derivative uses logarithmic differentiation, value * sum b'_j/b_j,
    except at a zero of the product where that form is 0/0: with exactly one
    vanishing factor the product rule collapses to (product of the others)
    times that factor's derivative, and with a repeated zero at z the
    derivative vanishes.
    """
    z = complex(z)
    factors = np.empty(B.degree, dtype=np.complex128)
    for j, lam in enumerate(B.zeros):
        factors[j] = blaschke_factor(lam, z)
    value = B.front * complex(np.prod(factors)) if B.degree else B.front
    if not with_derivative:
        return BlaschkeEval(value=value)

    vanishing = [j for j in range(B.degree) if abs(factors[j]) < FACTOR_ZERO_TOL]
    if len(vanishing) >= 2:
        deriv = 0.0 + 0.0j
    elif len(vanishing) == 1:
        j0 = vanishing[0]
        rest = B.front
        for j in range(B.degree):
            if j != j0:
                rest = rest * factors[j]
        deriv = rest * _factor_derivative(B.zeros[j0], z)
    else:
        logsum = 0.0 + 0.0j
        for j, lam in enumerate(B.zeros):
            logsum += _factor_derivative(lam, z) / factors[j]
        deriv = value * logsum
    return BlaschkeEval(value=value, derivative=complex(deriv))


def pseudohyperbolic(lam, mu):
    """Mobius-invariant distance |(mu - lam)/(1 - conj(mu) lam)| in [0, 1)."""
    lam = interior(lam)
    mu = interior(mu)
    return float(abs((mu - lam) / (1.0 - np.conj(mu) * lam)))


@dataclass(frozen=True)
class DiskSequence:
    """A finite truncation of a point sequence in the disk."""

    points: tuple
    label: str = ""

    def __post_init__(self):
        pts = tuple(interior(p) for p in self.points)
        if not pts:
            raise ValidationError("sequence must contain at least one point")
        object.__setattr__(self, "points", pts)

    def __len__(self):
        return len(self.points)


@dataclass(frozen=True)
class SequenceReport:
    blaschke_partial: float
    inverse_gap_partial: float
    bessel_bound: float
    sup_theta: float


def sequence_diagnostics(seq, theta):
    """Partial sums governing summability and Bessel bounds for the sequence.

    blaschke_partial = sum (1 - |lam|), inverse_gap_partial = sum 1/(1-|lam|^2),
    bessel_bound = sum (1 - |theta(lam)|^2)/(1 - |lam|^2), sup_theta the largest
    |theta(lam)|. When the sequence is the zero set of theta the Bessel sum
    collapses onto the inverse-gap sum.
    """
    pts = np.asarray(seq.points, dtype=np.complex128)
    mods = np.abs(pts)
    tvals = np.abs(theta.values(pts))
    return SequenceReport(
        blaschke_partial=float(np.sum(1.0 - mods)),
        inverse_gap_partial=float(np.sum(1.0 / (1.0 - mods**2))),
        bessel_bound=float(np.sum((1.0 - tvals**2) / (1.0 - mods**2))),
        sup_theta=float(np.max(tvals)),
    )


@dataclass(frozen=True)
class PerturbationReport:
    holds: bool
    alpha: float
    per_index_ok: tuple = field(default=())


def perturbation_transfer(lam_seq, mu_seq, eps, tol=1e-10):
    """Check the inverse-gap transfer inequality between nearby sequences.

    With alpha = (1+eps)/(1-eps), each index must satisfy

        1/(1 - |mu_n|^2) <= 2 alpha / (1 - |lam_n|^2) + tol,

    valid whenever the pseudohyperbolic distance between mates stays below
    eps. The distance precondition is checked per index and folded into
    ``per_index_ok`` rather than raised, so a single stray pair is visible
    in the report.
    """
    if len(lam_seq) != len(mu_seq):
        raise ValidationError(
            "sequence lengths differ: %d != %d" % (len(lam_seq), len(mu_seq))
        )
    if not (0.0 < eps < 1.0):
        raise DomainError("eps must lie in (0, 1), got %g" % eps)
    alpha = (1.0 + eps) / (1.0 - eps)
    oks = []
    for lam, mu in zip(lam_seq.points, mu_seq.points):
        close = pseudohyperbolic(lam, mu) < eps
        lhs = 1.0 / (1.0 - abs(mu) ** 2)
        rhs = 2.0 * alpha / (1.0 - abs(lam) ** 2)
        oks.append(bool(close and lhs <= rhs + tol))
    return PerturbationReport(holds=all(oks), alpha=alpha, per_index_ok=tuple(oks))
