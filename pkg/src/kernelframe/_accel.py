"""Hot numerical kernels with a numba fast path and NumPy fallbacks.

Every public function here dispatches to one of two implementations:

* ``numba``: ``@njit(cache=True)`` compiled loops, the default when numba
  imports cleanly;
* ``numpy``: plain NumPy/Python twins with identical semantics.

Selection is made once at import time from ``KERNELFRAME_BACKEND``
(``numba`` | ``numpy``). ``active_backend()`` reports the choice. The twins
are required to agree to roundoff; the test suite checks this and
``benchmarks/bench_backends.py`` times both.
"""

import numpy as np

from . import config
from .errors import ValidationError

try:
    from numba import njit

    HAS_NUMBA = True
except ImportError:
    HAS_NUMBA = False


def _blaschke_values_py(zeros, front, zs):
    """Evaluate front * prod_j b_{zeros[j]} at each point of zs.

    Factor convention: b_lam(z) = (|lam|/lam) (lam - z)/(1 - conj(lam) z),
    and b_0(z) = z. Sequential product order matches the zero list.
    """
    out = np.empty(zs.shape[0], dtype=np.complex128)
    for i in range(zs.shape[0]):
        z = zs[i]
        v = front
        for j in range(zeros.shape[0]):
            lam = zeros[j]
            if lam == 0:
                v = v * z
            else:
                v = v * (abs(lam) / lam) * (lam - z) / (1.0 - np.conj(lam) * z)
        out[i] = v
    return out


def _tm_table_py(zeros, trunc):
    """Power-series table of the orthonormal rational basis for the zero list.

    Row k holds the Maclaurin coefficients (degree 0..trunc) of

        e_k(z) = sqrt(1-|lam_k|^2)/(1 - conj(lam_k) z) * prod_{j<k} b_{lam_j}(z).

    Division by (1 - a z) is the recurrence c[m] += a*c[m-1]; multiplication
    by (lam - z) is c'[m] = lam*c[m] - c[m-1]; b_0 contributes a coefficient
    shift. All three are exact given exact inputs, so the only truncation
    error is the dropped tail, of size O(max|lam|^trunc).
    """
    n = zeros.shape[0]
    table = np.zeros((n, trunc + 1), dtype=np.complex128)
    for k in range(n):
        c = np.zeros(trunc + 1, dtype=np.complex128)
        lam_k = zeros[k]
        c[0] = np.sqrt(1.0 - (lam_k.real**2 + lam_k.imag**2))
        a = np.conj(lam_k)
        for m in range(1, trunc + 1):
            c[m] = c[m] + a * c[m - 1]
        for j in range(k):
            lam = zeros[j]
            if lam == 0:
                for m in range(trunc, 0, -1):
                    c[m] = c[m - 1]
                c[0] = 0.0
            else:
                cn = np.empty(trunc + 1, dtype=np.complex128)
                cn[0] = lam * c[0]
                for m in range(1, trunc + 1):
                    cn[m] = lam * c[m] - c[m - 1]
                scale = abs(lam) / lam
                for m in range(trunc + 1):
                    cn[m] = cn[m] * scale
                a2 = np.conj(lam)
                for m in range(1, trunc + 1):
                    cn[m] = cn[m] + a2 * cn[m - 1]
                c = cn
        table[k, :] = c
    return table


def _product_series_py(zeros, front, trunc):
    """Maclaurin coefficients (degree 0..trunc) of the full product."""
    c = np.zeros(trunc + 1, dtype=np.complex128)
    c[0] = front
    for j in range(zeros.shape[0]):
        lam = zeros[j]
        if lam == 0:
            for m in range(trunc, 0, -1):
                c[m] = c[m - 1]
            c[0] = 0.0
        else:
            cn = np.empty(trunc + 1, dtype=np.complex128)
            cn[0] = lam * c[0]
            for m in range(1, trunc + 1):
                cn[m] = lam * c[m] - c[m - 1]
            scale = abs(lam) / lam
            for m in range(trunc + 1):
                cn[m] = cn[m] * scale
            a2 = np.conj(lam)
            for m in range(1, trunc + 1):
                cn[m] = cn[m] + a2 * cn[m - 1]
            c = cn
    return c


def _brownian_sum_loop(y, z, n_terms):
    pi = np.pi
    total = 0.0
    for n in range(1, n_terms + 1):
        w = n * pi
        total += 2.0 / (w * w) * np.sin(w * y) * np.sin(w * z)
    return total


def _brownian_sum_numpy(y, z, n_terms):
    n = np.arange(1, n_terms + 1, dtype=np.float64)
    w = n * np.pi
    return float(np.sum(2.0 / (w * w) * np.sin(w * y) * np.sin(w * z)))


_IMPLS = {
    "numpy": {
        "blaschke_values": _blaschke_values_py,
        "tm_table": _tm_table_py,
        "product_series": _product_series_py,
        "brownian_sum": _brownian_sum_numpy,
    }
}

if HAS_NUMBA:
    _IMPLS["numba"] = {
        "blaschke_values": njit(cache=True)(_blaschke_values_py),
        "tm_table": njit(cache=True)(_tm_table_py),
        "product_series": njit(cache=True)(_product_series_py),
        "brownian_sum": njit(cache=True)(_brownian_sum_loop),
    }


def _pick_backend():
    requested = config.requested_backend()
    if requested is None:
        return "numba" if HAS_NUMBA else "numpy"
    if requested == "numba" and not HAS_NUMBA:
        raise ValidationError("KERNELFRAME_BACKEND=numba but numba is not importable")
    return requested


_BACKEND = _pick_backend()
_ACTIVE = _IMPLS[_BACKEND]


def active_backend():
    return _BACKEND


def implementations():
    """All available backends, keyed by name. For tests and benchmarks."""
    return _IMPLS


def blaschke_values(zeros, front, zs):
    zeros = np.ascontiguousarray(zeros, dtype=np.complex128)
    zs = np.ascontiguousarray(zs, dtype=np.complex128)
    return _ACTIVE["blaschke_values"](zeros, complex(front), zs)


def tm_table(zeros, trunc):
    zeros = np.ascontiguousarray(zeros, dtype=np.complex128)
    return _ACTIVE["tm_table"](zeros, int(trunc))


def product_series(zeros, front, trunc):
    zeros = np.ascontiguousarray(zeros, dtype=np.complex128)
    return _ACTIVE["product_series"](zeros, complex(front), int(trunc))


def brownian_sum(y, z, n_terms):
    return _ACTIVE["brownian_sum"](float(y), float(z), int(n_terms))


def warmup():
    """Trigger JIT compilation of every accelerated kernel once."""
    zs = np.array([0.1 + 0.1j], dtype=np.complex128)
    zeros = np.array([0.2 + 0.0j], dtype=np.complex128)
    blaschke_values(zeros, 1.0, zs)
    tm_table(zeros, 4)
    product_series(zeros, 1.0, 4)
    brownian_sum(0.3, 0.4, 8)
