import numpy as np
import pytest

from kernelframe import hardy, modelspace
from kernelframe.blaschke import FiniteBlaschkeProduct, eval_product
from kernelframe.errors import (
    ConditioningError,
    DomainError,
    ValidationError,
)


def random_product(rng, max_degree=5, radius=0.7):
    deg = int(rng.integers(1, max_degree + 1))
    zeros = []
    for _ in range(deg):
        r = radius * np.sqrt(rng.uniform())
        a = rng.uniform(0, 2 * np.pi)
        zeros.append(complex(r * np.cos(a), r * np.sin(a)))
    return FiniteBlaschkeProduct(tuple(zeros))


class TestTruncation:
    def test_small_moduli_floor(self):
        assert modelspace.auto_trunc_degree(3, 0.01) == 12

    def test_grows_with_modulus(self):
        small = modelspace.auto_trunc_degree(2, 0.1)
        large = modelspace.auto_trunc_degree(2, 0.9)
        assert large > small
        # Tail rho^trunc must sit below the series budget.
        assert 0.9**large < 1e-13

    def test_too_small_truncation_raises(self):
        with pytest.raises(ConditioningError) as info:
            modelspace.tm_basis(FiniteBlaschkeProduct((0.1, 0.2)), 7)
        assert info.value.suggested_degree >= 8

    def test_degenerate_product_rejected(self):
        with pytest.raises(DomainError):
            modelspace.tm_basis(FiniteBlaschkeProduct(()))

    def test_zero_list_coerced(self):
        M = modelspace.tm_basis([0.2, -0.3])
        assert M.dim == 2


class TestBasis:
    def test_orthonormal_under_circle_quadrature(self, rng):
        # Independent check: discretized boundary integral of e_j conj(e_k).
        B = random_product(rng, max_degree=4, radius=0.75)
        M = modelspace.tm_basis(B)
        T = 4096
        zs = np.exp(2j * np.pi * np.arange(T) / T)
        vals = np.array([M.basis_values(z) for z in zs]).T
        gram = vals @ vals.conj().T / T
        np.testing.assert_allclose(gram, np.eye(M.dim), rtol=0, atol=1e-10)

    def test_series_table_matches_rational_form(self, rng):
        B = random_product(rng)
        M = modelspace.tm_basis(B)
        powers = 0.55 * np.exp(1.1j)
        series = np.array(
            [np.polyval(M.table[k][::-1], powers) for k in range(M.dim)]
        )
        np.testing.assert_allclose(series, M.basis_values(powers), rtol=0, atol=1e-11)

    def test_vector_length_checked(self):
        M = modelspace.tm_basis(FiniteBlaschkeProduct((0, 0)))
        with pytest.raises(ValidationError):
            modelspace.ModelVector(np.ones(3), M)


class TestKernel:
    def test_reproduces_values(self, rng):
        B = random_product(rng)
        M = modelspace.tm_basis(B)
        for _ in range(20):
            v = modelspace.ModelVector(
                rng.standard_normal(M.dim) + 1j * rng.standard_normal(M.dim), M
            )
            lam = 0.6 * np.exp(1j * rng.uniform(0, 2 * np.pi))
            k = modelspace.kernel_vector(M, lam)
            ip = complex(np.sum(v.coeffs * np.conj(k.coeffs)))
            assert abs(ip - v.evaluate(lam)) < 1e-9

    def test_norm_closed_form(self, rng):
        B = random_product(rng)
        M = modelspace.tm_basis(B)
        for _ in range(10):
            lam = 0.7 * np.exp(1j * rng.uniform(0, 2 * np.pi))
            direct = modelspace.kernel_vector(M, lam).norm_sq()
            assert abs(direct - modelspace.kernel_norm_sq(M, lam)) < 1e-10

    def test_projection_of_evaluation_series(self, rng):
        # Projecting the ambient evaluation kernel lands on the space kernel.
        B = random_product(rng, max_degree=4)
        M = modelspace.tm_basis(B)
        lam = 0.5 * np.exp(0.9j)
        f = hardy.szego_series(lam, M.trunc_degree)
        proj = modelspace.project(f, M)
        np.testing.assert_allclose(
            proj.coeffs, modelspace.kernel_vector(M, lam).coeffs, rtol=0, atol=1e-8
        )

    def test_projection_fixes_basis_rows(self, rng):
        B = random_product(rng)
        M = modelspace.tm_basis(B)
        for k in range(M.dim):
            row = hardy.AnalyticPolynomial(M.table[k])
            proj = modelspace.project(row, M)
            np.testing.assert_allclose(proj.coeffs, np.eye(M.dim)[k], rtol=0, atol=1e-9)

    def test_project_degree_guard(self):
        M = modelspace.tm_basis(FiniteBlaschkeProduct((0, 0)))
        with pytest.raises(ConditioningError):
            modelspace.project(np.ones(M.trunc_degree + 3), M)


class TestCompressedShift:
    def test_eigenvalues_are_the_zeros(self, rng):
        B = random_product(rng, max_degree=5)
        M = modelspace.tm_basis(B)
        eigs = np.linalg.eigvals(modelspace.compressed_shift(M))
        got = sorted(eigs, key=lambda z: (z.real, z.imag))
        want = sorted(B.zeros, key=lambda z: (z.real, z.imag))
        np.testing.assert_allclose(got, want, rtol=0, atol=1e-8)

    def test_adjoint_fixes_kernels_at_zeros(self, rng):
        B = random_product(rng, max_degree=4)
        M = modelspace.tm_basis(B)
        AH = modelspace.compressed_shift(M).conj().T
        for lam in B.zeros:
            k = modelspace.kernel_vector(M, lam).coeffs
            np.testing.assert_allclose(AH @ k, np.conj(lam) * k, rtol=0, atol=1e-8)

    def test_matches_projected_forward_shift(self, rng):
        B = random_product(rng, max_degree=4)
        M = modelspace.tm_basis(B)
        A = modelspace.compressed_shift(M)
        v = rng.standard_normal(M.dim) + 1j * rng.standard_normal(M.dim)
        series = v @ M.table
        shifted = np.concatenate(([0.0], series[:-1]))
        proj = modelspace.project(hardy.AnalyticPolynomial(shifted), M)
        np.testing.assert_allclose(A @ v, proj.coeffs, rtol=0, atol=1e-9)


class TestOrbit:
    def test_monomials_exact(self):
        M = modelspace.tm_basis(FiniteBlaschkeProduct((0, 0, 0)))
        g = modelspace.ModelVector(np.array([1.0, 2.0, 3.0]), M)
        rep = modelspace.shift_orbit_parseval(M, g, 3)
        assert rep.partial == 14.0
        assert rep.defect == 0.0
        assert not rep.inconclusive

    def test_short_orbit_is_inconclusive(self):
        # One step cannot certify anything: the tail bound exceeds ||g||^2.
        M = modelspace.tm_basis(FiniteBlaschkeProduct((0, 0, 0)))
        g = modelspace.ModelVector(np.array([1.0, 2.0, 3.0]), M)
        rep = modelspace.shift_orbit_parseval(M, g, 1)
        assert rep.inconclusive

    def test_random_products_within_tail(self, rng):
        for _ in range(5):
            B = random_product(rng, max_degree=4, radius=0.7)
            M = modelspace.tm_basis(B)
            g = modelspace.ModelVector(
                rng.standard_normal(M.dim) + 1j * rng.standard_normal(M.dim), M
            )
            rep = modelspace.shift_orbit_parseval(M, g, 80)
            assert not rep.inconclusive
            assert rep.defect <= rep.tail_bound + 1e-9
            assert rep.tail_bound < 1e-8

    def test_foreign_vector_rejected(self):
        M1 = modelspace.tm_basis(FiniteBlaschkeProduct((0, 0)))
        M2 = modelspace.tm_basis(FiniteBlaschkeProduct((0.3, 0)))
        g = modelspace.ModelVector(np.ones(2), M2)
        with pytest.raises(ValidationError):
            modelspace.shift_orbit_parseval(M1, g, 5)

    def test_orbit_length_positive(self):
        M = modelspace.tm_basis(FiniteBlaschkeProduct((0, 0)))
        g = modelspace.ModelVector(np.ones(2), M)
        with pytest.raises(DomainError):
            modelspace.shift_orbit_parseval(M, g, 0)


class TestClark:
    def test_two_monomial_reference(self):
        M = modelspace.tm_basis(FiniteBlaschkeProduct((0, 0)))
        fam = modelspace.clark_basis(M, 1.0)
        assert fam.origin_zero
        np.testing.assert_allclose(fam.boundary_points, [1.0, -1.0], atol=1e-12)
        targets = [np.array([1, 1]) / np.sqrt(2), np.array([1, -1]) / np.sqrt(2)]
        for vec, t in zip(fam, targets):
            ip = complex(np.vdot(t, vec.coeffs))
            phase = ip / abs(ip)
            np.testing.assert_allclose(vec.coeffs, phase * t, rtol=0, atol=1e-10)

    def test_boundary_points_solve_level_set(self, rng):
        B = random_product(rng, max_degree=4, radius=0.7)
        M = modelspace.tm_basis(B)
        zeta = np.exp(1j * rng.uniform(0, 2 * np.pi))
        fam = modelspace.clark_basis(M, zeta)
        assert len(fam) == M.dim
        angles = np.angle(np.array(fam.boundary_points))
        assert np.all(np.diff(angles) > 0)
        for xi in fam.boundary_points:
            assert abs(abs(xi) - 1.0) < 1e-12
            assert abs(eval_product(B, xi).value - zeta) < 1e-8

    def test_orthonormal_family(self, rng):
        for _ in range(5):
            B = random_product(rng, max_degree=5, radius=0.75)
            M = modelspace.tm_basis(B)
            zeta = np.exp(1j * rng.uniform(0, 2 * np.pi))
            C = modelspace.clark_basis(M, zeta).coefficient_matrix()
            np.testing.assert_allclose(
                C @ C.conj().T, np.eye(M.dim), rtol=0, atol=1e-8
            )

    def test_origin_flag_reflects_zeros(self):
        M = modelspace.tm_basis(FiniteBlaschkeProduct((0.3, -0.4)))
        assert not modelspace.clark_basis(M, 1.0).origin_zero

    def test_zeta_must_be_unimodular(self):
        M = modelspace.tm_basis(FiniteBlaschkeProduct((0, 0)))
        with pytest.raises(DomainError):
            modelspace.clark_basis(M, 0.5)
