import numpy as np
import pytest

from kernelframe import blaschke
from kernelframe.errors import DomainError, NumericError, ValidationError


def random_interior(rng, radius=0.8):
    r = radius * np.sqrt(rng.uniform())
    a = rng.uniform(0, 2 * np.pi)
    return complex(r * np.cos(a), r * np.sin(a))


class TestFactor:
    def test_zero_factor_is_identity(self):
        assert blaschke.blaschke_factor(0, 0.3 + 0.1j) == 0.3 + 0.1j

    def test_vanishes_at_its_zero(self, rng):
        for _ in range(10):
            lam = random_interior(rng)
            assert abs(blaschke.blaschke_factor(lam, lam)) < 1e-15

    def test_positive_at_origin(self, rng):
        # Convention pins b_lam(0) = |lam|.
        for _ in range(10):
            lam = random_interior(rng)
            v = blaschke.blaschke_factor(lam, 0)
            assert abs(v - abs(lam)) < 1e-15

    def test_unimodular_on_circle(self, rng):
        for _ in range(20):
            lam = random_interior(rng)
            z = np.exp(1j * rng.uniform(0, 2 * np.pi))
            assert abs(abs(blaschke.blaschke_factor(lam, z)) - 1.0) < 1e-12

    def test_contractive_inside(self, rng):
        for _ in range(20):
            lam = random_interior(rng)
            z = random_interior(rng, 0.95)
            assert abs(blaschke.blaschke_factor(lam, z)) < 1.0

    def test_pole_guarded(self):
        with pytest.raises(NumericError):
            blaschke.blaschke_factor(0.5, 2.0)


class TestProduct:
    def test_front_must_be_unimodular(self):
        with pytest.raises(DomainError):
            blaschke.FiniteBlaschkeProduct((0.5,), front=2.0)

    def test_zeros_must_be_interior(self):
        with pytest.raises(DomainError):
            blaschke.FiniteBlaschkeProduct((1.0,))

    def test_degree_and_call(self):
        B = blaschke.FiniteBlaschkeProduct((0, 0, 0))
        assert B.degree == 3
        assert B(0.5) == pytest.approx(0.125)

    def test_values_matches_pointwise(self, rng):
        zeros = tuple(random_interior(rng, 0.7) for _ in range(4))
        B = blaschke.FiniteBlaschkeProduct(zeros, front=np.exp(0.7j))
        zs = np.array([random_interior(rng, 0.9) for _ in range(16)])
        vect = B.values(zs)
        point = np.array([blaschke.eval_product(B, z).value for z in zs])
        np.testing.assert_allclose(vect, point, rtol=0, atol=1e-14)

    def test_empty_product_is_front(self):
        B = blaschke.FiniteBlaschkeProduct((), front=1j)
        assert blaschke.eval_product(B, 0.4).value == 1j


def central_difference(B, z, h=1e-6):
    up = blaschke.eval_product(B, z + h).value
    dn = blaschke.eval_product(B, z - h).value
    return (up - dn) / (2 * h)


class TestDerivative:
    def test_matches_finite_difference(self, rng):
        zeros = (0.3, -0.2 + 0.4j, 0.1 - 0.5j)
        B = blaschke.FiniteBlaschkeProduct(zeros)
        for _ in range(10):
            z = random_interior(rng, 0.6)
            ev = blaschke.eval_product(B, z, with_derivative=True)
            fd = central_difference(B, z)
            assert abs(ev.derivative - fd) < 1e-7 * max(1.0, abs(fd))

    def test_at_a_simple_zero(self):
        B = blaschke.FiniteBlaschkeProduct((0.3, -0.4))
        ev = blaschke.eval_product(B, 0.3, with_derivative=True)
        assert abs(ev.value) < 1e-15
        fd = central_difference(B, 0.3)
        assert abs(ev.derivative - fd) < 1e-7

    def test_at_a_repeated_zero(self):
        B = blaschke.FiniteBlaschkeProduct((0.3, 0.3))
        ev = blaschke.eval_product(B, 0.3, with_derivative=True)
        assert ev.derivative == 0

    def test_single_factor_closed_form(self, rng):
        # b'_lam = (|lam|/lam)(|lam|^2 - 1)/(1 - conj(lam) z)^2.
        for _ in range(10):
            lam = random_interior(rng, 0.7)
            if lam == 0:
                continue
            z = random_interior(rng, 0.7)
            B = blaschke.FiniteBlaschkeProduct((lam,))
            ev = blaschke.eval_product(B, z, with_derivative=True)
            den = 1 - np.conj(lam) * z
            expected = (abs(lam) / lam) * (abs(lam) ** 2 - 1) / den**2
            assert abs(ev.derivative - expected) < 1e-13


class TestPseudohyperbolic:
    def test_formula_and_symmetry(self, rng):
        for _ in range(10):
            lam = random_interior(rng)
            mu = random_interior(rng)
            d = blaschke.pseudohyperbolic(lam, mu)
            assert abs(d - abs((mu - lam) / (1 - np.conj(mu) * lam))) < 1e-15
            assert abs(d - blaschke.pseudohyperbolic(mu, lam)) < 1e-15
            assert 0 <= d < 1

    def test_rotation_invariance(self, rng):
        w = np.exp(1.3j)
        for _ in range(10):
            lam = random_interior(rng)
            mu = random_interior(rng)
            assert abs(
                blaschke.pseudohyperbolic(lam, mu)
                - blaschke.pseudohyperbolic(w * lam, w * mu)
            ) < 1e-14


class TestSequenceDiagnostics:
    def test_empty_sequence_rejected(self):
        with pytest.raises(ValidationError):
            blaschke.DiskSequence(())

    def test_partial_sums(self, rng):
        pts = tuple(random_interior(rng, 0.7) for _ in range(6))
        seq = blaschke.DiskSequence(pts, "random")
        theta = blaschke.FiniteBlaschkeProduct((0.5,))
        rep = blaschke.sequence_diagnostics(seq, theta)
        mods = np.abs(pts)
        tvals = np.abs(theta.values(np.array(pts)))
        assert abs(rep.blaschke_partial - np.sum(1 - mods)) < 1e-12
        assert abs(rep.inverse_gap_partial - np.sum(1 / (1 - mods**2))) < 1e-12
        assert abs(rep.bessel_bound - np.sum((1 - tvals**2) / (1 - mods**2))) < 1e-12
        assert abs(rep.sup_theta - np.max(tvals)) < 1e-15

    def test_bessel_collapses_on_own_zeros(self, rng):
        # theta vanishes on the sequence, so the two partial sums coincide.
        pts = tuple(random_interior(rng, 0.6) for _ in range(4))
        seq = blaschke.DiskSequence(pts)
        theta = blaschke.FiniteBlaschkeProduct(pts)
        rep = blaschke.sequence_diagnostics(seq, theta)
        assert rep.sup_theta == 0.0
        assert rep.bessel_bound == rep.inverse_gap_partial


class TestPerturbation:
    def test_eps_range(self):
        seq = blaschke.DiskSequence((0.5,))
        for eps in (0.0, 1.0, -0.5, 1.5):
            with pytest.raises(DomainError):
                blaschke.perturbation_transfer(seq, seq, eps)

    def test_length_mismatch(self):
        a = blaschke.DiskSequence((0.5,))
        b = blaschke.DiskSequence((0.5, 0.1))
        with pytest.raises(ValidationError):
            blaschke.perturbation_transfer(a, b, 0.1)

    def test_identical_sequences_hold(self, rng):
        pts = tuple(random_interior(rng, 0.8) for _ in range(5))
        seq = blaschke.DiskSequence(pts)
        rep = blaschke.perturbation_transfer(seq, seq, 0.3)
        assert rep.holds
        assert rep.alpha == pytest.approx((1 + 0.3) / (1 - 0.3))
        assert all(rep.per_index_ok)

    def test_nearby_sequences_hold(self, rng):
        eps = 0.2
        lam_pts, mu_pts = [], []
        for _ in range(8):
            lam = random_interior(rng, 0.8)
            while True:
                mu = lam + complex(*rng.uniform(-0.02, 0.02, 2))
                if abs(mu) < 1 and blaschke.pseudohyperbolic(lam, mu) < eps:
                    break
            lam_pts.append(lam)
            mu_pts.append(mu)
        rep = blaschke.perturbation_transfer(
            blaschke.DiskSequence(tuple(lam_pts)),
            blaschke.DiskSequence(tuple(mu_pts)),
            eps,
        )
        assert rep.holds

    def test_distant_pair_reported(self):
        a = blaschke.DiskSequence((0.5, 0.1))
        b = blaschke.DiskSequence((0.9, 0.1))
        rep = blaschke.perturbation_transfer(a, b, 0.1)
        assert not rep.holds
        assert rep.per_index_ok == (False, True)
