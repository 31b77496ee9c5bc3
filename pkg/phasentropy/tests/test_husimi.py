"""Tests for coherent states, Husimi functions and phase-space integrals."""

import math

import numpy as np
import pytest

from phasentropy.core.errors import DomainError, StateValidationError
from phasentropy.entropies import c_n, husimi_moment, subentropy, wehrl_entropy
from phasentropy.husimi import (
    CoherentPoint,
    StateVector,
    coherent_state,
    coherent_states,
    husimi_bi,
    husimi_mono,
    mc_moment_bi,
    mc_moment_mono,
    mc_wehrl,
    resolution_of_identity,
    sample_fubini_study,
)
from phasentropy.spectra import (
    BipartitePureState,
    HermitianState,
    Spectrum,
    eigen_spectrum,
    random_density,
    random_pure_bipartite,
    random_unitary,
    schmidt_spectrum,
)

BELL = BipartitePureState(np.eye(2) / np.sqrt(2))
PRODUCT = BipartitePureState(np.array([[1.0, 0.0], [0.0, 0.0]]))
GROUND = HermitianState(np.diag([1.0, 0.0]))

# ------------------------------------------------------------------
# Coherent states
# ------------------------------------------------------------------


class TestCoherentPoint:
    def test_origin(self):
        p = CoherentPoint.origin(3)
        assert p.n == 3
        np.testing.assert_allclose(coherent_state(p).amplitudes, [1.0, 0.0, 0.0])

    def test_phase_wrapped(self):
        p = CoherentPoint([0.5], [2.0 * np.pi + 0.25])
        assert p.phi[0] == pytest.approx(0.25)

    def test_coordinates_checked(self):
        with pytest.raises(DomainError):
            CoherentPoint([0.7, 0.6], [0.0, 0.0])
        with pytest.raises(DomainError):
            CoherentPoint([-0.1], [0.0])
        with pytest.raises(DomainError):
            CoherentPoint([0.1, 0.2], [0.0])

    def test_coherent_state_is_normalized(self):
        p = CoherentPoint([0.2, 0.3], [1.0, 2.0])
        a = coherent_state(p).amplitudes
        assert np.linalg.norm(a) == pytest.approx(1.0, abs=1e-14)
        assert a[0] == pytest.approx(math.sqrt(0.5))
        assert a[2] == pytest.approx(math.sqrt(0.3) * np.exp(2.0j))

    def test_state_vector_norm(self):
        with pytest.raises(StateValidationError):
            StateVector([1.0, 1.0])
        assert StateVector([0.6, 0.8j]).n == 2


class TestFubiniStudy:
    def test_point_is_valid(self):
        p = sample_fubini_study(4, seed=1)
        assert p.n == 4
        assert p.x.sum() <= 1.0

    def test_reproducible(self):
        a = sample_fubini_study(3, seed=8)
        b = sample_fubini_study(3, seed=8)
        np.testing.assert_array_equal(a.x, b.x)
        np.testing.assert_array_equal(a.phi, b.phi)

    def test_phase_space_dimension(self):
        with pytest.raises(DomainError):
            sample_fubini_study(1, seed=0)

    def test_batch_moments(self):
        n, size = 3, 200_000
        a = coherent_states(n, size, seed=2)
        assert a.shape == (size, n)
        np.testing.assert_allclose(np.linalg.norm(a, axis=1), 1.0, atol=1e-12)
        # |alpha_i|^2 ~ Beta(1, n-1), variance (n-1) / (n^2 (n+1))
        se = math.sqrt((n - 1) / (n * n * (n + 1)) / size)
        np.testing.assert_allclose((np.abs(a) ** 2).mean(axis=0), 1.0 / n, atol=5 * se)
        assert np.abs(a[:, 1:].mean(axis=0)).max() < 0.01


# ------------------------------------------------------------------
# Husimi functions
# ------------------------------------------------------------------


class TestHusimiMono:
    def test_ground_state(self):
        p = CoherentPoint([0.3], [1.1])
        assert husimi_mono(GROUND, p) == pytest.approx(0.7, abs=1e-14)

    def test_maximally_mixed(self):
        rho = HermitianState(np.eye(3) / 3)
        p = sample_fubini_study(3, seed=4)
        assert husimi_mono(rho, p) == pytest.approx(1.0 / 3.0, abs=1e-14)

    def test_dimension_mismatch(self):
        with pytest.raises(StateValidationError):
            husimi_mono(GROUND, CoherentPoint.origin(3))


class TestHusimiBi:
    def test_bell_at_origin(self):
        o = CoherentPoint.origin(2)
        assert husimi_bi(BELL, o, o) == pytest.approx(0.5, abs=1e-14)

    def test_product_at_origin(self):
        o = CoherentPoint.origin(2)
        assert husimi_bi(PRODUCT, o, o) == pytest.approx(1.0, abs=1e-14)

    def test_bounded(self):
        psi = random_pure_bipartite(3, seed=5)
        for k in range(20):
            h = husimi_bi(psi, sample_fubini_study(3, 2 * k), sample_fubini_study(3, 2 * k + 1))
            assert 0.0 <= h <= 1.0

    def test_schmidt_basis(self):
        # |01> + |10> has the same Schmidt spectrum as the Bell state
        psi = BipartitePureState(np.array([[0.0, 1.0], [1.0, 0.0]]) / np.sqrt(2))
        o = CoherentPoint.origin(2)
        assert husimi_bi(psi, o, o) == pytest.approx(0.0, abs=1e-14)
        assert husimi_bi(psi, o, o, schmidt_basis=True) == pytest.approx(0.5, abs=1e-14)

    def test_dimension_mismatch(self):
        with pytest.raises(StateValidationError):
            husimi_bi(BELL, CoherentPoint.origin(2), CoherentPoint.origin(3))


# ------------------------------------------------------------------
# Phase-space integrals
# ------------------------------------------------------------------


class TestMcMoments:
    def test_first_moment_is_one(self):
        rho = random_density(3, seed=6)
        assert mc_moment_mono(rho, 1.0, samples=50_000, seed=1).within(1.0)
        assert mc_moment_bi(BELL, 1.0, samples=50_000, seed=2).within(1.0)

    def test_pure_qubit(self):
        # H = |alpha_0|^2 ~ U(0, 1), so m_2 = 2 * 1/3
        est = mc_moment_mono(GROUND, 2.0, samples=100_000, seed=3)
        assert est.within(2.0 / 3.0)

    def test_bell(self):
        est = mc_moment_bi(BELL, 2.0, samples=100_000, seed=4)
        assert est.within(1.0 / 3.0)
        assert husimi_moment(2.0, Spectrum([0.5, 0.5]), 2, "bi") == pytest.approx(1.0 / 3.0)

    def test_mixed_qubit(self):
        rho = HermitianState(np.diag([0.75, 0.25]))
        est = mc_moment_mono(rho, 2.0, samples=100_000, seed=5)
        assert est.within(0.8125 * 2.0 / 3.0)

    @pytest.mark.parametrize("q", [0.5, 2.0, 3.5])
    def test_bi_matches_closed_form(self, q):
        for n in (2, 3):
            psi = random_pure_bipartite(n, seed=10 + n)
            lam = schmidt_spectrum(psi)
            est = mc_moment_bi(psi, q, samples=100_000, seed=20 + n)
            assert est.within(husimi_moment(q, lam, n, "bi")), (q, n, est)

    @pytest.mark.slow
    @pytest.mark.parametrize("q", [0.5, 1.0, 2.0, 3.5])
    def test_closed_form_full(self, q):
        for n in (2, 3, 4):
            rho = random_density(n, seed=30 + n)
            lam = eigen_spectrum(rho)
            est = mc_moment_mono(rho, q, samples=1_000_000, seed=40 + n)
            assert est.within(husimi_moment(q, lam, n, "mono")), (q, n, est)
            psi = random_pure_bipartite(n, seed=50 + n)
            est = mc_moment_bi(psi, q, samples=1_000_000, seed=60 + n)
            assert est.within(husimi_moment(q, schmidt_spectrum(psi), n, "bi")), (q, n, est)

    def test_local_unitary_invariance(self):
        u, v = random_unitary(2, 7), random_unitary(2, 8)
        rotated = BipartitePureState(u @ BELL.coeffs @ v.T)
        est = mc_moment_bi(rotated, 2.0, samples=100_000, seed=9)
        assert est.within(1.0 / 3.0)

    def test_wrong_state_type(self):
        with pytest.raises(StateValidationError):
            mc_moment_mono(BELL, 2.0, samples=1000, seed=0)
        with pytest.raises(StateValidationError):
            mc_moment_bi(GROUND, 2.0, samples=1000, seed=0)

    def test_nonpositive_order(self):
        with pytest.raises(DomainError):
            mc_moment_mono(GROUND, 0.0, samples=1000, seed=0)

    def test_reproducible(self):
        a = mc_moment_bi(BELL, 2.0, samples=10_000, seed=11)
        b = mc_moment_bi(BELL, 2.0, samples=10_000, seed=11)
        assert a == b


class TestMcWehrl:
    def test_pure_qubit(self):
        # 2 * E[-U ln U] = 1/2
        est = mc_wehrl(GROUND, samples=100_000, seed=12)
        assert est.within(0.5)

    def test_bell(self):
        est = mc_wehrl(BELL, samples=100_000, seed=13)
        assert est.within(1.193147)
        assert wehrl_entropy(Spectrum([0.5, 0.5]), 2, "bi") == pytest.approx(1.193147, abs=1e-6)

    def test_matches_closed_form(self):
        rho = random_density(3, seed=14)
        lam = eigen_spectrum(rho)
        est = mc_wehrl(rho, samples=100_000, seed=15)
        assert est.within(wehrl_entropy(lam, 3, "mono"))

    def test_product_qutrit(self):
        # Q vanishes, leaving 2 C_3 = 5/3
        product = BipartitePureState(np.outer([1.0, 0.0, 0.0], [1.0, 0.0, 0.0]))
        est = mc_wehrl(product, samples=100_000, seed=17)
        assert est.within(5.0 / 3.0)

    @pytest.mark.parametrize("n", [2, 3])
    def test_random_bipartite(self, n):
        for k in range(3):
            psi = random_pure_bipartite(n, seed=70 + 10 * n + k)
            lam = schmidt_spectrum(psi)
            est = mc_wehrl(psi, samples=100_000, seed=80 + 10 * n + k)
            assert est.within(subentropy(lam) + 2.0 * c_n(n)), (n, k, est)

    @pytest.mark.slow
    def test_bell_full(self):
        est = mc_wehrl(BELL, samples=1_000_000, seed=18)
        assert est.within(1.193147)


class TestResolutionOfIdentity:
    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_identity(self, n):
        res = resolution_of_identity(n, samples=100_000, seed=16 + n)
        assert res.mean.shape == (n, n)
        # trace is exactly n per sample
        assert np.trace(res.mean).real == pytest.approx(n, rel=1e-12)
        assert res.sigma_deviation().max() < 4.0
        np.testing.assert_allclose(res.mean, np.eye(n), atol=0.02)

    def test_dimension(self):
        with pytest.raises(DomainError):
            resolution_of_identity(1, samples=1000, seed=0)
