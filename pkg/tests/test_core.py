import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from regradius import (
    DimensionTooLarge,
    IntervalMatrix,
    SingularInput,
    Tolerances,
    invert,
    norm_inf1,
    rank,
    real_spectral_radius,
    sign_vectors,
    svd,
)
from conftest import rand_nonsingular


def brute_norm_inf1(M):
    # Independent oracle: all 2^n sign vectors, no symmetry shortcut.
    return max(float(np.abs(M @ z).sum()) for z in sign_vectors(M.shape[0]))


class TestInvert:
    def test_identity(self):
        np.testing.assert_allclose(invert(np.eye(3)), np.eye(3))

    def test_two_by_two(self):
        # Oracle: multiply back to the identity.
        A = np.array([[1.0, 1.0], [1.0, 2.0]])
        M = invert(A)
        np.testing.assert_allclose(M, [[2.0, -1.0], [-1.0, 1.0]], atol=1e-12)
        np.testing.assert_allclose(A @ M, np.eye(2), atol=1e-12)

    def test_singular_raises(self):
        with pytest.raises(SingularInput):
            invert(np.array([[1.0, 1.0], [1.0, 1.0]]))

    def test_roundtrip_well_conditioned(self, rng):
        for n in (2, 4, 7):
            for _ in range(5):
                A = rand_nonsingular(rng, n, cond_cap=1e6)
                np.testing.assert_allclose(invert(invert(A)), A, rtol=1e-8, atol=1e-8)


class TestRealSpectralRadius:
    def test_diagonal(self):
        assert real_spectral_radius(np.diag([2.0, -3.0])) == pytest.approx(3.0)

    def test_rotation_has_no_real_eigenvalue(self):
        assert real_spectral_radius(np.array([[0.0, -1.0], [1.0, 0.0]])) == 0.0

    def test_hand_computed_pair(self):
        # char poly of [[1,3],[1,1]] is t^2 - 2t - 2, roots 1 +- sqrt(3)
        M = np.array([[1.0, 3.0], [1.0, 1.0]])
        assert real_spectral_radius(M) == pytest.approx(1.0 + math.sqrt(3.0), abs=1e-10)

    def test_relative_imag_cutoff(self):
        # A large complex pair must not sneak in via an absolute cutoff.
        M = np.array([[0.0, -1e9], [1e9, 0.0]])
        assert real_spectral_radius(M) == 0.0

    @given(alpha=st.floats(-4.0, 4.0).filter(lambda a: abs(a) > 1e-3))
    @settings(max_examples=30, deadline=None)
    def test_scaling_homogeneity(self, alpha):
        M = np.array([[1.0, 3.0], [1.0, 1.0]])  # has real eigenvalues
        base = real_spectral_radius(M)
        assert real_spectral_radius(alpha * M) == pytest.approx(abs(alpha) * base, rel=1e-8)


class TestNormInf1:
    def test_identity(self):
        assert norm_inf1(np.eye(2)) == pytest.approx(2.0)

    def test_hand_enumerations(self):
        assert norm_inf1(np.array([[1.0, 2.0], [3.0, 4.0]])) == pytest.approx(10.0)
        assert norm_inf1(np.array([[2.0, -1.0], [-1.0, 1.0]])) == pytest.approx(5.0)

    def test_matches_brute_force(self, rng):
        for n in range(1, 11):
            M = rng.uniform(-3.0, 3.0, (n, n))
            assert norm_inf1(M) == pytest.approx(brute_norm_inf1(M), rel=1e-12)

    def test_cap(self):
        with pytest.raises(DimensionTooLarge):
            norm_inf1(np.eye(3), cap=2)


class TestSvdRank:
    def test_identity_sigma(self):
        _, s, _ = svd(np.eye(2))
        np.testing.assert_allclose(s, [1.0, 1.0])

    def test_diagonal_absolute_sorted(self):
        _, s, _ = svd(np.diag([3.0, -4.0]))
        np.testing.assert_allclose(s, [4.0, 3.0])

    def test_gram_matrix_oracle(self):
        # sigma1*sigma2 = |det| = 1 and sigma1^2 + sigma2^2 = trace(A^T A) = 7
        A = np.array([[1.0, 2.0], [1.0, 1.0]])
        _, s, _ = svd(A)
        assert s[0] * s[1] == pytest.approx(1.0, rel=1e-10)
        assert s[0] ** 2 + s[1] ** 2 == pytest.approx(7.0, rel=1e-10)

    def test_reconstruction_residual(self, rng):
        for n in (3, 17, 50):
            M = rng.normal(size=(n, n))
            U, s, V = svd(M)
            resid = np.abs(M - U @ np.diag(s) @ V.T).max()
            assert resid <= 1e-10 * np.abs(M).max()

    def test_rank(self):
        assert rank(np.eye(3)) == 3
        assert rank(np.array([[1.0, 1.0], [1.0, 1.0]])) == 1
        assert rank(np.zeros((2, 2))) == 0
        assert rank(np.zeros((0, 4))) == 0


class TestTypes:
    def test_tolerances_positive(self):
        with pytest.raises(ValueError):
            Tolerances(eps_bisect=0.0)
        with pytest.raises(ValueError):
            Tolerances(eps_rank=-1e-9)

    def test_interval_membership(self):
        box = IntervalMatrix(np.zeros((2, 2)), np.ones((2, 2)))
        assert box.contains(np.full((2, 2), 0.5))
        assert not box.contains(np.full((2, 2), 1.5))

    def test_sign_vectors_count(self):
        assert len(list(sign_vectors(4))) == 16
        assert len(list(sign_vectors(4, fix_first=True))) == 8
        assert all(s[0] == 1 for s in sign_vectors(4, fix_first=True))
