import math

import numpy as np
import pytest

from regradius import (
    INF,
    DimensionTooLarge,
    Indeterminate,
    IntervalMatrix,
    is_regular_oracle,
    nearest_singular_certificate,
    radius_allones,
    radius_full_search,
    real_spectral_radius,
)
from regradius.fullsearch import regular_by_vertex_determinants
from conftest import rand_nonsingular, rand_weights

SQRT2M1 = math.sqrt(2.0) - 1.0
PAPER_DELTA = np.array([[1.0, 2.0], [1.0, 1.0]])


class TestFullSearch:
    def test_known_irrational_instance(self):
        report = radius_full_search(np.eye(2), PAPER_DELTA)
        assert report.value == pytest.approx(SQRT2M1, abs=1e-12)
        assert report.pairs_evaluated == 8

    def test_identity_allones(self):
        for n in (1, 2, 4):
            report = radius_full_search(np.eye(n), np.ones((n, n)))
            assert report.value == pytest.approx(1.0 / n, abs=1e-12)

    def test_infinite_radius_instance(self):
        A = np.array([[1.0, 1.0, 1.0], [1.0, 1.0, 2.0], [1.0, 2.0, 3.0]])
        Delta = np.zeros((3, 3))
        Delta[2, 2] = 1.0
        report = radius_full_search(A, Delta)
        assert report.value == INF
        assert report.argmax_y is None

    def test_singular_input_gives_zero(self):
        report = radius_full_search(np.ones((2, 2)), np.ones((2, 2)))
        assert report.value == 0.0

    def test_cap(self):
        with pytest.raises(DimensionTooLarge):
            radius_full_search(np.eye(4), np.ones((4, 4)), cap=3)

    def test_report_invariant_at_argmax(self, rng):
        # value * rho0(A^-1 D_y Delta D_z) == 1 at the reported maximizer
        for _ in range(5):
            A = rand_nonsingular(rng, 4)
            Delta = rand_weights(rng, 4)
            report = radius_full_search(A, Delta)
            y = np.array(report.argmax_y, dtype=float)
            z = np.array(report.argmax_z, dtype=float)
            rho = real_spectral_radius(np.linalg.inv(A) @ (Delta * np.outer(y, z)))
            assert report.value * rho == pytest.approx(1.0, rel=1e-9)


class TestRadiusAllones:
    def test_identity(self):
        assert radius_allones(np.eye(2)).value == pytest.approx(0.5)

    def test_hand_inverse_norms(self):
        assert radius_allones(np.array([[1.0, 1.0], [1.0, 2.0]])).value == pytest.approx(0.2)
        assert radius_allones(np.array([[2.0, 1.0], [1.0, 2.0]])).value == pytest.approx(0.5)

    def test_agrees_with_full_search(self, rng):
        for n in range(2, 8):
            A = rand_nonsingular(rng, n)
            lhs = radius_allones(A).value
            rhs = radius_full_search(A, np.ones((n, n))).value
            assert lhs == pytest.approx(rhs, abs=1e-9)

    def test_certificate_is_singular_member(self, rng):
        for n in (2, 3, 5):
            A = rand_nonsingular(rng, n)
            res = radius_allones(A)
            cert = res.certificate
            sigma = np.linalg.svd(cert.matrix, compute_uv=False)
            assert sigma[-1] <= 1e-7 * np.linalg.svd(A, compute_uv=False)[0]
            box = IntervalMatrix(A, res.value * np.ones((n, n)))
            assert box.contains(cert.matrix, slack=1e-10)


class TestCertificate:
    def test_identity_certificate(self):
        report = radius_full_search(np.eye(2), np.ones((2, 2)))
        S = nearest_singular_certificate(np.eye(2), report, np.ones((2, 2)))
        assert abs(np.linalg.det(S)) <= 1e-12

    def test_symmetric_example(self):
        A = np.array([[2.0, 1.0], [1.0, 2.0]])
        report = radius_full_search(A, np.ones((2, 2)))
        assert report.value == pytest.approx(0.5)
        S = nearest_singular_certificate(A, report, np.ones((2, 2)))
        assert abs(np.linalg.det(S)) <= 1e-10

    def test_paper_instance_certificate(self):
        report = radius_full_search(np.eye(2), PAPER_DELTA)
        S = nearest_singular_certificate(np.eye(2), report, PAPER_DELTA)
        assert abs(np.linalg.det(S)) <= 1e-7

    def test_infinite_value_rejected(self):
        A = np.array([[1.0, 1.0, 1.0], [1.0, 1.0, 2.0], [1.0, 2.0, 3.0]])
        Delta = np.zeros((3, 3))
        Delta[2, 2] = 1.0
        report = radius_full_search(A, Delta)
        with pytest.raises(ValueError):
            nearest_singular_certificate(A, report, Delta)


class TestOracle:
    def test_paper_instance_decisions(self):
        assert is_regular_oracle(np.eye(2), PAPER_DELTA, 0.3)
        assert not is_regular_oracle(np.eye(2), PAPER_DELTA, 0.5)

    def test_degenerate_delta_zero(self, rng):
        A = rand_nonsingular(rng, 3)
        assert is_regular_oracle(A, rand_weights(rng, 3), 0.0)

    def test_boundary_band_indeterminate(self):
        with pytest.raises(Indeterminate):
            is_regular_oracle(np.eye(2), np.ones((2, 2)), 0.5)

    def test_matches_vertex_determinant_criterion(self, rng):
        for _ in range(20):
            n = int(rng.integers(2, 5))
            A = rand_nonsingular(rng, n)
            Delta = rand_weights(rng, n)
            r = radius_full_search(A, Delta).value
            for frac in (0.5, 0.9, 1.1, 1.7):
                delta = frac * r
                if not math.isfinite(delta):
                    continue
                want = regular_by_vertex_determinants(A, delta * Delta)
                got = is_regular_oracle(A, Delta, delta)
                assert got == want


class TestProperties:
    def test_scaling_law(self, rng):
        # r(alpha A, beta Delta) = (|alpha| / beta) r(A, Delta)
        for alpha in (-2.0, 0.5, 3.0):
            for beta in (0.5, 2.0):
                A = rand_nonsingular(rng, 3)
                Delta = rand_weights(rng, 3)
                base = radius_full_search(A, Delta).value
                scaled = radius_full_search(alpha * A, beta * Delta).value
                assert scaled == pytest.approx(abs(alpha) / beta * base, rel=1e-7)

    @pytest.mark.xfail(
        strict=True,
        reason="r(A+B) <= r(A) + r(B) is false: two nearly singular matrices "
        "can sum to a well-conditioned one.  diag(1, e) and diag(e, 1) each "
        "have radius e/(1+e) under all-ones weights, while their sum (1+e)I "
        "has radius (1+e)/2.  The provable variant is the Lipschitz bound "
        "tested below.",
    )
    def test_subadditivity_as_printed(self):
        eps = 0.01
        A = np.diag([1.0, eps])
        B = np.diag([eps, 1.0])
        ones = np.ones((2, 2))
        r_sum = radius_full_search(A + B, ones).value
        r_a = radius_full_search(A, ones).value
        r_b = radius_full_search(B, ones).value
        assert r_sum <= r_a + r_b + 1e-7

    def test_sum_lipschitz_bound(self, rng):
        # r(A+B, Delta) <= r(A, Delta) + max_ij |B_ij| / Delta_ij: any
        # singular matrix within r(A) of A lies within r(A) + ||B|| of A+B.
        for _ in range(10):
            n = int(rng.integers(2, 6))
            A = rand_nonsingular(rng, n)
            B = rand_nonsingular(rng, n)
            Delta = rand_weights(rng, n) + 0.05  # bounded away from zero
            r_sum = radius_full_search(A + B, Delta).value
            r_a = radius_full_search(A, Delta).value
            norm_b = float(np.max(np.abs(B) / Delta))
            assert r_sum <= r_a + norm_b + 1e-7

    def test_weight_monotonicity(self, rng):
        # Delta <= Delta' entrywise shrinks no perturbation, so r only drops.
        for _ in range(10):
            n = int(rng.integers(2, 6))
            A = rand_nonsingular(rng, n)
            Delta = rand_weights(rng, n)
            bigger = Delta + rand_weights(rng, n)
            r_small = radius_full_search(A, Delta).value
            r_big = radius_full_search(A, bigger).value
            assert r_big <= r_small + 1e-7 or (r_big == INF and r_small == INF)
