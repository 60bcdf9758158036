"""Shared instance builders for the test suite."""

import numpy as np
import pytest

from regradius.special import is_totally_positive


def rand_nonsingular(rng, n, lo=-5.0, hi=5.0, cond_cap=1e8):
    """Uniform random matrix, redrawn until reasonably conditioned."""
    for _ in range(100):
        A = rng.uniform(lo, hi, (n, n))
        if np.linalg.cond(A) <= cond_cap:
            return A
    raise AssertionError("could not draw a well-conditioned matrix")


def rand_weights(rng, n):
    return rng.uniform(0.0, 1.0, (n, n))


def rand_inverse_nonnegative(rng, n, cond_cap=1e8):
    """A = B^{-1} for a nonnegative well-conditioned B."""
    for _ in range(100):
        B = rng.uniform(0.0, 1.0, (n, n))
        if np.linalg.cond(B) <= cond_cap:
            return np.linalg.inv(B)
    raise AssertionError("could not draw a well-conditioned nonnegative matrix")


def rand_totally_positive(rng, n):
    """Strictly totally positive matrix built from nonnegative bidiagonal factors.

    Products of elementary lower/upper bidiagonal factors with positive
    parameters and a positive diagonal are totally nonnegative; enough full
    sweeps make them strictly totally positive, which is verified by the
    exhaustive minor test (and redrawn otherwise).
    """
    for _ in range(50):
        A = np.diag(rng.uniform(0.5, 2.0, n))
        for _sweep in range(max(2, n)):
            for i in range(1, n):
                L = np.eye(n)
                L[i, i - 1] = rng.uniform(0.2, 1.5)
                A = L @ A
                U = np.eye(n)
                U[i - 1, i] = rng.uniform(0.2, 1.5)
                A = A @ U
        A = A / np.abs(A).max()
        if is_totally_positive(A):
            return A
    raise AssertionError("could not build a strictly totally positive matrix")


@pytest.fixture
def rng():
    return np.random.default_rng(20240817)
