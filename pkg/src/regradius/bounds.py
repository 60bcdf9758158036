"""Polynomial-time lower and upper bounds on the regularity radius.

All bounds stem from classical regularity criteria for interval matrices:
Rump's spectral conditions, the Demmel entrywise bound, Rohn's diagonal
upper bound, the gamma(n)-scaled Perron sandwich, and two bounds specific
to the all-ones weight matrix derived from the Chebyshev/spectral norm
equivalence and from the singular vectors at sigma_min.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .core import (
    DEFAULT_TOL,
    INF,
    EigenFailure,
    Tolerances,
    as_radius,
    as_square,
    invert,
)


@dataclass(frozen=True)
class BoundSet:
    """Named lower/upper bounds with their envelope."""

    lower: tuple
    upper: tuple

    @property
    def best_lower(self) -> float:
        return max((v for _, v in self.lower), default=0.0)

    @property
    def best_upper(self) -> float:
        return min((v for _, v in self.upper), default=INF)


def perron_root(M) -> float:
    """Spectral radius of a nonnegative matrix (its Perron root)."""
    M = np.asarray(M, dtype=float)
    if np.any(M < 0.0):
        raise ValueError("Perron root is defined here for nonnegative matrices")
    try:
        w = np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise EigenFailure("eigenvalue iteration did not converge") from exc
    return float(np.max(np.abs(w)))


def gamma_factor(n: int) -> float:
    """Rump's dimension factor 2.4 * n^1.7 closing the Perron sandwich."""
    return 2.4 * float(n) ** 1.7


def bound_spectral_lower(A, Delta, tol: Tolerances = DEFAULT_TOL) -> float:
    """max of the two Rump lower bounds: 1/rho(|A^-1| Delta) and sigma_n(A)/sigma_1(Delta).

    Either bound may be inf (nilpotent |A^-1| Delta, or Delta = 0), which is
    consistent: the radius itself is then infinite.
    """
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    Ainv = invert(A, tol)
    rho = perron_root(np.abs(Ainv) @ Delta)
    lower_rho = 1.0 / rho if rho > 0.0 else INF
    sa = np.linalg.svd(A, compute_uv=False)
    sd = np.linalg.svd(Delta, compute_uv=False)
    lower_sigma = sa[-1] / sd[0] if sd[0] > 0.0 else INF
    return max(lower_rho, lower_sigma)


def bound_demmel(A, Delta, tol: Tolerances = DEFAULT_TOL):
    """Demmel sandwich: 1/rho(|A^-1| Delta) <= r <= 1/max_ij |A^-1|_ij Delta_ij."""
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    Ainv = invert(A, tol)
    rho = perron_root(np.abs(Ainv) @ Delta)
    lower = 1.0 / rho if rho > 0.0 else INF
    peak = float(np.max(np.abs(Ainv) * Delta))
    upper = 1.0 / peak if peak > 0.0 else INF
    return lower, upper


def bound_rohn_upper(A, Delta, tol: Tolerances = DEFAULT_TOL) -> float:
    """Rohn's upper bound 1 / max_i (|A^-1| Delta)_ii; inf when the diagonal vanishes."""
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    Ainv = invert(A, tol)
    diag_peak = float(np.max(np.diag(np.abs(Ainv) @ Delta)))
    return 1.0 / diag_peak if diag_peak > 0.0 else INF


def bound_gamma_sandwich(A, Delta, tol: Tolerances = DEFAULT_TOL):
    """Perron sandwich 1/rho <= r <= gamma(n)/rho with rho = rho(|A^-1| Delta)."""
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    Ainv = invert(A, tol)
    rho = perron_root(np.abs(Ainv) @ Delta)
    if rho <= 0.0:
        return INF, INF
    lower = 1.0 / rho
    return lower, gamma_factor(A.shape[0]) * lower


def bound_chebyshev_spectral(A, tol: Tolerances = DEFAULT_TOL):
    """All-ones-weight sandwich sigma_min(A)/n <= r(A) <= sigma_min(A).

    Follows from ||M||_max <= ||M||_2 <= n ||M||_max and the fact that the
    spectral-norm distance to singularity is exactly sigma_min.
    """
    A = as_square(A)
    invert(A, tol)  # reject singular input
    sigma_min = float(np.linalg.svd(A, compute_uv=False)[-1])
    return sigma_min / A.shape[0], sigma_min


def bound_sign_vector_upper(A, tol: Tolerances = DEFAULT_TOL) -> float:
    """All-ones-weight upper bound from the singular vectors at sigma_min.

    With u, v the left/right singular vectors of sigma_min(A) and
    y = sgn(u), z = sgn(v), the rank-one matrix A^-1 y z^T has the single
    nonzero eigenvalue z^T A^-1 y, so 1/|z^T A^-1 y| bounds the radius from
    above (inf when that trace vanishes).  Zero components sign to +1.
    """
    A = as_square(A)
    Ainv = invert(A, tol)
    U, _, Vt = np.linalg.svd(A)
    u = U[:, -1]
    v = Vt[-1]
    y = np.where(u >= 0.0, 1.0, -1.0)
    z = np.where(v >= 0.0, 1.0, -1.0)
    trace = abs(float(z @ Ainv @ y))
    return 1.0 / trace if trace > 0.0 else INF


def compute_bounds(A, Delta=None, tol: Tolerances = DEFAULT_TOL) -> BoundSet:
    """Assemble every applicable bound; all-ones-only bounds join when Delta is None
    or exactly the all-ones matrix."""
    A = as_square(A)
    n = A.shape[0]
    ones = Delta is None or bool(np.all(np.asarray(Delta, dtype=float) == 1.0))
    D = np.ones((n, n)) if Delta is None else as_radius(Delta, n)

    g_lower, g_upper = bound_gamma_sandwich(A, D, tol)
    _, d_upper = bound_demmel(A, D, tol)
    sa = np.linalg.svd(A, compute_uv=False)
    sd = np.linalg.svd(D, compute_uv=False)
    sigma_lower = sa[-1] / sd[0] if sd[0] > 0.0 else INF

    lower = [("perron", g_lower), ("sigma-ratio", sigma_lower)]
    upper = [
        ("demmel-entrywise", d_upper),
        ("rohn-diagonal", bound_rohn_upper(A, D, tol)),
        ("gamma-perron", g_upper),
    ]
    if ones:
        c_lower, c_upper = bound_chebyshev_spectral(A, tol)
        lower.append(("chebyshev", c_lower))
        upper.append(("chebyshev", c_upper))
        upper.append(("sign-vector", bound_sign_vector_upper(A, tol)))
    return BoundSet(tuple(lower), tuple(upper))
