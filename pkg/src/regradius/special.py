"""Closed-form radii for special matrix classes and rank-one weight tricks.

Totally positive matrices (all minors positive) have inverses with
checkerboard signs, which collapses the exponential sign search to a
single evaluation.  Inverse nonnegative matrices (A^{-1} >= 0, a superclass
of nonsingular M-matrices) collapse it to a Perron root.  A rank-one weight
matrix u v^T reduces the weighted radius to the all-ones radius of a
diagonally rescaled matrix, which in turn powers a rank-one approximation
scheme for arbitrary weights.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

import numpy as np

from .bounds import perron_root
from .core import (
    CLOSED_FORM_INVNN,
    CLOSED_FORM_TP,
    DEFAULT_TOL,
    INF,
    Certificate,
    ClassMismatch,
    NonpositiveWeights,
    RadiusResult,
    Tolerances,
    ZeroRadiusMatrix,
    as_radius,
    as_square,
    invert,
)
from .fullsearch import radius_allones, radius_full_search

TOTALLY_POSITIVE = "totally-positive"
INVERSE_NONNEGATIVE = "inverse-nonnegative"
NEITHER = "neither"

_MINOR_EPS = 1e-10
_FULL_MINOR_CAP = 6


@dataclass(frozen=True)
class ClassTag:
    kind: str
    evidence: str


@dataclass(frozen=True)
class RankOneApprox:
    """Best rank-one surrogate B = sigma_1 u_1 v_1^T of a weight matrix,
    with the tightest all-ones brackets alpha e e^T <= Delta <= beta e e^T."""

    B: np.ndarray
    alpha: float
    beta: float


def _checkerboard(n: int) -> np.ndarray:
    s = np.ones(n)
    s[1::2] = -1.0
    return s


def _all_minors_positive(A: np.ndarray, eps: float) -> bool:
    n = A.shape[0]
    idx = range(n)
    for k in range(1, n + 1):
        for rows in combinations(idx, k):
            for cols in combinations(idx, k):
                if np.linalg.det(A[np.ix_(rows, cols)]) <= eps:
                    return False
    return True


def _initial_minors_positive(A: np.ndarray, eps: float) -> bool:
    # Gasca-Pena: positivity of all initial minors (contiguous row/column
    # windows, one of which starts at the first index) certifies total
    # positivity in O(n^2) determinant evaluations.
    n = A.shape[0]
    for k in range(1, n + 1):
        for i in range(n - k + 1):
            if np.linalg.det(A[i : i + k, 0:k]) <= eps:
                return False
            if np.linalg.det(A[0:k, i : i + k]) <= eps:
                return False
    return True


def is_totally_positive(A, eps: float = _MINOR_EPS, full_cap: int = _FULL_MINOR_CAP) -> bool:
    """Strict total positivity; exhaustive minors up to full_cap, initial minors beyond."""
    A = as_square(A)
    if A.shape[0] <= full_cap:
        return _all_minors_positive(A, eps)
    return _initial_minors_positive(A, eps)


def detect_class(A, tol: Tolerances = DEFAULT_TOL, full_cap: int = _FULL_MINOR_CAP) -> ClassTag:
    """Classify A as totally positive, inverse nonnegative, or neither.

    Total positivity is tested first (for n = 1 a positive scalar is both,
    and the TP closed form applies).  Inverse nonnegativity allows a -1e-12
    slack on inverse entries for roundoff.
    """
    A = as_square(A)
    n = A.shape[0]
    Ainv = invert(A, tol)
    if is_totally_positive(A, full_cap=full_cap):
        how = "all minors" if n <= full_cap else "all initial minors"
        s = _checkerboard(n)
        if np.any(np.sign(Ainv) != np.outer(s, s)):
            raise ClassMismatch("positive minors but no checkerboard inverse")
        return ClassTag(TOTALLY_POSITIVE, f"{how} positive; inverse is checkerboard")
    if np.all(Ainv >= -1e-12 * (1.0 + np.abs(Ainv).max())):
        return ClassTag(INVERSE_NONNEGATIVE, "all inverse entries nonnegative")
    return ClassTag(NEITHER, "inverse has mixed signs and some minor is nonpositive")


def radius_totally_positive(A, Delta=None, tol: Tolerances = DEFAULT_TOL) -> RadiusResult:
    """Closed-form radius for a totally positive matrix.

    All-ones weights: r = 1 / (s^T A^{-1} s) with the alternating sign
    vector s, since |A^{-1}| = D_s A^{-1} D_s.  General weights: the sign
    search collapses to r = 1 / rho(D_s A^{-1} D_s Delta); this variant is
    additionally validated against the full search in the test suite.
    """
    A = as_square(A)
    n = A.shape[0]
    Ainv = invert(A, tol)
    s = _checkerboard(n)
    if np.any(np.sign(Ainv) != np.outer(s, s)):
        raise ClassMismatch("inverse does not have the checkerboard sign pattern")
    sign_tuple = tuple(int(v) for v in s)
    if Delta is None:
        value = 1.0 / float(s @ Ainv @ s)
        S = A - value * np.outer(s, s)
    else:
        Delta = as_radius(Delta, n)
        rho = perron_root((s[:, None] * Ainv * s[None, :]) @ Delta)
        if rho <= 0.0:
            return RadiusResult(INF, CLOSED_FORM_TP)
        value = 1.0 / rho
        S = A - value * (Delta * np.outer(s, s))
    cert = Certificate(sign_tuple, sign_tuple, S)
    return RadiusResult(value, CLOSED_FORM_TP, certificate=cert)


def radius_inverse_nonnegative(A, Delta=None, tol: Tolerances = DEFAULT_TOL) -> RadiusResult:
    """Closed-form radius for an inverse nonnegative matrix.

    All-ones weights: r = 1 / (e^T A^{-1} e).  General weights:
    r = 1 / rho(A^{-1} Delta), the attained Perron lower bound.
    """
    A = as_square(A)
    n = A.shape[0]
    Ainv = invert(A, tol)
    if np.any(Ainv < -1e-12 * (1.0 + np.abs(Ainv).max())):
        raise ClassMismatch("inverse has negative entries")
    ones = tuple(1 for _ in range(n))
    if Delta is None:
        value = 1.0 / float(Ainv.sum())
        S = A - value * np.ones((n, n))
    else:
        Delta = as_radius(Delta, n)
        rho = perron_root(np.clip(Ainv, 0.0, None) @ Delta)
        if rho <= 0.0:
            return RadiusResult(INF, CLOSED_FORM_INVNN)
        value = 1.0 / rho
        S = A - value * Delta
    return RadiusResult(value, CLOSED_FORM_INVNN, certificate=Certificate(ones, ones, S))


def reduce_rank_one(A, u, v) -> np.ndarray:
    """Rescale A so that weights u v^T reduce to all-ones weights.

    r(A, u v^T) = r(D_u^{-1} A D_v^{-1}) for strictly positive u, v; the
    returned matrix feeds radius_allones.
    """
    A = as_square(A)
    u = np.asarray(u, dtype=float).ravel()
    v = np.asarray(v, dtype=float).ravel()
    if u.size != A.shape[0] or v.size != A.shape[0]:
        raise ValueError("weight vectors must match the matrix dimension")
    if np.any(u <= 0.0) or np.any(v <= 0.0):
        raise NonpositiveWeights("rank-one reduction needs u > 0 and v > 0")
    return A / np.outer(u, v)


def approximate_by_rank_one(A, Delta, tol: Tolerances = DEFAULT_TOL, cap: int = 10):
    """Approximate r(A, Delta) through the best rank-one surrogate of Delta.

    Returns (RankOneApprox, approx_radius, lower, upper) where
    approx_radius = r(A, B) for B = sigma_1 u_1 v_1^T and
    (1/beta) r(A, ee^T) <= r(A, Delta) <= (1/alpha) r(A, ee^T) with
    alpha = min Delta, beta = max Delta (upper = inf when alpha = 0).

    For nonnegative Delta the leading singular vectors admit a nonnegative
    choice; they are sign-normalized and tiny negative components are
    clipped.  When B has zeros (reducible Delta) the scaling reduction does
    not apply and the surrogate radius falls back to the full search.
    """
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    if not np.any(Delta > 0.0):
        raise ZeroRadiusMatrix("weight matrix is identically zero")
    U, s, Vt = np.linalg.svd(Delta)
    u1, v1 = U[:, 0], Vt[0]
    if u1.sum() < 0.0:
        u1, v1 = -u1, -v1
    scale = 1e-12 * (1.0 + float(s[0]))
    u1 = np.where(np.abs(u1) < scale, 0.0, u1)
    v1 = np.where(np.abs(v1) < scale, 0.0, v1)
    if np.any(u1 < 0.0) or np.any(v1 < 0.0):
        # Perron-Frobenius guarantees this never fires for Delta >= 0.
        raise ZeroRadiusMatrix("leading singular vectors are not sign-consistent")
    B = s[0] * np.outer(u1, v1)
    approx = RankOneApprox(B, alpha=float(Delta.min()), beta=float(Delta.max()))

    if np.all(u1 > 0.0) and np.all(v1 > 0.0):
        approx_radius = radius_allones(reduce_rank_one(A, s[0] * u1, v1), tol).value
    else:
        approx_radius = radius_full_search(A, B, tol, cap=cap).value

    base = radius_allones(A, tol).value
    lower = base / approx.beta
    upper = base / approx.alpha if approx.alpha > 0.0 else INF
    return approx, approx_radius, lower, upper
