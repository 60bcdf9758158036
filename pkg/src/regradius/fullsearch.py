"""Exact radius computation by enumerating sign-vector pairs.

The regularity radius of A with weight matrix Delta is

    r(A, Delta) = 1 / max_{y,z in {+-1}^n} rho0(A^{-1} D_y Delta D_z)

(Poljak-Rohn), where rho0 is the real spectral radius.  The maximum is 0
exactly when no sign pattern produces a real eigenvalue, in which case the
radius is infinite.  Enumeration fixes y_1 = +1 since (y, z) and (-y, -z)
give the same product, and walks pairs in Gray-code order so consecutive
products differ by a single row or column sign flip.  This is the
exponential ground truth every other module is validated against.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import (
    DEFAULT_TOL,
    INF,
    FULL_SEARCH,
    Certificate,
    CertificateFailed,
    DimensionTooLarge,
    Indeterminate,
    IntervalMatrix,
    RadiusResult,
    SingularInput,
    Tolerances,
    as_radius,
    as_square,
    invert,
    norm_inf1_argmax,
    real_spectral_radius,
)


@dataclass(frozen=True)
class FullSearchReport:
    """Outcome of the sign-pair enumeration.

    Ties in the maximal real spectral radius are broken toward the
    lexicographically smallest (y, z) under numeric tuple order, an
    artifact convention (no tie rule exists in the underlying formula).
    argmax vectors are None when A is singular (value 0) or when no pair
    produced a real eigenvalue (value inf).
    """

    value: float
    argmax_y: Optional[tuple]
    argmax_z: Optional[tuple]
    pairs_evaluated: int


def _gray_signs(n: int, code: int) -> tuple:
    """Decode a Gray code into (y, z) with y_1 fixed to +1."""
    y = np.ones(n)
    z = np.ones(n)
    for k in range(n - 1):
        if (code >> k) & 1:
            y[k + 1] = -1.0
    for k in range(n):
        if (code >> (n - 1 + k)) & 1:
            z[k] = -1.0
    return y, z


def radius_full_search(
    A, Delta, tol: Tolerances = DEFAULT_TOL, cap: int = 10
) -> FullSearchReport:
    """Exact r(A, Delta) over all 2^(2n-1) sign-vector pairs.

    Singular A short-circuits to value 0 with no argmax.  A maximum of 0
    yields value inf (no perturbation inside the weight pattern ever
    reaches a singular matrix).
    """
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    n = A.shape[0]
    if n > cap:
        raise DimensionTooLarge(f"n={n} exceeds the enumeration cap {cap}")
    try:
        Ainv = invert(A, tol)
    except SingularInput:
        return FullSearchReport(0.0, None, None, 0)

    pairs = 1 << (2 * n - 1)
    best = 0.0
    best_key = None
    best_yz = None
    for idx in range(pairs):
        y, z = _gray_signs(n, idx ^ (idx >> 1))
        rho = real_spectral_radius(Ainv @ (Delta * np.outer(y, z)), tol)
        if rho > best:
            best = rho
            best_yz = (y, z)
            best_key = (tuple(y), tuple(z))
        elif rho == best and best_yz is not None:
            key = (tuple(y), tuple(z))
            if key < best_key:
                best_yz = (y, z)
                best_key = key
    if best == 0.0:
        return FullSearchReport(INF, None, None, pairs)
    y, z = best_yz
    return FullSearchReport(
        1.0 / best, tuple(int(v) for v in y), tuple(int(v) for v in z), pairs
    )


def radius_allones(A, tol: Tolerances = DEFAULT_TOL, cap: int = 25) -> RadiusResult:
    """r(A) for the all-ones weight matrix: 1 / ||A^{-1}||_{inf,1}.

    The (inf,1) norm enumerates only 2^(n-1) sign vectors, so this scales
    further than the general search.  The result carries the rank-one
    nearest-singular certificate A - r * y z^T.
    """
    A = as_square(A)
    try:
        Ainv = invert(A, tol)
    except SingularInput:
        return RadiusResult(0.0, FULL_SEARCH)
    # ||A^{-1}||_{inf,1} = max_y ||A^{-1} y||_1 over sign vectors y.
    nrm, y = norm_inf1_argmax(Ainv, cap=cap)
    value = 1.0 / nrm
    w = Ainv @ y.astype(float)
    z = np.where(w >= 0.0, 1, -1)
    S = A - value * np.outer(y, z)
    cert = Certificate(tuple(int(v) for v in y), tuple(int(v) for v in z), S)
    return RadiusResult(value, FULL_SEARCH, certificate=cert)


def nearest_singular_certificate(
    A, report: FullSearchReport, Delta, tol: Tolerances = DEFAULT_TOL
) -> np.ndarray:
    """Materialize the singular member A - value * D_y Delta D_z and verify it.

    The enumeration maximizes the absolute value of real eigenvalues, so the
    extremal eigenvalue of A^{-1} D_y Delta D_z may be -1/value; since
    negating y flips its sign, the certificate uses the sign-normalized pair
    (the one whose extremal eigenvalue is positive).  S must lie in the
    interval matrix of radius value * Delta and be numerically singular
    (smallest singular value below tol_singular relative to sigma_1(A));
    otherwise CertificateFailed signals that the eigenvalue computation
    behind the report was too inaccurate.
    """
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    if not math.isfinite(report.value):
        raise ValueError("no certificate exists for an infinite radius")
    if report.argmax_y is None or report.argmax_z is None:
        raise ValueError("report carries no maximizing sign vectors")
    y = np.asarray(report.argmax_y, dtype=float)
    z = np.asarray(report.argmax_z, dtype=float)
    S = A - report.value * (Delta * np.outer(extremal_sign(A, Delta, y, z, tol) * y, z))
    sigma = np.linalg.svd(S, compute_uv=False)
    sigma_a = np.linalg.svd(A, compute_uv=False)
    if sigma[-1] > tol.tol_singular * sigma_a[0]:
        raise CertificateFailed(
            f"claimed singular matrix has sigma_min {sigma[-1]:.3e}"
        )
    box = IntervalMatrix(A, report.value * Delta)
    if not box.contains(S, slack=1e-12 * (1.0 + np.abs(A).max())):
        raise CertificateFailed("certificate leaves the perturbation interval")
    return S


def extremal_sign(A, Delta, y, z, tol: Tolerances = DEFAULT_TOL) -> float:
    """Sign of the largest-magnitude real eigenvalue of A^{-1} D_y Delta D_z."""
    M = invert(A, tol) @ (Delta * np.outer(y, z))
    w = np.linalg.eigvals(M)
    realish = np.abs(w.imag) <= tol.eps_imag * (1.0 + np.abs(w))
    if not np.any(realish):
        raise CertificateFailed("pair has no real eigenvalue to certify")
    lam = w.real[realish]
    return 1.0 if lam[np.argmax(np.abs(lam))] >= 0.0 else -1.0


def is_regular_oracle(
    A, Delta, delta: float, tol: Tolerances = DEFAULT_TOL, cap: int = 10
) -> bool:
    """Regularity of [A - delta*Delta, A + delta*Delta] via the exact radius.

    True iff delta < r(A, Delta) with an eps_bisect guard band; queries
    inside the band raise Indeterminate rather than guessing.
    """
    if delta < 0.0:
        raise ValueError("delta must be nonnegative")
    if delta == 0.0:
        try:
            invert(as_square(A), tol)
            return True
        except SingularInput:
            return False
    value = radius_full_search(A, Delta, tol, cap=cap).value
    if delta < value - tol.eps_bisect:
        return True
    if delta > value + tol.eps_bisect:
        return False
    raise Indeterminate(
        f"delta={delta!r} lies within the tolerance band around the radius {value!r}"
    )


def regular_by_vertex_determinants(A, R) -> bool:
    """Debug cross-check: regular iff all vertex determinants share one sign.

    The vertices of [A - R, A + R] under rank-one sign patterns are
    A - D_y R D_z; the interval matrix is regular exactly when their
    determinants are nonzero and of equal sign.  Exponential; used only to
    validate the oracle in tests.
    """
    A = as_square(A)
    R = as_radius(R, A.shape[0])
    n = A.shape[0]
    ref = 0.0
    for idx in range(1 << (2 * n - 1)):
        y, z = _gray_signs(n, idx ^ (idx >> 1))
        det = float(np.linalg.det(A - R * np.outer(y, z)))
        if det == 0.0:
            return False
        if ref == 0.0:
            ref = det
        elif ref * det < 0.0:
            return False
    return True
