"""One-call radius computation with method dispatch."""

from __future__ import annotations

import numpy as np

from .core import (
    DEFAULT_TOL,
    FULL_SEARCH,
    INF,
    ORTHANT_SEARCH,
    Certificate,
    ClassMismatch,
    RadiusResult,
    SingularInput,
    StructureMismatch,
    Tolerances,
    as_radius,
    as_square,
)
from .finiteness import is_radius_infinite
from .fullsearch import (
    extremal_sign,
    nearest_singular_certificate,
    radius_allones,
    radius_full_search,
)
from .orthant import radius_orthant_search
from .special import (
    INVERSE_NONNEGATIVE,
    TOTALLY_POSITIVE,
    detect_class,
    radius_inverse_nonnegative,
    radius_totally_positive,
)
from .tridiag import TridiagonalMatrix, TridiagonalRadius, tridiag_radius

AUTO = "auto"
FULL = "full"
ORTHANT = "orthant"
TRIDIAG = "tridiag"
CLOSED_FORM = "closed-form"
CLI_METHODS = (AUTO, FULL, ORTHANT, TRIDIAG, CLOSED_FORM)


def _full_result(A, Delta, tol, cap) -> RadiusResult:
    report = radius_full_search(A, Delta, tol, cap=cap)
    if report.value == 0.0 or report.value == INF or report.argmax_y is None:
        return RadiusResult(report.value, FULL_SEARCH)
    sign = extremal_sign(
        A, Delta, np.array(report.argmax_y, float), np.array(report.argmax_z, float), tol
    )
    S = nearest_singular_certificate(A, report, Delta, tol)
    y = tuple(int(sign * v) for v in report.argmax_y)
    return RadiusResult(
        report.value, FULL_SEARCH, certificate=Certificate(y, report.argmax_z, S)
    )


def _tridiag_weights(D: np.ndarray) -> TridiagonalRadius:
    n = D.shape[0]
    off = D.copy()
    np.fill_diagonal(off, 0.0)
    if n > 1:
        off[np.arange(n - 1), np.arange(1, n)] = 0.0
        off[np.arange(1, n), np.arange(n - 1)] = 0.0
    if np.any(off != 0.0):
        raise StructureMismatch("weights have entries outside the tridiagonal band")
    if n == 1:
        return TridiagonalRadius(np.diag(D).copy(), np.zeros(0), np.zeros(0))
    return TridiagonalRadius(
        np.diag(D).copy(),
        D[np.arange(n - 1), np.arange(1, n)].copy(),
        D[np.arange(1, n), np.arange(n - 1)].copy(),
    )


def regularity_radius(
    A,
    Delta=None,
    method: str = AUTO,
    tol: Tolerances = DEFAULT_TOL,
    full_cap: int = 10,
) -> RadiusResult:
    """Compute r(A, Delta); Delta=None means the all-ones weight matrix.

    method 'auto' detects totally positive / inverse nonnegative structure
    and uses the closed form, otherwise decides finiteness and runs the
    orthant search.  'full', 'orthant', 'tridiag' and 'closed-form' force
    one code path (tridiag requires tridiagonal zero structure in both A
    and Delta).
    """
    A = as_square(A)
    n = A.shape[0]
    D = np.ones((n, n)) if Delta is None else as_radius(Delta, n)

    if method == FULL:
        if Delta is None:
            return radius_allones(A, tol)
        return _full_result(A, D, tol, full_cap)

    if method == ORTHANT:
        try:
            trace = radius_orthant_search(A, D, tol)
        except SingularInput:
            return RadiusResult(0.0, ORTHANT_SEARCH)
        return trace.result

    if method == TRIDIAG:
        T = TridiagonalMatrix.from_dense(A)
        W = TridiagonalRadius.ones_like(T) if Delta is None else _tridiag_weights(D)
        return tridiag_radius(T, W, eps=tol.eps_bisect, tol=tol)

    if method == CLOSED_FORM:
        tag = detect_class(A, tol)
        if tag.kind == TOTALLY_POSITIVE:
            return radius_totally_positive(A, None if Delta is None else D, tol)
        if tag.kind == INVERSE_NONNEGATIVE:
            return radius_inverse_nonnegative(A, None if Delta is None else D, tol)
        raise ClassMismatch("matrix is neither totally positive nor inverse nonnegative")

    if method != AUTO:
        raise ValueError(f"unknown method {method!r}; choose from {CLI_METHODS}")

    try:
        tag = detect_class(A, tol)
    except SingularInput:
        return RadiusResult(0.0, ORTHANT_SEARCH)
    if tag.kind == TOTALLY_POSITIVE:
        return radius_totally_positive(A, None if Delta is None else D, tol)
    if tag.kind == INVERSE_NONNEGATIVE:
        return radius_inverse_nonnegative(A, None if Delta is None else D, tol)
    if is_radius_infinite(A, D, tol).infinite:
        return RadiusResult(INF, ORTHANT_SEARCH)
    return radius_orthant_search(A, D, tol).result
