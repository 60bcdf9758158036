"""Polynomial-time decision of an infinite regularity radius.

The interval matrix [A - delta*Delta, A + delta*Delta] stays regular for
every delta exactly when |Ax| <= Delta|x| forces x = 0.  The decision runs
a fixed-point sweep: rows of Delta that are identically zero pin A_k* x = 0;
coordinates forced to zero on that subspace cannot help any perturbation,
so their Delta column entries are zeroed, possibly emptying further rows.
The radius is infinite iff every row index ends up pinned.

A coordinate j is forced to zero on the null space of a row set exactly
when e_j lies in their row space, decided by a rank test (floating by
default, exact rational arithmetic behind a flag for borderline cases).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .core import DEFAULT_TOL, SingularInput, Tolerances, as_radius, as_square, invert, rank


@dataclass(frozen=True)
class FinitenessReport:
    infinite: bool
    final_index_set: tuple
    zeroed_positions: tuple
    iterations: int


def _rank_exact(rows) -> int:
    """Row rank over the rationals (entries converted exactly from floats)."""
    mat = [[Fraction(x) for x in row] for row in rows]
    r = 0
    ncols = len(mat[0]) if mat else 0
    for col in range(ncols):
        piv = next((i for i in range(r, len(mat)) if mat[i][col] != 0), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv = 1 / mat[r][col]
        mat[r] = [x * inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][col] != 0:
                f = mat[i][col]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        r += 1
    return r


def _forced_coordinates(A: np.ndarray, pinned, tol: Tolerances, exact: bool):
    """Indices j with x_j = 0 on {x : A_k* x = 0 for k in pinned}."""
    n = A.shape[0]
    rows = A[sorted(pinned)]
    if exact:
        base = _rank_exact(rows.tolist())
        forced = set()
        for j in range(n):
            ej = [0.0] * n
            ej[j] = 1.0
            if _rank_exact(rows.tolist() + [ej]) == base:
                forced.add(j)
        return forced
    base = rank(rows, tol)
    forced = set()
    for j in range(n):
        ej = np.zeros((1, n))
        ej[0, j] = 1.0
        if rank(np.vstack([rows, ej]), tol) == base:
            forced.add(j)
    return forced


def is_radius_infinite(
    A, Delta, tol: Tolerances = DEFAULT_TOL, exact: bool = False
) -> FinitenessReport:
    """Decide r(A, Delta) = inf by the fixed-point zeroing procedure.

    A must be nonsingular (a singular A has radius 0, trivially finite;
    SingularInput is raised to keep that case explicit).  The pinned index
    set only grows, so at most n sweeps run.  exact=True replays every rank
    decision in rational arithmetic.
    """
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    invert(A, tol)
    n = A.shape[0]

    work = Delta.copy()
    pinned = {k for k in range(n) if not np.any(work[k] > 0.0)}
    zeroed = []
    iterations = 0
    while pinned and len(pinned) < n:
        iterations += 1
        forced = _forced_coordinates(A, pinned, tol, exact)
        for j in sorted(forced):
            hit = np.nonzero(work[:, j] > 0.0)[0]
            zeroed.extend((int(i), int(j)) for i in hit)
            work[hit, j] = 0.0
        new_pinned = {k for k in range(n) if not np.any(work[k] > 0.0)}
        assert pinned <= new_pinned  # the index set never shrinks
        if new_pinned == pinned:
            break
        pinned = new_pinned
    return FinitenessReport(
        infinite=(len(pinned) == n),
        final_index_set=tuple(sorted(pinned)),
        zeroed_positions=tuple(zeroed),
        iterations=iterations,
    )


def finiteness_sufficient(Delta) -> bool:
    """Quick sufficient test: all row sums or all column sums of Delta positive.

    True guarantees a finite radius for every A; False is inconclusive.
    """
    Delta = as_radius(Delta)
    return bool(np.all(Delta.sum(axis=1) > 0.0) or np.all(Delta.sum(axis=0) > 0.0))


def max_nonzeros_for_infinite(n: int):
    """Largest nonzero count of Delta compatible with an infinite radius: n(n-1)/2.

    Returns (count, witness_A, witness_Delta) where the witness pair
    (identity, strict upper triangle of ones) attains the count.
    """
    if n < 1:
        raise ValueError("n must be positive")
    count = n * (n - 1) // 2
    witness_delta = np.triu(np.ones((n, n)), k=1)
    return count, np.eye(n), witness_delta
