"""Best-first orthant walk for the regularity radius.

The radius equals the smallest delta at which some sign vector s admits a
nonzero x with D_s x >= 0 and |Ax| <= delta * Delta D_s x (an Oettli-Prager
recession direction), i.e. r(A, Delta) = min over orthants of delta_e(s).
Rather than scanning all 2^n orthants, the walk starts in the nonnegative
orthant (x = e solves A x = A e there for every delta) and expands
neighbors ordered by the delta at which the solution set of A x = A e first
reaches them, in the spirit of Jansson-Rohn regularity checking.  The
frontier is a global best-first heap with a visited set, so the walk
cannot cycle; it stops once the best unbounded-at delta seen so far cannot
be beaten by any unexplored orthant.  Worst case remains exponential, but
typically only a few orthants are ever expanded.

Each delta query is a bisection over LP feasibility: for fixed s the
feasible delta set of either Oettli-Prager system is upward closed
(Delta D_s x >= 0 on the orthant), so bisection is sound.  This replaces
a generalized-linear-fractional solve with an exact feasibility oracle.
"""

from __future__ import annotations

import heapq
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .bounds import bound_rohn_upper
from .core import (
    DEFAULT_TOL,
    INF,
    ORTHANT_SEARCH,
    FrontierExhausted,
    InfiniteRadius,
    RadiusResult,
    Tolerances,
    as_radius,
    as_sign_vector,
    as_square,
)
from .finiteness import is_radius_infinite
from .lp import EQ, LEQ, LinearSystem, lp_feasible

_MAX_BISECT = 200


@dataclass
class _LpStats:
    calls: int = 0


@dataclass(frozen=True)
class VisitedOrthant:
    signs: tuple
    delta_e: float  # inf when above the bracket
    neighbor_deltas: dict


@dataclass(frozen=True)
class OrthantTrace:
    """Search trajectory: expansion order, per-orthant deltas, LP effort.

    result.value is the smallest delta_e over the visited orthants; with
    best-first expansion the minimizer need not be the last entry, so
    best_index points at it.
    """

    visited: tuple
    lp_calls: int
    result: RadiusResult
    best_index: int


def _recession_system(A, Delta, s, delta):
    """System: solution set of |Ax| <= delta Delta D_s x unbounded in orthant s."""
    n = A.shape[0]
    DS = Delta * s[None, :]
    lhs = np.vstack([A - delta * DS, -A - delta * DS, -np.diag(s), s[None, :].astype(float)])
    rhs = np.zeros(3 * n + 1)
    rhs[-1] = 1.0
    return LinearSystem(lhs, (LEQ,) * (3 * n) + (EQ,), rhs)


def _intersection_system(A, b, Delta, s, delta):
    """System: solution set of A x = b within radius delta meets orthant s."""
    n = A.shape[0]
    DS = Delta * s[None, :]
    lhs = np.vstack([A - delta * DS, -A - delta * DS, -np.diag(s)])
    rhs = np.concatenate([b, -b, np.zeros(n)])
    return LinearSystem(lhs, (LEQ,) * (3 * n), rhs)


def _bisect_min_feasible(pred, upper, eps, check_zero):
    """Smallest delta in [0, upper] with pred true, to within eps (relative
    below 1).  Returns (value, achieved_tolerance); (inf, inf) when pred
    fails even at upper."""
    if check_zero and pred(0.0):
        return 0.0, 0.0
    if not pred(upper):
        return INF, INF
    lo, hi = 0.0, upper
    for _ in range(_MAX_BISECT):
        if hi - lo <= eps * min(1.0, hi):
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if pred(mid):
            hi = mid
        else:
            lo = mid
    return hi, hi - lo


def delta_unbounded(
    A, Delta, s, upper: float, tol: Tolerances = DEFAULT_TOL, stats: Optional[_LpStats] = None
) -> float:
    """Minimal delta <= upper with a nontrivial recession direction in orthant s.

    Returns inf when even delta = upper admits none.  delta = 0 is never
    feasible for nonsingular A, so bisection starts from a known-infeasible
    floor.
    """
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    s = as_sign_vector(s, A.shape[0])

    def pred(delta):
        if stats is not None:
            stats.calls += 1
        return lp_feasible(_recession_system(A, Delta, s, delta), tol).feasible

    value, _ = _bisect_min_feasible(pred, upper, tol.eps_bisect, check_zero=False)
    return value


def delta_intersect(
    A, b, Delta, s, upper: float, tol: Tolerances = DEFAULT_TOL, stats: Optional[_LpStats] = None
) -> float:
    """Minimal delta <= upper at which the solution set of Ax = b meets orthant s."""
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    s = as_sign_vector(s, A.shape[0])
    b = np.asarray(b, dtype=float).ravel()

    def pred(delta):
        if stats is not None:
            stats.calls += 1
        return lp_feasible(_intersection_system(A, b, Delta, s, delta), tol).feasible

    value, _ = _bisect_min_feasible(pred, upper, tol.eps_bisect, check_zero=True)
    return value


def _run_search(A, Delta, upper, tol):
    n = A.shape[0]
    b = A @ np.ones(n)
    stats = _LpStats()
    start = tuple([1] * n)
    frontier = [(0.0, start)]
    seen_keys = {start: 0.0}
    visited = set()
    order = []
    best_value = INF
    best_tol = INF

    while frontier:
        key, signs = heapq.heappop(frontier)
        if signs in visited:
            continue
        # Nothing left on the frontier can beat the best unbounded-at delta:
        # any deeper orthant is entered at delta >= key already.
        if best_value <= key + 10.0 * tol.eps_bisect * min(1.0, best_value):
            break
        s = np.array(signs)

        def pred_e(delta, s=s):
            stats.calls += 1
            return lp_feasible(_recession_system(A, Delta, s, delta), tol).feasible

        d_e, d_e_tol = _bisect_min_feasible(pred_e, upper, tol.eps_bisect, check_zero=False)
        if d_e < best_value:
            best_value, best_tol = d_e, d_e_tol

        neighbors = {}
        for i in range(n):
            flipped = list(signs)
            flipped[i] = -flipped[i]
            nb = tuple(flipped)
            if nb in visited:
                continue
            sn = np.array(nb)

            def pred_s(delta, sn=sn):
                stats.calls += 1
                return lp_feasible(_intersection_system(A, b, Delta, sn, delta), tol).feasible

            d_s, _ = _bisect_min_feasible(pred_s, upper, tol.eps_bisect, check_zero=True)
            neighbors[i] = d_s
            if math.isfinite(d_s) and d_s < seen_keys.get(nb, INF):
                seen_keys[nb] = d_s
                heapq.heappush(frontier, (d_s, nb))

        visited.add(signs)
        order.append(VisitedOrthant(signs, d_e, neighbors))

    if not math.isfinite(best_value):
        raise FrontierExhausted(f"no unbounded orthant found below the bracket {upper!r}")
    best_index = min(range(len(order)), key=lambda i: order[i].delta_e)
    result = RadiusResult(
        best_value,
        ORTHANT_SEARCH,
        tolerance=best_tol + 10.0 * tol.eps_bisect * min(1.0, best_value),
    )
    return OrthantTrace(tuple(order), stats.calls, result, best_index)


def radius_orthant_search(
    A, Delta, tol: Tolerances = DEFAULT_TOL, upper: Optional[float] = None
) -> OrthantTrace:
    """Compute r(A, Delta) by the best-first orthant walk.

    An infinite radius is rejected up front via the finiteness decision
    (raising InfiniteRadius).  The bracket is the Rohn upper bound with a
    small margin; if that bound is infinite while the radius is finite, the
    bracket doubles until the walk succeeds.
    """
    A = as_square(A)
    Delta = as_radius(Delta, A.shape[0])
    report = is_radius_infinite(A, Delta, tol)  # raises SingularInput for singular A
    if report.infinite:
        raise InfiniteRadius("the finiteness procedure pinned every row")
    if upper is not None:
        return _run_search(A, Delta, upper, tol)
    bracket = bound_rohn_upper(A, Delta, tol)
    bracket = 1.0 if math.isinf(bracket) else bracket * (1.0 + 1e-6)
    for _ in range(60):
        try:
            return _run_search(A, Delta, bracket, tol)
        except FrontierExhausted:
            bracket *= 2.0
    raise FrontierExhausted("bracket growth exhausted without finding the radius")
