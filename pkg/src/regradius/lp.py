"""Self-contained LP feasibility oracle.

Phase-one simplex with Bland's rule on a dense numpy tableau.  Only
feasibility is decided; there is no phase two.  Variables are free:
each x_j is split into x_j^+ - x_j^-.  Bland's rule (always the lowest
eligible index) guarantees termination without cycling and makes the
answer and witness deterministic for identical inputs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .core import DEFAULT_TOL, Indeterminate, Tolerances

LEQ = "<="
EQ = "=="

_PIVOT_EPS = 1e-11


@dataclass(frozen=True)
class LinearSystem:
    """Constraints lhs[i] . x (<= or ==) rhs[i]; x unrestricted in sign."""

    lhs: np.ndarray
    relations: tuple
    rhs: np.ndarray

    def __post_init__(self) -> None:
        lhs = np.atleast_2d(np.asarray(self.lhs, dtype=float))
        rhs = np.asarray(self.rhs, dtype=float).ravel()
        if lhs.shape[0] != rhs.size or lhs.shape[0] != len(self.relations):
            raise ValueError("inconsistent row counts")
        if not (np.all(np.isfinite(lhs)) and np.all(np.isfinite(rhs))):
            raise ValueError("system entries must be finite")
        for rel in self.relations:
            if rel not in (LEQ, EQ):
                raise ValueError(f"unknown relation {rel!r}")
        object.__setattr__(self, "lhs", lhs)
        object.__setattr__(self, "rhs", rhs)
        object.__setattr__(self, "relations", tuple(self.relations))

    @property
    def m(self) -> int:
        return self.lhs.shape[0]

    @property
    def n(self) -> int:
        return self.lhs.shape[1]

    def violation(self, x) -> float:
        """Worst row-scaled constraint violation of x (0 means feasible)."""
        x = np.asarray(x, dtype=float)
        gap = self.lhs @ x - self.rhs
        leq = np.fromiter((rel == LEQ for rel in self.relations), dtype=bool, count=self.m)
        v = np.where(leq, np.maximum(gap, 0.0), np.abs(gap))
        scale = 1.0 + np.abs(self.lhs) @ np.abs(x) + np.abs(self.rhs)
        return float(np.max(v / scale)) if self.m else 0.0


@dataclass(frozen=True)
class FeasibilityAnswer:
    feasible: bool
    witness: Optional[np.ndarray]
    max_violation: float


def lp_feasible(
    system: LinearSystem, tol: Tolerances = DEFAULT_TOL, max_pivots: Optional[int] = None
) -> FeasibilityAnswer:
    """Decide feasibility of the system; feasible answers carry a verified witness.

    The verdict is witness-driven: the point extracted at the phase-one
    optimum is accepted exactly when its worst scaled violation is within
    eps_lp, keeping the mandatory re-check and the answer consistent.
    Raises Indeterminate when the pivot budget (default 50 * (m + n)) is
    exhausted, never returning a silent wrong answer.
    """
    m, n = system.m, system.n
    n_slack = sum(1 for rel in system.relations if rel == LEQ)

    # Columns: x+ (n) | x- (n) | slacks (n_slack) | artificials (m) | rhs.
    ncols = 2 * n + n_slack + m
    T = np.zeros((m, ncols + 1))
    T[:, :n] = system.lhs
    T[:, n : 2 * n] = -system.lhs
    k = 0
    for i, rel in enumerate(system.relations):
        if rel == LEQ:
            T[i, 2 * n + k] = 1.0
            k += 1
    T[:, -1] = system.rhs
    neg = T[:, -1] < 0.0
    T[neg] *= -1.0
    art0 = 2 * n + n_slack
    T[np.arange(m), art0 + np.arange(m)] = 1.0

    basis = np.arange(art0, art0 + m)

    limit = 50 * (m + n) if max_pivots is None else max_pivots
    for _ in range(limit):
        # Phase-one reduced costs, recomputed from the tableau each round
        # (incremental updates drift enough to corrupt Bland's rule):
        # r = c - c_B^T B^-1 A with c = 1 on artificials, and B^-1 A being
        # the tableau, the correction is the sum of artificial-basic rows.
        red = np.zeros(ncols)
        red[art0:] = 1.0
        art_basic = basis >= art0
        if art_basic.any():
            red -= T[art_basic, :ncols].sum(axis=0)
        cand = np.nonzero(red < -_PIVOT_EPS)[0]
        if cand.size == 0:
            break
        entering = int(cand[0])
        col = T[:, entering]
        rows = np.nonzero(col > _PIVOT_EPS)[0]
        if rows.size == 0:
            # Phase one is bounded below by 0; an unbounded column means the
            # tableau degenerated numerically.
            raise Indeterminate("phase-one simplex lost boundedness")
        ratios = T[rows, -1] / col[rows]
        tied = rows[ratios == ratios.min()]
        leave = int(tied[np.argmin(basis[tied])])
        T[leave] /= T[leave, entering]
        factors = T[:, entering].copy()
        factors[leave] = 0.0
        T -= np.outer(factors, T[leave])
        basis[leave] = entering
    else:
        raise Indeterminate(f"simplex iteration limit {limit} reached")

    values = np.zeros(ncols)
    values[basis] = T[:, -1]
    x = values[:n] - values[n : 2 * n]
    worst = system.violation(x)
    if worst > tol.eps_lp:
        return FeasibilityAnswer(False, None, worst)
    return FeasibilityAnswer(True, x, worst)
