"""Polynomial radius computation for unreduced tridiagonal matrices.

Regularity of a tridiagonal interval matrix is decided in linear time by
propagating the exact set of achievable leading-determinant ratios
r_k = d_k / d_{k-1} through the three-term recurrence

    d_k = a_k d_{k-1} - b_k c_{k-1} d_{k-2},  i.e.  r_k = a_k - b_k c_{k-1} / r_{k-1}.

Every interval parameter (a_k, b_k, c_{k-1}) appears in exactly one step,
so propagating sets instead of single values incurs no dependency blowup:
the image of the achievable set is computed exactly (up to roundoff).  The
ratios live on the projective line (r = infinity encodes d_{k-1} = 0 with
d_k != 0); a set is stored as a union of closed real intervals plus a flag
for the point at infinity, and division by a set containing zero yields
exterior unions in the Kahan style.

The matrix family is singular iff some member reaches d_n = 0.  That
happens iff 0 lies in the final ratio set, or an intermediate state
degenerates to the full projective line.  The full line arises exactly when
some member attains d_{k-1} = d_k = 0 (then all later determinants vanish)
or the exterior unions wrap around; once full, the set stays full because
each later step applies a Moebius map with some nonzero b*c, so singularity
is already decided.  The test is validated exhaustively against the
brute-force sign-pair oracle for n <= 6.

The radius itself is a plain binary search on delta: the regular set
[0, r) and singular set [r, inf) are separated by monotonicity of interval
inclusion.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bounds import bound_rohn_upper
from .core import (
    DEFAULT_TOL,
    INF,
    InfiniteRadius,
    RadiusResult,
    SingularInput,
    StructureMismatch,
    TRIDIAGONAL,
    Tolerances,
    as_square,
)
from .finiteness import is_radius_infinite

_FULL = "full"


@dataclass(frozen=True)
class TridiagonalMatrix:
    """Unreduced tridiagonal matrix T(b, a, c).

    a holds the n diagonal entries, c the n-1 superdiagonal entries
    c_1..c_{n-1}, b the n-1 subdiagonal entries b_2..b_n.  Unreduced means
    every c_k and b_{k+1} is nonzero.
    """

    a: np.ndarray
    c: np.ndarray
    b: np.ndarray

    def __post_init__(self) -> None:
        a = np.asarray(self.a, dtype=float).ravel()
        c = np.asarray(self.c, dtype=float).ravel()
        b = np.asarray(self.b, dtype=float).ravel()
        if a.size == 0:
            raise ValueError("dimension must be positive")
        if c.size != a.size - 1 or b.size != a.size - 1:
            raise ValueError("off-diagonals must have length n - 1")
        for arr in (a, c, b):
            if not np.all(np.isfinite(arr)):
                raise ValueError("entries must be finite")
        if np.any(c == 0.0) or np.any(b == 0.0):
            raise ValueError("matrix is reduced: zero sub- or superdiagonal entry")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "b", b)

    @property
    def n(self) -> int:
        return self.a.size

    def to_dense(self) -> np.ndarray:
        n = self.n
        T = np.diag(self.a)
        T[np.arange(n - 1), np.arange(1, n)] = self.c
        T[np.arange(1, n), np.arange(n - 1)] = self.b
        return T

    @classmethod
    def from_dense(cls, A) -> "TridiagonalMatrix":
        A = as_square(A)
        n = A.shape[0]
        off = A - np.diag(np.diag(A))
        off[np.arange(n - 1), np.arange(1, n)] = 0.0
        off[np.arange(1, n), np.arange(n - 1)] = 0.0
        if np.any(off != 0.0):
            raise ValueError("matrix has entries outside the tridiagonal band")
        return cls(
            np.diag(A).copy(),
            A[np.arange(n - 1), np.arange(1, n)].copy(),
            A[np.arange(1, n), np.arange(n - 1)].copy(),
        )


@dataclass(frozen=True)
class TridiagonalRadius:
    """Nonnegative weights mirroring the a, c, b bands (same zero structure)."""

    da: np.ndarray
    dc: np.ndarray
    db: np.ndarray

    def __post_init__(self) -> None:
        da = np.asarray(self.da, dtype=float).ravel()
        dc = np.asarray(self.dc, dtype=float).ravel()
        db = np.asarray(self.db, dtype=float).ravel()
        if dc.size != da.size - 1 or db.size != da.size - 1:
            raise ValueError("off-diagonal weights must have length n - 1")
        for arr in (da, dc, db):
            if not np.all(np.isfinite(arr)) or np.any(arr < 0.0):
                raise ValueError("weights must be finite and nonnegative")
        object.__setattr__(self, "da", da)
        object.__setattr__(self, "dc", dc)
        object.__setattr__(self, "db", db)

    @property
    def n(self) -> int:
        return self.da.size

    def to_dense(self) -> np.ndarray:
        n = self.n
        D = np.diag(self.da)
        D[np.arange(n - 1), np.arange(1, n)] = self.dc
        D[np.arange(1, n), np.arange(n - 1)] = self.db
        return D

    @classmethod
    def ones_like(cls, T: TridiagonalMatrix) -> "TridiagonalRadius":
        n = T.n
        return cls(np.ones(n), np.ones(n - 1), np.ones(n - 1))


def _mul_interval(al, ah, bl, bh):
    prods = (al * bl, al * bh, ah * bl, ah * bh)
    return min(prods), max(prods)


def _div_pos(ql, qh, d1, d2):
    """[ql, qh] / [d1, d2] with 0 <= d1 <= d2, d2 > 0 (d2 may be inf)."""
    if ql < 0.0:
        lo = -INF if d1 == 0.0 else ql / d1
    else:
        lo = 0.0 if math.isinf(d2) else ql / d2
    if qh > 0.0:
        hi = INF if d1 == 0.0 else qh / d1
    else:
        hi = 0.0 if math.isinf(d2) else qh / d2
    return lo, hi


def _merge(pieces):
    if not pieces:
        return []
    pieces = sorted(pieces)
    out = [list(pieces[0])]
    for lo, hi in pieces[1:]:
        if lo <= out[-1][1]:
            out[-1][1] = max(out[-1][1], hi)
        else:
            out.append([lo, hi])
    return [tuple(p) for p in out]


def _step(pieces, has_inf, al, ah, ql, qh):
    """Image of the ratio set under {r -> a - q/r}, a in [al,ah], q in [ql,qh].

    Returns (pieces, has_inf) or _FULL when the image covers the whole
    projective line (which certifies singularity).
    """
    t_pieces = []
    t_inf = False
    if has_inf:
        t_pieces.append((0.0, 0.0))  # q / infinity
    for p1, p2 in pieces:
        if p1 <= 0.0 <= p2:
            if ql <= 0.0 <= qh:
                # Some member attains d_{k-1} = 0 with b*c = 0, hence
                # d_k = 0 as well: every later determinant vanishes.
                return _FULL
            t_inf = True
        if p2 > 0.0:
            t_pieces.append(_div_pos(ql, qh, max(p1, 0.0), p2))
        if p1 < 0.0:
            lo, hi = _div_pos(ql, qh, -min(p2, 0.0), -p1)
            t_pieces.append((-hi, -lo))
    out = [(al - hi, ah - lo) for lo, hi in t_pieces]
    out = _merge(out)
    if len(out) == 1 and out[0][0] == -INF and out[0][1] == INF:
        return _FULL
    return out, t_inf


def _regular_counted(T: TridiagonalMatrix, D: TridiagonalRadius, delta: float):
    """Regularity of [T - delta*D, T + delta*D] plus an operation count."""
    n = T.n
    ops = 0
    pieces = [(T.a[0] - delta * D.da[0], T.a[0] + delta * D.da[0])]
    has_inf = False
    for k in range(1, n):
        ops += 1 + len(pieces)
        ql, qh = _mul_interval(
            T.b[k - 1] - delta * D.db[k - 1],
            T.b[k - 1] + delta * D.db[k - 1],
            T.c[k - 1] - delta * D.dc[k - 1],
            T.c[k - 1] + delta * D.dc[k - 1],
        )
        res = _step(
            pieces, has_inf, T.a[k] - delta * D.da[k], T.a[k] + delta * D.da[k], ql, qh
        )
        if res == _FULL:
            return False, ops
        pieces, has_inf = res
    singular = any(p1 <= 0.0 <= p2 for p1, p2 in pieces)
    return not singular, ops


def tridiag_is_regular(
    T: TridiagonalMatrix,
    D: TridiagonalRadius,
    delta: float,
    tol: Tolerances = DEFAULT_TOL,
) -> bool:
    """Linear-time regularity test for the tridiagonal interval matrix."""
    if D.n != T.n:
        raise StructureMismatch(f"weights are for n={D.n}, matrix has n={T.n}")
    if not (delta >= 0.0 and math.isfinite(delta)):
        raise ValueError("delta must be a finite nonnegative real")
    regular, _ = _regular_counted(T, D, delta)
    return regular


def tridiag_radius(
    T: TridiagonalMatrix,
    D: TridiagonalRadius,
    eps: float = 1e-9,
    tol: Tolerances = DEFAULT_TOL,
) -> RadiusResult:
    """r(T, D) by binary search over delta with the linear-time regularity test.

    The initial bracket is [0, rohn-upper-bound] on the dense zero-padded
    pair; when that bound is infinite the bracket doubles from 1 until a
    singular delta appears, guarded by the finiteness decision.  The result
    value is the bracket midpoint and its tolerance the half-width, so the
    iteration count is ceil(log2(bracket / eps)).
    """
    if D.n != T.n:
        raise StructureMismatch(f"weights are for n={D.n}, matrix has n={T.n}")
    if not eps > 0.0:
        raise ValueError("eps must be positive")
    dense_T = T.to_dense()
    dense_D = D.to_dense()
    if not np.any(dense_D > 0.0):
        raise InfiniteRadius("all weights are zero")
    try:
        upper = bound_rohn_upper(dense_T, dense_D, tol)
    except SingularInput:
        return RadiusResult(0.0, TRIDIAGONAL)
    if not tridiag_is_regular(T, D, 0.0, tol):
        return RadiusResult(0.0, TRIDIAGONAL)

    if math.isinf(upper):
        if is_radius_infinite(dense_T, dense_D, tol).infinite:
            raise InfiniteRadius("finiteness procedure pinned every row")
        upper = 1.0
    else:
        upper *= 1.0 + 1e-6
    for _ in range(200):
        if not tridiag_is_regular(T, D, upper, tol):
            break
        upper *= 2.0
    else:
        raise InfiniteRadius("no singular delta found under geometric growth")

    lo, hi = 0.0, upper
    while hi - lo > eps:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:  # float resolution exhausted
            break
        if tridiag_is_regular(T, D, mid, tol):
            lo = mid
        else:
            hi = mid
    return RadiusResult(0.5 * (lo + hi), TRIDIAGONAL, tolerance=0.5 * (hi - lo))
