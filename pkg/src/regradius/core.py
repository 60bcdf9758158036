"""Dense linear-algebra kernels and the shared domain types.

Matrices are plain float64 ndarrays of shape (n, n); the ``as_*`` helpers
validate shape, finiteness and sign constraints once at API boundaries.
An infinite radius is represented by ``math.inf`` (the distinguished IEEE
value, never an overflowed finite float), so ordering and comparisons stay
exact.  Every function here is pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

INF = math.inf

# Method tags carried by RadiusResult.
FULL_SEARCH = "full-search"
ORTHANT_SEARCH = "orthant-search"
TRIDIAGONAL = "tridiagonal"
CLOSED_FORM_TP = "closed-form-tp"
CLOSED_FORM_INVNN = "closed-form-invnonneg"
BOUND = "bound"
METHODS = frozenset(
    {FULL_SEARCH, ORTHANT_SEARCH, TRIDIAGONAL, CLOSED_FORM_TP, CLOSED_FORM_INVNN, BOUND}
)


class RadiusError(Exception):
    """Base class for numerical failures in radius computations."""


class SingularInput(RadiusError):
    """Input matrix is numerically singular; the radius is 0."""


class DimensionTooLarge(RadiusError):
    """Instance exceeds the enumeration cap of an exact method."""


class EigenFailure(RadiusError):
    """Eigenvalue or SVD iteration did not converge, or a residual check failed."""


class Indeterminate(RadiusError):
    """The answer cannot be certified at the working tolerance."""


class CertificateFailed(RadiusError):
    """A claimed nearest-singular matrix failed the singularity check."""


class ClassMismatch(RadiusError):
    """Closed-form formula requested for a matrix outside its class."""


class NonpositiveWeights(RadiusError):
    """Rank-one scaling requires strictly positive weight vectors."""


class ZeroRadiusMatrix(RadiusError):
    """Operation undefined for an identically zero weight matrix."""


class StructureMismatch(RadiusError):
    """Tridiagonal weights do not match the matrix zero structure."""


class InfiniteRadius(RadiusError):
    """The radius is infinite; no finite search can terminate."""


class FrontierExhausted(RadiusError):
    """Orthant frontier emptied below the upper bracket; grow it and retry."""


class GenerationFailed(RadiusError):
    """Random instance generation exceeded its rejection budget."""


@dataclass(frozen=True)
class Tolerances:
    """Numerical tolerances shared across the package.

    eps_rank=None selects the conventional max(m,n) * machine-eps * sigma_1
    threshold; a fixed value overrides it (the finiteness procedure is the
    main consumer that may want to).
    """

    eps_bisect: float = 1e-9
    eps_imag: float = 1e-8
    eps_rank: Optional[float] = None
    eps_lp: float = 1e-9
    tol_singular: float = 1e-7

    def __post_init__(self) -> None:
        for name in ("eps_bisect", "eps_imag", "eps_lp", "tol_singular"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")
        if self.eps_rank is not None and not self.eps_rank > 0.0:
            raise ValueError("eps_rank must be strictly positive when given")


DEFAULT_TOL = Tolerances()


@dataclass(frozen=True)
class Certificate:
    """Singularity certificate: A - value * D_y Delta D_z is singular."""

    y: tuple
    z: tuple
    matrix: np.ndarray


@dataclass(frozen=True)
class RadiusResult:
    """A computed radius value with provenance.

    value is a nonnegative float or math.inf.  tolerance is the achieved
    numerical tolerance (0.0 for closed-form / exact-enumeration paths,
    the final bracket width for bisection-based methods).
    """

    value: float
    method: str
    certificate: Optional[Certificate] = None
    tolerance: float = 0.0

    def __post_init__(self) -> None:
        if self.method not in METHODS:
            raise ValueError(f"unknown method tag {self.method!r}")
        if not (self.value >= 0.0):
            raise ValueError("radius value must be nonnegative")


@dataclass(frozen=True)
class IntervalMatrix:
    """Componentwise interval [center - radius, center + radius]."""

    center: np.ndarray
    radius: np.ndarray

    def __post_init__(self) -> None:
        c = as_square(self.center)
        r = as_radius(self.radius, c.shape[0])
        object.__setattr__(self, "center", c)
        object.__setattr__(self, "radius", r)

    def contains(self, M, slack: float = 0.0) -> bool:
        M = as_square(M)
        return bool(np.all(np.abs(M - self.center) <= self.radius + slack))


def as_square(A) -> np.ndarray:
    """Validate and return A as a finite float64 (n, n) array."""
    A = np.asarray(A, dtype=float)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise ValueError(f"expected a square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix entries must be finite")
    return np.ascontiguousarray(A)


def as_radius(D, n: Optional[int] = None) -> np.ndarray:
    """Validate a nonnegative weight matrix, optionally pinned to dimension n."""
    D = as_square(D)
    if n is not None and D.shape[0] != n:
        raise ValueError(f"weight matrix is {D.shape[0]}x{D.shape[0]}, expected {n}x{n}")
    if np.any(D < 0.0):
        raise ValueError("weight matrix entries must be nonnegative")
    return D


def as_sign_vector(s, n: Optional[int] = None) -> np.ndarray:
    """Validate a +-1 sign vector and return it as an int array."""
    s = np.asarray(s)
    if s.ndim != 1 or s.size == 0:
        raise ValueError("sign vector must be a nonempty 1-d sequence")
    if n is not None and s.size != n:
        raise ValueError(f"sign vector has length {s.size}, expected {n}")
    out = s.astype(int)
    if not np.all(np.abs(out) == 1) or not np.all(out == s):
        raise ValueError("sign vector components must be exactly +1 or -1")
    return out


def sign_vectors(n: int, fix_first: bool = False) -> Iterator[np.ndarray]:
    """Yield all sign vectors in {+-1}^n; fix_first pins the first entry to +1."""
    free = n - 1 if fix_first else n
    for idx in range(1 << free):
        s = np.ones(n, dtype=int)
        for k in range(free):
            if (idx >> k) & 1:
                s[n - 1 - k] = -1
        yield s


def rank_threshold(s: np.ndarray, shape, tol: Tolerances) -> float:
    if tol.eps_rank is not None:
        return tol.eps_rank
    sigma1 = float(s[0]) if s.size else 0.0
    return max(shape) * np.finfo(float).eps * sigma1


def rank(M, tol: Tolerances = DEFAULT_TOL) -> int:
    """Numerical rank: number of singular values above the eps_rank threshold."""
    M = np.atleast_2d(np.asarray(M, dtype=float))
    if M.size == 0:
        return 0
    s = np.linalg.svd(M, compute_uv=False)
    return int(np.sum(s > rank_threshold(s, M.shape, tol)))


def svd(M):
    """Thin wrapper returning (U, sigma, V) with M = U diag(sigma) V^T."""
    M = as_square(M)
    try:
        U, s, Vt = np.linalg.svd(M)
    except np.linalg.LinAlgError as exc:  # pragma: no cover - backend failure
        raise EigenFailure("SVD did not converge") from exc
    return U, s, Vt.T


def invert(A, tol: Tolerances = DEFAULT_TOL) -> np.ndarray:
    """Inverse of A, rejecting numerically singular input.

    Raises SingularInput when the smallest singular value falls below the
    rank threshold (the radius is then 0), and EigenFailure when the
    computed inverse fails the residual check ||A M - I||_max against a
    condition-scaled bound.
    """
    A = as_square(A)
    s = np.linalg.svd(A, compute_uv=False)
    if s[-1] <= rank_threshold(s, A.shape, tol):
        raise SingularInput("matrix is numerically singular")
    M = np.linalg.inv(A)
    resid = float(np.max(np.abs(A @ M - np.eye(A.shape[0]))))
    if resid > 1e-10 * max(1.0, s[0] / s[-1]):
        raise EigenFailure(f"inverse residual {resid:.3e} exceeds bound")
    return M


def real_spectral_radius(M, tol: Tolerances = DEFAULT_TOL) -> float:
    """Largest absolute value over the (numerically) real eigenvalues of M.

    An eigenvalue passes the reality cutoff when |Im| <= eps_imag * (1 + |lambda|);
    the relative form keeps large complex pairs from being misclassified.
    Returns 0.0 when no eigenvalue passes.
    """
    M = as_square(M)
    try:
        w = np.linalg.eigvals(M)
    except np.linalg.LinAlgError as exc:
        raise EigenFailure("eigenvalue iteration did not converge") from exc
    realish = np.abs(w.imag) <= tol.eps_imag * (1.0 + np.abs(w))
    if not np.any(realish):
        return 0.0
    return float(np.max(np.abs(w.real[realish])))


def _sign_block(lo: int, hi: int, n: int) -> np.ndarray:
    """Sign vectors with first entry +1 for enumeration indices [lo, hi)."""
    idx = np.arange(lo, hi, dtype=np.uint64)
    block = np.ones((idx.size, n))
    if n > 1:
        bits = (idx[:, None] >> np.arange(n - 1, dtype=np.uint64)[None, :]) & 1
        block[:, 1:] = 1.0 - 2.0 * bits
    return block


def norm_inf1(M, cap: int = 25) -> float:
    """The (inf,1) matrix norm: max over z in {+-1}^n of ||M z||_1.

    The norm is even in z, so enumeration fixes z_1 = +1 and walks the
    remaining 2^(n-1) vectors.  Exact, hence exponential; above the cap
    callers should fall back to bounds.
    """
    value, _ = norm_inf1_argmax(M, cap=cap)
    return value


def norm_inf1_argmax(M, cap: int = 25):
    """As norm_inf1, additionally returning a maximizing sign vector."""
    M = as_square(M)
    n = M.shape[0]
    if n > cap:
        raise DimensionTooLarge(f"n={n} exceeds the enumeration cap {cap}")
    total = 1 << (n - 1)
    block = 1 << 14
    best = -INF
    best_z = None
    for lo in range(0, total, block):
        Z = _sign_block(lo, min(lo + block, total), n)
        vals = np.abs(M @ Z.T).sum(axis=0)
        k = int(np.argmax(vals))
        if vals[k] > best:
            best = float(vals[k])
            best_z = Z[k].astype(int)
    return best, best_z
