"""Text formats shared by the CLI and the benchmark harness.

Square matrix format::

    n
    a11 a12 ... a1n
    ...
    an1 an2 ... ann

Tridiagonal format (diagonal a, superdiagonal c, subdiagonal b)::

    n
    a1 ... an
    c1 ... c_{n-1}
    b2 ... b_n

The c and b lines are empty for n = 1.
"""

from __future__ import annotations

import numpy as np

from .core import as_square


def parse_matrix(text: str) -> np.ndarray:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ValueError("empty matrix file")
    try:
        n = int(lines[0].split()[0])
    except ValueError as exc:
        raise ValueError("first line must be the dimension n") from exc
    if n <= 0:
        raise ValueError("dimension must be positive")
    if len(lines) - 1 != n:
        raise ValueError(f"expected {n} rows, found {len(lines) - 1}")
    rows = []
    for ln in lines[1:]:
        row = [float(tok) for tok in ln.split()]
        if len(row) != n:
            raise ValueError(f"row has {len(row)} entries, expected {n} (not square)")
        rows.append(row)
    return as_square(np.array(rows))


def format_matrix(A) -> str:
    A = as_square(A)
    n = A.shape[0]
    body = "\n".join(" ".join(repr(float(x)) for x in row) for row in A)
    return f"{n}\n{body}\n"


def load_matrix(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_matrix(fh.read())


def save_matrix(path, A) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_matrix(A))


def parse_tridiagonal(text: str):
    """Parse the tridiagonal format, returning (a, c, b) float arrays."""
    lines = text.splitlines()
    stripped = [ln.strip() for ln in lines]
    nonempty = [ln for ln in stripped if ln]
    if not nonempty:
        raise ValueError("empty tridiagonal file")
    try:
        n = int(nonempty[0].split()[0])
    except ValueError as exc:
        raise ValueError("first line must be the dimension n") from exc
    if n <= 0:
        raise ValueError("dimension must be positive")
    # n = 1 allows the c and b lines to be blank or absent.
    rest = stripped[stripped.index(nonempty[0]) + 1 :]
    rows = rest + [""] * max(0, 3 - len(rest))
    a = np.array([float(t) for t in rows[0].split()])
    c = np.array([float(t) for t in rows[1].split()])
    b = np.array([float(t) for t in rows[2].split()])
    if a.size != n or c.size != n - 1 or b.size != n - 1:
        raise ValueError(
            f"expected {n}, {n - 1}, {n - 1} entries on the a, c, b lines, "
            f"got {a.size}, {c.size}, {b.size}"
        )
    for arr in (a, c, b):
        if arr.size and not np.all(np.isfinite(arr)):
            raise ValueError("tridiagonal entries must be finite")
    return a, c, b


def format_tridiagonal(a, c, b) -> str:
    a = np.asarray(a, dtype=float)
    join = lambda arr: " ".join(repr(float(x)) for x in arr)
    return f"{a.size}\n{join(a)}\n{join(c)}\n{join(b)}\n"


def load_tridiagonal(path):
    with open(path, "r", encoding="utf-8") as fh:
        return parse_tridiagonal(fh.read())
