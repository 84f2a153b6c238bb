"""Complex linear algebra by Gauss-Jordan elimination.

Matrices are ``numpy`` ``complex128`` arrays; numpy is used for storage and
products only, all elimination is done here so that pivot decisions follow a
single documented rule:

* partial pivoting by maximum modulus, ties going to the lowest row index;
* a candidate pivot is treated as zero when its modulus is at most
  ``tol_pivot`` times the largest modulus of that column in the input.
"""
from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .errors import DimensionError, NoSolution, Singular
from .tolerance import resolve

__all__ = [
    "as_cmatrix",
    "as_cvector",
    "RREF",
    "rref",
    "rank",
    "kernel_basis",
    "image_basis",
    "solve",
    "det",
    "inv",
    "cond_estimate",
    "Basis",
    "coords",
]


def _freeze(a: np.ndarray) -> np.ndarray:
    a.setflags(write=False)
    return a


def as_cmatrix(data, rows: int | None = None, cols: int | None = None) -> np.ndarray:
    """Validate ``data`` as a finite 2-D complex matrix and return a read-only copy."""
    a = np.array(data, dtype=np.complex128)
    if a.ndim == 1 and a.size == 0:
        a = a.reshape(rows or 0, cols or 0)
    if a.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got shape {a.shape}")
    if rows is not None and a.shape[0] != rows or cols is not None and a.shape[1] != cols:
        raise DimensionError(f"expected shape ({rows}, {cols}), got {a.shape}")
    if not np.all(np.isfinite(a)):
        raise ValueError("matrix entries must be finite")
    return _freeze(a)


def as_cvector(data, length: int | None = None) -> np.ndarray:
    v = np.array(data, dtype=np.complex128)
    if v.ndim != 1:
        raise DimensionError(f"expected a 1-D vector, got shape {v.shape}")
    if length is not None and v.shape[0] != length:
        raise DimensionError(f"expected length {length}, got {v.shape[0]}")
    if not np.all(np.isfinite(v)):
        raise ValueError("vector entries must be finite")
    return _freeze(v)


class RREF(NamedTuple):
    R: np.ndarray
    pivots: tuple[int, ...]
    rank: int


def _gauss_jordan(a, tol, companion=None):
    """Reduce ``a`` in place to RREF, mirroring every row operation on ``companion``."""
    m, n = a.shape
    scale = np.abs(a).max(axis=0) if m else np.zeros(n)
    pivots = []
    row = 0
    for col in range(n):
        if row == m:
            break
        moduli = np.abs(a[row:, col])
        k = int(np.argmax(moduli))
        if moduli[k] == 0 or moduli[k] <= tol * scale[col]:
            a[row:, col] = 0
            continue
        k += row
        if k != row:
            a[[row, k]] = a[[k, row]]
            if companion is not None:
                companion[[row, k]] = companion[[k, row]]
        p = a[row, col]
        a[row] /= p
        a[row, col] = 1
        if companion is not None:
            companion[row] /= p
        for r in range(m):
            if r != row and a[r, col] != 0:
                f = a[r, col]
                a[r] -= f * a[row]
                a[r, col] = 0
                if companion is not None:
                    companion[r] -= f * companion[row]
        pivots.append(col)
        row += 1
    return tuple(pivots)


def rref(A, tol_pivot: float | None = None) -> RREF:
    tol = resolve(tol_pivot, "pivot")
    R = np.array(as_cmatrix(A))
    pivots = _gauss_jordan(R, tol)
    return RREF(_freeze(R), pivots, len(pivots))


def rank(A, tol_pivot: float | None = None) -> int:
    return rref(A, tol_pivot).rank


def kernel_basis(A, tol_pivot: float | None = None) -> list[np.ndarray]:
    """Null-space basis, one vector per free column (ascending), free variable set to 1."""
    R, pivots, _ = rref(A, tol_pivot)
    n = R.shape[1]
    free = [j for j in range(n) if j not in pivots]
    basis = []
    for f in free:
        v = np.zeros(n, dtype=np.complex128)
        v[f] = 1
        for i, p in enumerate(pivots):
            v[p] = -R[i, f]
        basis.append(_freeze(v))
    return basis


def image_basis(A, tol_pivot: float | None = None) -> list[np.ndarray]:
    """The pivot columns of ``A`` itself, in ascending pivot order."""
    A = as_cmatrix(A)
    pivots = rref(A, tol_pivot).pivots
    return [_freeze(A[:, j].copy()) for j in pivots]


def solve(
    A, b, tol_pivot: float | None = None, tol_resid: float | None = None
) -> np.ndarray:
    """A particular solution of ``A x = b`` with every free variable set to zero.

    Raises :class:`NoSolution` when the augmented matrix has larger rank, or
    when the solution found misses ``b`` by more than ``tol_resid`` (scaled
    by ``max(1, |b|)``).
    """
    A = as_cmatrix(A)
    m, n = A.shape
    b = as_cvector(b, m)
    aug = np.column_stack([A, b]) if m else np.zeros((0, n + 1), dtype=np.complex128)
    R, pivots, _ = rref(aug, tol_pivot)
    if pivots and pivots[-1] == n:
        raise NoSolution("inconsistent linear system")
    x = np.zeros(n, dtype=np.complex128)
    for i, p in enumerate(pivots):
        x[p] = R[i, n]
    if m and n:
        residual = float(np.abs(A @ x - b).max())
        if residual > resolve(tol_resid, "resid") * max(1.0, float(np.abs(b).max())):
            raise NoSolution(f"residual {residual:.3g} exceeds tolerance")
    return _freeze(x)


def _require_square(A):
    A = as_cmatrix(A)
    if A.shape[0] != A.shape[1]:
        raise DimensionError(f"square matrix required, got shape {A.shape}")
    return A


def det(A) -> complex:
    """Determinant as the signed product of pivots of a partially pivoted LU."""
    a = np.array(_require_square(A))
    n = a.shape[0]
    result = 1 + 0j
    for col in range(n):
        k = col + int(np.argmax(np.abs(a[col:, col])))
        if a[k, col] == 0:
            return 0j
        if k != col:
            a[[col, k]] = a[[k, col]]
            result = -result
        p = a[col, col]
        result *= p
        below = a[col + 1 :, col] / p
        a[col + 1 :, col:] -= np.outer(below, a[col, col:])
    return complex(result)


def inv(A, tol_pivot: float | None = None) -> np.ndarray:
    A = _require_square(A)
    n = A.shape[0]
    work = np.array(A)
    companion = np.eye(n, dtype=np.complex128)
    pivots = _gauss_jordan(work, resolve(tol_pivot, "pivot"), companion)
    if len(pivots) < n:
        raise Singular(f"matrix is singular (rank {len(pivots)} < {n})")
    return _freeze(companion)


def cond_estimate(A, tol_pivot: float | None = None) -> float:
    """1-norm condition number, ``inf`` for singular input."""
    A = _require_square(A)
    if A.shape[0] == 0:
        return 1.0
    try:
        Ai = inv(A, tol_pivot)
    except Singular:
        return float("inf")
    norm = lambda M: float(np.abs(M).sum(axis=0).max())  # noqa: E731
    return norm(A) * norm(Ai)


class Basis:
    """Ordered basis of C^n, stored as the columns of an invertible matrix.

    The inverse of that matrix is computed once at construction; it both
    certifies the basis and turns :meth:`coords` into a product.
    """

    def __init__(self, vectors: Sequence, tol_pivot: float | None = None):
        vecs = [as_cvector(v) for v in vectors]
        dim = len(vecs)
        if any(v.shape[0] != dim for v in vecs):
            raise DimensionError(f"a basis of C^{dim} needs {dim} vectors of length {dim}")
        self.dim = dim
        self.vectors = tuple(vecs)
        self.matrix = _freeze(
            np.column_stack(vecs) if dim else np.zeros((0, 0), dtype=np.complex128)
        )
        try:
            self._inverse = inv(self.matrix, tol_pivot)
        except Singular as exc:
            raise ValueError("vectors are linearly dependent, not a basis") from exc

    @classmethod
    def standard(cls, dim: int) -> Basis:
        return cls(np.eye(dim, dtype=np.complex128))

    def coords(self, v) -> np.ndarray:
        v = as_cvector(v, self.dim)
        return _freeze(self._inverse @ v)

    def __len__(self):
        return self.dim

    def __repr__(self):
        return f"Basis({[list(v) for v in self.vectors]!r})"


def coords(B: Basis, v) -> np.ndarray:
    return B.coords(v)
