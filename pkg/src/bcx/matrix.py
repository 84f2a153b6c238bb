"""Bicomplex matrices C2^{m x n} stored as the split pair (M1, M2).

Every operation acts on the two complex matrices independently.  The one
exception is :func:`block_embedding`, which exists as a cross-check: it
writes the C1-linear action of a bicomplex matrix on C2^n = C^{2n} as one
complex matrix, using the coordinate order (e1 u_1..e1 u_n, e2 u_1..e2 u_n).
"""
from __future__ import annotations

import numpy as np

from . import linalg
from .errors import DimensionError, NotInvertible, Singular
from .scalar import BiComplex, Classification, classify, _as_complex
from .vector import BCVector

__all__ = [
    "BCMatrix",
    "split",
    "join",
    "identity",
    "zeros",
    "det",
    "is_nonsingular",
    "inv",
    "rank",
    "block_embedding",
]


class BCMatrix:
    """An m x n bicomplex matrix ``e1*minus + e2*plus``."""

    __slots__ = ("minus", "plus")

    def __init__(self, minus, plus):
        minus = linalg.as_cmatrix(minus)
        plus = linalg.as_cmatrix(plus)
        if minus.shape != plus.shape:
            raise DimensionError(f"idempotent parts differ in shape: {minus.shape} vs {plus.shape}")
        self.minus = minus
        self.plus = plus

    @classmethod
    def from_entries(cls, rows) -> BCMatrix:
        rows = [list(r) for r in rows]
        if len({len(r) for r in rows}) > 1:
            raise DimensionError("ragged matrix rows")
        cols = len(rows[0]) if rows else 0
        minus = np.array([[x.minus for x in r] for r in rows], dtype=np.complex128)
        plus = np.array([[x.plus for x in r] for r in rows], dtype=np.complex128)
        return cls(minus.reshape(len(rows), cols), plus.reshape(len(rows), cols))

    @property
    def shape(self) -> tuple[int, int]:
        return self.minus.shape

    @property
    def rows(self) -> int:
        return self.minus.shape[0]

    @property
    def cols(self) -> int:
        return self.minus.shape[1]

    def __getitem__(self, ij) -> BiComplex:
        i, j = ij
        return BiComplex(self.minus[i, j], self.plus[i, j])

    def entries(self) -> list[list[BiComplex]]:
        return [[self[i, j] for j in range(self.cols)] for i in range(self.rows)]

    def split(self):
        return self.minus, self.plus

    def _same_shape(self, other):
        if not isinstance(other, BCMatrix):
            raise TypeError(f"expected BCMatrix, got {type(other).__name__}")
        if self.shape != other.shape:
            raise DimensionError(f"shape mismatch: {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._same_shape(other)
        return BCMatrix(self.minus + other.minus, self.plus + other.plus)

    def __sub__(self, other):
        self._same_shape(other)
        return BCMatrix(self.minus - other.minus, self.plus - other.plus)

    def __neg__(self):
        return BCMatrix(-self.minus, -self.plus)

    def scalar_mul(self, eta) -> BCMatrix:
        """Multiply every entry by a bicomplex (or complex) scalar."""
        if not isinstance(eta, BiComplex):
            z = _as_complex(eta, "eta")
            eta = BiComplex(z, z)
        return BCMatrix(eta.minus * self.minus, eta.plus * self.plus)

    def __rmul__(self, other):
        if isinstance(other, (BiComplex, complex, float, int)) and not isinstance(other, bool):
            return self.scalar_mul(other)
        return NotImplemented

    def __matmul__(self, other):
        if isinstance(other, BCMatrix):
            if self.cols != other.rows:
                raise DimensionError(f"cannot multiply {self.shape} by {other.shape}")
            return BCMatrix(self.minus @ other.minus, self.plus @ other.plus)
        if isinstance(other, BCVector):
            if self.cols != len(other):
                raise DimensionError(f"cannot apply {self.shape} matrix to length {len(other)}")
            return BCVector(self.minus @ other.minus, self.plus @ other.plus)
        return NotImplemented

    def mul(self, other: BCMatrix) -> BCMatrix:
        return self @ other

    def equals(self, other: BCMatrix, tol: float = 0.0) -> bool:
        self._same_shape(other)
        if tol == 0:
            return bool(
                np.array_equal(self.minus, other.minus) and np.array_equal(self.plus, other.plus)
            )
        return bool(
            np.all(np.abs(self.minus - other.minus) <= tol)
            and np.all(np.abs(self.plus - other.plus) <= tol)
        )

    def __eq__(self, other):
        if not isinstance(other, BCMatrix):
            return NotImplemented
        return self.shape == other.shape and self.equals(other)

    __hash__ = None

    def __repr__(self):
        return f"BCMatrix(minus={self.minus.tolist()!r}, plus={self.plus.tolist()!r})"

    def __str__(self):
        from .textio import format_matrix

        return format_matrix(self)


def split(M: BCMatrix):
    return M.minus, M.plus


def join(A1, A2) -> BCMatrix:
    return BCMatrix(A1, A2)


def identity(n: int) -> BCMatrix:
    eye = np.eye(n, dtype=np.complex128)
    return BCMatrix(eye, eye)


def zeros(m: int, n: int) -> BCMatrix:
    z = np.zeros((m, n), dtype=np.complex128)
    return BCMatrix(z, z)


def _require_square(M: BCMatrix):
    if M.rows != M.cols:
        raise DimensionError(f"square matrix required, got shape {M.shape}")


def det(M: BCMatrix) -> BiComplex:
    _require_square(M)
    return BiComplex(linalg.det(M.minus), linalg.det(M.plus))


def is_nonsingular(M: BCMatrix, tol_zero: float | None = None) -> bool:
    """True when the determinant is an invertible bicomplex number."""
    return classify(det(M), tol_zero) is Classification.INVERTIBLE


def inv(M: BCMatrix, tol_pivot: float | None = None) -> BCMatrix:
    _require_square(M)
    parts, failed = {}, []
    for name in ("minus", "plus"):
        try:
            parts[name] = linalg.inv(getattr(M, name), tol_pivot)
        except Singular:
            failed.append(name)
    if failed:
        raise NotInvertible(f"singular {' and '.join(failed)} component", failed)
    return BCMatrix(parts["minus"], parts["plus"])


def rank(M: BCMatrix, tol_pivot: float | None = None) -> int:
    return linalg.rank(M.minus, tol_pivot) + linalg.rank(M.plus, tol_pivot)


def block_embedding(M: BCMatrix) -> np.ndarray:
    m, n = M.shape
    out = np.zeros((2 * m, 2 * n), dtype=np.complex128)
    out[:m, :n] = M.minus
    out[m:, n:] = M.plus
    out.setflags(write=False)
    return out
