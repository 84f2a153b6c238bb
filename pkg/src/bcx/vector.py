"""Vectors in C2^n, kept as a pair of complex n-vectors (minus part, plus part)."""
from __future__ import annotations

from typing import Iterable

import numpy as np

from .errors import DimensionError
from .linalg import as_cvector
from .scalar import BiComplex, _as_complex

__all__ = ["BCVector", "split", "join", "eq", "scale_e", "scale", "hadamard"]


class BCVector:
    """An n-tuple of bicomplex numbers.

    ``v.minus`` and ``v.plus`` are read-only complex arrays of length n;
    ``v[i]`` rebuilds the i-th entry as a :class:`BiComplex`.
    """

    __slots__ = ("minus", "plus")

    def __init__(self, minus, plus):
        minus = as_cvector(minus)
        plus = as_cvector(plus)
        if minus.shape != plus.shape:
            raise DimensionError(
                f"idempotent parts differ in length: {minus.shape[0]} vs {plus.shape[0]}"
            )
        self.minus = minus
        self.plus = plus

    @classmethod
    def from_entries(cls, entries: Iterable[BiComplex]) -> BCVector:
        entries = list(entries)
        return cls([x.minus for x in entries], [x.plus for x in entries])

    @classmethod
    def zeros(cls, n: int) -> BCVector:
        return cls(np.zeros(n), np.zeros(n))

    def __len__(self):
        return self.minus.shape[0]

    def __getitem__(self, i) -> BiComplex:
        return BiComplex(self.minus[i], self.plus[i])

    def __iter__(self):
        return (BiComplex(a, b) for a, b in zip(self.minus, self.plus))

    @property
    def entries(self) -> tuple[BiComplex, ...]:
        return tuple(self)

    def split(self):
        return self.minus, self.plus

    def _check(self, other):
        if not isinstance(other, BCVector):
            raise TypeError(f"expected BCVector, got {type(other).__name__}")
        if len(self) != len(other):
            raise DimensionError(f"length mismatch: {len(self)} vs {len(other)}")

    def __add__(self, other):
        self._check(other)
        return BCVector(self.minus + other.minus, self.plus + other.plus)

    def __sub__(self, other):
        self._check(other)
        return BCVector(self.minus - other.minus, self.plus - other.plus)

    def __neg__(self):
        return BCVector(-self.minus, -self.plus)

    def __eq__(self, other):
        if not isinstance(other, BCVector):
            return NotImplemented
        return len(self) == len(other) and eq(self, other)

    __hash__ = None

    def __repr__(self):
        return f"BCVector(minus={self.minus.tolist()!r}, plus={self.plus.tolist()!r})"

    def __str__(self):
        from .textio import format_vector

        return format_vector(self)


def split(v: BCVector):
    return v.minus, v.plus


def join(x, y) -> BCVector:
    return BCVector(x, y)


def eq(u: BCVector, v: BCVector, tol: float = 0.0) -> bool:
    """Componentwise comparison of both idempotent parts.

    ``tol=0`` (the default) demands bit-for-bit equal components.
    """
    u._check(v)
    if tol == 0:
        return bool(np.array_equal(u.minus, v.minus) and np.array_equal(u.plus, v.plus))
    return bool(
        np.all(np.abs(u.minus - v.minus) <= tol) and np.all(np.abs(u.plus - v.plus) <= tol)
    )


def scale_e(k: int, v: BCVector) -> BCVector:
    """``e1 * v`` (k=1) keeps the minus part; ``e2 * v`` (k=2) keeps the plus part."""
    if k == 1:
        return BCVector(v.minus, np.zeros(len(v)))
    if k == 2:
        return BCVector(np.zeros(len(v)), v.plus)
    raise ValueError(f"k must be 1 or 2, got {k!r}")


def scale(eta, v: BCVector) -> BCVector:
    if not isinstance(eta, BiComplex):
        z = _as_complex(eta, "eta")
        eta = BiComplex(z, z)
    return BCVector(eta.minus * v.minus, eta.plus * v.plus)


def hadamard(u: BCVector, v: BCVector) -> BCVector:
    u._check(v)
    return BCVector(u.minus * v.minus, u.plus * v.plus)
