"""Bicomplex scalars stored by their idempotent components.

A bicomplex number ``xi = z1 + i2*z2`` (``z1``, ``z2`` complex, ``i1`` playing
the role of Python's ``1j``) is kept as the pair ``(minus, plus)`` with

    minus = z1 - i1*z2,   plus = z1 + i1*z2,   xi = minus*e1 + plus*e2

where ``e1 = (1 + i1 i2)/2`` and ``e2 = (1 - i1 i2)/2``.  In this form the
product is componentwise, which is what makes every other module simple.
"""
from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from numbers import Number

from .errors import NotInvertible
from .tolerance import resolve

__all__ = [
    "BiComplex",
    "Classification",
    "ZERO",
    "ONE",
    "E1",
    "E2",
    "I1",
    "I2",
    "from_cartesian",
    "from_complex_pair",
    "idempotent_join",
    "classify",
    "inverse",
]


class Classification(enum.Enum):
    ZERO = "Zero"
    ZERO_DIVISOR = "ZeroDivisor"
    INVERTIBLE = "Invertible"


def _as_complex(value, name="value") -> complex:
    if isinstance(value, BiComplex):
        raise TypeError(f"{name} must be complex, got BiComplex")
    z = complex(value)
    if not cmath.isfinite(z):
        raise ValueError(f"{name} must be finite, got {value!r}")
    return z


@dataclass(frozen=True)
class BiComplex:
    """Element of C2, held as ``minus*e1 + plus*e2``.

    Equality (``==``) is exact on the stored components.
    """

    minus: complex
    plus: complex

    def __post_init__(self):
        object.__setattr__(self, "minus", _as_complex(self.minus, "minus"))
        object.__setattr__(self, "plus", _as_complex(self.plus, "plus"))

    # -- views ------------------------------------------------------------
    @property
    def z1(self) -> complex:
        return (self.minus + self.plus) / 2

    @property
    def z2(self) -> complex:
        return 1j * (self.minus - self.plus) / 2

    def complex_pair(self) -> tuple[complex, complex]:
        return self.z1, self.z2

    def cartesian(self) -> tuple[float, float, float, float]:
        """The real coordinates ``(u1, u2, u3, u4)`` of ``u1 + i1 u2 + i2 u3 + i1 i2 u4``."""
        z1, z2 = self.z1, self.z2
        return z1.real, z1.imag, z2.real, z2.imag

    def split(self) -> tuple[complex, complex]:
        return self.minus, self.plus

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, BiComplex):
            return other
        if isinstance(other, Number) and not isinstance(other, bool):
            z = _as_complex(other)
            return BiComplex(z, z)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BiComplex(self.minus + other.minus, self.plus + other.plus)

    __radd__ = __add__

    def __neg__(self):
        return BiComplex(-self.minus, -self.plus)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BiComplex(self.minus - other.minus, self.plus - other.plus)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return BiComplex(self.minus * other.minus, self.plus * other.plus)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self * inverse(other)

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other * inverse(self)

    def scale(self, alpha) -> BiComplex:
        """Multiply by a complex scalar."""
        alpha = _as_complex(alpha, "alpha")
        return BiComplex(alpha * self.minus, alpha * self.plus)

    def is_close(self, other: BiComplex, tol: float = 0.0) -> bool:
        return abs(self.minus - other.minus) <= tol and abs(self.plus - other.plus) <= tol

    def __str__(self):
        from .textio import format_bicomplex

        return format_bicomplex(self)


def idempotent_join(minus, plus) -> BiComplex:
    return BiComplex(minus, plus)


def from_complex_pair(z1, z2) -> BiComplex:
    z1 = _as_complex(z1, "z1")
    z2 = _as_complex(z2, "z2")
    return BiComplex(z1 - 1j * z2, z1 + 1j * z2)


def from_cartesian(u1, u2, u3, u4) -> BiComplex:
    coords = (u1, u2, u3, u4)
    for k, u in enumerate(coords, start=1):
        if isinstance(u, complex) or not math.isfinite(u):
            raise ValueError(f"u{k} must be a finite real number, got {u!r}")
    return from_complex_pair(complex(u1, u2), complex(u3, u4))


def classify(xi: BiComplex, tol: float | None = None) -> Classification:
    tol = resolve(tol, "zero")
    small = (abs(xi.minus) <= tol) + (abs(xi.plus) <= tol)
    if small == 2:
        return Classification.ZERO
    if small == 1:
        return Classification.ZERO_DIVISOR
    return Classification.INVERTIBLE


def inverse(xi: BiComplex, tol: float | None = None) -> BiComplex:
    kind = classify(xi, tol)
    if kind is not Classification.INVERTIBLE:
        failed = [
            name
            for name, part in (("minus", xi.minus), ("plus", xi.plus))
            if abs(part) <= resolve(tol, "zero")
        ]
        raise NotInvertible(f"{xi} is not invertible ({kind.value})", failed, kind)
    return BiComplex(1 / xi.minus, 1 / xi.plus)


ZERO = BiComplex(0, 0)
ONE = BiComplex(1, 1)
E1 = BiComplex(1, 0)
E2 = BiComplex(0, 1)
I1 = BiComplex(1j, 1j)
I2 = from_complex_pair(0, 1)
