"""Maps of the form T = e1*T1 + e2*T2 between C2^n and C2^m.

``T1`` and ``T2`` are complex linear maps C^n -> C^m given by their
standard-basis matrices.  ``T`` acts on ``v = e1*x + e2*y`` as
``e1*T1(x) + e2*T2(y)``.  Such a map is C-linear, but it commutes with
multiplication by ``i2`` only when ``T1 == T2``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .errors import DimensionError, NoSolution, NotInvertible, Singular
from .linalg import Basis
from .matrix import BCMatrix
from .scalar import _as_complex
from .vector import BCVector

__all__ = ["LinMap", "BasisPair"]


@dataclass(frozen=True)
class BasisPair:
    """Ordered bases of the domain (``b1``) and codomain (``b2``)."""

    b1: Basis
    b2: Basis


class LinMap:
    __slots__ = ("t1", "t2")

    def __init__(self, t1, t2):
        t1 = linalg.as_cmatrix(t1)
        t2 = linalg.as_cmatrix(t2)
        if t1.shape != t2.shape:
            raise DimensionError(f"components differ in shape: {t1.shape} vs {t2.shape}")
        self.t1 = t1
        self.t2 = t2

    @classmethod
    def from_functions(cls, f1, f2, n: int) -> LinMap:
        """Tabulate two complex linear maps on the standard basis of C^n."""
        if n == 0:
            raise ValueError("cannot infer codomain dimension of a map from C^0")
        eye = np.eye(n, dtype=np.complex128)
        cols1 = [np.asarray(f1(e), dtype=np.complex128) for e in eye]
        cols2 = [np.asarray(f2(e), dtype=np.complex128) for e in eye]
        return cls(np.column_stack(cols1), np.column_stack(cols2))

    @classmethod
    def from_matrix(cls, M: BCMatrix) -> LinMap:
        """The map v -> M v; the components are the idempotent parts of ``M``."""
        return cls(M.minus, M.plus)

    @classmethod
    def identity(cls, n: int) -> LinMap:
        eye = np.eye(n, dtype=np.complex128)
        return cls(eye, eye)

    @classmethod
    def zero(cls, m: int, n: int) -> LinMap:
        z = np.zeros((m, n), dtype=np.complex128)
        return cls(z, z)

    @property
    def m(self) -> int:
        return self.t1.shape[0]

    @property
    def n(self) -> int:
        return self.t1.shape[1]

    def __repr__(self):
        return f"LinMap(t1={self.t1.tolist()!r}, t2={self.t2.tolist()!r})"

    # -- algebra -----------------------------------------------------------
    def apply(self, v: BCVector) -> BCVector:
        if len(v) != self.n:
            raise DimensionError(f"map expects length {self.n}, got {len(v)}")
        return BCVector(self.t1 @ v.minus, self.t2 @ v.plus)

    __call__ = apply

    def _same_shape(self, other):
        if not isinstance(other, LinMap):
            raise TypeError(f"expected LinMap, got {type(other).__name__}")
        if self.t1.shape != other.t1.shape:
            raise DimensionError(f"shape mismatch: {self.t1.shape} vs {other.t1.shape}")

    def __add__(self, other):
        self._same_shape(other)
        return LinMap(self.t1 + other.t1, self.t2 + other.t2)

    def __neg__(self):
        return LinMap(-self.t1, -self.t2)

    def __sub__(self, other):
        self._same_shape(other)
        return LinMap(self.t1 - other.t1, self.t2 - other.t2)

    def scalar_mul(self, alpha) -> LinMap:
        alpha = _as_complex(alpha, "alpha")
        return LinMap(alpha * self.t1, alpha * self.t2)

    def __rmul__(self, alpha):
        if isinstance(alpha, (complex, float, int)) and not isinstance(alpha, bool):
            return self.scalar_mul(alpha)
        return NotImplemented

    def compose(self, other: LinMap) -> LinMap:
        """``self ∘ other``: apply ``other`` first."""
        if self.n != other.m:
            raise DimensionError(
                f"cannot compose {self.m}x{self.n} after {other.m}x{other.n}"
            )
        return LinMap(self.t1 @ other.t1, self.t2 @ other.t2)

    def __matmul__(self, other):
        if isinstance(other, LinMap):
            return self.compose(other)
        if isinstance(other, BCVector):
            return self.apply(other)
        return NotImplemented

    def eq_zero(self, tol: float = 0.0) -> bool:
        return bool(np.all(np.abs(self.t1) <= tol) and np.all(np.abs(self.t2) <= tol))

    def eq(self, other: LinMap, tol: float = 0.0) -> bool:
        self._same_shape(other)
        return (self - other).eq_zero(tol)

    def __eq__(self, other):
        if not isinstance(other, LinMap):
            return NotImplemented
        return self.t1.shape == other.t1.shape and self.eq(other)

    __hash__ = None

    # -- kernel, image, rank -------------------------------------------------
    def kernel_basis(self, tol_pivot: float | None = None) -> list[BCVector]:
        """e1*z_i for the kernel basis z_i of t1, then e2*w_j for that of t2."""
        n = self.n
        zero = np.zeros(n, dtype=np.complex128)
        out = [BCVector(z, zero) for z in linalg.kernel_basis(self.t1, tol_pivot)]
        out += [BCVector(zero, w) for w in linalg.kernel_basis(self.t2, tol_pivot)]
        return out

    def image_basis_with_preimages(
        self, tol_pivot: float | None = None
    ) -> list[tuple[BCVector, BCVector]]:
        """Pairs ``(y, x)`` with ``y = T(x)``; the ``y`` span the image.

        Each ``y`` is a pivot column of a component, so ``x`` is the matching
        standard basis vector placed in that component.
        """
        m, n = self.m, self.n
        zm = np.zeros(m, dtype=np.complex128)
        zn = np.zeros(n, dtype=np.complex128)
        eye = np.eye(n, dtype=np.complex128)
        out = []
        for j in linalg.rref(self.t1, tol_pivot).pivots:
            out.append((BCVector(self.t1[:, j], zm), BCVector(eye[j], zn)))
        for j in linalg.rref(self.t2, tol_pivot).pivots:
            out.append((BCVector(zm, self.t2[:, j]), BCVector(zn, eye[j])))
        return out

    def image_basis(self, tol_pivot: float | None = None) -> list[BCVector]:
        return [y for y, _ in self.image_basis_with_preimages(tol_pivot)]

    def component_ranks(self, tol_pivot: float | None = None) -> tuple[int, int]:
        return linalg.rank(self.t1, tol_pivot), linalg.rank(self.t2, tol_pivot)

    def rank(self, tol_pivot: float | None = None) -> int:
        return sum(self.component_ranks(tol_pivot))

    def nullity(self, tol_pivot: float | None = None) -> int:
        return 2 * self.n - self.rank(tol_pivot)

    # -- invertibility -------------------------------------------------------
    def _singular_components(self, tol_pivot):
        n = self.n
        return [
            name
            for name, t in (("minus", self.t1), ("plus", self.t2))
            if linalg.rank(t, tol_pivot) < n
        ]

    def is_invertible(self, tol_pivot: float | None = None) -> bool:
        return self.m == self.n and not self._singular_components(tol_pivot)

    def is_nonsingular(self, tol_pivot: float | None = None) -> bool:
        """Injectivity: the kernel is trivial."""
        return not self.kernel_basis(tol_pivot)

    def inverse(self, tol_pivot: float | None = None) -> LinMap:
        if self.m != self.n:
            raise DimensionError(f"only square maps can be inverted, got {self.m}x{self.n}")
        parts, failed = [], []
        for name, t in (("minus", self.t1), ("plus", self.t2)):
            try:
                parts.append(linalg.inv(t, tol_pivot))
            except Singular:
                failed.append(name)
        if failed:
            raise NotInvertible(f"singular {' and '.join(failed)} component", failed)
        return LinMap(*parts)

    # -- representation and systems -----------------------------------------
    def matrix_rep(self, bases: BasisPair | None = None, b2: Basis | None = None) -> BCMatrix:
        """The bicomplex matrix e1*[T1] + e2*[T2] relative to a pair of bases.

        Column j of [Tk] holds the ``b2``-coordinates of Tk applied to the
        j-th vector of ``b1``.  Accepts a :class:`BasisPair` or two bases.
        """
        if isinstance(bases, Basis):
            bases = BasisPair(bases, b2 if b2 is not None else bases)
        elif bases is None:
            bases = BasisPair(Basis.standard(self.n), Basis.standard(self.m))
        b1, b2 = bases.b1, bases.b2
        if b1.dim != self.n or b2.dim != self.m:
            raise DimensionError(
                f"bases of dimensions ({b1.dim}, {b2.dim}) do not fit a {self.m}x{self.n} map"
            )
        reps = []
        for t in (self.t1, self.t2):
            cols = [b2.coords(t @ u) for u in b1.vectors]
            reps.append(
                np.column_stack(cols) if cols else np.zeros((self.m, 0), dtype=np.complex128)
            )
        return BCMatrix(*reps)

    def solve(self, eta: BCVector, tol_pivot: float | None = None) -> BCVector:
        """Some ``v`` with ``T(v) = eta``; each component system is solved separately."""
        if len(eta) != self.m:
            raise DimensionError(f"right-hand side must have length {self.m}, got {len(eta)}")
        parts, failed = [], []
        for name, t, rhs in (("minus", self.t1, eta.minus), ("plus", self.t2, eta.plus)):
            try:
                parts.append(linalg.solve(t, rhs, tol_pivot))
            except NoSolution:
                failed.append(name)
        if failed:
            raise NoSolution(f"inconsistent {' and '.join(failed)} component", failed)
        return BCVector(*parts)
