"""Reference computations that do not go through the idempotent code paths."""
import itertools

import numpy as np

from bcx import BiComplex, from_complex_pair


def cartesian_mul(x: BiComplex, y: BiComplex) -> BiComplex:
    """(z1 + i2 z2)(w1 + i2 w2) expanded with i2**2 = -1."""
    z1, z2 = x.complex_pair()
    w1, w2 = y.complex_pair()
    return from_complex_pair(z1 * w1 - z2 * w2, z1 * w2 + z2 * w1)


def real4_mul(u, v):
    """Product of u1 + i1 u2 + i2 u3 + i1i2 u4 by the same, from the unit table."""
    # basis order: 1, i1, i2, j=i1i2 ; i1*i1=-1, i2*i2=-1, j*j=1, i1*i2=j, i1*j=-i2, i2*j=-i1
    table = {
        (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
        (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
        (2, 0): (1, 2), (2, 1): (1, 3), (2, 2): (-1, 0), (2, 3): (-1, 1),
        (3, 0): (1, 3), (3, 1): (-1, 2), (3, 2): (-1, 1), (3, 3): (1, 0),
    }
    out = [0.0] * 4
    for a, b in itertools.product(range(4), repeat=2):
        sign, k = table[a, b]
        out[k] += sign * u[a] * v[b]
    return tuple(out)


def cofactor_det(entries):
    """Laplace expansion along the first row using BiComplex arithmetic."""
    n = len(entries)
    if n == 0:
        return BiComplex(1, 1)
    if n == 1:
        return entries[0][0]
    total = BiComplex(0, 0)
    for j in range(n):
        minor = [row[:j] + row[j + 1:] for row in entries[1:]]
        term = entries[0][j] * cofactor_det(minor)
        total = total + term if j % 2 == 0 else total - term
    return total


def bicomplex_matmul(A, B):
    """Entrywise bicomplex dot products."""
    rows, inner, cols = len(A), len(B), len(B[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = BiComplex(0, 0)
            for k in range(inner):
                acc = acc + A[i][k] * B[k][j]
            row.append(acc)
        out.append(row)
    return out


def numpy_rank(a):
    return int(np.linalg.matrix_rank(np.asarray(a), tol=None)) if np.size(a) else 0
