"""Exact rational dense linear algebra.

Matrices are 2-D numpy arrays of dtype ``object`` holding
:class:`fractions.Fraction` entries; vectors are 1-D arrays of the same kind.
Nothing in this module ever touches floating point.

Determinants and inverses go through fraction-free (Bareiss) elimination on
integer matrices obtained by clearing denominators row by row, which keeps
every intermediate value a minor of the input.
"""

from fractions import Fraction
from math import lcm

import numpy as np

__all__ = [
    "DimensionError",
    "SingularMatrixError",
    "as_matrix",
    "as_vector",
    "identity",
    "det",
    "adjugate",
    "inverse",
    "inverse_with_adjugate",
    "solve",
    "hadamard",
    "matmul",
    "is_lower_triangular",
    "max_abs_entry",
]


class DimensionError(ValueError):
    """Operand shapes are incompatible with the requested operation."""


class SingularMatrixError(ArithmeticError):
    """Raised when an inverse or solve is requested for a singular matrix."""

    def __init__(self, message="matrix is singular", det=Fraction(0)):
        super().__init__(message)
        self.det = det


def _to_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (float, np.floating)):
        raise TypeError(f"refusing float entry {value!r}; use ints, Fractions or 'p/q' strings")
    if isinstance(value, (np.integer,)):
        return Fraction(int(value))
    return Fraction(value)


def as_matrix(obj):
    """Convert nested sequences (or an array) to an object matrix of Fractions."""
    arr = np.array(obj, dtype=object)
    if arr.ndim != 2:
        raise DimensionError(f"expected a 2-D matrix, got ndim={arr.ndim}")
    out = np.empty(arr.shape, dtype=object)
    for idx, value in np.ndenumerate(arr):
        out[idx] = _to_fraction(value)
    return out


def as_vector(obj):
    arr = np.array(obj, dtype=object)
    if arr.ndim != 1:
        raise DimensionError(f"expected a 1-D vector, got ndim={arr.ndim}")
    return _vec([_to_fraction(v) for v in arr])


def _vec(values):
    out = np.empty(len(values), dtype=object)
    out[:] = values
    return out


def identity(n):
    out = np.full((n, n), Fraction(0), dtype=object)
    for i in range(n):
        out[i, i] = Fraction(1)
    return out


def _require_square(M):
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {M.shape}")


def _integer_rows(M):
    """Scale each row of ``M`` to integers.

    Returns the integer object array and the list of per-row scale factors.
    """
    rows, cols = M.shape
    W = np.empty((rows, cols), dtype=object)
    scales = []
    for i in range(rows):
        s = 1
        for v in M[i]:
            s = lcm(s, Fraction(v).denominator)
        scales.append(s)
        for j in range(cols):
            v = Fraction(M[i, j])
            W[i, j] = v.numerator * (s // v.denominator)
    return W, scales


def _bareiss_det(W):
    # W is an n x n object array of ints and is consumed.
    n = W.shape[0]
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if W[k, k] == 0:
            nz = [r for r in range(k + 1, n) if W[r, k] != 0]
            if not nz:
                return 0
            r = nz[0]
            W[[k, r]] = W[[r, k]]
            sign = -sign
        piv = W[k, k]
        W[k + 1:, k + 1:] = (piv * W[k + 1:, k + 1:] - np.outer(W[k + 1:, k], W[k, k + 1:])) // prev
        W[k + 1:, k] = 0
        prev = piv
    return sign * W[n - 1, n - 1]


def det(M):
    """Exact determinant of a square rational matrix."""
    M = as_matrix(M)
    _require_square(M)
    W, scales = _integer_rows(M)
    d = _bareiss_det(W)
    denom = 1
    for s in scales:
        denom *= s
    return Fraction(d, denom)


def _gauss_jordan(W, n):
    """Fraction-free Gauss-Jordan elimination on the integer array ``W``.

    The left ``n`` columns are reduced to ``d * I``; the right block then
    holds ``d`` times the solution.  Returns ``(d, W)``, with ``d == 0`` when
    the left block is singular.
    """
    prev = 1
    for k in range(n):
        if W[k, k] == 0:
            nz = [r for r in range(k + 1, n) if W[r, k] != 0]
            if not nz:
                return 0, W
            r = nz[0]
            W[[k, r]] = W[[r, k]]
        piv = W[k, k]
        pivot_row = W[k].copy()
        W = (piv * W - np.outer(W[:, k], pivot_row)) // prev
        W[k] = pivot_row
        prev = piv
    return prev, W


def inverse_with_adjugate(M):
    """Return ``(M^-1, adj(M), det(M))``.

    Raises :class:`SingularMatrixError` if ``M`` is singular.
    """
    M = as_matrix(M)
    _require_square(M)
    n = M.shape[0]
    if n == 0:
        return M.copy(), M.copy(), Fraction(1)
    W, scales = _integer_rows(M)
    aug = np.concatenate([W, np.diag([1] * n).astype(object)], axis=1)
    for i, s in enumerate(scales):
        aug[i, n + i] = s
    d, aug = _gauss_jordan(aug, n)
    if d == 0:
        raise SingularMatrixError(det=Fraction(0))
    inv = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            inv[i, j] = Fraction(aug[i, n + j], d)
    determinant = det(M)
    adj = inv * determinant
    return inv, adj, determinant


def inverse(M):
    return inverse_with_adjugate(M)[0]


def _cofactor_adjugate(M):
    n = M.shape[0]
    adj = np.empty((n, n), dtype=object)
    if n == 1:
        adj[0, 0] = Fraction(1)
        return adj
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(M, i, axis=0), j, axis=1)
            adj[j, i] = (-1) ** (i + j) * det(minor)
    return adj


def adjugate(M):
    """Adjugate of a square matrix, singular or not."""
    M = as_matrix(M)
    _require_square(M)
    try:
        return inverse_with_adjugate(M)[1]
    except SingularMatrixError:
        return _cofactor_adjugate(M)


def is_lower_triangular(M):
    rows, cols = M.shape
    return all(M[i, j] == 0 for i in range(rows) for j in range(i + 1, cols))


def _forward_substitution(M, b):
    n = M.shape[0]
    x = np.empty(n, dtype=object)
    for i in range(n):
        row = M[i]
        if row[i] == 0:
            raise SingularMatrixError(det=Fraction(0))
        acc = Fraction(b[i])
        for j in range(i):
            if row[j] != 0 and x[j] != 0:
                acc -= row[j] * x[j]
        x[i] = acc / row[i]
    return x


def solve(M, b):
    """Solve ``M x = b`` exactly.

    Lower-triangular systems are solved by forward substitution; anything else
    by fraction-free Gauss-Jordan elimination on the augmented system.
    """
    M = as_matrix(M)
    _require_square(M)
    b = as_vector(b)
    n = M.shape[0]
    if b.shape[0] != n:
        raise DimensionError(f"right-hand side has length {b.shape[0]}, expected {n}")
    if is_lower_triangular(M):
        return _forward_substitution(M, b)
    W, _ = _integer_rows(np.concatenate([M, b.reshape(n, 1)], axis=1))
    d, W = _gauss_jordan(W, n)
    if d == 0:
        raise SingularMatrixError(det=Fraction(0))
    return _vec([Fraction(W[i, n], d) for i in range(n)])


def _integer_scaled(M):
    # M == W / s with W integer
    s = 1
    for v in M.flat:
        s = lcm(s, Fraction(v).denominator)
    W = np.empty(M.shape, dtype=object)
    for idx, v in np.ndenumerate(M):
        v = Fraction(v)
        W[idx] = v.numerator * (s // v.denominator)
    return W, s


def matmul(A, B):
    """Exact matrix (or matrix-vector) product.

    Clears denominators first so the inner products run on Python ints, which
    is several times faster than multiplying Fractions entry by entry.
    """
    A = np.asarray(A, dtype=object)
    B = np.asarray(B, dtype=object)
    if A.shape[-1] != B.shape[0]:
        raise DimensionError(f"cannot multiply shapes {A.shape} and {B.shape}")
    WA, sa = _integer_scaled(A)
    WB, sb = _integer_scaled(B)
    P = WA.dot(WB)
    out = np.empty(P.shape, dtype=object)
    s = sa * sb
    for idx, v in np.ndenumerate(P):
        out[idx] = Fraction(v, s)
    return out


def hadamard(A, B):
    """Entrywise product of two equally shaped matrices."""
    A = as_matrix(A)
    B = as_matrix(B)
    if A.shape != B.shape:
        raise DimensionError(f"shape mismatch {A.shape} vs {B.shape}")
    return A * B


def max_abs_entry(M):
    """Largest absolute entry; applied to an inverse this is chi(A)."""
    return max(abs(v) for v in np.asarray(M).flat)
