"""Explicit matrix families with exponential patience, and their certificates.

Family ids:

``hessenberg_D``
    Hessenberg-Toeplitz (0,1) matrix with ones on the superdiagonal, the
    diagonal and every second subdiagonal.
``triangular_t`` / ``triangular_tbar`` / ``triangular_tbar_prime``
    Upper triangular (0,1) Toeplitz matrix with ones at offsets 0,1,3,5,...;
    its checkerboard-signed version; and the (n+1)x(n+1) (-1,1) lift.
``toeplitz_T`` / ``toeplitz_Tbar`` / ``toeplitz_Tbar_prime``
    (0,1) Toeplitz matrix with ones at superdiagonal offsets 0,1,3 and at
    subdiagonal offsets 3,4,7,8,11,12,...; its block-checkerboard-signed
    version; and the (n+1)x(n+1) (-1,1) lift.

Signed versions are always ``M o S^T`` where ``S`` is the block checkerboard
pattern that ``M^-1`` weakly obeys, so their inverses are nonnegative.
"""

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .linalg import as_matrix, hadamard, _vec

__all__ = [
    "FAMILIES",
    "FamilyCertificate",
    "BoundaryCheck",
    "fibonacci",
    "pq_sequence",
    "family_matrix",
    "family_certificate",
    "phi_transform",
    "phi_inverse_formula",
    "checkerboard",
    "toeplitz",
    "evaluate_boundary_check",
]

FAMILIES = (
    "hessenberg_D",
    "triangular_t",
    "triangular_tbar",
    "triangular_tbar_prime",
    "toeplitz_T",
    "toeplitz_Tbar",
    "toeplitz_Tbar_prime",
)

_MIN_N = {
    "hessenberg_D": 1,
    "triangular_t": 1,
    "triangular_tbar": 1,
    "triangular_tbar_prime": 2,
    "toeplitz_T": 5,
    "toeplitz_Tbar": 5,
    "toeplitz_Tbar_prime": 5,
}


def fibonacci(k):
    if k < 0:
        raise ValueError("fibonacci index must be nonnegative")
    a, b = 0, 1
    for _ in range(k):
        a, b = b, a + b
    return Fraction(a)


@lru_cache(maxsize=None)
def _pq_table(k):
    p = [1]
    q = [0, 1, 1]
    for i in range(1, k + 1):
        p.append(p[i - 1] + q[i - 1])
        if i >= 3:
            q.append(q[i - 1] + p[i - 2])
    return tuple(p), tuple(q)


def pq_sequence(k):
    """``(p_k, q_k)`` for q_0=0, p_0=q_1=q_2=1, p_n=p_{n-1}+q_{n-1}, q_n=q_{n-1}+p_{n-2}."""
    if k < 0:
        raise ValueError("index must be nonnegative")
    p, q = _pq_table(max(k, 2))
    return Fraction(p[k]), Fraction(q[k])


def toeplitz(n, diagonal):
    """n x n matrix with entry (i, j) = diagonal(i - j) (0-based)."""
    M = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            M[i, j] = Fraction(diagonal(i - j))
    return M


def checkerboard(row_signs, col_signs):
    """The rank-one sign pattern ``row_signs col_signs^T``."""
    return as_matrix(np.outer(np.array(row_signs, dtype=object), np.array(col_signs, dtype=object)))


def phi_transform(A):
    """Lift an n x n (0,1) matrix to the (n+1) x (n+1) (-1,1) matrix

    ``[[1, 1^T], [-1, 2A - 1 1^T]]``.
    """
    A = as_matrix(A)
    if any(v not in (0, 1) for v in A.flat):
        raise ValueError("phi_transform expects a (0,1) matrix")
    n = A.shape[0]
    out = np.empty((n + 1, n + 1), dtype=object)
    out[0, 0] = Fraction(1)
    out[0, 1:] = Fraction(1)
    out[1:, 0] = Fraction(-1)
    out[1:, 1:] = 2 * A - 1
    return out


def phi_inverse_formula(A_inv):
    """Inverse of ``phi_transform(A)`` assembled from ``A^-1``."""
    A_inv = as_matrix(A_inv)
    n = A_inv.shape[0]
    row = A_inv.sum(axis=0)
    col = A_inv.sum(axis=1)
    out = np.empty((n + 1, n + 1), dtype=object)
    out[0, 0] = 2 - row.sum()
    out[0, 1:] = -row
    out[1:, 0] = col
    out[1:, 1:] = A_inv
    return out / 2


def _check_n(family, n):
    if family not in _MIN_N:
        raise ValueError(f"unknown family {family!r}; choose from {', '.join(FAMILIES)}")
    if n < _MIN_N[family]:
        raise ValueError(f"{family} needs n >= {_MIN_N[family]}, got {n}")


def _d_diag(k):
    # k = i - j
    return 1 if k in (-1, 0) or (k > 0 and k % 2 == 0) else 0


def _t_diag(k):
    d = -k
    return 1 if d in (0, 1) or (d > 0 and d % 2 == 1) else 0


def _T_diag(k):
    return 1 if k in (-3, -1, 0) or (k >= 3 and k % 4 in (0, 3)) else 0


def _alternating(n):
    return [(-1) ** i for i in range(n)]  # +,-,+,... (0-based)


def _tbar_prime_pattern(n):
    # pattern obeyed by phi(t_n)^-1: alternating, with the first column's sign
    # following the parity of n
    rows = _alternating(n + 1)
    cols = _alternating(n + 1)
    cols[0] = (-1) ** n
    return checkerboard(rows, cols)


def _T_pattern(n):
    rows = [-1, 1, -1] + [1] * (n - 3)
    cols = [1] * (n - 3) + [-1, 1, -1]
    return checkerboard(rows, cols)


def _T_prime_pattern(n):
    rows = [1, -1, 1, -1] + [1] * (n - 3)
    cols = [-1] + [1] * (n - 3) + [-1, 1, -1]
    return checkerboard(rows, cols)


def family_matrix(family, n):
    """The exact matrix of ``family`` at size parameter ``n``.

    Primed families are (n+1) x (n+1).
    """
    _check_n(family, n)
    if family == "hessenberg_D":
        return toeplitz(n, _d_diag)
    if family == "triangular_t":
        return toeplitz(n, _t_diag)
    if family == "triangular_tbar":
        return hadamard(toeplitz(n, _t_diag), checkerboard(_alternating(n), _alternating(n)))
    if family == "triangular_tbar_prime":
        return hadamard(phi_transform(toeplitz(n, _t_diag)), _tbar_prime_pattern(n).T)
    if family == "toeplitz_T":
        return toeplitz(n, _T_diag)
    if family == "toeplitz_Tbar":
        return hadamard(toeplitz(n, _T_diag), _T_pattern(n).T)
    return hadamard(phi_transform(toeplitz(n, _T_diag)), _T_prime_pattern(n).T)


@dataclass(frozen=True)
class BoundaryCheck:
    """One exact claim about a family matrix.

    ``quantity`` is ``"inverse_entry"`` (``location`` is a 0-based (i, j)),
    ``"colsum"``/``"rowsum"`` (entry ``location`` of 1^T M^-1 / M^-1 1),
    ``"colsums_nonneg"``/``"rowsums_nonneg"``/``"inverse_nonneg"``
    (``expected`` is None).
    """

    description: str
    quantity: str
    location: object = None
    expected: Fraction | None = None


@dataclass(eq=False)
class FamilyCertificate:
    family: str
    n: int
    predicted_value: Fraction | None = None
    predicted_maximin: np.ndarray | None = None
    predicted_minimax: np.ndarray | None = None
    predicted_patience: Fraction | None = None
    predicted_inverse: np.ndarray | None = None
    boundary_checks: list = field(default_factory=list)


def evaluate_boundary_check(check, M_inv):
    """Return ``(ok, witnessed)`` for ``check`` against the inverse ``M_inv``."""
    if check.quantity == "inverse_entry":
        got = M_inv[check.location]
        return got == check.expected, got
    if check.quantity == "colsum":
        got = M_inv[:, check.location].sum()
        return got == check.expected, got
    if check.quantity == "rowsum":
        got = M_inv[check.location, :].sum()
        return got == check.expected, got
    if check.quantity == "colsums_nonneg":
        got = min(M_inv.sum(axis=0))
        return got >= 0, got
    if check.quantity == "rowsums_nonneg":
        got = min(M_inv.sum(axis=1))
        return got >= 0, got
    if check.quantity == "inverse_nonneg":
        got = min(M_inv.flat)
        return got >= 0, got
    raise ValueError(f"unknown boundary quantity {check.quantity!r}")


def _signed_fib_toeplitz(n, signed):
    def diag(k):
        d = -k
        if d < 0:
            return 0
        if d == 0:
            return 1
        f = fibonacci(d)
        return (-1) ** d * f if signed else f

    return toeplitz(n, diag)


def family_certificate(family, n):
    """Closed-form predictions for ``family_matrix(family, n)``."""
    _check_n(family, n)
    F = fibonacci
    cert = FamilyCertificate(family, n)
    if family == "hessenberg_D":
        v = F(n) / (2 * F(n) - 1)
        x = _vec([v * F(i) / F(n) for i in range(1, n)] + [v * F(n - 2) / F(n)] if n >= 2 else [v])
        cert.predicted_value = v
        cert.predicted_maximin = x
        cert.predicted_minimax = x[::-1].copy()
        cert.predicted_patience = 2 * F(n) - 1
    elif family == "triangular_t":
        cert.predicted_inverse = _signed_fib_toeplitz(n, signed=True)
    elif family == "triangular_tbar":
        total = F(n + 3) - 2
        x = _vec([F(i + 1) / total for i in range(1, n + 1)])
        cert.predicted_value = 1 / total
        cert.predicted_maximin = x
        cert.predicted_minimax = x[::-1].copy()
        cert.predicted_patience = total
        cert.predicted_inverse = _signed_fib_toeplitz(n, signed=False)
    elif family == "triangular_tbar_prime":
        total = F(n - 1) + F(n + 2) - 1
        x = _vec([F(n - 1) / total] + [F(i - 1) / total for i in range(2, n + 2)])
        # column weights share the first entry and reverse the rest
        y = _vec([F(n - 1) / total] + [F(n + 2 - i) / total for i in range(2, n + 2)])
        cert.predicted_value = 1 / total
        cert.predicted_maximin = x
        cert.predicted_minimax = y
        cert.predicted_patience = total
    elif family == "toeplitz_T":
        p = lambda k: pq_sequence(k)[0]
        q = lambda k: pq_sequence(k)[1]
        cert.boundary_checks = [
            BoundaryCheck("(T^-1)_(1,1) = -1", "inverse_entry", (0, 0), Fraction(-1)),
            BoundaryCheck("(T^-1)_(1,2) = -p_2", "inverse_entry", (0, 1), -p(2)),
            BoundaryCheck("(T^-1)_(2,1) = 1", "inverse_entry", (1, 0), Fraction(1)),
            BoundaryCheck("(T^-1)_(1,n) = p_(n-2)", "inverse_entry", (0, n - 1), p(n - 2)),
            BoundaryCheck("(T^-1)_(1,n-1) = -q_(n-3)", "inverse_entry", (0, n - 2), -q(n - 3)),
            BoundaryCheck("(T^-1)_(1,n-2) = q_(n-2)", "inverse_entry", (0, n - 3), q(n - 2)),
        ]
    elif family == "toeplitz_Tbar":
        cert.boundary_checks = [
            BoundaryCheck("(1^T Tbar^-1)_1 = 4", "colsum", 0, Fraction(4)),
            BoundaryCheck("(Tbar^-1 1)_n = 4", "rowsum", n - 1, Fraction(4)),
            BoundaryCheck("1^T Tbar^-1 >= 0", "colsums_nonneg"),
            BoundaryCheck("Tbar^-1 1 >= 0", "rowsums_nonneg"),
            BoundaryCheck("Tbar^-1 >= 0", "inverse_nonneg"),
        ]
    else:
        cert.boundary_checks = [
            BoundaryCheck("(1^T Tbar'^-1)_1 = 1", "colsum", 0, Fraction(1)),
            BoundaryCheck("(Tbar'^-1 1)_1 = 1", "rowsum", 0, Fraction(1)),
            BoundaryCheck("1^T Tbar'^-1 >= 0", "colsums_nonneg"),
            BoundaryCheck("Tbar'^-1 1 >= 0", "rowsums_nonneg"),
            BoundaryCheck("Tbar'^-1 >= 0", "inverse_nonneg"),
        ]
    return cert
