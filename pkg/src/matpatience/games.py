"""Exact solution of zero-sum matrix games.

Player 1 picks a row and maximises, player 2 picks a column and minimises.
Strategies are 1-D object arrays of Fractions.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from ._caps import CapExceededError, default_cap
from .linalg import DimensionError, SingularMatrixError, adjugate, as_matrix, det, inverse, _vec
from .lp import linprog

__all__ = [
    "GameSolution",
    "Kernel",
    "NonsingularRejection",
    "CapExceededError",
    "solve_game",
    "game_value",
    "is_unique_optimum",
    "nonsingular_solution",
    "shapley_snow_kernels",
    "is_optimal_pair",
    "is_strategy",
    "patience",
    "min_patience",
    "check_patience_bound",
]


@dataclass(frozen=True, eq=False)
class GameSolution:
    value: Fraction
    maximin: np.ndarray
    minimax: np.ndarray
    # None only from nonsingular_solution when it cannot certify uniqueness
    unique: bool | None
    totally_mixed: bool


@dataclass(frozen=True, eq=False)
class Kernel:
    """A square submatrix whose basic solutions are optimal for the game."""

    row_indices: tuple
    col_indices: tuple
    value: Fraction
    basic_x: np.ndarray
    basic_y: np.ndarray


class NonsingularRejection(ValueError):
    """The closed-form solution for a nonsingular game does not apply.

    ``reason`` is one of ``"not_square"``, ``"singular"``, ``"zero_sum"``
    (the all-ones quadratic form of the inverse vanishes) or ``"negative"``.
    """

    def __init__(self, reason, message=None):
        super().__init__(message or reason)
        self.reason = reason


def is_strategy(s):
    return all(v >= 0 for v in s) and sum(s, Fraction(0)) == 1


def is_optimal_pair(A, x, y, value):
    """Exact check that ``x`` and ``y`` guarantee ``value`` for their players."""
    A = np.asarray(A, dtype=object)
    if not (is_strategy(x) and is_strategy(y)):
        return False
    return all(v >= value for v in x.dot(A)) and all(v <= value for v in A.dot(y))


def _positive(s):
    return all(v > 0 for v in s)


def _solve_lp(A):
    """Value and one optimal pair via the LP on the shifted game."""
    m, n = A.shape
    shift = 1 - min(A.flat)
    shifted = A + shift  # every entry >= 1, so the value is >= 1
    res = linprog([1] * n, A_ub=shifted.tolist(), b_ub=[1] * m)
    if not res.optimal:  # pragma: no cover - bounded and feasible by construction
        raise RuntimeError(f"game LP unexpectedly {res.status}")
    v_shift = 1 / res.value
    y = _vec([u * v_shift for u in res.x])
    x = _vec([p * v_shift for p in res.duals])
    value = v_shift - shift
    if not is_optimal_pair(A, x, y, value):  # pragma: no cover - defensive
        raise RuntimeError("simplex returned a non-optimal pair")
    return value, x, y


def game_value(A):
    """Exact value of the game, without the uniqueness checks of :func:`solve_game`."""
    A = as_matrix(A)
    if A.size == 0:
        raise DimensionError("empty game matrix")
    return _solve_lp(A)[0]


def solve_game(A):
    """Exact value and one optimal strategy per player.

    ``unique`` comes from the nonsingular closed form when that applies and
    otherwise from :func:`is_unique_optimum`, so it is always settled.
    """
    A = as_matrix(A)
    if A.size == 0:
        raise DimensionError("empty game matrix")
    value, x, y = _solve_lp(A)
    mixed = _positive(x) and _positive(y)
    unique = None
    if mixed and A.shape[0] == A.shape[1]:
        try:
            unique = nonsingular_solution(A).unique
        except NonsingularRejection:
            unique = None
    if unique is None:
        unique = _unique_for(A, value, x) and _unique_for(-A.T, -value, y)
    return GameSolution(value, x, y, unique, mixed)


def _coordinate_range(A, value, i, sign):
    # max of sign * x_i over the row player's optimal strategies
    m, n = A.shape
    c = [0] * m
    c[i] = sign
    return linprog(c, A_ub=(-A.T).tolist(), b_ub=[-value] * n, A_eq=[[1] * m], b_eq=[1])


def _unique_for(A, value, x0):
    for i in range(A.shape[0]):
        if _coordinate_range(A, value, i, 1).value != x0[i]:
            return False
        if -_coordinate_range(A, value, i, -1).value != x0[i]:
            return False
    return True


def is_unique_optimum(A, player=1):
    """Whether ``player`` has exactly one optimal strategy.

    The optimal strategies form a polytope, which is a single point exactly
    when every coordinate has the same minimum and maximum over it.
    """
    A = as_matrix(A)
    if player == 2:
        A = -A.T
    value, x, _ = _solve_lp(A)
    return _unique_for(A, value, x)


def nonsingular_solution(A):
    """Closed-form solution of a nonsingular square game.

    Raises :class:`NonsingularRejection` when the formula does not yield a
    pair of strategies; callers then fall back to :func:`solve_game`.
    """
    A = as_matrix(A)
    if A.ndim != 2 or A.shape[0] != A.shape[1]:
        raise NonsingularRejection("not_square")
    try:
        Ainv = inverse(A)
    except SingularMatrixError:
        raise NonsingularRejection("singular") from None
    row = Ainv.sum(axis=0)  # 1^T A^-1
    col = Ainv.sum(axis=1)  # A^-1 1
    total = sum(row, Fraction(0))
    if total == 0:
        raise NonsingularRejection("zero_sum")
    v = 1 / total
    x = row * v
    y = col * v
    if any(t < 0 for t in x) or any(t < 0 for t in y):
        raise NonsingularRejection("negative")
    mixed = _positive(x) and _positive(y)
    return GameSolution(v, x, y, mixed if mixed else None, mixed)


def _check_cap(A, cap):
    cap = default_cap() if cap is None else cap
    if max(A.shape) > cap:
        raise CapExceededError(f"game of shape {A.shape} exceeds enumeration cap {cap}")
    return cap


def _tight_lines(A, value):
    """Rows ``i`` with ``(A y)_i = value`` for some optimal ``y``."""
    m, n = A.shape
    out = []
    for i in range(m):
        # maximize (A y)_i over optimal y: A y <= value, y stochastic
        res = linprog(A[i].tolist(), A_ub=A.tolist(), b_ub=[value] * m, A_eq=[[1] * n], b_eq=[1])
        if res.optimal and res.value == value:
            out.append(i)
    return out


def shapley_snow_kernels(A, cap=None, value=None):
    """All square submatrices that yield optimal basic solutions.

    Enumerates every equal-size row/column index pair, evaluates the
    adjugate formulas and keeps the pairs whose extended strategies are
    optimal.  Only rows and columns that are tight for some optimal strategy
    of the opponent can occur, so the search is restricted to those.  The result is ordered by size, then row tuple, then column tuple.
    """
    A = as_matrix(A)
    _check_cap(A, cap)
    m, n = A.shape
    if value is None:
        value = _solve_lp(A)[0]
    # a kernel's rows are tight against its y, and its columns against its x
    row_pool = _tight_lines(A, value)
    col_pool = _tight_lines(-A.T, -value)
    kernels = []
    for k in range(1, min(len(row_pool), len(col_pool)) + 1):
        for rows in combinations(row_pool, k):
            sub_rows = A[list(rows)]
            for cols in combinations(col_pool, k):
                B = sub_rows[:, list(cols)]
                adj = adjugate(B)
                denom = adj.sum()
                if denom == 0:
                    continue
                row_w = adj.sum(axis=0) / denom
                col_w = adj.sum(axis=1) / denom
                if any(t < 0 for t in row_w) or any(t < 0 for t in col_w):
                    continue
                v = det(B) / denom
                if v != value:
                    continue
                x = _vec([Fraction(0)] * m)
                y = _vec([Fraction(0)] * n)
                x[list(rows)] = row_w
                y[list(cols)] = col_w
                if is_optimal_pair(A, x, y, value):
                    kernels.append(Kernel(rows, cols, v, x, y))
    return kernels


def patience(s):
    """Reciprocal of the smallest nonzero probability of a strategy."""
    return 1 / min(v for v in s if v > 0)


def _support_union(A, value, x0):
    """Rows used with positive probability by some optimal strategy."""
    m = A.shape[0]
    union = {i for i in range(m) if x0[i] > 0}
    for i in range(m):
        if i in union:
            continue
        res = _coordinate_range(A, value, i, 1)
        if res.value > 0:
            union.update(j for j in range(m) if res.x[j] > 0)
    return sorted(union)


def _best_on_support(A, value, support):
    """Largest t with an optimal x, supp(x) within ``support``, x_i >= t on it."""
    n = A.shape[1]
    s = len(support)
    # variables: x_S (s of them) then t
    A_ub = []
    for a in range(s):
        row = [0] * (s + 1)
        row[a] = -1
        row[s] = 1
        A_ub.append(row)
    for j in range(n):
        A_ub.append([-A[i, j] for i in support] + [0])
    b_ub = [0] * s + [-value] * n
    res = linprog([0] * s + [1], A_ub=A_ub, b_ub=b_ub, A_eq=[[1] * s + [0]], b_eq=[1])
    return res.value if res.optimal else None


def min_patience(A, player=1, cap=None):
    """Minimum patience over all optimal strategies of ``player`` (1 or 2).

    A square game whose closed-form solution is totally mixed has a unique
    optimal pair, which is returned directly with no size limit.  Otherwise
    the game must be within ``cap``; candidate supports are the subsets of
    the union of optimal supports, each scored by an exact LP.
    """
    A = as_matrix(A)
    if player not in (1, 2):
        raise ValueError(f"player must be 1 or 2, got {player!r}")
    if A.size == 0:
        raise DimensionError("empty game matrix")
    if A.shape[0] == A.shape[1]:
        try:
            sol = nonsingular_solution(A)
        except NonsingularRejection:
            sol = None
        if sol is not None and sol.unique:
            return patience(sol.maximin if player == 1 else sol.minimax)
    _check_cap(A, cap)
    if player == 2:
        A = -A.T
    value, x0, _ = _solve_lp(A)
    union = _support_union(A, value, x0)
    best = patience(x0)
    for size in range(1, len(union) + 1):
        if size >= best:
            break  # a support of this size forces patience >= size
        for support in combinations(union, size):
            t = _best_on_support(A, value, list(support))
            if t is not None and t > 0 and 1 / t < best:
                best = 1 / t
    return best


def check_patience_bound(p, n, family):
    """Test ``p`` against the upper bound on patience for n x n games.

    ``family`` is ``"winlose"`` (bound ``(n+2)^((n+2)/2) / 2^(n+1)``) or
    ``"winlosedraw"`` (bound ``(n+1)^((n+1)/2)``).  Both sides are squared so
    the comparison stays in exact rational arithmetic.
    """
    p = Fraction(p)
    if family == "winlose":
        return (2 ** (n + 1) * p) ** 2 <= (n + 2) ** (n + 2)
    if family == "winlosedraw":
        return p * p <= (n + 1) ** (n + 1)
    raise ValueError(f"unknown family {family!r}")
