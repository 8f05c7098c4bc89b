"""Game transformations that move patience between players and alphabets.

``pair_game`` puts ``A`` and a transposed complement side by side so that
both players of the result need the larger of the two patiences of ``A``.
``wld_to_wl`` turns a win-lose-draw game into a win-lose game of twice the
size, with value ``(val(A) + 1) / 2``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from .games import game_value
from .linalg import as_matrix, _vec

__all__ = ["TransformResult", "TransformRejection", "pair_game", "wld_to_wl"]


class TransformRejection(ValueError):
    """The input does not meet the transform's preconditions.

    ``reason`` is ``"alphabet"`` or ``"boundary_value"``.
    """

    def __init__(self, reason, message):
        super().__init__(message)
        self.reason = reason


@dataclass(frozen=True, eq=False)
class TransformResult:
    matrix: np.ndarray
    # (x', y') optimal in the output -> (x, y) optimal in the input
    fold: Callable
    # (x, y) optimal in the input -> (x', y') optimal in the output, if known
    lift: Callable | None = None
    description: str = ""


def _check_alphabet(A, allowed, name):
    if any(v not in allowed for v in A.flat):
        raise TransformRejection("alphabet", f"expected a {name} matrix")


def _normalized(v):
    total = sum(v, Fraction(0))
    return _vec([t / total for t in v])


def pair_game(A, variant="zeroone"):
    """Block game in which both players need patience ``max(tau1, tau2)``.

    ``zeroone``: ``[[A, 0], [0, J - A^T]]`` for a (0,1) game with
    ``0 < val(A) < 1``.  ``pm``: ``[[A, -J], [-J, -A^T]]`` for a (-1,0,1)
    game with ``-1 < val(A) < 1``.  ``J`` is the all-ones matrix.
    """
    A = as_matrix(A)
    m, n = A.shape
    J = np.full((n, m), Fraction(1), dtype=object)
    if variant == "zeroone":
        _check_alphabet(A, (0, 1), "(0,1)")
        lo, hi = 0, 1
    elif variant == "pm":
        _check_alphabet(A, (-1, 0, 1), "(-1,0,1)")
        lo, hi = -1, 1
    else:
        raise ValueError(f"unknown variant {variant!r}")
    v = game_value(A)
    if not lo < v < hi:
        raise TransformRejection(
            "boundary_value", f"value {v} is not strictly between {lo} and {hi}; patience is trivially 1"
        )
    out = np.full((m + n, n + m), Fraction(0), dtype=object)
    if variant == "zeroone":
        out[:m, :n] = A
        out[m:, n:] = J - A.T
        # block weights (1 - v) and v
        w1, w2 = 1 - v, v
    else:
        out[:m, :n] = A
        out[:m, n:] = -1
        out[m:, :n] = -1
        out[m:, n:] = -A.T
        # same optima as the shifted game with block values v + 1 and 1 - v
        w1, w2 = (1 - v) / 2, (1 + v) / 2

    def fold(xp, yp):
        return _normalized(xp[:m]), _normalized(yp[:n])

    def lift(x, y):
        xp = _vec([w1 * t for t in x] + [w2 * t for t in y])
        yp = _vec([w1 * t for t in y] + [w2 * t for t in x])
        return xp, yp

    return TransformResult(out, fold, lift, f"pair game ({variant})")


_BLOCKS = {
    -1: ((0, 0), (0, 0)),
    0: ((1, 0), (0, 1)),
    1: ((1, 1), (1, 1)),
}


def wld_to_wl(A):
    """Replace -1, 0, 1 by the 2x2 zero, identity and all-ones blocks.

    ``val(A) = 2 val(B) - 1``; ``fold`` sums consecutive pairs of
    probabilities, giving optimal strategies of ``A`` whose patience is at
    most that of the originals.
    """
    A = as_matrix(A)
    _check_alphabet(A, (-1, 0, 1), "(-1,0,1)")
    m, n = A.shape
    out = np.empty((2 * m, 2 * n), dtype=object)
    for i in range(m):
        for j in range(n):
            block = _BLOCKS[int(A[i, j])]
            for a in range(2):
                for b in range(2):
                    out[2 * i + a, 2 * j + b] = Fraction(block[a][b])

    def fold(xp, yp):
        x = _vec([xp[2 * i] + xp[2 * i + 1] for i in range(m)])
        y = _vec([yp[2 * j] + yp[2 * j + 1] for j in range(n)])
        return x, y

    return TransformResult(out, fold, None, "win-lose-draw to win-lose")
