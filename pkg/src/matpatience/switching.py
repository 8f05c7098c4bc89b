"""The matrix switching game, checkerboard games, and cut reductions.

The switching game for ``B`` maximizes ``x^T B y`` over sign vectors, that
is, the entry sum of ``B`` after row and column sign flips.  A local
optimum makes every row and column sum of the switched matrix nonnegative,
which is what turns an ill-conditioned ``A`` into a game with a nonnegative
inverse (:func:`checkerboard_game`).

Cuts are frozensets ``S`` of vertex ids ``0..n-1``; the cut weight is the
total weight of edges with exactly one endpoint in ``S``.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

import numpy as np

from .linalg import DimensionError, as_matrix, inverse

__all__ = [
    "SignVectorPair",
    "LocalSearchCapError",
    "switch_value",
    "switched_matrix",
    "local_search_switch",
    "largest_entry_seed",
    "checkerboard_signs",
    "checkerboard_game",
    "CutInstance",
    "BackMap",
    "cut_weight",
    "game_to_cut",
    "signs_to_cut",
    "maxcut_to_bipartite",
    "is_local_optimum",
    "cut_local_search",
]


class LocalSearchCapError(RuntimeError):
    """A local search ran past its safety cap on the number of moves."""


@dataclass(frozen=True)
class SignVectorPair:
    x: tuple
    y: tuple
    value: Fraction


def _square(B):
    B = as_matrix(B)
    if B.shape[0] != B.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {B.shape}")
    return B


def _check_signs(v, n):
    v = tuple(int(s) for s in v)
    if len(v) != n or any(s not in (-1, 1) for s in v):
        raise ValueError(f"expected {n} entries from {{-1, 1}}, got {v}")
    return v


def switch_value(B, x, y):
    B = as_matrix(B)
    return sum(
        (x[i] * y[j] * B[i, j] for i in range(B.shape[0]) for j in range(B.shape[1])),
        Fraction(0),
    )


def switched_matrix(B, x, y):
    """``diag(x) B diag(y)``."""
    B = as_matrix(B)
    return B * np.outer(x, y)


def local_search_switch(B, seed=None, steepest=False, max_moves=None):
    """Flip single signs of ``x`` or ``y`` while ``x^T B y`` increases.

    The default pivot rule takes the first improving coordinate, rows before
    columns, in index order; ``steepest=True`` takes the largest gain
    instead.  ``seed`` defaults to :func:`largest_entry_seed`.  At the
    returned pair every row and column sum of the switched matrix is >= 0.
    """
    B = _square(B)
    n = B.shape[0]
    if seed is None:
        seed = largest_entry_seed(B)
    x = list(_check_signs(seed.x, n))
    y = list(_check_signs(seed.y, n))
    cap = 4 * n * n if max_moves is None else max_moves
    r = [sum((B[i, j] * y[j] for j in range(n)), Fraction(0)) for i in range(n)]  # B y
    c = [sum((x[i] * B[i, j] for i in range(n)), Fraction(0)) for j in range(n)]  # x^T B
    moves = 0
    while True:
        # gain of flipping x_i is -2 x_i r_i, of flipping y_j is -2 c_j y_j
        best = None
        for i in range(n):
            g = -2 * x[i] * r[i]
            if g > 0 and (best is None or g > best[0]):
                best = (g, "x", i)
                if not steepest:
                    break
        if best is None or steepest:
            for j in range(n):
                g = -2 * c[j] * y[j]
                if g > 0 and (best is None or g > best[0]):
                    best = (g, "y", j)
                    if not steepest:
                        break
        if best is None:
            break
        moves += 1
        if moves > cap:
            raise LocalSearchCapError(f"no local optimum after {cap} flips")
        _, side, k = best
        if side == "x":
            x[k] = -x[k]
            for j in range(n):
                c[j] += 2 * x[k] * B[k, j]
        else:
            y[k] = -y[k]
            for i in range(n):
                r[i] += 2 * B[i, k] * y[k]
    value = sum((x[i] * r[i] for i in range(n)), Fraction(0))
    return SignVectorPair(tuple(x), tuple(y), value)


def largest_entry_seed(B):
    """Sign vectors whose value is at least the largest ``|b_ij|``.

    Columns are switched so the row holding the largest absolute entry
    becomes nonnegative, then every row with a negative sum is switched.
    """
    B = _square(B)
    n = B.shape[0]
    absvals = [abs(v) for v in B.flat]
    k = max(range(len(absvals)), key=lambda t: (absvals[t], -t))
    i = k // n
    y = tuple(-1 if B[i, j] < 0 else 1 for j in range(n))
    x = tuple(
        -1 if sum((B[r, j] * y[j] for j in range(n)), Fraction(0)) < 0 else 1 for r in range(n)
    )
    return SignVectorPair(x, y, switch_value(B, x, y))


def _is_pm_one(A):
    return all(v in (1, -1) for v in A.flat)


def checkerboard_signs(A):
    """Locally optimal switching signs for ``A^-1``, seeded by the largest entry."""
    A = _square(A)
    if not _is_pm_one(A):
        raise ValueError("expected a (-1,1) matrix")
    Ainv = inverse(A)
    return local_search_switch(Ainv, largest_entry_seed(Ainv))


def checkerboard_game(A, signs=None):
    """The ``(n+1) x (n+1)`` game ``[[1, 0], [0, A o Sigma^T]]``.

    ``Sigma = x y^T`` for the pair from :func:`checkerboard_signs` (or the
    given ``signs``), so ``(A o Sigma^T)^-1 = A^-1 o Sigma`` has nonnegative
    row and column sums and entry sum at least ``chi(A)``.
    """
    A = _square(A)
    if signs is None:
        signs = checkerboard_signs(A)
    n = A.shape[0]
    Sigma = np.outer(signs.x, signs.y)
    out = np.full((n + 1, n + 1), Fraction(0), dtype=object)
    out[0, 0] = Fraction(1)
    out[1:, 1:] = A * Sigma.T
    return out


@dataclass(frozen=True)
class CutInstance:
    """Weighted graph on vertices ``0..n-1``; ``sides`` marks a bipartition."""

    n: int
    edges: tuple  # of (i, j, w) with i != j
    sides: tuple | None = None

    def __post_init__(self):
        norm = []
        for i, j, w in self.edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"self-loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge ({i}, {j}) outside 0..{self.n - 1}")
            if self.sides is not None and self.sides[i] == self.sides[j]:
                raise ValueError(f"edge ({i}, {j}) does not cross the bipartition")
            norm.append((i, j, Fraction(w)))
        object.__setattr__(self, "edges", tuple(norm))


def cut_weight(G, S):
    S = frozenset(S)
    return sum((w for i, j, w in G.edges if (i in S) != (j in S)), Fraction(0))


def game_to_cut(B):
    """Bipartite graph with edge ``(i, n+j)`` of weight ``-b_ij`` for ``b_ij != 0``.

    Under :func:`signs_to_cut` the cut weight equals
    ``(x^T B y - 1^T B 1) / 2``.
    """
    B = _square(B)
    n = B.shape[0]
    edges = tuple((i, n + j, -B[i, j]) for i in range(n) for j in range(n) if B[i, j] != 0)
    return CutInstance(2 * n, edges, tuple([0] * n + [1] * n))


def signs_to_cut(x, y):
    """``S`` holds row ``i`` when ``x_i = 1`` and column vertex ``n+j`` when ``y_j = 1``."""
    n = len(x)
    return frozenset([i for i in range(n) if x[i] == 1] + [n + j for j in range(n) if y[j] == 1])


@dataclass(frozen=True)
class BackMap:
    """Map cuts of the reduced bipartite graph back to the original graph.

    For a cut ``S'`` in which every ``i`` and its copy ``n+i`` are separated,
    ``w(S) = w'(S') / 2 + offset`` with ``offset = sum(w) - n M / 2``.
    """

    n: int
    M: Fraction
    offset: Fraction

    def __call__(self, S_prime):
        return frozenset(i for i in S_prime if i < self.n)

    def original_weight(self, reduced_weight):
        return Fraction(reduced_weight) / 2 + self.offset


def maxcut_to_bipartite(G):
    """Reduce MAXCUT to bipartite MAXCUT, sound for the 2-FLIP neighbourhood.

    Vertex ``i`` gets a copy ``n+i`` joined by an edge of weight
    ``M = 1 + sum |w|`` (each edge counted once); each edge ``ij`` becomes
    ``(i, n+j)`` and ``(n+i, j)`` with weight ``-w_ij``.
    """
    n = G.n
    total = sum((w for _, _, w in G.edges), Fraction(0))
    M = 1 + sum((abs(w) for _, _, w in G.edges), Fraction(0))
    edges = [(i, n + i, M) for i in range(n)]
    for i, j, w in G.edges:
        edges.append((i, n + j, -w))
        edges.append((n + i, j, -w))
    reduced = CutInstance(2 * n, tuple(edges), tuple([0] * n + [1] * n))
    return reduced, BackMap(n, M, total - n * M / 2)


def _moves(n, neighborhood):
    singles = [(v,) for v in range(n)]
    if neighborhood == "flip1":
        return singles
    if neighborhood == "flip2":
        return singles + list(combinations(range(n), 2))
    raise ValueError(f"unknown neighborhood {neighborhood!r}")


def _gain(G, S, move):
    moved = set(move)
    g = Fraction(0)
    for i, j, w in G.edges:
        a, b = i in moved, j in moved
        if a != b:
            # exactly one endpoint changes side, so the edge toggles
            g += -w if (i in S) != (j in S) else w
    return g


def is_local_optimum(G, S, neighborhood="flip1"):
    S = frozenset(S)
    return all(_gain(G, S, mv) <= 0 for mv in _moves(G.n, neighborhood))


def cut_local_search(G, neighborhood="flip1", start=frozenset(), max_moves=None):
    """First-improvement ascent over single (or single and paired) moves.

    Returns ``(S, weight)`` for a cut no move in the neighbourhood improves.
    """
    S = set(start)
    moves = _moves(G.n, neighborhood)
    cap = max(4 * G.n * G.n, 1) * max(len(G.edges), 1) if max_moves is None else max_moves
    count = 0
    while True:
        for mv in moves:
            if _gain(G, S, mv) > 0:
                S.symmetric_difference_update(mv)
                count += 1
                if count > cap:
                    raise LocalSearchCapError(f"no local optimum after {cap} moves")
                break
        else:
            S = frozenset(S)
            return S, cut_weight(G, S)
