"""Exact two-phase primal simplex over the rationals.

Solves ``maximize c.x  subject to  A_ub x <= b_ub,  A_eq x == b_eq,  x >= 0``
with Bland's smallest-index rule, so it terminates on degenerate problems
without any perturbation.  All arithmetic is on :class:`fractions.Fraction`.
"""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .linalg import solve as _linsolve

__all__ = ["LPResult", "linprog"]


@dataclass
class LPResult:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: list = field(default_factory=list)
    value: Fraction | None = None
    # one multiplier per original constraint, ub rows first then eq rows
    duals: list = field(default_factory=list)

    @property
    def optimal(self):
        return self.status == "optimal"


def _pivot(T, basis, r, c):
    row = T[r]
    p = row[c]
    if p != 1:
        T[r] = row = [v / p for v in row]
    for i, other in enumerate(T):
        if i != r:
            f = other[c]
            if f != 0:
                T[i] = [a - f * b for a, b in zip(other, row)]
    basis[r] = c


def _simplex(T, basis, cost, allowed):
    """Maximise ``cost . x`` over the tableau in place (Bland's rule).

    ``allowed`` lists the columns that may enter the basis.
    Returns False if the objective is unbounded.
    """
    rhs = len(T[0]) - 1
    while True:
        entering = None
        for j in allowed:
            if j in basis:
                continue
            reduced = cost[j] - sum(cost[basis[i]] * T[i][j] for i in range(len(T)))
            if reduced > 0:
                entering = j
                break
        if entering is None:
            return True
        leave = None
        best = None
        for i, row in enumerate(T):
            a = row[entering]
            if a > 0:
                ratio = row[rhs] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best, leave = ratio, i
        if leave is None:
            return False
        _pivot(T, basis, leave, entering)


def linprog(c, A_ub=(), b_ub=(), A_eq=(), b_eq=()):
    """Maximise ``c.x`` subject to linear constraints and ``x >= 0``.

    Returns an :class:`LPResult`.  ``duals`` are the optimal multipliers of
    the original constraints (nonnegative for ``<=`` rows).
    """
    c = [Fraction(v) for v in c]
    nvar = len(c)
    rows = [([Fraction(v) for v in a], Fraction(b), "ub") for a, b in zip(A_ub, b_ub)]
    rows += [([Fraction(v) for v in a], Fraction(b), "eq") for a, b in zip(A_eq, b_eq)]
    m = len(rows)

    # Standard form columns: originals, one slack/surplus per ub row, then artificials.
    n_slack = sum(1 for r in rows if r[2] == "ub")
    flips = []
    art_rows = []
    slack_col = {}
    k = nvar
    for i, (a, b, kind) in enumerate(rows):
        flip = b < 0
        flips.append(flip)
        if kind == "ub":
            slack_col[i] = k
            k += 1
        if flip or kind == "eq":
            art_rows.append(i)
    n_art = len(art_rows)
    width = nvar + n_slack + n_art

    std = []  # standard-form rows before any pivoting, kept for the dual solve
    T = []
    basis = []
    art_index = {row: nvar + n_slack + t for t, row in enumerate(art_rows)}
    for i, (a, b, kind) in enumerate(rows):
        sgn = -1 if flips[i] else 1
        line = [sgn * v for v in a] + [Fraction(0)] * (n_slack + n_art)
        if kind == "ub":
            line[slack_col[i]] = Fraction(sgn)
        if i in art_index:
            line[art_index[i]] = Fraction(1)
            basis.append(art_index[i])
        else:
            basis.append(slack_col[i])
        std.append(line)
        T.append(line + [sgn * b])

    real_cols = list(range(nvar + n_slack))
    if n_art:
        cost1 = [Fraction(0)] * (nvar + n_slack) + [Fraction(-1)] * n_art
        _simplex(T, basis, cost1, list(range(width)))
        if sum(T[i][-1] for i in range(m) if basis[i] >= nvar + n_slack) != 0:
            return LPResult("infeasible")
        # drive zero-level artificials out of the basis; drop redundant rows
        keep = []
        for i in range(m):
            if basis[i] >= nvar + n_slack:
                col = next((j for j in real_cols if T[i][j] != 0), None)
                if col is None:
                    continue
                _pivot(T, basis, i, col)
            keep.append(i)
    else:
        keep = list(range(m))

    T = [T[i][: nvar + n_slack] + [T[i][-1]] for i in keep]
    basis = [basis[i] for i in keep]
    cost = c + [Fraction(0)] * n_slack
    if not _simplex(T, basis, cost, real_cols):
        return LPResult("unbounded")

    x = [Fraction(0)] * (nvar + n_slack)
    for i, b in enumerate(basis):
        x[b] = T[i][-1]
    value = sum(ci * xi for ci, xi in zip(c, x))

    # duals y solve B^T y = c_B on the kept standard-form rows
    duals = [Fraction(0)] * m
    if keep:
        Bmat = np.empty((len(keep), len(keep)), dtype=object)
        for r, i in enumerate(keep):
            for s, b in enumerate(basis):
                Bmat[r, s] = std[i][b]
        y = _linsolve(Bmat.T, [cost[b] for b in basis])
        for r, i in enumerate(keep):
            duals[i] = -y[r] if flips[i] else y[r]
    return LPResult("optimal", x[:nvar], value, duals)
