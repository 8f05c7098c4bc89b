"""The ill-conditioned (-1,1) matrix built from a size-monotone subset order.

Subsets of ``[m] = {1..m}`` are indexed ``1..n`` with ``n = 2**m`` by the
order ``beta_m``: sizes are nondecreasing and neighbours differ in at most
two elements.  From the order we get

* ``Q`` with ``q_ij = (-1)^|a_i & a_j|`` (a symmetric Hadamard matrix),
* ``L`` lower triangular with powers of 1/2,
* ``A`` by three local rules on ``a_{i-1}, a_i, a_j`` (and ``A = L Q``),
* ``Sigma = s1 s2^T``, the block checkerboard pattern ``A^-1`` obeys,
* ``B = A o Sigma^T``, a game matrix with nonnegative inverse.

Single entries of ``A`` and ``B`` can be computed in time polynomial in
``m`` through :class:`OracleContext` without building the order.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import comb

import numpy as np

from ._caps import default_cap
from .linalg import DimensionError, _vec

__all__ = [
    "SubsetOrder",
    "OracleContext",
    "AlonVuMatrices",
    "subset_order",
    "index_to_subset",
    "subset_to_index",
    "materialize_alonvu",
    "a_entry",
    "b_entry",
    "sigma_vectors",
    "l_rows",
    "z_column",
    "check_z_column",
]

def _count(mp, k):
    # number of k-subsets of an mp-set; zero for negative mp
    if mp < 0 or k < 0 or k > mp:
        return 0
    return comb(mp, k)


def _size_block(k, mp, offset=0):
    """The order beta^(k)_mp on elements offset+1 .. offset+mp, as tuples."""
    if k == 0:
        return [()] if mp >= 0 else []
    if k > mp:
        return []
    first = [(offset + 1,) + s for s in _size_block(k - 1, mp - 1, offset + 1)]
    second = [(offset + 2,) + s for s in reversed(_size_block(k - 1, mp - 2, offset + 2))]
    third = _size_block(k, mp - 2, offset + 2)
    return first + second + third


def _shift(s, m):
    # j -> j-1 with residues in 1..m, so 1 -> m
    return tuple(sorted(m if j == 1 else j - 1 for j in s))


def _unshift(s, m):
    return tuple(sorted(j % m + 1 for j in s))


@dataclass(frozen=True)
class SubsetOrder:
    m: int
    order: tuple  # of frozensets; order[0] is the empty set (index 1)

    @property
    def n(self):
        return len(self.order)

    def __getitem__(self, i):
        """1-based access; ``self[0]`` is the empty set by convention."""
        if i == 0:
            return frozenset()
        if not 1 <= i <= self.n:
            raise IndexError(i)
        return self.order[i - 1]

    def index(self, subset):
        return self.order.index(frozenset(subset)) + 1


def _check_m(m):
    if not isinstance(m, (int, np.integer)) or isinstance(m, bool) or m < 1:
        raise ValueError(f"m must be a positive integer, got {m!r}")
    return int(m)


def subset_order(m):
    """Materialize the full order ``beta_m`` of all subsets of ``[m]``."""
    m = _check_m(m)
    out = []
    for k in range(m + 1):
        block = _size_block(k, m)
        if k == 2:
            block = [_shift(s, m) for s in block]
        elif k % 2 == 1 and k >= 3:
            block = block[::-1]
        out.extend(frozenset(s) for s in block)
    return SubsetOrder(m, tuple(out))


class OracleContext:
    """Binomial tables for computing positions in the order of ``[m]``."""

    def __init__(self, m):
        self.m = _check_m(m)
        self.n = 2 ** self.m
        # block_start[k] = 1-based index of the first set of size k
        starts = [1]
        for k in range(self.m + 1):
            starts.append(starts[-1] + comb(self.m, k))
        self.block_start = tuple(starts)

    def size_of(self, i):
        """``|alpha_i|`` from the cumulative binomial sums."""
        self._check_index(i)
        k = 0
        while self.block_start[k + 1] <= i:
            k += 1
        return k

    def _check_index(self, i):
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range 1..{self.n}")


def _locate(k, mp, pos, offset):
    """Set at 0-based ``pos`` of beta^(k)_mp on elements after ``offset``."""
    out = []
    while k > 0:
        c1 = _count(mp - 1, k - 1)
        c2 = _count(mp - 2, k - 1)
        if pos < c1:
            out.append(offset + 1)
            k, mp, offset = k - 1, mp - 1, offset + 1
        elif pos < c1 + c2:
            out.append(offset + 2)
            pos = c2 - 1 - (pos - c1)  # reversed segment
            k, mp, offset = k - 1, mp - 2, offset + 2
        else:
            pos -= c1 + c2
            mp, offset = mp - 2, offset + 2
    return tuple(out)


def _position(k, mp, elems, offset):
    """Inverse of :func:`_locate` for a sorted tuple ``elems``."""
    # the answer is base + sign * (position inside the current sub-order)
    base, sign, it = 0, 1, 0
    while k > 0:
        c1 = _count(mp - 1, k - 1)
        c2 = _count(mp - 2, k - 1)
        head = elems[it]
        if head == offset + 1:
            it += 1
            k, mp, offset = k - 1, mp - 1, offset + 1
        elif head == offset + 2:
            base += sign * (c1 + c2 - 1)
            sign = -sign
            it += 1
            k, mp, offset = k - 1, mp - 2, offset + 2
        else:
            base += sign * (c1 + c2)
            mp, offset = mp - 2, offset + 2
    return base


def index_to_subset(i, ctx):
    """``alpha_i`` as a frozenset, in time polynomial in ``m``."""
    if not isinstance(ctx, OracleContext):
        ctx = OracleContext(ctx)
    k = ctx.size_of(i)
    m = ctx.m
    pos = i - ctx.block_start[k]
    if k % 2 == 1 and k >= 3:
        pos = comb(m, k) - 1 - pos
    s = _locate(k, m, pos, 0)
    if k == 2:
        s = _shift(s, m)
    return frozenset(s)


def subset_to_index(subset, ctx):
    """Inverse of :func:`index_to_subset`."""
    if not isinstance(ctx, OracleContext):
        ctx = OracleContext(ctx)
    m = ctx.m
    elems = tuple(sorted(int(j) for j in subset))
    if len(set(elems)) != len(elems) or any(not 1 <= j <= m for j in elems):
        raise ValueError(f"{set(subset)} is not a subset of 1..{m}")
    k = len(elems)
    if k == 2:
        elems = _unshift(elems, m)
    pos = _position(k, m, elems, 0)
    if k % 2 == 1 and k >= 3:
        pos = comb(m, k) - 1 - pos
    return ctx.block_start[k] + pos


def _a_rule(prev, cur, col):
    """Entry of ``A`` from ``alpha_{i-1}``, ``alpha_i`` and ``alpha_j``."""
    union = prev | cur
    diff = prev ^ cur
    meet = col & union
    if len(diff) == 2 and meet == diff:
        return -1
    if meet:
        # (-1)^(|prev & col| + 1); this is what A = L Q forces
        return 1 if len(prev & col) % 2 else -1
    return 1


def _entry_sets(i, j, ctx):
    cur = index_to_subset(i, ctx)
    prev = index_to_subset(i - 1, ctx) if i > 1 else frozenset()
    col = index_to_subset(j, ctx)
    return prev, cur, col


def a_entry(i, j, ctx):
    """Entry ``(i, j)`` of ``A`` (1-based) without building the order."""
    if not isinstance(ctx, OracleContext):
        ctx = OracleContext(ctx)
    ctx._check_index(i)
    ctx._check_index(j)
    return _a_rule(*_entry_sets(i, j, ctx))


def _split(m):
    # number of leading -1 entries of s2
    n = 2 ** m
    if m >= 4:
        return 2 * m - 1
    if m >= 2:
        return n // 2
    raise ValueError("no block checkerboard pattern exists for m = 1")


def b_entry(i, j, ctx):
    """Entry ``(i, j)`` of ``B = A o Sigma^T``, i.e. ``a_ij * s1_j * s2_i``."""
    if not isinstance(ctx, OracleContext):
        ctx = OracleContext(ctx)
    a = a_entry(i, j, ctx)
    s1 = -1 if ctx.size_of(j) % 2 else 1
    s2 = -1 if i <= _split(ctx.m) else 1
    return a * s1 * s2


def sigma_vectors(order):
    """``(s1, s2)`` with ``Sigma = s1 s2^T``, as tuples of +-1."""
    m = order.m
    n = order.n
    s1 = tuple(-1 if len(a) % 2 else 1 for a in order.order)
    split = _split(m)
    s2 = tuple(-1 if i < split else 1 for i in range(n))
    return s1, s2


def l_rows(order):
    """Sparse rows of ``L``: for each 1-based ``i`` a list of ``(j, l_ij)``."""
    index = {a: t + 1 for t, a in enumerate(order.order)}
    rows = [[(1, Fraction(1))]]
    for i in range(2, order.n + 1):
        prev, cur = order[i - 1], order[i]
        k = len(cur)
        h = Fraction(1, 2 ** (k - 1))
        union = sorted(prev | cur)
        diff = prev ^ cur
        row = []
        for mask in range(1 << len(union)):
            s = frozenset(union[b] for b in range(len(union)) if mask >> b & 1)
            if len(diff) == 2 and len(s & diff) != 1:
                continue
            j = index[s]
            row.append((j, h - 1 if j == i - 1 else h))
        row.sort()
        rows.append(row)
    return rows


@dataclass(frozen=True, eq=False)
class AlonVuMatrices:
    Q: np.ndarray
    L: np.ndarray
    A: np.ndarray
    Sigma: np.ndarray
    B: np.ndarray
    order: SubsetOrder


def _pm_matrix(n, fn):
    out = np.empty((n, n), dtype=object)
    for i in range(n):
        for j in range(n):
            out[i, j] = Fraction(fn(i, j))
    return out


def _check_range(m, max_m):
    m = _check_m(m)
    max_m = default_cap() if max_m is None else max_m
    if m < 2:
        raise ValueError("m must be at least 2")
    if m > max_m:
        raise ValueError(f"m = {m} exceeds the materialization cap {max_m}")
    return m


def materialize_alonvu(m, max_m=None):
    """Build ``Q, L, A, Sigma, B`` for ``2 <= m <= max_m``.

    ``max_m`` defaults to the PATIENCE_CAP setting (10 unless overridden).

    ``A`` comes straight from its three rules, independently of ``L`` and
    ``Q``; the identity ``A = L Q`` is left for callers to check.
    """
    m = _check_range(m, max_m)
    order = subset_order(m)
    n = order.n
    sets = order.order
    Q = _pm_matrix(n, lambda i, j: -1 if len(sets[i] & sets[j]) % 2 else 1)
    A = _pm_matrix(n, lambda i, j: _a_rule(order[i], sets[i], sets[j]))
    L = np.full((n, n), Fraction(0), dtype=object)
    for i, row in enumerate(l_rows(order)):
        for j, v in row:
            L[i, j - 1] = v
    s1, s2 = sigma_vectors(order)
    Sigma = _pm_matrix(n, lambda i, j: s1[i] * s2[j])
    B = A * Sigma.T
    return AlonVuMatrices(Q, L, A, Sigma, B, order)


def z_column(i, m, max_m=None):
    """Solve ``L z = e_i`` by sparse forward substitution."""
    m = _check_range(m, max_m)
    order = subset_order(m)
    n = order.n
    if not 1 <= i <= n:
        raise ValueError(f"column {i} out of range 1..{n}")
    rows = l_rows(order)
    z = [Fraction(0)] * (n + 1)  # 1-based
    for r in range(i, n + 1):
        acc = Fraction(1 if r == i else 0)
        diag = None
        for j, v in rows[r - 1]:
            if j == r:
                diag = v
            elif z[j]:
                acc -= v * z[j]
        z[r] = acc / diag
    return _vec(z[1:])


def check_z_column(z, i, m):
    """Check the known structure of ``z`` solving ``L z = e_i``.

    Column 1: ``z_j = 1 - |alpha_j|``.  Other columns with ``m >= 6``: the
    last entry dominates, ``|z_n| > sum |z_l|``, and is negative for
    ``i <= 2m-1`` and positive beyond.  Smaller ``m`` fall back to the
    block checkerboard sign of ``x = Q z / n``.
    Returns a list of failure messages, empty when all hold.
    """
    order = subset_order(m)
    n = order.n
    z = list(z)
    if len(z) != n:
        raise DimensionError(f"z has length {len(z)}, expected {n}")
    bad = []
    if i == 1:
        for j, a in enumerate(order.order):
            if z[j] != 1 - len(a):
                bad.append(f"z_{j + 1} = {z[j]}, expected {1 - len(a)}")
        return bad
    split = _split(m)
    want = -1 if i <= split else 1
    if m >= 6:
        rest = sum(abs(v) for v in z[:-1])
        if not abs(z[-1]) > rest:
            bad.append(f"|z_n| = {abs(z[-1])} does not exceed the sum {rest}")
        if (z[-1] > 0) - (z[-1] < 0) != want:
            bad.append(f"z_n = {z[-1]} has the wrong sign")
        return bad
    s1, _ = sigma_vectors(order)
    for r, a in enumerate(order.order):
        x = sum(((-1) ** len(a & b)) * v for b, v in zip(order.order, z)) / n
        if x * s1[r] * want < 0:
            bad.append(f"x_{r + 1} = {x} breaks the sign pattern")
    return bad
