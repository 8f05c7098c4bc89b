from fractions import Fraction

import numpy as np
from hypothesis import given
from hypothesis import strategies as st
from scipy.optimize import linprog as scipy_linprog

from matpatience.lp import linprog
from strategies import matrices


def _scipy(c, A_ub, b_ub, A_eq=None, b_eq=None):
    f = lambda M: None if M is None else np.array(M, dtype=float)
    return scipy_linprog(-f(c), A_ub=f(A_ub), b_ub=f(b_ub), A_eq=f(A_eq), b_eq=f(b_eq),
                         bounds=[(0, None)] * len(c), method="highs")


def _check_duals(res, c, A_ub, b_ub, A_eq=(), b_eq=()):
    rows = list(A_ub) + list(A_eq)
    rhs = list(b_ub) + list(b_eq)
    y = res.duals
    assert all(v >= 0 for v in y[: len(A_ub)])
    for j in range(len(c)):
        assert sum(y[i] * rows[i][j] for i in range(len(rows))) >= c[j]
    assert sum(yi * bi for yi, bi in zip(y, rhs)) == res.value


@given(
    matrices(st.integers(1, 4), st.integers(1, 4), st.integers(-4, 6)),
    st.lists(st.integers(-3, 5), min_size=4, max_size=4),
    st.lists(st.integers(0, 6), min_size=4, max_size=4),
)
def test_agrees_with_scipy_on_feasible_problems(A, c, b):
    m, n = len(A), len(A[0])
    c, b = c[:n], b[:m]
    res = linprog(c, A_ub=A, b_ub=b)
    ref = _scipy(c, A, b)
    if ref.status == 3:
        assert res.status == "unbounded"
        return
    assert res.optimal
    assert abs(float(res.value) + ref.fun) < 1e-7
    assert all(sum(A[i][j] * res.x[j] for j in range(n)) <= b[i] for i in range(m))
    assert all(v >= 0 for v in res.x)
    _check_duals(res, c, A, b)


def test_equality_constraints_and_duals():
    c = [1, 2, 0]
    A_ub, b_ub = [[1, 1, 1]], [4]
    A_eq, b_eq = [[1, -1, 0]], [Fraction(1, 2)]
    res = linprog(c, A_ub, b_ub, A_eq, b_eq)
    assert res.optimal
    assert res.value == Fraction(23, 4)  # x = (9/4, 7/4, 0)
    _check_duals(res, c, A_ub, b_ub, A_eq, b_eq)


def test_negative_right_hand_sides():
    # x1 + x2 >= 2 written as -x1 - x2 <= -2; minimize x1 + 2 x2
    res = linprog([-1, -2], A_ub=[[-1, -1]], b_ub=[-2])
    assert res.optimal and res.value == -2 and res.x == [2, 0]


def test_infeasible_and_unbounded():
    assert linprog([1], A_ub=[[1]], b_ub=[-1]).status == "infeasible"
    assert linprog([1, 0], A_eq=[[1, 1]], b_eq=[-1]).status == "infeasible"
    assert linprog([1, 1], A_ub=[[1, -1]], b_ub=[1]).status == "unbounded"


def test_degenerate_cycling_example_terminates():
    # Beale's example cycles under the textbook largest-coefficient rule
    c = [Fraction(3, 4), -150, Fraction(1, 50), -6]
    A = [
        [Fraction(1, 4), -60, Fraction(-1, 25), 9],
        [Fraction(1, 2), -90, Fraction(-1, 50), 3],
        [0, 0, 1, 0],
    ]
    res = linprog(c, A_ub=A, b_ub=[0, 0, 1])
    assert res.optimal and res.value == Fraction(1, 20)


def test_redundant_equalities():
    res = linprog([1, 1], A_eq=[[1, 1], [2, 2]], b_eq=[1, 2])
    assert res.optimal and res.value == 1
