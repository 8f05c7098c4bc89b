import random
from fractions import Fraction

import numpy as np
import pytest
import sympy
from hypothesis import given
from hypothesis import strategies as st

from matpatience.families import family_matrix
from matpatience.linalg import (
    DimensionError,
    SingularMatrixError,
    adjugate,
    as_matrix,
    det,
    hadamard,
    identity,
    inverse,
    inverse_with_adjugate,
    is_lower_triangular,
    matmul,
    max_abs_entry,
    solve,
)
from oracles import cofactor_adjugate, laplace_det
from strategies import rationals, square


def test_det_examples():
    assert det(family_matrix("hessenberg_D", 5)) == 5
    assert det(identity(3)) == 1
    assert det([[1, 1], [1, 1]]) == 0


def test_det_matches_cofactor_expansion_on_many_samples():
    rng = random.Random(1)
    for _ in range(250):
        n = rng.randint(1, 5)
        M = [[Fraction(rng.randint(-7, 7), rng.randint(1, 3)) for _ in range(n)] for _ in range(n)]
        assert det(M) == laplace_det(M)


def test_det_matches_sympy_on_larger_integer_matrices():
    rng = random.Random(2)
    for n in (8, 12):
        M = [[rng.choice((-1, 1)) for _ in range(n)] for _ in range(n)]
        assert det(M) == sympy.Matrix(M).det()


@given(square(1, 5))
def test_inverse_times_matrix_is_identity(M):
    A = as_matrix(M)
    if det(A) == 0:
        with pytest.raises(SingularMatrixError):
            inverse(A)
        return
    Ainv = inverse(A)
    assert (matmul(A, Ainv) == identity(len(M))).all()
    assert (matmul(Ainv, A) == identity(len(M))).all()


@given(square(1, 4))
def test_adjugate_matches_cofactors(M):
    assert (adjugate(M) == np.array(cofactor_adjugate(M), dtype=object)).all()


@given(square(1, 5))
def test_inverse_with_adjugate_is_consistent(M):
    d = det(M)
    if d == 0:
        return
    Ainv, adj, d2 = inverse_with_adjugate(M)
    assert d2 == d
    assert (Ainv * d == adj).all()


def test_inverse_examples():
    t6inv = inverse(family_matrix("triangular_t", 6))
    assert list(t6inv[0]) == [1, -1, 1, -2, 3, -5]
    assert (inverse(identity(4)) == identity(4)).all()
    with pytest.raises(SingularMatrixError):
        inverse([[1, 1], [1, 1]])


def test_inverse_matches_sympy_for_a_dense_sign_matrix():
    rng = random.Random(3)
    while True:
        M = [[rng.choice((-1, 1)) for _ in range(9)] for _ in range(9)]
        if sympy.Matrix(M).det() != 0:
            break
    ref = sympy.Matrix(M).inv()
    got = inverse(M)
    assert all(Fraction(int(ref[i, j].p), int(ref[i, j].q)) == got[i, j] for i in range(9) for j in range(9))


@given(square(1, 5), st.lists(rationals(), min_size=5, max_size=5))
def test_solve_satisfies_the_system(M, rhs):
    n = len(M)
    b = rhs[:n]
    if det(M) == 0:
        with pytest.raises(SingularMatrixError):
            solve(M, b)
        return
    x = solve(M, b)
    assert list(matmul(as_matrix(M), as_matrix([[v] for v in x]))[:, 0]) == b


def test_solve_examples():
    assert list(solve(identity(3), [1, 2, 3])) == [1, 2, 3]
    with pytest.raises(SingularMatrixError):
        solve([[1, 1], [1, 1]], [1, 0])


@given(square(1, 6))
def test_lower_triangular_detection(M):
    A = as_matrix(M)
    expected = all(A[i, j] == 0 for i in range(len(M)) for j in range(i + 1, len(M)))
    assert is_lower_triangular(A) == expected


def test_hadamard_examples():
    t6 = family_matrix("triangular_t", 6)
    signs = as_matrix([[(-1) ** (i + j) for j in range(6)] for i in range(6)])
    assert list(hadamard(t6, signs)[0]) == [1, -1, 0, -1, 0, -1]
    ones = as_matrix([[1] * 6] * 6)
    assert (hadamard(t6, ones) == t6).all()
    assert (hadamard(t6, 0 * ones) == 0).all()


@given(square(1, 4), square(1, 4))
def test_matmul_matches_naive_product(M, N):
    if len(M) != len(N):
        with pytest.raises(DimensionError):
            matmul(M, N)
        return
    n = len(M)
    ref = [[sum(M[i][k] * N[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert (matmul(M, N) == as_matrix(ref)).all()


def test_non_square_and_float_inputs_are_rejected():
    with pytest.raises(DimensionError):
        det([[1, 2, 3], [4, 5, 6]])
    with pytest.raises(TypeError):
        as_matrix([[0.5]])
    with pytest.raises(DimensionError):
        as_matrix([1, 2])


@given(square(1, 4, rationals()))
def test_max_abs_entry(M):
    assert max_abs_entry(M) == max(abs(v) for row in M for v in row)
