from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from matpatience.certify import all_passed, verify_family
from matpatience.families import (
    _MIN_N,
    FAMILIES,
    family_certificate,
    family_matrix,
    fibonacci,
    phi_inverse_formula,
    phi_transform,
    pq_sequence,
)
from matpatience.linalg import SingularMatrixError, as_matrix, det, inverse
from strategies import square

D5 = [[1, 1, 0, 0, 0], [0, 1, 1, 0, 0], [1, 0, 1, 1, 0], [0, 1, 0, 1, 1], [1, 0, 1, 0, 1]]
T6 = [
    [1, 1, 0, 1, 0, 1],
    [0, 1, 1, 0, 1, 0],
    [0, 0, 1, 1, 0, 1],
    [0, 0, 0, 1, 1, 0],
    [0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 1],
]


def test_fibonacci_and_pq():
    assert [fibonacci(k) for k in (0, 1, 2, 10)] == [0, 1, 1, 55]
    assert pq_sequence(0) == (1, 0)
    assert pq_sequence(2) == (2, 1)
    assert pq_sequence(5) == (9, 7)
    with pytest.raises(ValueError):
        fibonacci(-1)


def test_reference_matrices():
    assert (family_matrix("hessenberg_D", 5) == as_matrix(D5)).all()
    assert (family_matrix("triangular_t", 6) == as_matrix(T6)).all()
    assert list(family_matrix("triangular_tbar", 6)[0]) == [1, -1, 0, -1, 0, -1]


def test_hessenberg_determinant_is_fibonacci():
    for n in range(1, 20):
        assert det(family_matrix("hessenberg_D", n)) == fibonacci(n)


def test_alphabets():
    for family in FAMILIES:
        for n in range(_MIN_N[family], 12):
            M = family_matrix(family, n)
            allowed = (0, 1) if family in ("hessenberg_D", "triangular_t", "toeplitz_T") else (-1, 0, 1)
            assert set(M.flat) <= set(allowed), (family, n)
            if family.endswith("prime"):
                assert M.shape == (n + 1, n + 1) and set(M.flat) <= {-1, 1}


def test_phi_transform_examples():
    assert (phi_transform([[1]]) == as_matrix([[1, 1], [-1, 1]])).all()
    t6 = family_matrix("triangular_t", 6)
    assert phi_transform(t6)[0, 0] == 1
    t4 = family_matrix("triangular_t", 4)
    assert (inverse(phi_transform(t4)) == phi_inverse_formula(inverse(t4))).all()
    with pytest.raises(ValueError):
        phi_transform([[2]])


@given(square(1, 5, elements=st.sampled_from((0, 1))))
def test_phi_inverse_formula_on_random_zero_one_matrices(A):
    try:
        Ainv = inverse(A)
    except SingularMatrixError:
        return
    assert (inverse(phi_transform(A)) == phi_inverse_formula(Ainv)).all()


@pytest.mark.parametrize("family", FAMILIES)
def test_certificates_hold(family):
    sizes = range(max(_MIN_N[family], 3), 16)
    for n in sizes:
        checks = verify_family(family, n)
        assert all_passed(checks), (n, [c for c in checks if not c.ok])


def test_hessenberg_two_is_degenerate():
    # D_2 = [[1, 1], [0, 1]] has a saddle point, so the optimum is neither
    # unique nor totally mixed although value and patience match the formulas
    checks = {c.name: c for c in verify_family("hessenberg_D", 2)}
    assert checks["value"].ok and not checks["unique and totally mixed"].ok


def test_certificate_predictions():
    cert = family_certificate("hessenberg_D", 5)
    assert cert.predicted_value == Fraction(5, 9) and cert.predicted_patience == 9
    cert = family_certificate("triangular_tbar", 6)
    assert cert.predicted_value == Fraction(1, 32) and cert.predicted_patience == 32
    cert = family_certificate("toeplitz_Tbar", 10)
    assert "(1^T Tbar^-1)_1 = 4" in [b.description for b in cert.boundary_checks]


def test_size_errors():
    with pytest.raises(ValueError):
        family_matrix("toeplitz_T", 4)
    with pytest.raises(ValueError):
        family_matrix("nope", 4)
