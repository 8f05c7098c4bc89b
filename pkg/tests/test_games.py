from fractions import Fraction

import pytest
from hypothesis import given, settings

from matpatience import CapExceededError
from matpatience.families import family_matrix
from matpatience.games import (
    NonsingularRejection,
    check_patience_bound,
    game_value,
    is_optimal_pair,
    is_strategy,
    is_unique_optimum,
    min_patience,
    nonsingular_solution,
    patience,
    shapley_snow_kernels,
    solve_game,
)
from matpatience.linalg import DimensionError, as_matrix, identity
from oracles import brute_kernels, brute_min_patience, float_game_value
from strategies import games

D5 = family_matrix("hessenberg_D", 5)


def test_solve_game_examples():
    sol = solve_game(D5)
    assert sol.value == Fraction(5, 9)
    assert sol.unique and sol.totally_mixed
    sol = solve_game([[1, -1], [-1, 1]])
    assert sol.value == 0
    assert list(sol.maximin) == list(sol.minimax) == [Fraction(1, 2)] * 2
    sol = solve_game([[1]])
    assert sol.value == 1 and list(sol.maximin) == [1] and list(sol.minimax) == [1]


def test_nonsingular_solution_examples():
    sol = nonsingular_solution(D5)
    assert sol.value == Fraction(5, 9) and sol.maximin[0] == Fraction(1, 9)
    sol = nonsingular_solution(identity(2))
    assert sol.value == Fraction(1, 2) and list(sol.maximin) == [Fraction(1, 2)] * 2
    for M, reason in (
        ([[1, 1], [1, 1]], "singular"),
        ([[1, 2, 3], [4, 5, 6]], "not_square"),
        ([[2, 0], [0, -1]], "negative"),
    ):
        with pytest.raises(NonsingularRejection) as exc:
            nonsingular_solution(M)
        assert exc.value.reason == reason


def test_zero_sum_rejection():
    # 1^T A^-1 1 = 1 - 1
    with pytest.raises(NonsingularRejection) as exc:
        nonsingular_solution([[1, 0], [0, -1]])
    assert exc.value.reason == "zero_sum"


def test_accepted_but_not_totally_mixed():
    sol = nonsingular_solution([[1, -1], [1, 1]])
    assert sol.value == 1 and not sol.totally_mixed and sol.unique is None
    assert list(sol.maximin) == [0, 1]


def test_kernel_examples():
    (k,) = shapley_snow_kernels([[1]])
    assert k.value == 1 and k.row_indices == (0,)
    (k,) = shapley_snow_kernels([[1, -1], [-1, 1]])
    assert k.row_indices == (0, 1) and list(k.basic_x) == [Fraction(1, 2)] * 2
    (k,) = shapley_snow_kernels(D5)
    assert k.row_indices == k.col_indices == tuple(range(5))


def test_patience_examples():
    assert patience([Fraction(1, 2), Fraction(1, 2)]) == 2
    assert patience(solve_game(D5).maximin) == 9
    assert patience([1, 0, 0]) == 1
    assert min_patience(D5, 1) == 9
    assert min_patience([[1, 1], [1, 1]], 1) == 1
    assert min_patience([[1, 0], [0, 1]], 1) == 2


def test_patience_bound_examples():
    assert check_patience_bound(2, 2, "winlose")
    assert check_patience_bound(9, 5, "winlose")
    assert not check_patience_bound(3, 2, "winlose")
    assert check_patience_bound(1, 1, "winlosedraw")
    assert not check_patience_bound(3, 1, "winlosedraw")
    with pytest.raises(ValueError):
        check_patience_bound(1, 1, "other")


@given(games(4, 4))
def test_solution_is_optimal_and_matches_float_value(A):
    sol = solve_game(A)
    assert is_strategy(sol.maximin) and is_strategy(sol.minimax)
    assert is_optimal_pair(as_matrix(A), sol.maximin, sol.minimax, sol.value)
    assert abs(float(sol.value) - float_game_value(A)) < 1e-9
    assert game_value(A) == sol.value


@settings(max_examples=40)
@given(games(3, 3))
def test_kernels_match_brute_force(A):
    value, ref = brute_kernels(A)
    got = shapley_snow_kernels(A)
    assert {(k.row_indices, k.col_indices) for k in got} == {(r, c) for r, c, *_ in ref}
    assert all(k.value == value for k in got)


@settings(max_examples=40)
@given(games(3, 3))
def test_uniqueness_agrees_with_kernel_count(A):
    # the optimal polytope is a point exactly when all basic solutions coincide
    _, ref = brute_kernels(A)
    for player, pick in ((1, 3), (2, 4)):
        distinct = {tuple(k[pick]) for k in ref}
        assert is_unique_optimum(A, player) == (len(distinct) == 1)
    sol = solve_game(A)
    assert sol.unique == (len({tuple(k[3]) for k in ref}) == 1 and len({tuple(k[4]) for k in ref}) == 1)


@settings(max_examples=30)
@given(games(3, 3, alphabet=(-1, 0, 1)))
def test_min_patience_matches_vertex_hull_oracle(A):
    for player in (1, 2):
        got = min_patience(A, player)
        ref = brute_min_patience(A, player)
        assert abs(float(got) - ref) <= 1e-9 * ref


@given(games(4, 4, alphabet=(0, 1)))
def test_min_patience_is_at_most_that_of_any_optimum(A):
    sol = solve_game(A)
    assert min_patience(A, 1) <= patience(sol.maximin)
    assert min_patience(A, 2) <= patience(sol.minimax)


@given(games(4, 4))
def test_nonsingular_solution_agrees_when_accepted(A):
    A = as_matrix(A)
    if A.shape[0] != A.shape[1]:
        return
    try:
        sol = nonsingular_solution(A)
    except NonsingularRejection:
        return
    # the closed form always yields an equilibrium when it accepts
    assert is_optimal_pair(A, sol.maximin, sol.minimax, sol.value)
    ref = solve_game(A)
    assert ref.value == sol.value
    if sol.totally_mixed:
        assert ref.unique and list(ref.maximin) == list(sol.maximin)


def test_caps_and_errors():
    big = [[int(i == j) for j in range(11)] for i in range(11)]
    with pytest.raises(CapExceededError):
        shapley_snow_kernels(big)
    assert shapley_snow_kernels([[1, 0], [0, 1]], cap=2)
    singular = [[1] * 11 for _ in range(11)]
    with pytest.raises(CapExceededError):
        min_patience(singular, 1)
    assert min_patience(singular, 1, cap=11) == 1
    with pytest.raises(ValueError):
        min_patience([[1]], 3)
    with pytest.raises(DimensionError):
        solve_game([[]])


def test_cap_env_override(monkeypatch):
    monkeypatch.setenv("PATIENCE_CAP", "2")
    with pytest.raises(CapExceededError):
        shapley_snow_kernels([[1, 0, 0], [0, 1, 0], [0, 0, 1]])


def test_large_totally_mixed_games_skip_the_cap():
    D = family_matrix("hessenberg_D", 15)
    assert min_patience(D, 2) == 2 * 610 - 1
