"""
Moving patience between players and alphabets
=============================================

pair_game places A next to its transposed complement, so both players of
the new game need the patience of the more patient player of A.
wld_to_wl replaces -1, 0, 1 by 2x2 blocks and turns any win-lose-draw game
into a win-lose game.
"""

from matpatience import family_matrix, min_patience, pair_game, solve_game, wld_to_wl
from matpatience.io import matrix_to_csv

A = [[1, 0, 0], [0, 1, 1], [1, 0, 1]]
print("A patience:", min_patience(A, 1), min_patience(A, 2))
P = pair_game(A)
print(matrix_to_csv(P.matrix))
print("pair game patience:", min_patience(P.matrix, 1), min_patience(P.matrix, 2))

T = family_matrix("triangular_tbar", 5)
W = wld_to_wl(T)
print(matrix_to_csv(W.matrix))
print("values:", solve_game(T).value, solve_game(W.matrix).value)
sol = solve_game(W.matrix)
x, y = W.fold(sol.maximin, sol.minimax)
print("folded row strategy", [str(v) for v in x])
