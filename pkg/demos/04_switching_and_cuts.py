"""
Sign switching, checkerboard games and cuts
===========================================

Flipping signs of rows and columns of A^-1 until no single flip helps
leaves every row and column sum nonnegative.  Planting the same signs in A
gives a game whose patience is at least the largest entry of A^-1.  The
search is a cut problem in disguise.
"""

import random

from matpatience import inverse, min_patience
from matpatience.linalg import det, max_abs_entry
from matpatience.switching import (
    CutInstance,
    cut_weight,
    checkerboard_game,
    checkerboard_signs,
    cut_local_search,
    game_to_cut,
    maxcut_to_bipartite,
    signs_to_cut,
    switched_matrix,
)

rng = random.Random(3)
while True:
    A = [[rng.choice((-1, 1)) for _ in range(6)] for _ in range(6)]
    if det(A) != 0:
        break

signs = checkerboard_signs(A)
S = switched_matrix(inverse(A), signs.x, signs.y)
print("row sums   ", [str(v) for v in S.sum(axis=1)])
print("column sums", [str(v) for v in S.sum(axis=0)])

G = checkerboard_game(A, signs)
print("chi(A) =", max_abs_entry(inverse(A)), " tau1 =", min_patience(G, 1), " tau2 =", min_patience(G, 2))

# the switching objective as a bipartite cut
Ainv = inverse(A)
H = game_to_cut(Ainv)
total = Ainv.sum()
cut = signs_to_cut(signs.x, signs.y)
print("cut weight", cut_weight(H, cut), "= (x^T B y - 1^T B 1)/2 =", (signs.value - total) / 2)

# general MAXCUT reduces to the bipartite case with paired copies
K4 = CutInstance(4, tuple((i, j, rng.choice((-1, 2, 3))) for i in range(4) for j in range(i + 1, 4)))
reduced, back = maxcut_to_bipartite(K4)
S2, w2 = cut_local_search(reduced, "flip2")
print("reduced optimum", sorted(S2), "weight", w2)
print("maps to", sorted(back(S2)), "of weight", back.original_weight(w2), "=", cut_weight(K4, back(S2)))
