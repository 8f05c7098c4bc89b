"""
An explicit win-lose game with enormous patience
================================================

For n = 2^m we order the subsets of {1..m}, build a +-1 matrix A from three
local rules, flip signs by a rank-one pattern to get B, and solve B.
Every entry of B can also be computed alone, in time polynomial in m.
"""

import time

from matpatience import OracleContext, a_entry, b_entry, inverse, materialize_alonvu
from matpatience.alonvu import subset_order
from matpatience.games import nonsingular_solution, patience
from matpatience.io import matrix_to_csv
from matpatience.linalg import max_abs_entry

print("subset order for m = 4:")
print(" ".join("{" + ",".join(map(str, sorted(s))) + "}" for s in subset_order(4).order))

mats = materialize_alonvu(4)
print(matrix_to_csv(mats.A))
Ainv = inverse(mats.A)
print("largest |entry| of A^-1:", max_abs_entry(Ainv))

# B = A o Sigma^T has a nonnegative inverse, so its game is solved in closed form
for m in range(4, 8):
    mats = materialize_alonvu(m)
    Binv = inverse(mats.B)
    sol = nonsingular_solution(mats.B)
    n = 2 ** m
    print(
        f"m={m} n={n:>3}  min B^-1 entry={min(Binv.flat)}  "
        f"patience={float(patience(sol.maximin)):.4g}  "
        f"chi(A)={float(max_abs_entry(inverse(mats.A))):.4g}  "
        f"n^(n/2)/2^(2n)={n ** (n / 2) / 2 ** (2 * n):.3g}"
    )

# single entries without building anything of size 2^m
ctx = OracleContext(40)
start = time.perf_counter()
row = [b_entry(123456789, j, ctx) for j in range(1, 41)]
print("40 entries of row 123456789 at m = 40:", row, f"({time.perf_counter() - start:.4f}s)")
print("a_entry(2, 2) at m = 4:", a_entry(2, 2, OracleContext(4)))
