"""
A Toeplitz family growing faster than Fibonacci
===============================================

The signed Toeplitz matrices Tbar_n have a nonnegative inverse, so the game
solution comes straight from the inverse and is totally mixed.  Successive
patience ratios settle near 1.7549, the real root of x^3 = 2x^2 - x + 1.
"""

import numpy as np

from matpatience import family_matrix, inverse, min_patience
from matpatience.io import matrix_to_csv

T8 = family_matrix("toeplitz_Tbar", 8)
print(matrix_to_csv(T8))
inv = inverse(T8)
print("smallest inverse entry:", min(inv.flat))
print("first column sum, last row sum:", inv[:, 0].sum(), inv[-1, :].sum())

prev = None
for n in range(6, 26):
    p = min_patience(family_matrix("toeplitz_Tbar", n))
    print(f"n={n:>2}  patience={str(p):>12}" + (f"  ratio={float(p / prev):.5f}" if prev else ""))
    prev = p

root = max(r.real for r in np.roots([1, -2, 1, -1]) if abs(r.imag) < 1e-12)
print("limit", root)
