"""
Games whose patience follows the Fibonacci numbers
==================================================

Three small (0,1) and (-1,0,1) families, solved exactly.  The patience
column is the smallest nonzero probability, inverted, over all optimal
strategies of the row player.
tbar1_n stands for the primed family, one size larger.
"""

from matpatience import family_matrix, min_patience, solve_game
from matpatience.io import matrix_to_csv
from matpatience.families import fibonacci

# the 5x5 Hessenberg game and its exact solution
D5 = family_matrix("hessenberg_D", 5)
print(matrix_to_csv(D5))
sol = solve_game(D5)
print("value", sol.value, "maximin", [str(v) for v in sol.maximin])

# value and patience for growing n, next to the Fibonacci numbers
print(f"{'n':>3} {'F_n':>6} {'val D_n':>12} {'tau D_n':>8} {'tau tbar_n':>10} {'tau tbar1_n':>11}")
for n in range(3, 16):
    d = family_matrix("hessenberg_D", n)
    tb = family_matrix("triangular_tbar", n)
    tp = family_matrix("triangular_tbar_prime", n)
    print(
        f"{n:>3} {int(fibonacci(n)):>6} {str(solve_game(d).value):>12} "
        f"{int(min_patience(d)):>8} {int(min_patience(tb)):>10} {int(min_patience(tp)):>11}"
    )

# the growth factor approaches the golden ratio
ratio = min_patience(family_matrix("hessenberg_D", 30)) / min_patience(family_matrix("hessenberg_D", 29))
print("tau(D_30) / tau(D_29) =", float(ratio))
