"""Check closed-form predictions against the exact solver.

Each check is a :class:`Check` with the exact quantity that was witnessed,
so a report shows what was compared and not just whether it matched.
"""

from dataclasses import dataclass
from fractions import Fraction

from .alonvu import OracleContext, a_entry, b_entry, check_z_column, materialize_alonvu, z_column
from .families import evaluate_boundary_check, family_certificate, family_matrix
from .games import NonsingularRejection, min_patience, nonsingular_solution, patience, solve_game
from .linalg import SingularMatrixError, identity, inverse, matmul, max_abs_entry

__all__ = ["Check", "verify_family", "verify_alonvu", "all_passed"]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    witnessed: object = None


def all_passed(checks):
    return all(c.ok for c in checks)


def _same(u, v):
    return len(u) == len(v) and all(a == b for a, b in zip(u, v))


def verify_family(family, n):
    cert = family_certificate(family, n)
    M = family_matrix(family, n)
    checks = []
    try:
        Minv = inverse(M)
    except SingularMatrixError:
        return [Check("nonsingular", False, "det = 0")]
    if cert.predicted_inverse is not None:
        checks.append(Check("inverse closed form", bool((Minv == cert.predicted_inverse).all())))
    for bc in cert.boundary_checks:
        ok, got = evaluate_boundary_check(bc, Minv)
        checks.append(Check(bc.description, ok, got))
    if cert.predicted_value is None:
        try:
            sol = nonsingular_solution(M)
        except NonsingularRejection as exc:
            return checks + [Check("game solution", True, f"closed form rejected: {exc.reason}")]
        p = patience(sol.maximin), patience(sol.minimax)
        return checks + [Check("game solution", True, (sol.value, p))]
    sol = solve_game(M)
    checks.append(Check("value", sol.value == cert.predicted_value, sol.value))
    checks.append(Check("unique and totally mixed", bool(sol.unique and sol.totally_mixed), (sol.unique, sol.totally_mixed)))
    if cert.predicted_maximin is not None:
        checks.append(Check("maximin strategy", _same(sol.maximin, cert.predicted_maximin)))
        checks.append(Check("minimax strategy", _same(sol.minimax, cert.predicted_minimax)))
    if cert.predicted_patience is not None:
        for player in (1, 2):
            p = min_patience(M, player)
            checks.append(Check(f"patience of player {player}", p == cert.predicted_patience, p))
    return checks


def _weakly_obeys(M, S):
    return all(v * s >= 0 for v, s in zip(M.flat, S.flat))


def verify_alonvu(m):
    mats = materialize_alonvu(m)
    n = 2 ** m
    A, B = mats.A, mats.B
    checks = [
        Check("A = L Q", bool((matmul(mats.L, mats.Q) == A).all())),
        Check("Q^2 = n I", bool((matmul(mats.Q, mats.Q) == n * identity(n)).all())),
    ]
    Ainv = inverse(A)
    Binv = inverse(B)
    chi = max_abs_entry(Ainv)
    checks.append(Check("A^-1 weakly obeys Sigma", _weakly_obeys(Ainv, mats.Sigma)))
    checks.append(Check("B^-1 >= 0", all(v >= 0 for v in Binv.flat), min(Binv.flat)))
    col = [Fraction(1) - Fraction(m, 2)] + [
        Fraction(1, 2) if len(a) == 1 else Fraction(0) for a in mats.order.order[1:]
    ]
    checks.append(Check("first column of A^-1", _same(Ainv[:, 0], col)))
    if m >= 4:
        s = sum(Binv[:, 0], Fraction(0))
        checks.append(Check("first column of B^-1 sums to m-1", s == m - 1, s))
    try:
        sol = nonsingular_solution(B)
    except NonsingularRejection as exc:
        checks.append(Check("nonsingular solution of B", False, exc.reason))
    else:
        checks.append(Check("B totally mixed and unique", bool(sol.unique and sol.totally_mixed)))
        total = sum(Binv.flat, Fraction(0))
        p = patience(sol.maximin)
        # x_1 = (m - 1) / 1^T B^-1 1, so this is the bound the first column gives
        checks.append(Check("(m-1) patience >= 1^T B^-1 1", (m - 1) * p >= total, (p, total)))
        checks.append(Check("1^T B^-1 1 >= chi(A)", total >= chi, (total, chi)))
    checks.append(Check("chi(A)", True, chi))
    z = z_column(1, m)
    checks.append(Check("z for column 1", not check_z_column(z, 1, m)))
    if m >= 4:
        bad = [i for i in range(2, n + 1) if check_z_column(z_column(i, m), i, m)]
        checks.append(Check("z columns 2..n", not bad, bad[:5]))
    ctx = OracleContext(m)
    oracle_ok = all(
        a_entry(i, j, ctx) == A[i - 1, j - 1] and b_entry(i, j, ctx) == B[i - 1, j - 1]
        for i in range(1, n + 1)
        for j in range(1, n + 1)
    )
    checks.append(Check("entry oracle matches", oracle_ok))
    return checks
