"""Small exact integer/rational linear algebra helpers.

Everything here operates on tuples of ints (lattice vectors) or lists of
such tuples, with Fractions used internally for rational solves.  The
matrices involved are tiny (rank <= 10), so no attempt at asymptotic
cleverness is made.
"""
from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from math import gcd
from typing import Optional, Sequence

Vec = tuple[int, ...]


def vadd(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Vec, b: Vec) -> Vec:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: Vec) -> Vec:
    return tuple(-x for x in a)


def vscale(k: int, a: Vec) -> Vec:
    return tuple(k * x for x in a)


def zero_vec(rank: int) -> Vec:
    return (0,) * rank


def mat_vec(rows: Sequence[Vec], v: Vec) -> Vec:
    return tuple(sum(r[i] * v[i] for i in range(len(v))) for r in rows)


def mat_mul(a: Sequence[Vec], b: Sequence[Vec]) -> tuple[Vec, ...]:
    n = len(b[0]) if b else 0
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(n)) for i in range(len(a)))


def transpose(rows: Sequence[Sequence[int]]) -> tuple[Vec, ...]:
    if not rows:
        return ()
    return tuple(tuple(r[j] for r in rows) for j in range(len(rows[0])))


def identity_matrix(n: int) -> tuple[Vec, ...]:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def solve_rational(columns: Sequence[Vec], target: Vec) -> Optional[tuple[Fraction, ...]]:
    """Solve sum_j x_j * columns[j] = target over Q.

    Returns the coefficient tuple, or None if the system is inconsistent.
    If the columns are linearly dependent a particular solution with zeros
    on the free variables is returned.
    """
    m = len(target)
    n = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(n)] + [Fraction(target[i])] for i in range(m)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n):
        sel = next((r for r in range(row, m) if aug[r][col] != 0), None)
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        pv = aug[row][col]
        aug[row] = [x / pv for x in aug[row]]
        for r in range(m):
            if r != row and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[row])]
        pivots.append((row, col))
        row += 1
        if row == m:
            break
    for r in range(row, m):
        if aug[r][n] != 0:
            return None
    sol = [Fraction(0)] * n
    for r, c in pivots:
        sol[c] = aug[r][n]
    # With free variables zeroed the candidate must be re-checked.
    for i in range(m):
        if sum(Fraction(columns[j][i]) * sol[j] for j in range(n)) != target[i]:
            return None
    return tuple(sol)


def solve_integer_combination(columns: Sequence[Vec], target: Vec) -> Optional[Vec]:
    """Solve over Q and keep the result only if it is integral."""
    sol = solve_rational(columns, target)
    if sol is None or any(f.denominator != 1 for f in sol):
        return None
    return tuple(int(f) for f in sol)


def column_hnf(columns: Sequence[Vec]) -> tuple[tuple[Vec, ...], tuple[Vec, ...]]:
    """Column-style Hermite normal form.

    Returns (H, U) where U is unimodular (given as a list of columns over
    the original column index set) and the columns of H are the original
    columns times U.  Zero columns of H are dropped from neither H nor U;
    H's nonzero columns are in echelon form with positive pivots and
    reduced entries to the left of each pivot.
    """
    m = len(columns[0]) if columns else 0
    cols = [list(c) for c in columns]
    n = len(cols)
    u = [[1 if i == j else 0 for j in range(n)] for i in range(n)]  # columns of U

    def colop_sub(j, k, f):
        # col_j -= f * col_k
        for i in range(m):
            cols[j][i] -= f * cols[k][i]
        for i in range(n):
            u[j][i] -= f * u[k][i]

    def colswap(j, k):
        cols[j], cols[k] = cols[k], cols[j]
        u[j], u[k] = u[k], u[j]

    def colneg(j):
        for i in range(m):
            cols[j][i] = -cols[j][i]
        for i in range(n):
            u[j][i] = -u[j][i]

    pivot_col = 0
    pivot_rows = []
    for row in range(m):
        # Euclid among columns >= pivot_col at this row.
        while True:
            nz = [j for j in range(pivot_col, n) if cols[j][row] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda j: abs(cols[j][row]))
            j0 = nz[0]
            for j in nz[1:]:
                f = cols[j][row] // cols[j0][row]
                colop_sub(j, j0, f)
        nz = [j for j in range(pivot_col, n) if cols[j][row] != 0]
        if not nz:
            continue
        j0 = nz[0]
        if j0 != pivot_col:
            colswap(j0, pivot_col)
        if cols[pivot_col][row] < 0:
            colneg(pivot_col)
        pv = cols[pivot_col][row]
        for j in range(pivot_col):
            f = cols[j][row] // pv
            if f:
                colop_sub(j, pivot_col, f)
        pivot_rows.append(row)
        pivot_col += 1
        if pivot_col == n:
            break
    h = tuple(tuple(c) for c in cols)
    uu = tuple(tuple(c) for c in u)
    return h, uu


def hnf_basis(columns: Sequence[Vec]) -> tuple[Vec, ...]:
    """Nonzero HNF columns spanning the same lattice as ``columns``."""
    h, _ = column_hnf(columns)
    return tuple(c for c in h if any(c))


def reduce_mod_lattice(v: Vec, basis: Sequence[Vec]) -> Vec:
    """Canonical representative of v modulo the lattice spanned by an HNF basis."""
    w = list(v)
    m = len(v)
    for col in basis:
        pivot = next((i for i in range(m) if col[i] != 0), None)
        if pivot is None:
            continue
        k = w[pivot] // col[pivot]
        if k:
            for i in range(m):
                w[i] -= k * col[i]
    return tuple(w)


def lattice_quotient_invariants(columns: Sequence[Vec], rank: int) -> tuple[int, int]:
    """(free_rank, torsion_order) of Z^rank / span_Z(columns)."""
    cols = [c for c in columns if any(c)]
    if not cols:
        return rank, 1
    # rational rank of the span
    basis = hnf_basis(cols)
    s = len(basis)
    free_rank = rank - s
    # torsion order = gcd of the s x s minors = product of invariant factors
    rows = list(range(rank))
    g = 0
    for rsel in combinations(rows, s):
        mat = [[basis[j][i] for j in range(s)] for i in rsel]
        g = gcd(g, abs(int_det(mat)))
    return free_rank, (g if g else 1)


def int_det(mat: list[list[int]]) -> int:
    n = len(mat)
    if n == 0:
        return 1
    a = [[Fraction(x) for x in row] for row in mat]
    det = Fraction(1)
    for col in range(n):
        sel = next((r for r in range(col, n) if a[r][col] != 0), None)
        if sel is None:
            return 0
        if sel != col:
            a[col], a[sel] = a[sel], a[col]
            det = -det
        det *= a[col][col]
        inv = 1 / a[col][col]
        for r in range(col + 1, n):
            if a[r][col] != 0:
                f = a[r][col] * inv
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    assert det.denominator == 1
    return int(det)


def integer_solve(rows: Sequence[Vec], target: Vec) -> Optional[Vec]:
    """Find x in Z^n with (rows)·x = target, or None.

    ``rows`` is an s x n integer matrix given by rows.
    """
    n = len(rows[0]) if rows else 0
    acols = [tuple(r[j] for r in rows) for j in range(n)]
    h, u = column_hnf(acols)
    # forward-substitute H y = target on pivot structure
    s = len(target)
    y = [0] * n
    w = list(target)
    for j in range(n):
        col = h[j]
        pivot = next((i for i in range(s) if col[i] != 0), None)
        if pivot is None:
            continue
        if w[pivot] % col[pivot] != 0:
            return None
        k = w[pivot] // col[pivot]
        y[j] = k
        for i in range(s):
            w[i] -= k * col[i]
    if any(w):
        return None
    x = tuple(sum(u[j][i] * y[j] for j in range(n)) for i in range(n))
    assert mat_vec(rows, x) == tuple(target)
    return x
