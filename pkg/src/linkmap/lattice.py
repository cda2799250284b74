"""
Small exact integer linear algebra: column echelon forms with unimodular
transforms, integer solutions of A x = b, and canonical Hermite forms for
comparing lattices.
"""

from __future__ import annotations

from typing import List, Optional, Sequence, Tuple

Matrix = List[List[int]]


def xgcd(a: int, b: int) -> Tuple[int, int, int]:
    """(g, u, v) with u a + v b = g ≥ 0."""
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    if old_r < 0:
        old_r, old_u, old_v = -old_r, -old_u, -old_v
    return old_r, old_u, old_v


def column_echelon(a: Sequence[Sequence[int]], ncols: Optional[int] = None):
    """
    Return (H, U, pivots) with H = A U, U unimodular, H in column echelon form:
    pivots[t] = (row, col) and H[row][col] > 0, H[row][c] = 0 for c > col,
    and each column to the right of the last pivot is zero.
    """
    m = len(a)
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    h = [list(row) for row in a]
    u = [[int(r == c) for c in range(n)] for r in range(n)]
    pivots: List[Tuple[int, int]] = []
    col = 0
    for row in range(m):
        if col >= n:
            break
        for c in range(col + 1, n):
            if h[row][c] == 0:
                continue
            x, y = h[row][col], h[row][c]
            g, p, q = xgcd(x, y)
            # [col, c] <- [col, c] @ [[p, -y/g], [q, x/g]] (determinant 1)
            yg, xg = y // g, x // g
            for mat in (h, u):
                for r in range(len(mat)):
                    vc, vd = mat[r][col], mat[r][c]
                    mat[r][col], mat[r][c] = p * vc + q * vd, -yg * vc + xg * vd
        if h[row][col] != 0:
            if h[row][col] < 0:
                for mat in (h, u):
                    for r in range(len(mat)):
                        mat[r][col] = -mat[r][col]
            pivots.append((row, col))
            col += 1
    return h, u, pivots


def rank(a: Sequence[Sequence[int]], ncols: Optional[int] = None) -> int:
    return len(column_echelon(a, ncols)[2])


def solve_integer(a: Sequence[Sequence[int]], b: Sequence[int], ncols: Optional[int] = None) -> Optional[List[int]]:
    """One integer solution of A x = b, or None when there is none."""
    n = ncols if ncols is not None else (len(a[0]) if a else 0)
    h, u, pivots = column_echelon(a, n)
    y = [0] * n
    pivot_of_row = {row: col for row, col in pivots}
    for row in range(len(h)):
        acc = sum(h[row][c] * y[c] for c in range(n))
        if row in pivot_of_row:
            col = pivot_of_row[row]
            rest = b[row] - (acc - h[row][col] * y[col])
            if rest % h[row][col]:
                return None
            y[col] = rest // h[row][col]
        elif acc != b[row]:
            return None
    return [sum(u[r][c] * y[c] for c in range(n)) for r in range(n)]


def hermite_rows(gens: Sequence[Sequence[int]], dim: int) -> Tuple[Tuple[int, ...], ...]:
    """
    Canonical generating set for the lattice spanned by `gens` (vectors of
    length dim).  Two generating sets span the same lattice iff these agree.
    """
    if not gens:
        return ()
    # columns of the transpose are the generators
    at = [[g[r] for g in gens] for r in range(dim)]
    h, _, pivots = column_echelon(at, len(gens))
    for t, (row, col) in enumerate(pivots):
        p = h[row][col]
        for c in range(col):
            q = h[row][c] // p
            if q:
                for r in range(dim):
                    h[r][c] -= q * h[r][col]
    return tuple(tuple(h[r][col] for r in range(dim)) for _, col in pivots)


def in_lattice(v: Sequence[int], gens: Sequence[Sequence[int]]) -> bool:
    if not any(v):
        return True
    if not gens:
        return False
    dim = len(v)
    at = [[g[r] for g in gens] for r in range(dim)]
    return solve_integer(at, list(v), len(gens)) is not None


def kernel_complement(forms: Sequence[Sequence[int]], n: int):
    """
    (U, rho): U unimodular n×n such that every form f satisfies f·U e_c = 0
    for c ≥ rho.  Substituting x = U y makes the forms depend only on y[:rho].
    """
    if not forms:
        return [[int(r == c) for c in range(n)] for r in range(n)], 0
    _, u, pivots = column_echelon(forms, n)
    return u, len(pivots)
