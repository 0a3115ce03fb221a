"""Dense exact linear algebra over a field (rank, solve, nullspace, inverse).

Matrices are plain lists of lists of field elements (Fraction or FpElement);
everything is straightforward Gaussian elimination with exact division, which
is all the desk-scale instances in this package need.
"""

from __future__ import annotations

from typing import Sequence


def copy_matrix(m: Sequence[Sequence]) -> list[list]:
    return [list(row) for row in m]


def identity_matrix(n: int, field) -> list[list]:
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]


def zero_vector(n: int, field) -> list:
    return [field.zero for _ in range(n)]


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    rows, inner, cols = len(a), len(b), len(b[0]) if b else 0
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = None
            for k in range(inner):
                term = a[i][k] * b[k][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return out


def mat_vec(a: Sequence[Sequence], v: Sequence) -> list:
    return [sum_products(row, v) for row in a]


def sum_products(row: Sequence, v: Sequence):
    acc = None
    for x, y in zip(row, v):
        term = x * y
        acc = term if acc is None else acc + term
    return acc


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)]


def row_echelon(m: list[list]) -> list[int]:
    """Reduce m in place to reduced row echelon form; return pivot columns."""
    if not m:
        return []
    n_rows, n_cols = len(m), len(m[0])
    pivots = []
    row = 0
    for col in range(n_cols):
        pivot = next((i for i in range(row, n_rows) if m[i][col]), None)
        if pivot is None:
            continue
        m[row], m[pivot] = m[pivot], m[row]
        inv = m[row][col]
        m[row] = [x / inv for x in m[row]]
        for i in range(n_rows):
            if i != row and m[i][col]:
                factor = m[i][col]
                m[i] = [a - factor * b for a, b in zip(m[i], m[row])]
        pivots.append(col)
        row += 1
        if row == n_rows:
            break
    return pivots


def rank(m: Sequence[Sequence]) -> int:
    work = copy_matrix(m)
    return len(row_echelon(work))


def nullspace(m: Sequence[Sequence], field) -> list[list]:
    """A basis of the right kernel {x : m x = 0}."""
    if not m:
        return []
    n_cols = len(m[0])
    work = copy_matrix(m)
    pivots = row_echelon(work)
    pivot_set = set(pivots)
    basis = []
    for free in range(n_cols):
        if free in pivot_set:
            continue
        vec = zero_vector(n_cols, field)
        vec[free] = field.one
        for row_idx, pc in enumerate(pivots):
            vec[pc] = -work[row_idx][free]
        basis.append(vec)
    return basis


def solve(m: Sequence[Sequence], b: Sequence, field) -> list | None:
    """One solution x of m x = b, or None if inconsistent."""
    if not m:
        return [] if not any(b) else None
    n_cols = len(m[0])
    work = [list(row) + [bv] for row, bv in zip(m, b)]
    pivots = row_echelon(work)
    if n_cols in pivots:
        return None
    x = zero_vector(n_cols, field)
    for row_idx, pc in enumerate(pivots):
        x[pc] = work[row_idx][n_cols]
    return x


def inverse(m: Sequence[Sequence], field) -> list[list]:
    """The inverse of a square matrix; raises ValueError if singular."""
    n = len(m)
    work = [list(row) + list(idrow) for row, idrow in zip(m, identity_matrix(n, field))]
    pivots = row_echelon(work)
    if pivots != list(range(n)):
        raise ValueError("matrix is singular")
    return [row[n:] for row in work]


def determinant(m: Sequence[Sequence], field):
    """Determinant by fraction-free-ish elimination with exact division."""
    n = len(m)
    if n == 0:
        return field.one
    work = copy_matrix(m)
    det = field.one
    for col in range(n):
        pivot = next((i for i in range(col, n) if work[i][col]), None)
        if pivot is None:
            return field.zero
        if pivot != col:
            work[col], work[pivot] = work[pivot], work[col]
            det = -det
        det = det * work[col][col]
        inv = work[col][col]
        for i in range(col + 1, n):
            if work[i][col]:
                factor = work[i][col] / inv
                work[i] = [a - factor * b for a, b in zip(work[i], work[col])]
    return det


def row_space_basis(m: Sequence[Sequence]) -> list[list]:
    """A basis of the row space, in echelon form."""
    work = copy_matrix(m)
    pivots = row_echelon(work)
    return [work[i] for i in range(len(pivots))]


def in_row_space(basis_echelon: list[list], v: Sequence) -> bool:
    """Membership test against an echelonized row basis (reduces a copy of v)."""
    v = list(v)
    pivot_cols = []
    for row in basis_echelon:
        pc = next(i for i, x in enumerate(row) if x)
        pivot_cols.append(pc)
    for row, pc in zip(basis_echelon, pivot_cols):
        if v[pc]:
            factor = v[pc]
            v = [a - factor * b for a, b in zip(v, row)]
    return not any(v)
