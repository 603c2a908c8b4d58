"""Dense exact linear algebra over CycScalar.

Matrices are lists of row lists.  Everything is fraction-exact Gaussian
elimination; sizes here are small (a few hundred at most), so no pivoting
heuristics or sparsity tricks are needed.
"""

from __future__ import annotations

from .scalars import CycScalar


def zeros(rows: int, cols: int):
    return [[CycScalar.zero() for _ in range(cols)] for _ in range(rows)]


def eye(n: int):
    mat = zeros(n, n)
    for i in range(n):
        mat[i][i] = CycScalar.one()
    return mat


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = zeros(rows, cols)
    for i in range(rows):
        for k in range(inner):
            x = a[i][k]
            if x:
                row_b = b[k]
                row_o = out[i]
                for j in range(cols):
                    if row_b[j]:
                        row_o[j] = row_o[j] + x * row_b[j]
    return out

def mat_vec(a, v):
    out = []
    for row in a:
        acc = CycScalar.zero()
        for x, y in zip(row, v):
            if x and y:
                acc = acc + x * y
        out.append(acc)
    return out


def transpose(a):
    return [list(col) for col in zip(*a)]


def rref(mat):
    """Reduced row echelon form (in place on a copy).

    Returns (rref_matrix, pivot_columns).
    """
    m = [list(row) for row in mat]
    if not m:
        return m, []
    rows, cols = len(m), len(m[0])
    pivots = []
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = m[r][c].inverse()
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    return m, pivots


def rank(mat) -> int:
    return len(rref(mat)[1])


def inverse(mat):
    """Inverse of a square matrix, or None if singular."""
    n = len(mat)
    aug = [list(row) + list(e) for row, e in zip(mat, eye(n))]
    red, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [row[n:] for row in red]


def nullspace(mat):
    """Basis of the right nullspace {v : mat v = 0}."""
    if not mat:
        return []
    cols = len(mat[0])
    red, pivots = rref(mat)
    free = [c for c in range(cols) if c not in pivots]
    basis = []
    for f in free:
        v = [CycScalar.zero() for _ in range(cols)]
        v[f] = CycScalar.one()
        for r, c in enumerate(pivots):
            v[c] = -red[r][f]
        basis.append(v)
    return basis


def solve(mat, rhs):
    """One solution of mat x = rhs, or None if inconsistent."""
    if not mat:
        return [] if all(not b for b in rhs) else None
    cols = len(mat[0])
    aug = [list(row) + [b] for row, b in zip(mat, rhs)]
    red, pivots = rref(aug)
    if cols in pivots:
        return None
    x = [CycScalar.zero() for _ in range(cols)]
    for r, c in enumerate(pivots):
        x[c] = red[r][cols]
    return x


def in_span(basis, vec) -> bool:
    """Whether vec lies in the row span of basis."""
    if all(not x for x in vec):
        return True
    if not basis:
        return False
    return solve(transpose(basis), vec) is not None


def same_span(basis_a, basis_b) -> bool:
    ra = rank(basis_a) if basis_a else 0
    rb = rank(basis_b) if basis_b else 0
    if ra != rb:
        return False
    if ra == 0:
        return True
    joint = [list(r) for r in basis_a] + [list(r) for r in basis_b]
    return rank(joint) == ra
