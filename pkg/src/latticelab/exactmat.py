"""Exact linear algebra over the integers and rationals.

Everything here computes with Python ints and fractions.Fraction.
Determinants use Bareiss elimination, signatures come from symmetric
Gauss diagonalization over Q, and the Smith normal form keeps full
unimodular transformation matrices so callers can present finite
quotient groups exactly.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import DegenerateError


def identity_matrix(n: int) -> list[list[int]]:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(mat):
    return [list(row) for row in zip(*mat)]


def mat_mul(a, b):
    rows, mid, cols = len(a), len(b), len(b[0]) if b else 0
    out = [[0] * cols for _ in range(rows)]
    for i in range(rows):
        ai = a[i]
        for k in range(mid):
            x = ai[k]
            if x == 0:
                continue
            bk = b[k]
            row = out[i]
            for j in range(cols):
                row[j] += x * bk[j]
    return out


def mat_vec(a, v):
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def is_symmetric(mat) -> bool:
    n = len(mat)
    return all(len(row) == n for row in mat) and all(
        mat[i][j] == mat[j][i] for i in range(n) for j in range(i + 1, n)
    )


def bareiss_det(mat) -> int:
    """Determinant of an integer matrix by fraction-free elimination."""
    n = len(mat)
    if n == 0:
        return 1
    m = [row[:] for row in mat]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return sign * m[-1][-1]


def signature_pair(mat) -> tuple[int, int]:
    """(n_plus, n_minus) of a symmetric matrix via exact diagonalization.

    Raises DegenerateError if the form has a radical.
    """
    a = [[Fraction(x) for x in row] for row in mat]
    pos = neg = 0
    while a:
        n = len(a)
        k = next((i for i in range(n) if a[i][i] != 0), None)
        if k is None:
            hit = None
            for i in range(n):
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        hit = (i, j)
                        break
                if hit:
                    break
            if hit is None:
                raise DegenerateError("form is degenerate")
            i, j = hit
            # mix row/column j into i to create a nonzero diagonal entry
            for c in range(n):
                a[i][c] += a[j][c]
            for r in range(n):
                a[r][i] += a[r][j]
            continue
        p = a[k][k]
        if p > 0:
            pos += 1
        else:
            neg += 1
        rest = [r for r in range(n) if r != k]
        a = [[a[i][j] - a[i][k] * a[k][j] / p for j in rest] for i in rest]
    return pos, neg


def rational_inverse(mat) -> list[list[Fraction]]:
    """Inverse of a nonsingular matrix over Q (Gauss-Jordan)."""
    n = len(mat)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(mat)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise DegenerateError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def unimodular_inverse(mat) -> list[list[int]]:
    """Inverse of a unimodular integer matrix, returned over the integers."""
    inv = rational_inverse(mat)
    out = []
    for row in inv:
        irow = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            irow.append(int(x))
        out.append(irow)
    return out


def smith_normal_form(mat):
    """Smith normal form with transforms: returns (d, u, v), u*mat*v = diag(d).

    d is the list of diagonal entries (d[0] | d[1] | ...), all >= 0; u and v
    are unimodular.  Works for any rectangular integer matrix.
    """
    m = len(mat)
    n = len(mat[0]) if m else 0
    a = [row[:] for row in mat]
    u = identity_matrix(m)
    v = identity_matrix(n)

    def row_sub(i, j, c):
        if c:
            a[i] = [x - c * y for x, y in zip(a[i], a[j])]
            u[i] = [x - c * y for x, y in zip(u[i], u[j])]

    def col_sub(j, i, c):
        if c:
            for r in range(m):
                a[r][j] -= c * a[r][i]
            for r in range(n):
                v[r][j] -= c * v[r][i]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in range(m):
            a[r][i], a[r][j] = a[r][j], a[r][i]
        for r in range(n):
            v[r][i], v[r][j] = v[r][j], v[r][i]

    def row_neg(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                x = a[i][j]
                if x != 0 and (best is None or abs(x) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        if best[0] != t:
            row_swap(t, best[0])
        if best[1] != t:
            col_swap(t, best[1])
        if a[t][t] < 0:
            row_neg(t)
        dirty = False
        for i in range(t + 1, m):
            if a[i][t] != 0:
                row_sub(i, t, a[i][t] // a[t][t])
                dirty = dirty or a[i][t] != 0
        for j in range(t + 1, n):
            if a[t][j] != 0:
                col_sub(j, t, a[t][j] // a[t][t])
                dirty = dirty or a[t][j] != 0
        if dirty:
            continue
        # pivot must divide every remaining entry for the d_i to chain
        witness = None
        for i in range(t + 1, m):
            if any(a[i][j] % a[t][t] for j in range(t + 1, n)):
                witness = i
                break
        if witness is not None:
            a[t] = [x + y for x, y in zip(a[t], a[witness])]
            u[t] = [x + y for x, y in zip(u[t], u[witness])]
            continue
        t += 1
    d = [a[i][i] for i in range(min(m, n))]
    return d, u, v


def integer_kernel(mat) -> list[list[int]]:
    """Basis of {z : mat @ z = 0} as a list of integer column vectors."""
    m = len(mat)
    n = len(mat[0]) if m else 0
    if n == 0:
        return []
    d, _, v = smith_normal_form(mat)
    rank = sum(1 for x in d if x != 0)
    return [[v[r][j] for r in range(n)] for j in range(rank, n)]


def ldl_decomposition(gram):
    """Exact LDL^T data for a positive definite symmetric matrix.

    Returns (d, w) with q(x) = sum_i d[i] * (x_i + sum_{j>i} w[i][j] x_j)^2.
    Raises NotDefiniteError via ValueError pivot check upstream.
    """
    n = len(gram)
    g = [[Fraction(x) for x in row] for row in gram]
    d = [Fraction(0)] * n
    w = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        val = g[i][i] - sum(d[k] * w[k][i] * w[k][i] for k in range(i))
        if val <= 0:
            raise ValueError("matrix is not positive definite")
        d[i] = val
        for j in range(i + 1, n):
            w[i][j] = (g[i][j] - sum(d[k] * w[k][i] * w[k][j] for k in range(i))) / d[i]
    return d, w
