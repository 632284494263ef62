"""Small exact linear algebra over Z and Q.

Matrices are lists of lists. Everything here is exact; floats never appear.
"""
from fractions import Fraction
from math import gcd


def det_bareiss(m):
    """Integer determinant by fraction-free elimination."""
    a = [list(map(int, row)) for row in m]
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def ldl(m):
    """LDL^T of a symmetric matrix without pivoting.

    Returns ``(lower, diag)`` with ``lower`` unit lower triangular. Raises
    ``ZeroDivisionError`` if a leading minor vanishes, which cannot happen
    for a definite form.
    """
    n = len(m)
    lower = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    diag = [Fraction(0)] * n
    for j in range(n):
        s = Fraction(m[j][j]) - sum(lower[j][k] ** 2 * diag[k] for k in range(j))
        diag[j] = s
        for i in range(j + 1, n):
            t = Fraction(m[i][j]) - sum(lower[i][k] * lower[j][k] * diag[k] for k in range(j))
            lower[i][j] = t / s
    return lower, diag


def inertia(m):
    """Signature ``(positive, negative, zero)`` of a symmetric rational matrix.

    Symmetric congruence with pivoting; a zero diagonal next to a nonzero
    off-diagonal entry is repaired by adding a row/column to another.
    """
    a = [[Fraction(x) for x in row] for row in m]
    n = len(a)
    pos = neg = 0
    active = list(range(n))
    while active:
        p = next((i for i in active if a[i][i] != 0), None)
        if p is None:
            pair = next(((i, j) for i in active for j in active if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            i, j = pair
            # row_i += row_j, col_i += col_j
            for k in range(n):
                a[i][k] += a[j][k]
            for k in range(n):
                a[k][i] += a[k][j]
            p = i
        d = a[p][p]
        if d > 0:
            pos += 1
        else:
            neg += 1
        active.remove(p)
        for i in active:
            f = a[i][p] / d
            if f:
                for k in active:
                    a[i][k] -= f * a[p][k]
        for i in active:
            a[i][p] = a[p][i] = Fraction(0)
    return pos, neg, n - pos - neg


def inverse(m):
    """Gauss-Jordan inverse over Q."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(m)]
    for c in range(n):
        p = next(r for r in range(c, n) if a[r][c] != 0)
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for r in range(n):
            if r != c and a[r][c] != 0:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def smith_invariants(m):
    """Diagonal of the Smith normal form (absolute values, zeros last)."""
    from sympy import Matrix, ZZ
    from sympy.matrices.normalforms import smith_normal_form

    snf = smith_normal_form(Matrix(m), domain=ZZ)
    k = min(snf.shape)
    vals = [abs(int(snf[i, i])) for i in range(k)]
    return sorted((v for v in vals if v), key=int) + [0] * sum(1 for v in vals if v == 0)


def integer_kernel(row):
    """Z-basis of {x in Z^n : row . x = 0} via unimodular column operations."""
    n = len(row)
    w = list(map(int, row))
    u = [[int(i == j) for j in range(n)] for i in range(n)]  # columns track the transform

    def addcol(dst, src, f):
        w[dst] += f * w[src]
        for r in range(n):
            u[r][dst] += f * u[r][src]

    def swap(i, j):
        w[i], w[j] = w[j], w[i]
        for r in range(n):
            u[r][i], u[r][j] = u[r][j], u[r][i]

    while True:
        nz = [i for i in range(n) if w[i] != 0]
        if len(nz) <= 1:
            break
        p = min(nz, key=lambda i: abs(w[i]))
        for i in nz:
            if i != p:
                addcol(i, p, -(w[i] // w[p]))
    nz = [i for i in range(n) if w[i] != 0]
    if nz:
        swap(0, nz[0])
        start = 1
    else:
        start = 0
    return [[u[r][c] for r in range(n)] for c in range(start, n)]


def mat_vec(m, v):
    return [sum(x * y for x, y in zip(row, v)) for row in m]


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, int(x))
    return g
