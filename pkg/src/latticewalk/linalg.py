"""Exact integer linear algebra: rank, Hermite normal form, kernels."""

from fractions import Fraction

from .errors import ArithmeticOverflow, DimensionError

INT64_MAX = 2**63 - 1


def check_int64(values):
    """Raise ArithmeticOverflow if any entry leaves the signed 64-bit range."""
    for x in values:
        if x > INT64_MAX or x < -INT64_MAX:
            raise ArithmeticOverflow(f"integer {x} exceeds 64-bit range")
    return values


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def mat_vec(M, v):
    return tuple(dot(row, v) for row in M)


def _width(rows, ncols):
    if ncols is not None:
        return ncols
    if not rows:
        raise DimensionError("cannot infer width of an empty matrix")
    return len(rows[0])


def rank(rows, ncols=None):
    n = _width(rows, ncols)
    M = [[Fraction(x) for x in row] for row in rows]
    if any(len(row) != n for row in M):
        raise DimensionError("ragged matrix")
    r = 0
    for c in range(n):
        p = next((i for i in range(r, len(M)) if M[i][c] != 0), None)
        if p is None:
            continue
        M[r], M[p] = M[p], M[r]
        for i in range(r + 1, len(M)):
            if M[i][c]:
                f = M[i][c] / M[r][c]
                M[i] = [a - f * b for a, b in zip(M[i], M[r])]
        r += 1
        if r == len(M):
            break
    return r


def _echelon(M, ncols, U=None):
    """Integer row echelon form of M restricted to the first ncols columns.

    Works in place with unimodular row operations, mirrored on U when given.
    Pivots are made positive and entries above each pivot reduced into
    [0, pivot). Returns the number of pivot rows.
    """
    m = len(M)

    def sub(i, j, q):
        M[i] = [a - q * b for a, b in zip(M[i], M[j])]
        if U is not None:
            U[i] = [a - q * b for a, b in zip(U[i], U[j])]

    def swap(i, j):
        M[i], M[j] = M[j], M[i]
        if U is not None:
            U[i], U[j] = U[j], U[i]

    r = 0
    for c in range(ncols):
        if r == m:
            break
        while True:
            nz = [i for i in range(r, m) if M[i][c] != 0]
            if not nz:
                break
            p = min(nz, key=lambda i: abs(M[i][c]))
            swap(r, p)
            clean = True
            for i in range(r + 1, m):
                if M[i][c]:
                    sub(i, r, M[i][c] // M[r][c])
                    if M[i][c]:
                        clean = False
            if clean:
                break
        if M[r][c] == 0:
            continue
        if M[r][c] < 0:
            M[r] = [-a for a in M[r]]
            if U is not None:
                U[r] = [-a for a in U[r]]
        for i in range(r):
            q = M[i][c] // M[r][c]
            if q:
                sub(i, r, q)
        r += 1
    return r


def hermite_normal_form(rows, ncols=None):
    """Row-style HNF of the lattice spanned by ``rows`` (zero rows dropped).

    Two integer row sets span the same lattice iff their HNFs are equal.
    """
    n = _width(rows, ncols)
    M = [list(r) for r in rows]
    r = _echelon(M, n)
    return [tuple(row) for row in M[:r]]


def same_lattice(rows1, rows2, ncols=None):
    n = ncols if ncols is not None else _width(rows1 or rows2, None)
    return hermite_normal_form(rows1, n) == hermite_normal_form(rows2, n)


def in_lattice(v, rows):
    """True if the integer vector v is an integer combination of rows."""
    H = hermite_normal_form(rows, len(v))
    v = list(v)
    for row in H:
        c = next(i for i, x in enumerate(row) if x)
        q, rem = divmod(v[c], row[c])
        if rem:
            return False
        v = [a - q * b for a, b in zip(v, row)]
    return not any(v)


def kernel_basis(A, ncols=None):
    """Basis of the integer kernel {v : A v = 0}, returned in HNF.

    The basis comes from the unimodular transform of an HNF computation on
    A transposed, so it generates the full (saturated) kernel lattice.
    """
    n = _width(A, ncols)
    if any(len(row) != n for row in A):
        raise DimensionError("ragged matrix")
    d = len(A)
    M = [[A[i][j] for i in range(d)] for j in range(n)]
    U = [[int(i == j) for j in range(n)] for i in range(n)]
    r = _echelon(M, d, U)
    basis = hermite_normal_form(U[r:], n) if r < n else []
    for v in basis:
        check_int64(v)
    return basis


def transpose(M):
    return [list(col) for col in zip(*M)]


def determinant(M):
    """Exact determinant of a square integer matrix (Bareiss)."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            p = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if p is None:
                return 0
            A[k], A[p] = A[p], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * A[n - 1][n - 1]
