"""Exact integer matrix utilities.

Everything here works over plain Python ints (arbitrary precision) or
fractions.Fraction; there is no floating point anywhere in the package.
Matrices are lists of row lists.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

Matrix = list[list[int]]
Vector = list[int]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) >= 0 and x*a + y*b == g."""
    x, next_x = 1, 0
    y, next_y = 0, 1
    g, next_g = a, b
    while next_g:
        q = g // next_g
        x, next_x = next_x, x - q * next_x
        y, next_y = next_y, y - q * next_y
        g, next_g = next_g, g - q * next_g
    if g < 0:
        x, y, g = -x, -y, -g
    return g, x, y


def identity_matrix(n: int) -> Matrix:
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def copy_matrix(m: Matrix) -> Matrix:
    return [row[:] for row in m]


def transpose(m: Matrix) -> Matrix:
    return [list(col) for col in zip(*m)]


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    bt = transpose(b)
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def det(m: Matrix):
    """Exact determinant via fraction-free Gaussian elimination (Bareiss)."""
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant requires a square matrix")
    a = copy_matrix(m)
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            for r in range(t + 1, n):
                if a[r][t]:
                    a[t], a[r] = a[r], a[t]
                    sign = -sign
                    break
            else:
                return 0
        for r in range(t + 1, n):
            for c in range(t + 1, n):
                a[r][c] = (a[r][c] * a[t][t] - a[r][t] * a[t][c]) // prev
            a[r][t] = 0
        prev = a[t][t]
    return sign * a[-1][-1]


def is_unimodular(m: Matrix) -> bool:
    return det(m) in (1, -1)


def unimodular_inverse(m: Matrix) -> Matrix:
    """Invert a unimodular integer matrix; the inverse is again integral."""
    n = len(m)
    aug = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(m)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            raise ValueError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = 1 / aug[col][col]
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                f = aug[r][col]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[col])]
    out = [[x for x in row[n:]] for row in aug]
    if any(x.denominator != 1 for row in out for x in row):
        raise ValueError("matrix is not unimodular")
    return [[int(x) for x in row] for row in out]


def _rows_combine(m: Matrix, u: Matrix, i: int, j: int, col: int) -> None:
    # Unimodular combination of rows i and j making m[j][col] zero.
    a, b = m[i][col], m[j][col]
    if b == 0:
        return
    if a == 0:
        m[i], m[j] = m[j], m[i]
        u[i], u[j] = u[j], u[i]
        return
    if b % a == 0:
        # Plain elimination; keeping row i fixed here is what makes the
        # clear-rows/clear-columns alternation in snf terminate.
        q = b // a
        m[j] = [p - q * r for p, r in zip(m[j], m[i])]
        u[j] = [p - q * r for p, r in zip(u[j], u[i])]
        return
    g, x, y = xgcd(a, b)
    ag, bg = a // g, b // g
    ri, rj = m[i], m[j]
    m[i] = [x * p + y * q for p, q in zip(ri, rj)]
    m[j] = [-bg * p + ag * q for p, q in zip(ri, rj)]
    si, sj = u[i], u[j]
    u[i] = [x * p + y * q for p, q in zip(si, sj)]
    u[j] = [-bg * p + ag * q for p, q in zip(si, sj)]


def hnf(m: Matrix) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form.

    Returns (h, u) with u @ m == h, u unimodular, h in row echelon form with
    positive pivots and entries above each pivot reduced into [0, pivot).
    """
    if not m:
        return [], []
    nrows, ncols = len(m), len(m[0])
    h = copy_matrix(m)
    u = identity_matrix(nrows)
    prow = 0
    for col in range(ncols):
        piv = next((r for r in range(prow, nrows) if h[r][col]), None)
        if piv is None:
            continue
        h[prow], h[piv] = h[piv], h[prow]
        u[prow], u[piv] = u[piv], u[prow]
        for r in range(prow + 1, nrows):
            _rows_combine(h, u, prow, r, col)
        if h[prow][col] < 0:
            h[prow] = [-x for x in h[prow]]
            u[prow] = [-x for x in u[prow]]
        for r in range(prow):
            q = h[r][col] // h[prow][col]
            if q:
                h[r] = [x - q * y for x, y in zip(h[r], h[prow])]
                u[r] = [x - q * y for x, y in zip(u[r], u[prow])]
        prow += 1
        if prow == nrows:
            break
    return h, u


def snf(m: Matrix) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form: returns (s, u, v) with u @ m @ v == s.

    u and v are unimodular; s is diagonal with nonnegative entries and
    s[i][i] divides s[i+1][i+1].
    """
    if not m:
        return [], [], []
    nrows, ncols = len(m), len(m[0])
    s = copy_matrix(m)
    u = identity_matrix(nrows)
    v = identity_matrix(ncols)

    def col_combine(i: int, j: int, row: int) -> None:
        a, b = s[row][i], s[row][j]
        if b == 0:
            return
        if a == 0:
            for r in range(nrows):
                s[r][i], s[r][j] = s[r][j], s[r][i]
            for r in range(ncols):
                v[r][i], v[r][j] = v[r][j], v[r][i]
            return
        if b % a == 0:
            q = b // a
            for r in range(nrows):
                s[r][j] -= q * s[r][i]
            for r in range(ncols):
                v[r][j] -= q * v[r][i]
            return
        g, x, y = xgcd(a, b)
        ag, bg = a // g, b // g
        for r in range(nrows):
            p, q = s[r][i], s[r][j]
            s[r][i] = x * p + y * q
            s[r][j] = -bg * p + ag * q
        for r in range(ncols):
            p, q = v[r][i], v[r][j]
            v[r][i] = x * p + y * q
            v[r][j] = -bg * p + ag * q

    t = 0
    while t < min(nrows, ncols):
        piv = next(((r, c) for r in range(t, nrows) for c in range(t, ncols)
                    if s[r][c]), None)
        if piv is None:
            break
        r0, c0 = piv
        s[t], s[r0] = s[r0], s[t]
        u[t], u[r0] = u[r0], u[t]
        if c0 != t:
            for r in range(nrows):
                s[r][t], s[r][c0] = s[r][c0], s[r][t]
            for r in range(ncols):
                v[r][t], v[r][c0] = v[r][c0], v[r][t]
        while True:
            for r in range(t + 1, nrows):
                _rows_combine(s, u, t, r, t)
            if all(s[t][c] == 0 for c in range(t + 1, ncols)):
                # Pivot must divide every remaining entry; if not, fold the
                # offending row in and restart the clearing loop.
                bad = next(((r, c) for r in range(t + 1, nrows)
                            for c in range(t + 1, ncols)
                            if s[r][c] % s[t][t]), None)
                if bad is None:
                    break
                s[t] = [x + y for x, y in zip(s[t], s[bad[0]])]
                u[t] = [x + y for x, y in zip(u[t], u[bad[0]])]
            else:
                for c in range(t + 1, ncols):
                    col_combine(t, c, t)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return s, u, v


def saturate(generators: list[Vector]) -> tuple[list[Vector], int]:
    """Saturation of the span of `generators` inside the ambient Z^n.

    Returns (basis, index): `basis` generates {x in Z^n : m*x in span for
    some m != 0} and `index` is the (finite) index of the input lattice in
    its saturation, computed from the Smith normal form.
    """
    if not generators:
        return [], 1
    s, _u, v = snf([list(g) for g in generators])
    rank = sum(1 for i in range(min(len(s), len(s[0]))) if s[i][i])
    vinv = unimodular_inverse(v)
    basis = [vinv[i] for i in range(rank)]
    index = 1
    for i in range(rank):
        index *= s[i][i]
    norm, _ = hnf(basis)
    return norm[:rank], index


def divisibility(x: Vector, gram: Matrix) -> int:
    """Positive generator of the pairing ideal {<x, y> : y in the lattice}.

    The lattice is Z^n equipped with the given Gram matrix; the answer is
    the gcd of the entries of gram @ x.  Returns 0 for x = 0.
    """
    g = 0
    for entry in mat_vec(gram, x):
        g = gcd(g, entry)
    return g


def gram_matrix(vectors: list[Vector], ambient_gram: Matrix) -> Matrix:
    """Gram matrix of the given vectors under an ambient bilinear form."""
    paired = [mat_vec(ambient_gram, w) for w in vectors]
    return [[sum(a * b for a, b in zip(vec, pw)) for pw in paired]
            for vec in vectors]
