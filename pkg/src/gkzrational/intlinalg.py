"""Exact integer and rational linear algebra.

Everything here runs on Python ints and Fractions; there is no floating
point anywhere.  The workhorses are Hermite normal form (for saturated
integer kernels and lattice membership) and Smith normal form (for
unimodular lattice coordinates).
"""

from fractions import Fraction
from math import gcd


class IntMatrix:
    """Immutable integer matrix stored row-major."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries):
        rows = [tuple(int(x) for x in row) for row in entries]
        if rows:
            width = len(rows[0])
            if any(len(r) != width for r in rows):
                raise ValueError("ragged matrix")
        else:
            width = 0
        self.rows = len(rows)
        self.cols = width
        self.entries = tuple(rows)

    @classmethod
    def identity(cls, n):
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def row(self, i):
        return self.entries[i]

    def column(self, j):
        return tuple(r[j] for r in self.entries)

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return IntMatrix([self.column(j) for j in range(self.cols)])

    def submatrix_columns(self, js):
        return IntMatrix([[r[j] for j in js] for r in self.entries])

    def drop_column(self, j):
        return IntMatrix([r[:j] + r[j + 1:] for r in self.entries])

    def mul_vector(self, v):
        if len(v) != self.cols:
            raise ValueError("dimension mismatch")
        return tuple(sum(r[j] * v[j] for j in range(self.cols)) for r in self.entries)

    def mul(self, other):
        if self.cols != other.rows:
            raise ValueError("dimension mismatch")
        return IntMatrix([
            [sum(self.entries[i][k] * other.entries[k][j] for k in range(self.cols))
             for j in range(other.cols)]
            for i in range(self.rows)
        ])

    def __eq__(self, other):
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __repr__(self):
        return f"IntMatrix({[list(r) for r in self.entries]})"


def rank(matrix):
    """Rank over the rationals by fraction-free Gaussian elimination."""
    rows = [[Fraction(x) for x in r] for r in matrix.entries]
    m, n = len(rows), matrix.cols
    r = 0
    for col in range(n):
        pivot = None
        for i in range(r, m):
            if rows[i][col]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
        if r == m:
            break
    return r


def rational_rank_of_vectors(vectors):
    """Rank of a list of integer/rational vectors over Q."""
    if not vectors:
        return 0
    rows = [list(map(Fraction, v)) for v in vectors]
    m = len(rows)
    n = len(rows[0]) if rows else 0
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = 1 / rows[r][col]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][col]:
                f = rows[i][col]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def solve_rational(matrix_rows, rhs):
    """Solve M x = rhs over Q.  Returns one solution or None if
    inconsistent.  matrix_rows: list of row sequences."""
    m = len(matrix_rows)
    n = len(matrix_rows[0]) if m else 0
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix_rows)]
    pivots = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if aug[i][col]), None)
        if pivot is None:
            continue
        aug[r], aug[pivot] = aug[pivot], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i in range(m):
            if i != r and aug[i][col]:
                f = aug[i][col]
                aug[i] = [x - f * y for x, y in zip(aug[i], aug[r])]
        pivots.append(col)
        r += 1
    for i in range(r, m):
        if aug[i][n]:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = aug[i][n]
    return x


def row_span_contains(matrix, v):
    """Is the rational vector v in the rational row span of matrix?"""
    cols = [matrix.column(j) for j in range(matrix.cols)]
    # w^T M = v  <=>  M^T w = v^T
    return solve_rational(cols, list(v)) is not None


def row_span_coefficients(matrix, v):
    """Coefficients w with w^T.matrix = v, or None."""
    cols = [matrix.column(j) for j in range(matrix.cols)]
    return solve_rational(cols, list(v))


def _column_echelon_with_transform(matrix):
    """Integer column echelon form; returns (H, V) with M.V = H and V
    unimodular.  Column operations only, no division."""
    h = [list(r) for r in matrix.entries]
    m, n = matrix.rows, matrix.cols
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def col_addmul(dst, src, k):
        for i in range(m):
            h[i][dst] += k * h[i][src]
        for i in range(n):
            v[i][dst] += k * v[i][src]

    def col_swap(a, b):
        for i in range(m):
            h[i][a], h[i][b] = h[i][b], h[i][a]
        for i in range(n):
            v[i][a], v[i][b] = v[i][b], v[i][a]

    def col_negate(a):
        for i in range(m):
            h[i][a] = -h[i][a]
        for i in range(n):
            v[i][a] = -v[i][a]

    pivot_col = 0
    for row in range(m):
        if pivot_col >= n:
            break
        # gcd-reduce the entries of this row across the free columns
        while True:
            nz = [j for j in range(pivot_col, n) if h[row][j]]
            if not nz:
                break
            jmin = min(nz, key=lambda j: abs(h[row][j]))
            col_swap(pivot_col, jmin)
            if h[row][pivot_col] < 0:
                col_negate(pivot_col)
            done = True
            for j in range(pivot_col + 1, n):
                if h[row][j]:
                    q = h[row][j] // h[row][pivot_col]
                    col_addmul(j, pivot_col, -q)
                    if h[row][j]:
                        done = False
            if done:
                break
        if pivot_col < n and h[row][pivot_col]:
            pivot_col += 1
    return h, v


def integer_kernel(matrix):
    """Lattice basis of {v in Z^n : M v = 0}, in canonical Hermite form.

    The basis generates the full kernel lattice (it is saturated, since
    the kernel of an integer matrix is a direct summand of Z^n), and the
    canonical form makes the output reproducible: row-style Hermite
    normal form, pivots positive, entries above a pivot reduced into
    [0, pivot), rows ordered by pivot position.
    """
    h, v = _column_echelon_with_transform(matrix)
    m, n = matrix.rows, matrix.cols
    kernel_vectors = []
    for j in range(n):
        if all(h[i][j] == 0 for i in range(m)):
            kernel_vectors.append(tuple(v[i][j] for i in range(n)))
    if not kernel_vectors:
        return []
    return hermite_row_basis(kernel_vectors)


def hermite_row_basis(vectors):
    """Row-style HNF basis of the lattice generated by integer vectors."""
    rows = [list(v) for v in vectors]
    n = len(rows[0])
    basis = []
    work = rows
    col = 0
    while col < n and work:
        nz = [r for r in work if r[col]]
        rest = [r for r in work if not r[col]]
        if not nz:
            col += 1
            continue
        # reduce the nonzero column entries to a single gcd pivot
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            p = nz[0]
            new_nz = [p]
            for r in nz[1:]:
                q = r[col] // p[col]
                rr = [x - q * y for x, y in zip(r, p)]
                if rr[col]:
                    new_nz.append(rr)
                elif any(rr):
                    rest.append(rr)
            nz = new_nz
        pivot = nz[0]
        if pivot[col] < 0:
            pivot = [-x for x in pivot]
        basis.append(pivot)
        work = rest
        col += 1
    # reduce entries above each pivot into [0, pivot)
    pivot_cols = []
    for r in basis:
        pivot_cols.append(next(j for j in range(n) if r[j]))
    order = sorted(range(len(basis)), key=lambda i: pivot_cols[i])
    basis = [basis[i] for i in order]
    pivot_cols = [pivot_cols[i] for i in order]
    for i in range(len(basis) - 1, -1, -1):
        for k in range(i):
            c = pivot_cols[i]
            p = basis[i][c]
            q = basis[k][c] // p
            if q:
                basis[k] = [x - q * y for x, y in zip(basis[k], basis[i])]
    return [tuple(r) for r in basis]


def lattice_contains(basis, vector):
    """Is `vector` an integer combination of the (Hermite) basis rows?"""
    if not basis:
        return not any(vector)
    n = len(basis[0])
    v = list(vector)
    for r in basis:
        c = next(j for j in range(n) if r[j])
        q, rem = divmod(v[c], r[c])
        if rem != 0:
            return False
        v = [x - q * y for x, y in zip(v, r)]
    return not any(v)


def smith_normal_form(matrix):
    """Smith normal form: returns (U, D, V) with U.M.V = D, U and V
    unimodular, D diagonal with d1 | d2 | ... and nonnegative."""
    m, n = matrix.rows, matrix.cols
    a = [list(r) for r in matrix.entries]
    u = [[1 if i == j else 0 for j in range(m)] for i in range(m)]
    v = [[1 if i == j else 0 for j in range(n)] for i in range(n)]

    def row_addmul(dst, src, k):
        a[dst] = [x + k * y for x, y in zip(a[dst], a[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def col_addmul(dst, src, k):
        for i in range(m):
            a[i][dst] += k * a[i][src]
        for i in range(n):
            v[i][dst] += k * v[i][src]

    def row_swap(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def col_swap(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def row_negate(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(m, n):
        # find smallest nonzero entry in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        bi, bj = best
        if bi != t:
            row_swap(t, bi)
        if bj != t:
            col_swap(t, bj)
        if a[t][t] < 0:
            row_negate(t)
        dirty = False
        for i in range(t + 1, m):
            if a[i][t]:
                q = a[i][t] // a[t][t]
                row_addmul(i, t, -q)
                if a[i][t]:
                    dirty = True
        for j in range(t + 1, n):
            if a[t][j]:
                q = a[t][j] // a[t][t]
                col_addmul(j, t, -q)
                if a[t][j]:
                    dirty = True
        if dirty:
            continue
        # enforce divisibility: a[t][t] must divide every trailing entry
        offender = None
        for i in range(t + 1, m):
            for j in range(t + 1, n):
                if a[i][j] % a[t][t] != 0:
                    offender = i
                    break
            if offender is not None:
                break
        if offender is not None:
            row_addmul(t, offender, 1)
            continue
        t += 1
    d = IntMatrix(a)
    return IntMatrix(u), d, IntMatrix(v)


def det_int(rows):
    """Determinant of a square integer matrix (Bareiss, exact)."""
    a = [list(r) for r in rows]
    n = len(a)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def primitive_vector(v):
    """Divide by the gcd and make the first nonzero entry positive."""
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    if g == 0:
        return tuple(v)
    w = [x // g for x in v]
    for x in w:
        if x:
            if x < 0:
                w = [-y for y in w]
            break
    return tuple(w)


def saturation_coordinates(vectors, ambient_dim):
    """Unimodular coordinates on the saturation of the span of integer
    vectors inside Z^ambient_dim.

    Returns (rank e, coord) where coord maps any integer vector in the
    saturated lattice to its coordinate tuple in Z^e.  Implemented via
    Smith normal form of the matrix whose columns are the vectors.
    """
    if not vectors:
        def coord_trivial(x):
            if any(x):
                raise ValueError("vector not in the saturated lattice")
            return ()
        return 0, coord_trivial
    mat = IntMatrix([[v[i] for v in vectors] for i in range(ambient_dim)])
    u, d, _ = smith_normal_form(mat)
    e = sum(1 for i in range(min(d.rows, d.cols)) if d[i, i] != 0)
    urows = [u.row(i) for i in range(u.rows)]

    # The saturation is the Z-span of the first e columns of U^-1, so the
    # coordinates of x are the first e entries of U.x; the trailing
    # entries vanish exactly on the rational span.
    def coord(x):
        image = [sum(row[k] * x[k] for k in range(ambient_dim)) for row in urows]
        if any(image[e:]):
            raise ValueError("vector not in the saturated lattice")
        return tuple(image[:e])

    return e, coord
