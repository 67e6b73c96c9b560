"""Sylvester resultants and determinants over exact coefficient rings.

Determinants are computed by Laplace expansion with memoization on
column subsets, which needs no division and therefore works uniformly
for Fraction entries and for polynomial entries (LaurentPolynomial).
Matrix sizes here are small: a Sylvester matrix for two degree-m
univariate polynomials is (2m) x (2m).
"""

from fractions import Fraction

from gkzrational.errors import DomainError
from gkzrational.laurent import LaurentPolynomial


def _is_zero(x):
    if isinstance(x, LaurentPolynomial):
        return x.is_zero()
    return x == 0


def det_ring(rows):
    """Determinant over any commutative ring with +, *, unary -.

    Laplace expansion along the first rows, memoized on the remaining
    column subset: O(2^n) ring operations.
    """
    n = len(rows)
    if n == 0:
        raise DomainError("empty determinant")
    for r in rows:
        if len(r) != n:
            raise DomainError("determinant of a non-square matrix")
    memo = {}

    def minor(cols):
        row = n - len(cols)
        if len(cols) == 1:
            return rows[row][cols[0]]
        cached = memo.get(cols)
        if cached is not None:
            return cached
        total = None
        for pos, col in enumerate(cols):
            entry = rows[row][col]
            if _is_zero(entry):
                continue
            term = entry * minor(cols[:pos] + cols[pos + 1:])
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = rows[row][cols[0]] * 0
        memo[cols] = total
        return total

    return minor(tuple(range(n)))


def sylvester_matrix(f_coeffs, g_coeffs, m, n):
    """Sylvester matrix for f of declared degree m and g of degree n,
    coefficients listed low to high.  Entry rings are whatever the
    coefficients are (Fractions or polynomials)."""
    if m < 1 or n < 1:
        raise DomainError("declared degrees must be at least 1")
    if len(f_coeffs) != m + 1 or len(g_coeffs) != n + 1:
        raise DomainError("coefficient count must be degree + 1")
    size = m + n
    zero = f_coeffs[0] * 0
    rows = []
    for i in range(n):
        row = [zero] * size
        for k in range(m + 1):
            row[i + k] = f_coeffs[m - k]
        rows.append(row)
    for i in range(m):
        row = [zero] * size
        for k in range(n + 1):
            row[i + k] = g_coeffs[n - k]
        rows.append(row)
    return rows


def sylvester_resultant(f_coeffs, g_coeffs, m=None, n=None):
    """Resultant of two univariate polynomials with exact (rational or
    polynomial) coefficients, as the Sylvester determinant at the
    declared degrees."""
    if m is None:
        m = len(f_coeffs) - 1
    if n is None:
        n = len(g_coeffs) - 1
    return det_ring(sylvester_matrix(f_coeffs, g_coeffs, m, n))


def generic_resultant(m, n=None):
    """Sylvester resultant of two generic univariate polynomials
    f = x1 + x2 t + ... + x_{m+1} t^m and
    g = x_{m+2} + ... + x_{m+n+2} t^n
    as a polynomial in the coefficient variables x1..x_{m+n+2}."""
    if n is None:
        n = m
    nvars = m + n + 2
    f = [LaurentPolynomial.variable(nvars, j) for j in range(m + 1)]
    g = [LaurentPolynomial.variable(nvars, m + 1 + j) for j in range(n + 1)]
    return sylvester_resultant(f, g, m, n)


def univariate_discriminant_oracle(m):
    """Brute-force elimination oracle for the discriminant of a generic
    degree-m univariate polynomial: Res(f, df/dt) with the monomial
    content stripped and the sign normalized so the canonically first
    term is positive."""
    nvars = m + 1
    f = [LaurentPolynomial.variable(nvars, j) for j in range(m + 1)]
    df = [f[j + 1].scale(j + 1) for j in range(m)]
    res = sylvester_resultant(f, df, m, m - 1)
    g = res.monomial_gcd()
    stripped = res.mul_monomial(tuple(-x for x in g))
    content = stripped.rational_content()
    if stripped.sorted_terms()[0][1] < 0:
        content = -content
    return stripped.scale(1 / content)


def resultant_value(f_coeffs, g_coeffs, m=None, n=None):
    """Numeric resultant of rational-coefficient polynomials."""
    f = [Fraction(c) for c in f_coeffs]
    g = [Fraction(c) for c in g_coeffs]
    return sylvester_resultant(f, g, m, n)
