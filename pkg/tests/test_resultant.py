from fractions import Fraction

import pytest

from gkzrational.errors import DomainError
from gkzrational.exprparse import parse
from gkzrational.laurent import LaurentPolynomial
from gkzrational.resultant import (
    det_ring,
    generic_resultant,
    resultant_value,
    sylvester_resultant,
    univariate_discriminant_oracle,
)

from helpers import rng

PAPER_SEVEN_TERMS = ("x1^2*x6^2 - x1*x2*x6*x5 - 2*x1*x3*x4*x6 + x1*x3*x5^2 "
                     "+ x2^2*x4*x6 - x2*x3*x4*x5 + x3^2*x4^2")


def test_generic_quadric_resultant_matches_display():
    expected = parse(PAPER_SEVEN_TERMS, nvars=6).numerator
    assert generic_resultant(2) == expected


def test_generic_linear_resultant():
    R = generic_resultant(1)
    expected = parse("x2*x3 - x1*x4", nvars=4).numerator
    assert R in (expected, -expected)


def test_resultant_of_equal_polynomials_vanishes():
    r = rng(81)
    for _ in range(10):
        f = [Fraction(r.randint(-9, 9)) for _ in range(3)]
        if not f[2]:
            f[2] = Fraction(1)
        assert resultant_value(f, f) == 0


def test_resultant_vanishes_iff_common_root():
    r = rng(82)
    for _ in range(50):
        # common root p/q built in
        p, q = r.randint(-5, 5), r.randint(1, 5)
        f = _mul_linear((q, -p), (r.randint(1, 4), r.randint(-4, 4)))
        g = _mul_linear((q, -p), (r.randint(1, 4), r.randint(-4, 4)))
        assert resultant_value(f, g) == 0
    for _ in range(50):
        # distinct linear factors: never a common root
        roots = r.sample(range(-12, 13), 4)
        f = _mul_linear((1, -roots[0]), (1, -roots[1]))
        g = _mul_linear((1, -roots[2]), (1, -roots[3]))
        assert resultant_value(f, g) != 0


def _mul_linear(a, b):
    # (a0 + a1 t)(b0 + b1 t) with (a0, a1) given high-to-low? no: pairs
    # are (a1, a0) slope-first; returns low-to-high coefficients
    a1, a0 = a
    b1, b0 = b
    return [Fraction(a0 * b0), Fraction(a0 * b1 + a1 * b0), Fraction(a1 * b1)]


def test_declared_degrees_enforced():
    with pytest.raises(DomainError):
        sylvester_resultant([1, 2], [1], 1, 0)
    with pytest.raises(DomainError):
        sylvester_resultant([1, 2, 3], [1, 2], 1, 1)


def test_det_ring_matches_integer_determinant():
    r = rng(83)
    from gkzrational.intlinalg import det_int

    for n in (2, 3, 4):
        for _ in range(5):
            rows = [[r.randint(-6, 6) for _ in range(n)] for _ in range(n)]
            frac_rows = [[Fraction(x) for x in row] for row in rows]
            assert det_ring(frac_rows) == det_int(rows)


def test_det_ring_polynomial_entries():
    x = LaurentPolynomial.variable(2, 0)
    y = LaurentPolynomial.variable(2, 1)
    one = LaurentPolynomial.one(2)
    assert det_ring([[x, y], [y, x]]) == x * x - y * y
    assert det_ring([[x, y], [x, y]]).is_zero()
    assert det_ring([[one]]) == one


def test_discriminant_oracle_quadratic():
    disc = univariate_discriminant_oracle(2)
    expected = parse("4*x1*x3 - x2^2", nvars=3).numerator
    assert disc == expected
