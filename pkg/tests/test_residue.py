from fractions import Fraction

import pytest

from gkzrational.cayley import detect_cayley
from gkzrational.errors import DegenerateInstance, DomainError
from gkzrational.exprparse import parse
from gkzrational.fixtures import cayley_of_segments, scroll
from gkzrational.laurent import LaurentPolynomial, RationalFunction
from gkzrational.residue import (
    ResidueProblem,
    calibration_constant,
    check_jacobian_support,
    interior_exponents,
    jacobian_form,
    residue_witness,
    simplex_lattice_points,
    toric_jacobian,
    toric_residue,
    univariate_residue_oracle,
)
from gkzrational.resultant import generic_resultant, resultant_value

from helpers import rng


def random_instance(r, m, lo=1, hi=30):
    while True:
        c0 = [Fraction(r.randint(lo, hi)) for _ in range(m + 1)]
        c1 = [Fraction(r.randint(lo, hi)) for _ in range(m + 1)]
        if (resultant_value(c0, c1) != 0
                and c0[0] and c1[0] and c0[-1] and c1[-1]):
            return c0, c1


def test_lattice_point_order_is_documented():
    assert simplex_lattice_points(1, 2) == [(0, 0), (0, 1), (1, 0)]
    assert simplex_lattice_points(2, 1) == [(0,), (1,), (2,)]
    assert interior_exponents(2, 1) == [(1,), (2,), (3,)]


def test_symbolic_toric_jacobian_quadrics():
    # f0 = x1 + x2 t + x3 t^2, f1 = x4 + x5 t + x6 t^2 over variables
    # (x1..x6, t); the homogeneous Jacobian form reproduces the classical
    # 2 (x1 x5 - x2 x4) u1^2 + 4 (x1 x6 - x3 x4) u1 u2 + 2 (x2 x6 - x3 x5) u2^2
    def v(i):
        return LaurentPolynomial.variable(8, i)

    # forms in u1 = var 6, u2 = var 7
    F0 = v(0) * v(6) ** 2 + v(1) * v(6) * v(7) + v(2) * v(7) ** 2
    F1 = v(3) * v(6) ** 2 + v(4) * v(6) * v(7) + v(5) * v(7) ** 2
    J = jacobian_form([F0, F1], offset=6)
    expected = (
        (v(0) * v(4) - v(1) * v(3)).scale(2) * v(6) ** 2
        + (v(0) * v(5) - v(2) * v(3)).scale(4) * v(6) * v(7)
        + (v(1) * v(5) - v(2) * v(4)).scale(2) * v(7) ** 2)
    assert J == expected

    # affine toric Jacobian: support interior to (r+1)*Delta
    f0 = v(0) + v(1) * v(7) + v(2) * v(7) ** 2
    f1 = v(3) + v(4) * v(7) + v(5) * v(7) ** 2
    jt = toric_jacobian([f0, f1], 1)
    check_jacobian_support(jt, 1, 2, toff=7)


def test_toric_jacobian_repeated_polynomial_vanishes():
    t = LaurentPolynomial.variable(1, 0)
    f = 1 + t + t ** 2
    assert toric_jacobian([f, f], 1).is_zero()


def test_toric_jacobian_linear_forms_gives_determinant():
    # r = 2 linear forms: j(t) = det(coefficients) * t1 t2
    r = rng(91)
    vals = [[Fraction(r.randint(-5, 5)) for _ in range(3)] for _ in range(3)]
    t1 = LaurentPolynomial.variable(2, 0)
    t2 = LaurentPolynomial.variable(2, 1)
    fs = [vals[j][0] + vals[j][1] * t1 + vals[j][2] * t2 for j in range(3)]
    from gkzrational.intlinalg import det_int
    det = det_int([[int(x) for x in row] for row in vals])
    jt = toric_jacobian(fs, 2)
    assert jt == (t1 * t2).scale(det)


def test_residue_matches_published_rational_function():
    R = generic_resultant(2)
    r = rng(92)
    for _ in range(25):
        c0, c1 = random_instance(r, 2)
        prob = ResidueProblem(1, 2, [c0, c1], (2,))
        value = toric_residue(prob)
        pt = tuple(c0) + tuple(c1)
        expected = (pt[0] * pt[5] - pt[2] * pt[3]) / R.substitute(pt)
        assert value == expected


def test_calibration_constant_is_four_for_quadrics():
    prob = ResidueProblem(1, 2, [[1, 1, 1], [2, 1, 3]], (2,))
    assert calibration_constant(prob) == 4


def test_residue_equals_inverse_determinant():
    r = rng(93)
    from gkzrational.intlinalg import det_int

    done = 0
    while done < 25:
        rows = [[r.randint(-9, 9) for _ in range(3)] for _ in range(3)]
        det = det_int(rows)
        if det == 0:
            continue
        pts = simplex_lattice_points(1, 2)
        coeffs = []
        for j in range(3):
            m = {(0, 0): rows[j][0], (1, 0): rows[j][1], (0, 1): rows[j][2]}
            coeffs.append([Fraction(m[p]) for p in pts])
        try:
            value = toric_residue(ResidueProblem(2, 1, coeffs, (1, 1)))
        except DegenerateInstance:
            continue
        assert value == Fraction(1, det)
        done += 1


def test_toric_residue_agrees_with_oracle():
    r = rng(94)
    for m in (2, 3):
        for _ in range(10):
            c0, c1 = random_instance(r, m)
            for a in (1, m, 2 * m - 1):
                value = toric_residue(ResidueProblem(1, m, [c0, c1], (a,)))
                assert value == univariate_residue_oracle(c0, c1, a)


def test_oracle_linear_pole_is_direct_evaluation():
    r = rng(95)
    for _ in range(10):
        c0 = [Fraction(r.randint(1, 9)) for _ in range(2)]
        c1 = [Fraction(r.randint(1, 9)) for _ in range(2)]
        if resultant_value(c0, c1) == 0:
            continue
        xi = -c1[0] / c1[1]
        direct = xi ** 0 * 1 / (c0[0] + c0[1] * xi) / c1[1]
        assert univariate_residue_oracle(c0, c1, 1) == direct


def test_oracle_independent_of_index():
    r = rng(96)
    for _ in range(25):
        c0, c1 = random_instance(r, 2, lo=-20, hi=20)
        if not c0[0] or not c1[0]:
            continue
        for a in (1, 2, 3):
            assert (univariate_residue_oracle(c0, c1, a)
                    == univariate_residue_oracle(c0, c1, a, i=1))


def test_oracle_rejects_degenerate_inputs():
    with pytest.raises(DegenerateInstance):
        univariate_residue_oracle([1, 2, 1], [1, 2, 1], 1)
    with pytest.raises(DegenerateInstance):
        univariate_residue_oracle([1, 1, 1], [0, 1, 1], 1)


def test_residue_problem_validation():
    with pytest.raises(DomainError):
        ResidueProblem(1, 2, [[1, 1, 1], [1, 2, 1]], (0,))  # not interior
    with pytest.raises(DomainError):
        ResidueProblem(1, 2, [[1, 1, 1], [1, 2, 1]], (4,))
    with pytest.raises(DomainError):
        ResidueProblem(1, 2, [[1, 1], [1, 2, 1]], (2,))


def test_degenerate_instance_detected():
    # f0 = f1 share all roots
    with pytest.raises(DegenerateInstance):
        toric_residue(ResidueProblem(1, 2, [[1, 2, 1], [1, 2, 1]], (2,)))


def test_order_independence():
    r = rng(97)
    for _ in range(10):
        c0, c1 = random_instance(r, 2)
        prob = ResidueProblem(1, 2, [c0, c1], (2,))
        assert (toric_residue(prob, order="grevlex")
                == toric_residue(prob, order="grlex")
                == toric_residue(prob, order="lex"))


def test_scaling_homogeneity():
    r = rng(98)
    c0, c1 = random_instance(r, 2)
    prob = ResidueProblem(1, 2, [c0, c1], (2,))
    base = toric_residue(prob)
    lam = Fraction(3, 7)
    scaled = ResidueProblem(1, 2, [[lam * c for c in c0], c1], (2,))
    assert toric_residue(scaled) == base / lam
    both = ResidueProblem(1, 2, [[lam * c for c in c0],
                                 [lam * c for c in c1]], (2,))
    assert toric_residue(both) == base / lam ** 2


def test_calibration_identity_via_oracle():
    # expand j(t) and check sum_a c_a Res(t^a) = m^r with residues from
    # the independent univariate oracle
    r = rng(99)
    for m in (2, 3):
        for _ in range(5):
            c0, c1 = random_instance(r, m)
            prob = ResidueProblem(1, m, [c0, c1], (1,))
            jt = toric_jacobian(prob.affine_polynomials(), 1)
            total = sum(c * univariate_residue_oracle(c0, c1, e[0])
                        for e, c in jt.terms.items())
            assert total == Fraction(m) ** 1


def test_residue_witness_m2_matches_published_numerator():
    cs = detect_cayley(scroll())[0]
    witnesses, certs = residue_witness(cs, seed=5)
    R = generic_resultant(2)
    expected = RationalFunction(parse("x1*x6-x3*x4", nvars=6).numerator, [(R, 1)])
    assert witnesses[2] == expected
    assert witnesses[2].numerator == parse("x1*x6-x3*x4", nvars=6).numerator
    assert certs[2].certified
    assert any(not w.is_zero() for w in witnesses.values())


def test_residue_witness_m1_is_inverse_determinant():
    cs = detect_cayley(cayley_of_segments([1, 1]))[0]
    witnesses, certs = residue_witness(cs, seed=3)
    expected = parse("1/(x1*x4 - x2*x3)", nvars=4)
    assert witnesses[1] == expected
    assert certs[1].certified


def test_residue_witness_jacobian_sum():
    # sum_a coeff_a(j) * Res(t^a) = m^r as symbolic functions, checked at
    # random instances
    cs = detect_cayley(scroll())[0]
    witnesses, _ = residue_witness(cs, seed=5, certify=False)
    r = rng(100)
    for _ in range(5):
        c0, c1 = random_instance(r, 2)
        prob = ResidueProblem(1, 2, [c0, c1], (1,))
        jt = toric_jacobian(prob.affine_polynomials(), 1)
        pt = tuple(c0) + tuple(c1)
        total = sum(c * witnesses[e[0]].substitute(pt)
                    for e, c in jt.terms.items())
        assert total == 2
