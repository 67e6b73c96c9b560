"""Shared helpers for the test suite: seeded random generators for
matrices, polynomials and rational functions."""

import random
from fractions import Fraction
from itertools import combinations_with_replacement
from math import gcd

from gkzrational.intlinalg import IntMatrix
from gkzrational.laurent import LaurentPolynomial, RationalFunction


def rng(seed=20240517):
    return random.Random(seed)


def random_int_matrix(r, rows, cols, lo=-5, hi=5):
    return IntMatrix([[r.randint(lo, hi) for _ in range(cols)] for _ in range(rows)])


def random_laurent(r, nvars, nterms=5, max_exp=3, laurent=True):
    lo = -max_exp if laurent else 0
    terms = {}
    for _ in range(nterms):
        e = tuple(r.randint(lo, max_exp) for _ in range(nvars))
        terms[e] = Fraction(r.randint(-9, 9), r.randint(1, 5))
    return LaurentPolynomial(nvars, terms)


def random_rational_function(r, nvars, nfactors=1):
    num = random_laurent(r, nvars, nterms=3, max_exp=2)
    denom = []
    for _ in range(nfactors):
        f = random_laurent(r, nvars, nterms=2, max_exp=2, laurent=False)
        while f.is_zero() or f.is_monomial():
            f = random_laurent(r, nvars, nterms=2, max_exp=2, laurent=False)
        denom.append((f, r.randint(1, 2)))
    return RationalFunction(num, denom)


def circuit_classes(max_abs=4, max_len=7):
    """All circuit vectors with entries bounded by max_abs, up to column
    permutation and global sign: canonical representatives sorted in
    descending order (so the first entry is positive)."""
    vals = [x for x in range(-max_abs, max_abs + 1) if x]
    out = []
    for size in range(3, max_len + 1):
        for combo in combinations_with_replacement(vals, size):
            if sum(combo) != 0:
                continue
            g = 0
            for x in combo:
                g = gcd(g, abs(x))
            if g != 1:
                continue
            out.append(tuple(sorted(combo, reverse=True)))
    return out


def random_unimodular(r, n, steps=6):
    """Random unimodular integer matrix via elementary row operations."""
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = r.sample(range(n), 2)
        k = r.randint(-2, 2)
        m[i] = [a + k * b for a, b in zip(m[i], m[j])]
        if r.random() < 0.3:
            i, j = r.sample(range(n), 2)
            m[i], m[j] = m[j], m[i]
    return IntMatrix(m)
