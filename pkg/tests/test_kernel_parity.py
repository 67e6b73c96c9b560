"""The compiled kernel must agree with the pure-Python kernel term for
term on every operation."""

from fractions import Fraction

import pytest

from gkzrational import _kernel_py

speedups = pytest.importorskip("gkzrational._speedups")

from helpers import rng  # noqa: E402


def random_terms(r, nvars, nterms, lo=-3, hi=4):
    terms = {}
    for _ in range(nterms):
        e = tuple(r.randint(lo, hi) for _ in range(nvars))
        c = Fraction(r.randint(-9, 9), r.randint(1, 7))
        if c:
            terms[e] = c
    return terms


def test_arithmetic_parity():
    r = rng(201)
    for _ in range(20):
        a = random_terms(r, 4, 6)
        b = random_terms(r, 4, 6)
        assert _kernel_py.add_terms(a, b) == speedups.add_terms(a, b)
        assert _kernel_py.sub_terms(a, b) == speedups.sub_terms(a, b)
        assert _kernel_py.mul_terms(a, b) == speedups.mul_terms(a, b)
        c = Fraction(r.randint(-5, 5), r.randint(1, 5))
        assert _kernel_py.scale_terms(a, c) == speedups.scale_terms(a, c)
        exp = tuple(r.randint(-2, 2) for _ in range(4))
        assert _kernel_py.mul_term(a, exp, c) == speedups.mul_term(a, exp, c)
        for j in range(4):
            assert _kernel_py.diff_terms(a, j) == speedups.diff_terms(a, j)


def test_power_parity():
    r = rng(202)
    for _ in range(10):
        a = random_terms(r, 3, 4)
        for n in (0, 1, 2, 5):
            assert (_kernel_py.pow_terms(a, n, 3)
                    == speedups.pow_terms(a, n, 3))


def test_sort_key_parity():
    r = rng(203)
    for code in (0, 1, 2, 3):
        for _ in range(30):
            e = tuple(r.randint(0, 6) for _ in range(5))
            assert _kernel_py.sort_key(code, e) == speedups.sort_key(code, e)


def test_leading_exponent_parity():
    r = rng(204)
    for code in (0, 1, 2):
        for _ in range(15):
            a = random_terms(r, 4, 8, lo=0, hi=5)
            assert (_kernel_py.leading_exponent(a, code)
                    == speedups.leading_exponent(a, code))


def test_normal_form_parity():
    r = rng(205)
    for _ in range(10):
        gens = []
        for _k in range(4):
            g = random_terms(r, 3, 3, lo=0, hi=3)
            if not g:
                continue
            le = _kernel_py.leading_exponent(g, 0)
            tail = {e: c for e, c in g.items() if e != le}
            gens.append((le, g[le], tail))
        p = random_terms(r, 3, 10, lo=0, hi=6)
        nf_py, steps_py = _kernel_py.normal_form_terms(p, gens, 0, 10 ** 6)
        nf_cy, steps_cy = speedups.normal_form_terms(p, gens, 0, 10 ** 6)
        assert nf_py == nf_cy
        assert steps_py == steps_cy


def test_budget_sentinel_parity():
    r = rng(206)
    g = {(1, 0): Fraction(1), (0, 1): Fraction(-1)}
    gens = [((1, 0), Fraction(1), {(0, 1): Fraction(-1)})]
    p = {(5, 0): Fraction(1)}
    nf_py, _ = _kernel_py.normal_form_terms(p, gens, 0, 2)
    nf_cy, _ = speedups.normal_form_terms(p, gens, 0, 2)
    assert nf_py is None and nf_cy is None
