# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled sparse polynomial kernel.

Semantically identical to _kernel_py; the win comes from compiled loops
over the term dicts and exponent tuples.  Coefficients stay exact
Python Fractions and exponents exact Python ints, so results are
bit-identical to the pure implementation.
"""

from fractions import Fraction

KERNEL_NAME = "cython"

_ZERO = Fraction(0)


def add_terms(dict a, dict b):
    cdef dict out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = c
        else:
            s = s + c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def sub_terms(dict a, dict b):
    cdef dict out = dict(a)
    for e, c in b.items():
        s = out.get(e)
        if s is None:
            out[e] = -c
        else:
            s = s - c
            if s:
                out[e] = s
            else:
                del out[e]
    return out


def scale_terms(dict a, coeff):
    cdef dict out = {}
    if not coeff:
        return out
    for e, c in a.items():
        out[e] = c * coeff
    return out


cdef inline tuple _tuple_add(tuple x, tuple y):
    cdef Py_ssize_t n = len(x)
    cdef Py_ssize_t i
    cdef list out = [0] * n
    for i in range(n):
        out[i] = x[i] + y[i]
    return tuple(out)


def mul_term(dict a, tuple exp, coeff):
    cdef dict out = {}
    if not coeff:
        return out
    for e, c in a.items():
        out[_tuple_add(<tuple> e, exp)] = c * coeff
    return out


def mul_terms(dict a, dict b):
    cdef dict out = {}
    cdef dict small = a
    cdef dict big = b
    if len(a) > len(b):
        small = b
        big = a
    for ea, ca in small.items():
        for eb, cb in big.items():
            key = _tuple_add(<tuple> ea, <tuple> eb)
            s = out.get(key)
            if s is None:
                out[key] = ca * cb
            else:
                s = s + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
    return out


def pow_terms(dict a, n, nvars):
    if n < 0:
        raise ValueError("negative power of a polynomial")
    cdef dict result = {(0,) * nvars: Fraction(1)}
    cdef dict base = dict(a)
    cdef long long k = n
    while k:
        if k & 1:
            result = mul_terms(result, base)
        k >>= 1
        if k:
            base = mul_terms(base, base)
    return result


def diff_terms(dict a, j):
    cdef dict out = {}
    cdef Py_ssize_t jj = j
    for e, c in a.items():
        k = (<tuple> e)[jj]
        if k == 0:
            continue
        ne = list(<tuple> e)
        ne[jj] = k - 1
        out[tuple(ne)] = c * k
    return out


def sort_key(code, e):
    cdef tuple t = <tuple> e
    cdef Py_ssize_t n = len(t)
    cdef Py_ssize_t i
    if code == 0:
        return (sum(t), tuple(-t[i] for i in range(n - 1, -1, -1)))
    if code == 1:
        return (sum(t), t)
    if code == 2:
        return t
    if code == 3:
        rest = t[1:]
        m = len(rest)
        return (t[0], sum(rest), tuple(-rest[i] for i in range(m - 1, -1, -1)))
    raise ValueError(f"unknown order code {code}")


def leading_exponent(dict terms, code):
    if not terms:
        return None
    best = None
    best_key = None
    for e in terms:
        k = sort_key(code, e)
        if best_key is None or k > best_key:
            best = e
            best_key = k
    return best


def normal_form_terms(dict terms, list gens, code, budget):
    cdef dict work = dict(terms)
    cdef dict rem = {}
    cdef long long steps = 0
    cdef long long limit = budget
    cdef bint ok
    cdef Py_ssize_t i, n
    while work:
        emax = leading_exponent(work, code)
        c = work.pop(emax)
        hit = None
        for gen in gens:
            lexp = <tuple> (<tuple> gen)[0]
            ok = True
            n = len(lexp)
            for i in range(n):
                if lexp[i] > (<tuple> emax)[i]:
                    ok = False
                    break
            if ok:
                hit = gen
                break
        if hit is None:
            rem[emax] = c
            continue
        steps += 1
        if steps > limit:
            return None, steps
        lexp = <tuple> (<tuple> hit)[0]
        lc = (<tuple> hit)[1]
        tail = <dict> (<tuple> hit)[2]
        factor = c / lc
        shift = tuple((<tuple> emax)[i] - lexp[i] for i in range(len(lexp)))
        for te, tc in tail.items():
            key = _tuple_add(<tuple> te, shift)
            s = work.get(key)
            if s is None:
                work[key] = -factor * tc
            else:
                s = s - factor * tc
                if s:
                    work[key] = s
                else:
                    del work[key]
    return rem, steps
