"""Pure-Python sparse polynomial kernel.

Terms are dicts mapping exponent tuples (ints, possibly negative for
Laurent monomials) to nonzero Fraction coefficients.  All functions are
pure: inputs are never mutated, zero coefficients are never stored.

The compiled twin of this module is _speedups.pyx; kernel.py picks one
at import time.  Both must stay semantically identical -- the parity
test suite compares them term for term.
"""

from fractions import Fraction

KERNEL_NAME = "python"

_ZERO = Fraction(0)


def add_terms(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, _ZERO) + c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def sub_terms(a, b):
    out = dict(a)
    for e, c in b.items():
        s = out.get(e, _ZERO) - c
        if s:
            out[e] = s
        else:
            out.pop(e, None)
    return out


def scale_terms(a, coeff):
    if not coeff:
        return {}
    return {e: c * coeff for e, c in a.items()}


def mul_term(a, exp, coeff):
    """Multiply by the single monomial coeff*x^exp."""
    if not coeff:
        return {}
    out = {}
    for e, c in a.items():
        out[tuple(x + y for x, y in zip(e, exp))] = c * coeff
    return out


def mul_terms(a, b):
    if len(a) > len(b):
        a, b = b, a
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            key = tuple(x + y for x, y in zip(ea, eb))
            s = out.get(key, _ZERO) + ca * cb
            if s:
                out[key] = s
            else:
                del out[key]
    return out


def pow_terms(a, n, nvars):
    if n < 0:
        raise ValueError("negative power of a polynomial")
    result = {(0,) * nvars: Fraction(1)}
    base = dict(a)
    while n:
        if n & 1:
            result = mul_terms(result, base)
        n >>= 1
        if n:
            base = mul_terms(base, base)
    return result


def diff_terms(a, j):
    """Partial derivative: x^e -> e_j * x^(e - delta_j), Laurent rule."""
    out = {}
    for e, c in a.items():
        k = e[j]
        if k == 0:
            continue
        ne = list(e)
        ne[j] = k - 1
        out[tuple(ne)] = c * k
    return out


def sort_key(code, e):
    """Total-order key for exponent tuples, largest term = max key.

    code 0: graded reverse lexicographic
    code 1: graded lexicographic
    code 2: lexicographic
    code 3: eliminate the first variable, grevlex on the rest
    """
    if code == 0:
        return (sum(e), tuple(-e[i] for i in range(len(e) - 1, -1, -1)))
    if code == 1:
        return (sum(e), e)
    if code == 2:
        return e
    if code == 3:
        rest = e[1:]
        return (e[0], sum(rest), tuple(-rest[i] for i in range(len(rest) - 1, -1, -1)))
    raise ValueError(f"unknown order code {code}")


def leading_exponent(terms, code):
    if not terms:
        return None
    best = None
    best_key = None
    for e in terms:
        k = sort_key(code, e)
        if best_key is None or k > best_key:
            best, best_key = e, k
    return best


def normal_form_terms(terms, gens, code, budget):
    """Fully reduce `terms` modulo a list of generators.

    gens: list of (lead_exp, lead_coeff, tail_terms) with exponents
    nonnegative.  Returns (remainder, steps); remainder is None when the
    step budget was exhausted.
    """
    work = dict(terms)
    rem = {}
    steps = 0
    while work:
        emax = leading_exponent(work, code)
        c = work.pop(emax)
        hit = None
        for lexp, lc, tail in gens:
            ok = True
            for x, y in zip(lexp, emax):
                if x > y:
                    ok = False
                    break
            if ok:
                hit = (lexp, lc, tail)
                break
        if hit is None:
            rem[emax] = c
            continue
        lexp, lc, tail = hit
        steps += 1
        if steps > budget:
            return None, steps
        factor = c / lc
        shift = tuple(x - y for x, y in zip(emax, lexp))
        for te, tc in tail.items():
            key = tuple(x + y for x, y in zip(te, shift))
            s = work.get(key, _ZERO) - factor * tc
            if s:
                work[key] = s
            else:
                work.pop(key, None)
    return rem, steps
