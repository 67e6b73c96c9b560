"""Buchberger's algorithm over the rationals.

Polynomials here are plain dicts mapping nonnegative exponent tuples to
Fraction coefficients; the monomial order is a tag resolved to an order
code understood by the kernel.  Bases are fully reduced: monic
generators, no term of any generator divisible by another's leading
term, sorted by leading monomial.  All reduction work is metered
against a step budget.
"""

from fractions import Fraction

from gkzrational import kernel
from gkzrational.errors import BudgetExceeded

ORDER_CODES = {"grevlex": 0, "grlex": 1, "lex": 2, "elim1-grevlex": 3}

DEFAULT_BUDGET = 10 ** 6


def order_code(order):
    try:
        return ORDER_CODES[order]
    except KeyError:
        raise ValueError(f"unknown monomial order {order!r}") from None


def leading_term(terms, code):
    e = kernel.leading_exponent(terms, code)
    return e, terms[e]


def _prepare(gens, code):
    """(lead_exp, lead_coeff, tail) triples sorted for reduction."""
    data = []
    for g in gens:
        if not g:
            continue
        le, lc = leading_term(g, code)
        tail = {e: c for e, c in g.items() if e != le}
        data.append((le, lc, tail))
    data.sort(key=lambda t: kernel.sort_key(code, t[0]))
    return data


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps):
        self.left = steps

    def spend(self, n):
        self.left -= n
        if self.left < 0:
            raise BudgetExceeded("Groebner step budget exhausted")


def _reduce(terms, prepared, code, budget):
    nf, steps = kernel.normal_form_terms(terms, prepared, code, budget.left)
    budget.spend(steps)
    if nf is None:
        raise BudgetExceeded("Groebner step budget exhausted")
    return nf


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _spoly(f, g, code):
    fe, fc = leading_term(f, code)
    ge, gc = leading_term(g, code)
    lcm = _lcm(fe, ge)
    mf = tuple(x - y for x, y in zip(lcm, fe))
    mg = tuple(x - y for x, y in zip(lcm, ge))
    left = kernel.mul_term(f, mf, 1 / fc)
    right = kernel.mul_term(g, mg, 1 / gc)
    return kernel.sub_terms(left, right)


def buchberger(polys, order="grevlex", budget=DEFAULT_BUDGET):
    """Reduced Groebner basis of the ideal generated by `polys`.

    Raises BudgetExceeded when the reduction-step budget runs out.
    """
    code = order_code(order)
    meter = _Budget(budget)
    basis = []
    for p in polys:
        if p:
            q = dict(p)
            basis.append(q)
    if not basis:
        return GroebnerBasis([], order)

    leads = [kernel.leading_exponent(g, code) for g in basis]
    prepared = _prepare(basis, code)
    pairs = [(i, j) for i in range(len(basis)) for j in range(i)]
    while pairs:
        # normal selection: smallest lcm first
        pairs.sort(key=lambda ij: kernel.sort_key(
            code, _lcm(leads[ij[0]], leads[ij[1]])), reverse=True)
        i, j = pairs.pop()
        ei, ej = leads[i], leads[j]
        # coprime leading monomials never produce new information
        if all(x == 0 or y == 0 for x, y in zip(ei, ej)):
            continue
        s = _spoly(basis[i], basis[j], code)
        if not s:
            continue
        nf = _reduce(s, prepared, code, meter)
        if nf:
            basis.append(nf)
            leads.append(kernel.leading_exponent(nf, code))
            prepared = _prepare(basis, code)
            pairs.extend((len(basis) - 1, k) for k in range(len(basis) - 1))
    return GroebnerBasis(_autoreduce(basis, code, meter), order)


def _autoreduce(basis, code, meter):
    # drop generators whose leading term another one divides
    kept = []
    leads = [kernel.leading_exponent(g, code) for g in basis]
    for i, g in enumerate(basis):
        li = leads[i]
        redundant = False
        for j, lj in enumerate(leads):
            if i == j:
                continue
            if _divides(lj, li) and not (lj == li and j > i):
                redundant = True
                break
        if not redundant:
            kept.append(g)
    # tail-reduce each kept generator against the others and scale monic
    final = []
    for i, g in enumerate(kept):
        others = _prepare([h for j, h in enumerate(kept) if j != i], code)
        le, lc = leading_term(g, code)
        tail = {e: c for e, c in g.items() if e != le}
        nf_tail = _reduce(tail, others, code, meter) if others else tail
        merged = dict(nf_tail)
        merged[le] = lc
        final.append({e: c / lc for e, c in merged.items()})
    final.sort(key=lambda g: kernel.sort_key(code, kernel.leading_exponent(g, code)))
    return final


class GroebnerBasis:
    """Reduced basis with its order tag; normal forms are exact linear
    projections onto the standard monomials."""

    __slots__ = ("generators", "order", "_prepared")

    def __init__(self, generators, order):
        self.generators = [dict(g) for g in generators]
        self.order = order
        self._prepared = _prepare(self.generators, order_code(order))

    def normal_form(self, terms, budget=DEFAULT_BUDGET):
        """Unique remainder of `terms` with no term divisible by any
        leading term of the basis."""
        meter = _Budget(budget)
        return _reduce(dict(terms), self._prepared, order_code(self.order), meter)

    def leading_exponents(self):
        code = order_code(self.order)
        return [kernel.leading_exponent(g, code) for g in self.generators]

    def contains_one(self):
        return any(not any(e) for e in self.leading_exponents())

    def standard_monomials_of_degree(self, degree, nvars):
        """Monomials of the given total degree not divisible by any
        leading term."""
        leads = self.leading_exponents()
        out = []

        def rec(prefix, remaining, pos):
            if pos == nvars - 1:
                e = prefix + (remaining,)
                if not any(_divides(l, e) for l in leads):
                    out.append(e)
                return
            for k in range(remaining + 1):
                rec(prefix + (k,), remaining - k, pos + 1)

        if nvars == 0:
            return []
        rec((), degree, 0)
        return sorted(out)

    def __len__(self):
        return len(self.generators)
