"""Sparse Laurent polynomials and factored rational functions.

A LaurentPolynomial over s variables maps exponent tuples (entries may
be negative) to nonzero rational coefficients.  A RationalFunction keeps
its denominator as a list of (factor, multiplicity) pairs so that
repeated differentiation grows exponents instead of expression size;
expansion happens only inside equality tests, which are decided by
cross-multiplication.
"""

from fractions import Fraction
from math import gcd

from gkzrational import kernel
from gkzrational.errors import DomainError


class LaurentPolynomial:
    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None, _clean=False):
        self.nvars = nvars
        if terms is None:
            self.terms = {}
        elif _clean:
            self.terms = terms
        else:
            clean = {}
            for e, c in terms.items():
                c = Fraction(c)
                if c:
                    e = tuple(int(x) for x in e)
                    if len(e) != nvars:
                        raise ValueError("exponent length mismatch")
                    clean[e] = clean.get(e, Fraction(0)) + c
            self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(nvars, {}, _clean=True)

    @classmethod
    def constant(cls, nvars, value):
        value = Fraction(value)
        if not value:
            return cls.zero(nvars)
        return cls(nvars, {(0,) * nvars: value}, _clean=True)

    @classmethod
    def one(cls, nvars):
        return cls.constant(nvars, 1)

    @classmethod
    def variable(cls, nvars, j):
        e = [0] * nvars
        e[j] = 1
        return cls(nvars, {tuple(e): Fraction(1)}, _clean=True)

    @classmethod
    def monomial(cls, nvars, exponent, coeff=1):
        coeff = Fraction(coeff)
        if not coeff:
            return cls.zero(nvars)
        return cls(nvars, {tuple(int(x) for x in exponent): coeff}, _clean=True)

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return not self.terms

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and not any(next(iter(self.terms))))

    def is_monomial(self):
        return len(self.terms) == 1

    def constant_value(self):
        if self.is_zero():
            return Fraction(0)
        if not self.is_constant():
            raise DomainError("not a constant polynomial")
        return next(iter(self.terms.values()))

    def sorted_terms(self):
        """Terms in the canonical order: exponent tuples descending."""
        return sorted(self.terms.items(), key=lambda t: t[0], reverse=True)

    def leading_term(self):
        if not self.terms:
            raise DomainError("zero polynomial has no leading term")
        e = max(self.terms)
        return e, self.terms[e]

    def monomial_gcd(self):
        """Componentwise minimum of all exponent vectors."""
        if not self.terms:
            return (0,) * self.nvars
        its = iter(self.terms)
        m = list(next(its))
        for e in its:
            for i, x in enumerate(e):
                if x < m[i]:
                    m[i] = x
        return tuple(m)

    def rational_content(self):
        """Positive rational c with self/c having coprime integer
        coefficients."""
        if not self.terms:
            return Fraction(1)
        num = 0
        den = 1
        for c in self.terms.values():
            num = gcd(num, abs(c.numerator))
            den = den * c.denominator // gcd(den, c.denominator)
        return Fraction(num, den)

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, LaurentPolynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self == LaurentPolynomial.constant(self.nvars, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    # -- arithmetic ---------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, LaurentPolynomial):
            if other.nvars != self.nvars:
                raise ValueError("mixed variable counts")
            return other
        if isinstance(other, (int, Fraction)):
            return LaurentPolynomial.constant(self.nvars, other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPolynomial(self.nvars, kernel.add_terms(self.terms, other.terms), _clean=True)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPolynomial(self.nvars, kernel.sub_terms(self.terms, other.terms), _clean=True)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPolynomial(self.nvars, kernel.sub_terms(other.terms, self.terms), _clean=True)

    def __neg__(self):
        return LaurentPolynomial(self.nvars, kernel.scale_terms(self.terms, Fraction(-1)), _clean=True)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return LaurentPolynomial(self.nvars, kernel.mul_terms(self.terms, other.terms), _clean=True)

    __rmul__ = __mul__

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            raise DomainError("negative polynomial power; use RationalFunction")
        return LaurentPolynomial(self.nvars, kernel.pow_terms(self.terms, n, self.nvars), _clean=True)

    def scale(self, coeff):
        return LaurentPolynomial(self.nvars, kernel.scale_terms(self.terms, Fraction(coeff)), _clean=True)

    def mul_monomial(self, exponent, coeff=1):
        return LaurentPolynomial(
            self.nvars,
            kernel.mul_term(self.terms, tuple(int(x) for x in exponent), Fraction(coeff)),
            _clean=True)

    def derivative(self, j):
        """Partial derivative d/dx_j; x^u -> u_j x^(u - e_j)."""
        return LaurentPolynomial(self.nvars, kernel.diff_terms(self.terms, j), _clean=True)

    def permute_variables(self, perm):
        """Relabel variables: new exponent at perm[i] is the old one at
        position i."""
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError("perm must be a permutation of the variables")
        out = {}
        for e, c in self.terms.items():
            ne = [0] * self.nvars
            for i, x in enumerate(e):
                ne[perm[i]] = x
            out[tuple(ne)] = c
        return LaurentPolynomial(self.nvars, out, _clean=True)

    def substitute(self, values):
        """Evaluate at a point (tuple of Fractions); all coordinates must
        be nonzero when negative exponents occur."""
        total = Fraction(0)
        for e, c in self.terms.items():
            v = c
            for x, k in zip(values, e):
                if k:
                    v *= Fraction(x) ** k
            total += v
        return total

    def a_degree(self, matrix):
        """A-degree of a monomial-homogeneous polynomial: A.u for any
        exponent u; raises if terms have different A-degrees."""
        degrees = {matrix.mul_vector(e) for e in self.terms}
        if len(degrees) != 1:
            raise DomainError("polynomial is not A-homogeneous")
        return next(iter(degrees))

    def __str__(self):
        from gkzrational.exprparse import format_laurent
        return format_laurent(self)

    def __repr__(self):
        return f"LaurentPolynomial({self.nvars}, {self.terms!r})"


def _normalize_factor(poly):
    """Split a factor into (monomial exponent, rational scalar, reduced
    factor) so the reduced factor has monomial gcd 0, coprime integer
    coefficients and a positive canonically-first term."""
    g = poly.monomial_gcd()
    shifted = poly.mul_monomial(tuple(-x for x in g)) if any(g) else poly
    content = shifted.rational_content()
    lead = shifted.sorted_terms()[0][1]
    if lead < 0:
        content = -content
    reduced = shifted.scale(1 / content)
    return g, content, reduced


class RationalFunction:
    """numerator / product of factor^multiplicity, all exact.

    Factors are normalized: no monomial content (it is pushed into the
    Laurent numerator), coprime integer coefficients, first term in the
    canonical order positive.  Equal factors are merged.  Coprimality of
    numerator and denominator is NOT enforced; equality testing works by
    cross-multiplication.
    """

    __slots__ = ("nvars", "numerator", "denominator")

    def __init__(self, numerator, denominator=()):
        if not isinstance(numerator, LaurentPolynomial):
            raise TypeError("numerator must be a LaurentPolynomial")
        nvars = numerator.nvars
        num = numerator
        merged = {}
        order = []
        for factor, power in denominator:
            power = int(power)
            if power <= 0:
                raise ValueError("factor multiplicities must be positive")
            if factor.nvars != nvars:
                raise ValueError("mixed variable counts")
            if factor.is_zero():
                raise DomainError("division by the zero polynomial")
            g, content, reduced = _normalize_factor(factor)
            # scalar and monomial parts of the factor move to the numerator
            num = num.mul_monomial(tuple(-power * x for x in g), Fraction(1, 1) / content ** power)
            if reduced.is_constant():
                continue
            key = tuple(reduced.sorted_terms())
            if key in merged:
                merged[key] = (reduced, merged[key][1] + power)
            else:
                merged[key] = (reduced, power)
                order.append(key)
        if num.is_zero():
            self.numerator = LaurentPolynomial.zero(nvars)
            self.denominator = ()
        else:
            self.numerator = num
            self.denominator = tuple(merged[k] for k in sorted(merged))
        self.nvars = nvars

    # -- constructors -------------------------------------------------

    @classmethod
    def zero(cls, nvars):
        return cls(LaurentPolynomial.zero(nvars))

    @classmethod
    def constant(cls, nvars, value):
        return cls(LaurentPolynomial.constant(nvars, value))

    @classmethod
    def from_polynomial(cls, poly):
        return cls(poly)

    # -- structure ----------------------------------------------------

    def is_zero(self):
        return self.numerator.is_zero()

    def denominator_product(self):
        out = LaurentPolynomial.one(self.nvars)
        for f, k in self.denominator:
            out = out * f ** k
        return out

    def as_laurent(self):
        """The underlying Laurent polynomial, if the denominator is
        trivial."""
        if self.denominator:
            raise DomainError("denominator is non-trivial")
        return self.numerator

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(self.nvars, other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        if self.nvars != other.nvars:
            return False
        # cancel shared factors before expanding
        mine = {}
        for f, k in self.denominator:
            mine[tuple(f.sorted_terms())] = (f, k)
        left_extra = []
        right_extra = []
        seen = set()
        for f, k in other.denominator:
            key = tuple(f.sorted_terms())
            if key in mine:
                seen.add(key)
                mk = mine[key][1]
                if k > mk:
                    left_extra.append((f, k - mk))
                elif mk > k:
                    right_extra.append((f, mk - k))
            else:
                left_extra.append((f, k))
        for key, (f, k) in mine.items():
            if key not in seen:
                right_extra.append((f, k))
        lhs = self.numerator
        for f, k in left_extra:
            lhs = lhs * f ** k
        rhs = other.numerator
        for f, k in right_extra:
            rhs = rhs * f ** k
        return lhs == rhs

    def __hash__(self):
        raise TypeError("RationalFunction is unhashable; equality is semantic")

    # -- arithmetic ---------------------------------------------------

    def _common(self, other):
        """Factor union as {key: (factor, max multiplicity)} plus the
        complementary cofactor polynomials for each side."""
        union = {}
        for f, k in self.denominator:
            union[tuple(f.sorted_terms())] = (f, k, 0)
        for f, k in other.denominator:
            key = tuple(f.sorted_terms())
            if key in union:
                g, a, _ = union[key]
                union[key] = (g, a, k)
            else:
                union[key] = (f, 0, k)
        left_cof = LaurentPolynomial.one(self.nvars)
        right_cof = LaurentPolynomial.one(self.nvars)
        denom = []
        for key in sorted(union):
            f, a, b = union[key]
            m = max(a, b)
            denom.append((f, m))
            if m > a:
                left_cof = left_cof * f ** (m - a)
            if m > b:
                right_cof = right_cof * f ** (m - b)
        return denom, left_cof, right_cof

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(self.nvars, other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        denom, lc, rc = self._common(other)
        return RationalFunction(self.numerator * lc + other.numerator * rc, denom)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(self.nvars, other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        denom, lc, rc = self._common(other)
        return RationalFunction(self.numerator * lc - other.numerator * rc, denom)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return RationalFunction(-self.numerator, self.denominator)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return RationalFunction(self.numerator.scale(other), self.denominator)
        if isinstance(other, LaurentPolynomial):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return RationalFunction(self.numerator * other.numerator,
                                list(self.denominator) + list(other.denominator))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(self.nvars, other)
        elif isinstance(other, LaurentPolynomial):
            other = RationalFunction(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self * other.reciprocal()

    def reciprocal(self):
        if self.is_zero():
            raise DomainError("division by the zero polynomial")
        num = self.denominator_product()
        return RationalFunction(num, [(self.numerator, 1)])

    def __pow__(self, n):
        n = int(n)
        if n < 0:
            return self.reciprocal() ** (-n)
        if n == 0:
            return RationalFunction.constant(self.nvars, 1)
        return RationalFunction(self.numerator ** n,
                                [(f, k * n) for f, k in self.denominator])

    def differentiate(self, j):
        """Quotient rule keeping the factored denominator: every factor
        multiplicity grows by at most one."""
        if self.is_zero():
            return self
        factors = self.denominator
        dnum = self.numerator.derivative(j)
        if not factors:
            return RationalFunction(dnum)
        # d(N / prod F_i^k_i) = (N' prod F_i - N sum k_i F_i' prod_{l!=i} F_l)
        #                        / prod F_i^(k_i+1)
        prod_all = LaurentPolynomial.one(self.nvars)
        for f, _ in factors:
            prod_all = prod_all * f
        total = dnum * prod_all
        for i, (f, k) in enumerate(factors):
            df = f.derivative(j)
            if df.is_zero():
                continue
            cof = LaurentPolynomial.one(self.nvars)
            for l, (g, _) in enumerate(factors):
                if l != i:
                    cof = cof * g
            total = total - self.numerator.scale(k) * df * cof
        return RationalFunction(total, [(f, k + 1) for f, k in factors])

    def substitute(self, values):
        den = Fraction(1)
        for f, k in self.denominator:
            v = f.substitute(values)
            if not v:
                raise DomainError("denominator vanishes at the sample point")
            den *= v ** k
        return self.numerator.substitute(values) / den

    def __str__(self):
        from gkzrational.exprparse import format_rational
        return format_rational(self)

    def __repr__(self):
        return f"RationalFunction({self.numerator!r}, {self.denominator!r})"


def differentiate(f, j):
    """Module-level convenience wrapper."""
    return f.differentiate(j)
