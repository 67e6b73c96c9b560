"""Toric ideal generation and the hypergeometric verification engine.

A function f is hypergeometric for a configuration A in degree beta
when every Euler operator sum_j a_ij x_j d_j - beta_i and every toric
operator d^u - d^v with A.u = A.v annihilates it.  Verification checks
a finite generating set of the toric ideal: partial-derivative
monomials commute, so annihilation by generators implies annihilation
by the whole left ideal they generate.

Generators come from the standard saturation: start with the lattice
binomials of a kernel basis, adjoin t*x_1...x_s - 1 in an extended
ring, compute a Groebner basis eliminating t, and intersect with the
x-ring.
"""

from fractions import Fraction
from math import factorial, gcd

from gkzrational import groebner
from gkzrational.errors import DomainError
from gkzrational.exprparse import format_fraction
from gkzrational.intlinalg import integer_kernel
from gkzrational.laurent import LaurentPolynomial, RationalFunction


class ToricBinomialOp:
    """The operator d^u - d^v with disjoint nonnegative u, v and
    A.u = A.v."""

    __slots__ = ("u", "v")

    def __init__(self, u, v):
        u = tuple(int(x) for x in u)
        v = tuple(int(x) for x in v)
        if any(x < 0 for x in u + v):
            raise DomainError("toric operator exponents must be nonnegative")
        if any(x and y for x, y in zip(u, v)):
            raise DomainError("toric operator exponents must have disjoint supports")
        self.u = u
        self.v = v

    def order(self):
        return max(sum(self.u), sum(self.v))

    def __eq__(self, other):
        return isinstance(other, ToricBinomialOp) and (self.u, self.v) == (other.u, other.v)

    def __hash__(self):
        return hash((self.u, self.v))

    def __repr__(self):
        return f"ToricBinomialOp(u={self.u}, v={self.v})"

    def to_json_dict(self):
        return {"type": "toric", "u": list(self.u), "v": list(self.v)}


class EulerOp:
    """sum_j a_ij x_j d_j for row i of the configuration matrix."""

    __slots__ = ("index", "coefficients")

    def __init__(self, index, coefficients):
        self.index = index
        self.coefficients = tuple(int(x) for x in coefficients)

    def __repr__(self):
        return f"EulerOp(i={self.index})"

    def to_json_dict(self):
        return {"type": "euler", "i": self.index + 1,
                "coefficients": list(self.coefficients)}


def euler_operators(config):
    return [EulerOp(i, config.matrix.row(i)) for i in range(config.d)]


def _binomial_from_vector(v):
    if not any(v):
        raise DomainError("kernel vector is zero")
    up = tuple(x if x > 0 else 0 for x in v)
    um = tuple(-x if x < 0 else 0 for x in v)
    return {up: Fraction(1), um: Fraction(-1)}


def toric_ideal_generators(config, method="saturation",
                           budget=groebner.DEFAULT_BUDGET, bound=None):
    """A finite generating set of the toric ideal of A.

    method="saturation" (default): exact, complete.
    method="bounded": all primitive kernel vectors of 1-norm <= bound;
    an under-approximation useful only for cross-checks.
    """
    if method == "bounded":
        if bound is None:
            raise ValueError("the bounded method needs an explicit bound")
        return _bounded_generators(config, bound)
    if method != "saturation":
        raise ValueError(f"unknown method {method!r}")
    s = config.s
    kernel_basis = integer_kernel(config.matrix)
    if not kernel_basis:
        return []
    # extended ring: t first, then x_1..x_s; eliminate t
    polys = []
    for v in kernel_basis:
        terms = _binomial_from_vector(v)
        polys.append({(0,) + e: c for e, c in terms.items()})
    polys.append({(1,) + (1,) * s: Fraction(1), (0,) * (s + 1): Fraction(-1)})
    basis = groebner.buchberger(polys, order="elim1-grevlex", budget=budget)
    ops = []
    for g in basis.generators:
        if any(e[0] for e in g):
            continue
        ops.append(_op_from_poly({e[1:]: c for e, c in g.items()}))
    return sorted(ops, key=lambda op: (op.order(), op.u, op.v))


def _op_from_poly(terms):
    """Convert a +-monomial binomial into a ToricBinomialOp; toric
    Groebner bases over a lattice stay binomial, so anything else is an
    internal error."""
    if len(terms) != 2:
        raise AssertionError(f"saturation produced a non-binomial: {terms}")
    (e1, c1), (e2, c2) = sorted(terms.items(), reverse=True)
    if c1 + c2 != 0:
        raise AssertionError(f"saturation produced non-unit coefficients: {terms}")
    common = tuple(min(a, b) for a, b in zip(e1, e2))
    if any(common):
        raise AssertionError(f"saturation produced a non-primitive binomial: {terms}")
    if c1 < 0:
        e1, e2 = e2, e1
    return ToricBinomialOp(e1, e2)


def _bounded_generators(config, bound):
    """All primitive integer kernel vectors of 1-norm <= bound, as
    binomials; recursion over coordinates with a norm budget."""
    s = config.s
    matrix = config.matrix
    found = set()

    def rec(prefix, remaining):
        j = len(prefix)
        if j == s:
            v = tuple(prefix)
            if any(v) and all(x == 0 for x in matrix.mul_vector(v)):
                from gkzrational.intlinalg import primitive_vector
                found.add(primitive_vector(v))
            return
        for x in range(-remaining, remaining + 1):
            rec(prefix + [x], remaining - abs(x))

    rec([], bound)
    ops = []
    for v in sorted(found):
        up = tuple(x if x > 0 else 0 for x in v)
        um = tuple(-x if x < 0 else 0 for x in v)
        ops.append(ToricBinomialOp(up, um))
    return sorted(set(ops), key=lambda op: (op.order(), op.u, op.v))


def apply_derivative_monomial(f, exponents):
    """Apply d^u to a rational function by iterated differentiation."""
    out = f
    for j, k in enumerate(exponents):
        for _ in range(k):
            out = out.differentiate(j)
    return out


def apply_toric(op, f):
    """d^u f - d^v f, exactly."""
    return apply_derivative_monomial(f, op.u) - apply_derivative_monomial(f, op.v)


def apply_euler(op, f):
    """(sum_j a_j x_j d_j) f."""
    out = RationalFunction.zero(f.nvars)
    for j, a in enumerate(op.coefficients):
        if a == 0:
            continue
        term = f.differentiate(j)
        if term.is_zero():
            continue
        shifted = RationalFunction(
            term.numerator.mul_monomial(tuple(1 if i == j else 0 for i in range(f.nvars))),
            term.denominator)
        out = out + shifted * Fraction(a)
    return out


def homogeneity_degree(config, f):
    """The vector beta with E_i f = beta_i f for every Euler operator,
    or None when f is not A-homogeneous.  Exact: beta_i is matched on
    one cross-multiplied monomial and then the full identity is
    verified."""
    if f.is_zero():
        raise DomainError("the zero function has every degree")
    beta = []
    for op in euler_operators(config):
        ef = apply_euler(op, f)
        # beta_i = ef / f: cross-multiply and compare
        lhs = ef.numerator * f.denominator_product()
        rhs = f.numerator * ef.denominator_product()
        if lhs.is_zero():
            beta.append(Fraction(0))
            continue
        e, c = rhs.leading_term()
        if e not in lhs.terms:
            return None
        candidate = lhs.terms[e] / c
        if lhs != rhs.scale(candidate):
            return None
        beta.append(candidate)
    return tuple(beta)


class Certificate:
    """Outcome of a hypergeometric verification run."""

    __slots__ = ("status", "beta", "generators", "counterexample")

    def __init__(self, status, beta=None, generators=0, counterexample=None):
        self.status = status
        self.beta = beta
        self.generators = generators
        self.counterexample = counterexample

    @property
    def certified(self):
        return self.status == "certified"

    def to_json_dict(self):
        payload = {"status": self.status,
                   "beta": [format_fraction(b) for b in self.beta] if self.beta else None,
                   "generators": self.generators}
        if self.counterexample is not None:
            payload["counterexample"] = self.counterexample.to_json_dict()
        return payload

    def __repr__(self):
        return f"Certificate({self.status}, beta={self.beta})"


def verify_hypergeometric(config, f, budget=groebner.DEFAULT_BUDGET):
    """Certify or refute that f is A-hypergeometric.

    Succeeds iff f is A-homogeneous and every saturation generator of
    the toric ideal annihilates f; since derivative monomials commute,
    generator annihilation extends to the full left ideal.
    """
    if f.nvars != config.s:
        raise DomainError("function variable count must match the configuration")
    if f.is_zero():
        raise DomainError("the zero function is trivially annihilated")
    beta = homogeneity_degree(config, f)
    if beta is None:
        # find the first failing Euler operator as the counterexample
        for op in euler_operators(config):
            ef = apply_euler(op, f)
            lhs = ef.numerator * f.denominator_product()
            rhs = f.numerator * ef.denominator_product()
            if lhs.is_zero():
                continue
            e, c = rhs.leading_term()
            if e not in lhs.terms or lhs != rhs.scale(lhs.terms[e] / c):
                return Certificate("refuted", counterexample=op)
        raise AssertionError("homogeneity failed but no Euler operator did")
    ops = toric_ideal_generators(config, budget=budget)
    for op in ops:
        left = apply_derivative_monomial(f, op.u)
        right = apply_derivative_monomial(f, op.v)
        if left != right:
            return Certificate("refuted", beta=beta, generators=len(ops),
                               counterexample=op)
    return Certificate("certified", beta=beta, generators=len(ops))


# -- two-variable coefficient family for axis-pair configurations ------


class OctahedronSeries:
    """Closed-form coefficients F(m,n) of the canonical series attached
    to an octahedral configuration with parameters p, q coprime and a
    positive integer k:

        F(m,n) = (p(m+n+k)-1)! (q(m+n+k)-1)! / ((np)! (nq)! (mp)! (mq)!)

    together with the incremental quotients R = F(m+1,n)/F(m,n) and
    S = F(m,n+1)/F(m,n) as explicit products.
    """

    __slots__ = ("p", "q", "k")

    def __init__(self, p, q, k):
        p, q, k = int(p), int(q), int(k)
        if p <= 0 or q <= 0 or gcd(p, q) != 1:
            raise DomainError("p, q must be coprime positive integers")
        if k <= 0:
            raise DomainError("k must be a positive integer")
        self.p, self.q, self.k = p, q, k

    def coefficient(self, m, n):
        p, q, k = self.p, self.q, self.k
        if m < 0 or n < 0:
            raise DomainError("indices must be nonnegative")
        num = factorial(p * (m + n + k) - 1) * factorial(q * (m + n + k) - 1)
        den = (factorial(n * p) * factorial(n * q)
               * factorial(m * p) * factorial(m * q))
        return Fraction(num, den)

    def quotients(self, m, n, a=0, b=0):
        """(R(m+a, n+b), S(m+a, n+b)) from the closed forms."""
        p, q, k = self.p, self.q, self.k
        mu = m + n
        c = a + b
        num = 1
        for j in range(p):
            num *= p * (mu + c + k) + j
        for j in range(q):
            num *= q * (mu + c + k) + j
        den_r = 1
        for j in range(1, p + 1):
            den_r *= p * (m + a) + j
        for j in range(1, q + 1):
            den_r *= q * (m + a) + j
        den_s = 1
        for j in range(1, p + 1):
            den_s *= p * (n + b) + j
        for j in range(1, q + 1):
            den_s *= q * (n + b) + j
        return Fraction(num, den_r), Fraction(num, den_s)


def octahedron_coefficient(p, q, k, m, n):
    return OctahedronSeries(p, q, k).coefficient(m, n)


def octahedron_quotients(p, q, k, m, n, a=0, b=0):
    return OctahedronSeries(p, q, k).quotients(m, n, a, b)
