"""Circuits of a point configuration and their series/discriminant
theory.

A circuit is a minimal affine dependence: a column subset Z whose
sub-matrix has rank |Z| - 1 and whose one-dimensional kernel is spanned
by a vector with full support on Z.  The sign convention throughout:
the primitive kernel vector b has positive first nonzero entry, and
rho is the sum of its positive entries (equal to minus the sum of the
negative ones because (1,...,1) lies in the row span).
"""

from fractions import Fraction
from itertools import combinations
from math import factorial, floor

from gkzrational.errors import DomainError
from gkzrational.intlinalg import (
    IntMatrix,
    hermite_row_basis,
    integer_kernel,
    primitive_vector,
    rank,
)
from gkzrational.laurent import LaurentPolynomial


class Circuit:
    """A circuit carried by its primitive dependence vector over the
    full column index range (zeros off the support)."""

    __slots__ = ("b", "support")

    def __init__(self, b):
        b = primitive_vector(tuple(int(x) for x in b))
        if sum(b) != 0:
            raise DomainError("circuit vector must have zero coordinate sum")
        self.b = b
        self.support = tuple(i for i, x in enumerate(b) if x)
        if len(self.support) < 3:
            raise DomainError("a circuit involves at least three points")

    @property
    def positive(self):
        return tuple(i for i in self.support if self.b[i] > 0)

    @property
    def negative(self):
        return tuple(i for i in self.support if self.b[i] < 0)

    @property
    def rho(self):
        return sum(self.b[i] for i in self.positive)

    def b_plus(self):
        return tuple(x if x > 0 else 0 for x in self.b)

    def b_minus(self):
        return tuple(-x if x < 0 else 0 for x in self.b)

    def restricted(self):
        """The dependence restricted to its support."""
        return tuple(self.b[i] for i in self.support)

    def __eq__(self, other):
        return isinstance(other, Circuit) and self.b == other.b

    def __hash__(self):
        return hash(self.b)

    def __repr__(self):
        return f"Circuit(b={self.b})"

    def to_json_dict(self):
        pairing = is_balanced(self)
        return {
            "support": [i + 1 for i in self.support],
            "b": list(self.b),
            "rho": self.rho,
            "balanced": pairing is not None,
            "pairing": {str(i + 1): j + 1 for i, j in pairing.items()} if pairing else None,
        }


def enumerate_circuits(config):
    """All circuits of the configuration, deterministically ordered by
    (support size, support).

    Brute force over column subsets of size <= d+1: a subset is a
    circuit support exactly when its rank is |Z| - 1 and the kernel
    vector has full support.
    """
    out = []
    s, d = config.s, config.d
    for size in range(3, min(s, d + 1) + 1):
        for subset in combinations(range(s), size):
            sub = config.matrix.submatrix_columns(subset)
            if rank(sub) != size - 1:
                continue
            kernel = integer_kernel(sub)
            if len(kernel) != 1:
                continue
            v = kernel[0]
            if any(x == 0 for x in v):
                continue
            b = [0] * s
            for i, j in enumerate(subset):
                b[j] = v[i]
            out.append(Circuit(b))
    return out


def is_balanced(circuit):
    """Pairing {positive index -> negative index with opposite value}
    when the positive entries and the negated negative entries agree as
    multisets; None otherwise.  Use balance_witness for the first
    unmatched value."""
    pairing = {}
    available = {}
    for j in circuit.negative:
        available.setdefault(-circuit.b[j], []).append(j)
    for i in circuit.positive:
        bucket = available.get(circuit.b[i])
        if not bucket:
            return None
        pairing[i] = bucket.pop(0)
    if any(bucket for bucket in available.values()):
        return None
    return pairing


def balance_witness(circuit):
    """The first value (smallest absolute value) whose multiplicity
    differs between the positive and negated-negative multisets; None
    when balanced."""
    from collections import Counter
    pos = Counter(circuit.b[i] for i in circuit.positive)
    neg = Counter(-circuit.b[j] for j in circuit.negative)
    for v in sorted(set(pos) | set(neg)):
        if pos.get(v, 0) != neg.get(v, 0):
            return v
    return None


def circuit_gkz_rational(circuit):
    """A circuit admits a rational hypergeometric function with its
    discriminant in the denominator exactly when it is balanced."""
    return is_balanced(circuit) is not None


def circuit_discriminant(circuit):
    """Discriminant of a circuit: D = x^(b-) - lambda x^(b+) with
    lambda = (-1)^rho (b-)^(b-) / (b+)^(b+).

    Returns (cleared, lam, raw): `cleared` is the integer-cleared
    LaurentPolynomial q x^(b-) - p x^(b+) for lambda = p/q in lowest
    terms (its coefficients are coprime), `raw` the monic-in-x^(b-)
    form.
    """
    rho = circuit.rho
    num = 1
    for j in circuit.negative:
        num *= (-circuit.b[j]) ** (-circuit.b[j])
    den = 1
    for i in circuit.positive:
        den *= circuit.b[i] ** circuit.b[i]
    lam = Fraction((-1) ** rho * num, den)
    n = len(circuit.b)
    raw = LaurentPolynomial(n, {circuit.b_minus(): Fraction(1),
                                circuit.b_plus(): -lam})
    cleared = LaurentPolynomial(n, {circuit.b_minus(): Fraction(lam.denominator),
                                    circuit.b_plus(): Fraction(-lam.numerator)})
    return cleared, lam, raw


def realize_circuit(b):
    """A configuration whose single circuit is b: the Hermite basis of
    the orthogonal lattice b^perp gives a full-rank d x (d+1) matrix
    with saturated kernel Z.b."""
    from gkzrational.polytope import Configuration
    b = primitive_vector(tuple(int(x) for x in b))
    n = len(b)
    rows = hermite_row_basis(integer_kernel(IntMatrix([list(b)])))
    assert len(rows) == n - 1
    return Configuration(IntMatrix([list(r) for r in rows]))


def balanced_series(circuit, order):
    """Truncated geometric expansion of 1/D for a balanced circuit:
    sum_{n=0..order} (-1)^(rho n) x^(n b+ - (n+1) b-).

    Raises DomainError on unbalanced circuits, where the expansion is
    not annihilated by the circuit operator.
    """
    if is_balanced(circuit) is None:
        raise DomainError("circuit is unbalanced; 1/D has no hypergeometric expansion")
    n = len(circuit.b)
    bp, bm = circuit.b_plus(), circuit.b_minus()
    rho = circuit.rho
    terms = {}
    for k in range(order + 1):
        e = tuple(k * p - (k + 1) * m for p, m in zip(bp, bm))
        terms[e] = Fraction((-1) ** (rho * k))
    return LaurentPolynomial(n, terms)


def lemma_product_identity_holds(circuit, n_max=20):
    """Check prod_{b_i>0} prod_{j=1..b_i} (n b_i + j) ==
    prod_{b_i<0} prod_{j=1..-b_i} (n (-b_i) + j) for 0 <= n <= n_max.
    Holds for every n exactly when the circuit is balanced."""
    for n in range(n_max + 1):
        lhs = 1
        for i in circuit.positive:
            for j in range(1, circuit.b[i] + 1):
                lhs *= n * circuit.b[i] + j
        rhs = 1
        for i in circuit.negative:
            for j in range(1, -circuit.b[i] + 1):
                rhs *= n * (-circuit.b[i]) + j
        if lhs != rhs:
            return False
    return True


class CircuitSeriesSpec:
    """Exponent offset c and truncation order for a canonical series
    supported on c + N.b.  The factorial arguments must be nonnegative
    for every n >= 0: c_j >= 0 where b_j > 0 and c_j <= -1 where
    b_j < 0."""

    __slots__ = ("circuit", "c", "order")

    def __init__(self, circuit, c, order=10):
        c = tuple(int(x) for x in c)
        if len(c) != len(circuit.b):
            raise DomainError("offset length mismatch")
        for j, bj in enumerate(circuit.b):
            if bj > 0 and c[j] < 0:
                raise DomainError(f"offset must be >= 0 at positive slot {j}")
            if bj < 0 and c[j] > -1:
                raise DomainError(f"offset must be <= -1 at negative slot {j}")
        self.circuit = circuit
        self.c = c
        self.order = int(order)


def canonical_coefficient(spec, n):
    """Coefficient of x^(c + n b) in the canonical series:
    (-1)^(rho n) * prod_{b_j<0} (-c_j - n b_j - 1)! / prod_{b_j>0} (c_j + n b_j)!"""
    if n < 0:
        raise DomainError("series index must be nonnegative")
    circuit, c = spec.circuit, spec.c
    num = 1
    for j in circuit.negative:
        arg = -c[j] - n * circuit.b[j] - 1
        if arg < 0:
            raise DomainError(f"factorial of negative argument at slot {j}, n={n}")
        num *= factorial(arg)
    den = 1
    for j in circuit.positive:
        arg = c[j] + n * circuit.b[j]
        if arg < 0:
            raise DomainError(f"factorial of negative argument at slot {j}, n={n}")
        den *= factorial(arg)
    return Fraction((-1) ** (circuit.rho * n) * num, den)


def canonical_series(spec):
    """Truncated canonical series sum_{n<=order} coeff_n x^(c + n b)."""
    circuit = spec.circuit
    nv = len(circuit.b)
    terms = {}
    for n in range(spec.order + 1):
        e = tuple(cj + n * bj for cj, bj in zip(spec.c, circuit.b))
        terms[e] = canonical_coefficient(spec, n)
    return LaurentPolynomial(nv, terms)


def series_quotient_root_profile(spec):
    """Multiset of roots (with orders) of mu(z) = gamma(z+1)/gamma(z),
    where gamma(n) is the canonical coefficient without its sign

    gamma(n) = lambda^(-n) prod_{b_j<0}(-c_j - n b_j - 1)! / prod_{b_j>0}(c_j + n b_j)!

    mu is the product of explicit linear factors, so the root orders are
    exact.  Returns {root: order} with positive orders for zeros and
    negative for poles."""
    circuit, c = spec.circuit, spec.c
    profile = {}
    for j in circuit.negative:
        for i in range(1, -circuit.b[j] + 1):
            root = Fraction(-c[j] - 1 + i, circuit.b[j])
            profile[root] = profile.get(root, 0) + 1
    for j in circuit.positive:
        for i in range(1, circuit.b[j] + 1):
            root = Fraction(-(c[j] + i), circuit.b[j])
            profile[root] = profile.get(root, 0) - 1
    return {r: o for r, o in profile.items() if o}


def ord_sum_by_class(profile):
    """Group a root profile by residue class modulo Z and sum orders;
    rationality of the generating series forces every class sum to 0."""
    sums = {}
    for root, order in profile.items():
        key = root - floor(root)
        sums[key] = sums.get(key, 0) + order
    return sums
