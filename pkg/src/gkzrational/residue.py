"""Toric residues on dilated standard simplices.

For Delta = m * (standard r-simplex) and r+1 generic polynomials
f_0..f_r supported on the lattice points of Delta, the residue of t^a
(a interior to (r+1)Delta) is computed by the normal-form algorithm:
homogenize to forms F_j on projective r-space, take a Groebner basis G
of <F_0..F_r>, and divide the normal form of u^(a') by the normal form
of the Jacobian form det(dF_i/du_j); both are scalar multiples of the
one standard monomial in the socle degree (r+1)(m-1).

That ratio determines the residue only up to one global constant.  The
constant is fixed per instance by calibration against the toric
Jacobian j(t) (first row f_0..f_r, then rows t_i df_j/dt_i): expanding
j(t) over interior exponents and requiring the residue functional to
send j(t) to r! times the Euclidean volume of Delta, i.e. to m^r.  On
the two-quadrics example this makes the residue of t^2 exactly 4 times
the normal-form ratio, reproducing the published value.

An independent oracle for r = 1 evaluates the global residue as the
trace of a multiplication operator on Q[t]/(f_1).
"""

from fractions import Fraction
from itertools import product as iter_product

from gkzrational import groebner
from gkzrational.errors import DegenerateInstance, DomainError
from gkzrational.exprparse import format_fraction, parse_fraction
from gkzrational.laurent import LaurentPolynomial, RationalFunction
from gkzrational.resultant import det_ring, generic_resultant, resultant_value


def simplex_lattice_points(m, r):
    """Lattice points of m*Delta_r in lexicographic order; this fixes
    the coefficient order in ResidueProblem payloads."""
    pts = [e for e in iter_product(range(m + 1), repeat=r) if sum(e) <= m]
    return sorted(pts)


def interior_exponents(m, r):
    """Interior lattice points of (r+1)*Delta_r: all coordinates >= 1,
    coordinate sum <= (r+1)m - 1."""
    bound = (r + 1) * m - 1
    pts = [e for e in iter_product(range(1, bound + 1), repeat=r) if sum(e) <= bound]
    return sorted(pts)


def homogenize_exponent(alpha, m):
    """t^alpha (sum <= m) as a degree-m u-monomial exponent."""
    return (m - sum(alpha),) + tuple(alpha)


def socle_exponent_of(a, m, r):
    """The critical-degree u-monomial exponent a' attached to the
    interior point a: subtract 1 from each affine exponent (absorbed by
    the logarithmic form) and homogenize to degree (r+1)(m-1)."""
    crit = (r + 1) * (m - 1)
    shifted = tuple(x - 1 for x in a)
    if any(x < 0 for x in shifted) or sum(shifted) > crit:
        raise DomainError("exponent is not interior to (r+1)*Delta")
    return (crit - sum(shifted),) + shifted


class ResidueProblem:
    """A numeric residue instance: dimension r, dilation m, rational
    coefficients x[j][point] for each of the r+1 polynomials (points in
    the order of simplex_lattice_points), and the target exponent a."""

    __slots__ = ("r", "m", "coeffs", "a", "points")

    def __init__(self, r, m, coeffs, a):
        self.r = int(r)
        self.m = int(m)
        if self.r < 1 or self.m < 1:
            raise DomainError("need r >= 1 and m >= 1")
        self.points = simplex_lattice_points(self.m, self.r)
        if len(coeffs) != self.r + 1:
            raise DomainError(f"need {self.r + 1} coefficient vectors")
        self.coeffs = []
        for row in coeffs:
            row = [Fraction(c) for c in row]
            if len(row) != len(self.points):
                raise DomainError(
                    f"each coefficient vector needs {len(self.points)} entries")
            self.coeffs.append(tuple(row))
        self.coeffs = tuple(self.coeffs)
        self.a = tuple(int(x) for x in a)
        if len(self.a) != self.r:
            raise DomainError("target exponent length must equal r")
        bound = (self.r + 1) * self.m - 1
        if any(x < 1 for x in self.a) or sum(self.a) > bound:
            raise DomainError("target exponent must be interior to (r+1)*Delta")

    @classmethod
    def from_json_dict(cls, payload):
        return cls(payload["r"], payload["m"],
                   [[parse_fraction(c) for c in row] for row in payload["coeffs"]],
                   payload["a"])

    def to_json_dict(self):
        return {"r": self.r, "m": self.m,
                "coeffs": [[format_fraction(c) for c in row] for row in self.coeffs],
                "a": list(self.a)}

    def affine_polynomials(self):
        """f_j as LaurentPolynomials in the t variables."""
        out = []
        for row in self.coeffs:
            out.append(LaurentPolynomial(
                self.r, {pt: c for pt, c in zip(self.points, row) if c}))
        return out

    def forms(self):
        """Homogenized F_j as LaurentPolynomials in u_0..u_r."""
        out = []
        for row in self.coeffs:
            terms = {homogenize_exponent(pt, self.m): c
                     for pt, c in zip(self.points, row) if c}
            out.append(LaurentPolynomial(self.r + 1, terms))
        return out


def toric_jacobian(fs, r):
    """det of the matrix with first row (f_0..f_r) and row i+1 equal to
    (t_i df_0/dt_i, ..., t_i df_r/dt_i).

    The t variables must be the LAST r variables of the fs; any leading
    variables are symbolic coefficients.  The support in t is verified
    to lie interior to (r+1)*Delta when a dilation m is supplied.
    """
    if len(fs) != r + 1:
        raise DomainError("need r+1 polynomials")
    nv = fs[0].nvars
    toff = nv - r
    rows = [list(fs)]
    for i in range(r):
        unit = tuple(1 if k == toff + i else 0 for k in range(nv))
        rows.append([f.derivative(toff + i).mul_monomial(unit) for f in fs])
    return det_ring(rows)


def check_jacobian_support(jac, r, m, toff=0):
    """Assert the t-support of the toric Jacobian is interior."""
    bound = (r + 1) * m - 1
    for e in jac.terms:
        te = e[toff:]
        if any(x < 1 for x in te) or sum(te) > bound:
            raise AssertionError(f"toric Jacobian term {e} not interior")


def jacobian_form(forms, offset=0):
    """The Jacobian determinant det(dF_i/du_j) of homogeneous forms
    whose u variables start at `offset` (earlier variables are treated
    as symbolic coefficients); its degree is the socle degree."""
    n = len(forms)
    rows = [[f.derivative(offset + j) for f in forms] for j in range(n)]
    return det_ring(rows)


class _NormalFormContext:
    """Groebner data shared by all residue evaluations of one instance."""

    def __init__(self, prob, order, budget):
        self.prob = prob
        self.budget = budget
        forms = prob.forms()
        if any(f.is_zero() for f in forms):
            raise DegenerateInstance("a polynomial of the system is zero")
        self.basis = groebner.buchberger([f.terms for f in forms],
                                         order=order, budget=budget)
        nv = prob.r + 1
        leads = self.basis.leading_exponents()
        for var in range(nv):
            if not any(sum(l) == l[var] for l in leads):
                raise DegenerateInstance(
                    "the forms have a common projective zero "
                    f"(no pure power of u{var} among the leading terms)")
        crit = (prob.r + 1) * (prob.m - 1)
        socle = self.basis.standard_monomials_of_degree(crit, nv)
        if len(socle) != 1:
            raise DegenerateInstance(
                f"expected one standard monomial in degree {crit}, "
                f"found {len(socle)}")
        self.socle = socle[0]
        jac = jacobian_form(forms)
        self.jac_scalar = self._socle_scalar(jac.terms)
        if not self.jac_scalar:
            raise DegenerateInstance("Jacobian form reduces to zero")

    def _socle_scalar(self, terms):
        nf = self.basis.normal_form(terms, budget=self.budget)
        extra = [e for e in nf if e != self.socle]
        if extra:
            raise AssertionError(f"normal form not a socle multiple: {sorted(nf)}")
        return nf.get(self.socle, Fraction(0))

    def raw_residue(self, a):
        """Normal-form ratio NF(u^a') / NF(J), before calibration."""
        expo = socle_exponent_of(a, self.prob.m, self.prob.r)
        scalar = self._socle_scalar({expo: Fraction(1)})
        return scalar / self.jac_scalar

    def calibration(self):
        """The constant kappa with residue = kappa * raw ratio, fixed by
        sending the toric Jacobian to m^r."""
        prob = self.prob
        jac_t = toric_jacobian(prob.affine_polynomials(), prob.r)
        check_jacobian_support(jac_t, prob.r, prob.m)
        total = Fraction(0)
        for e, c in jac_t.terms.items():
            total += c * self.raw_residue(e)
        if not total:
            raise DegenerateInstance("calibration sum vanished")
        target = Fraction(prob.m) ** prob.r
        return target / total


def toric_residue(prob, order="grevlex", budget=groebner.DEFAULT_BUDGET):
    """The exact toric residue of t^a for the given instance."""
    ctx = _NormalFormContext(prob, order, budget)
    return ctx.calibration() * ctx.raw_residue(prob.a)


def calibration_constant(prob, order="grevlex", budget=groebner.DEFAULT_BUDGET):
    """The instance's calibration constant (4 on the classical
    two-quadrics example)."""
    ctx = _NormalFormContext(prob, order, budget)
    return ctx.calibration()


# -- univariate trace-form oracle (r = 1) -------------------------------


def _trim(p):
    while p and not p[-1]:
        p.pop()
    return p


def _poly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            out[i + j] += x * y
    return _trim(out)


def _poly_divmod(a, b):
    a = list(a)
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    q = [Fraction(0)] * max(0, len(a) - len(b) + 1)
    inv = 1 / b[-1]
    while len(a) >= len(b) and _trim(a):
        shift = len(a) - len(b)
        c = a[-1] * inv
        q[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        _trim(a)
    return _trim(q), a


def _poly_sub(a, b):
    n = max(len(a), len(b))
    out = [Fraction(0)] * n
    for i, x in enumerate(a):
        out[i] += x
    for i, x in enumerate(b):
        out[i] -= x
    return _trim(out)


def _poly_mod_inverse(a, f):
    """Inverse of a modulo f over Q via the extended Euclidean
    algorithm; DegenerateInstance when gcd(a, f) is non-constant."""
    r0, r1 = list(f), _poly_divmod(list(a), f)[1]
    s0, s1 = [], [Fraction(1)]
    while r1:
        q, rem = _poly_divmod(r0, r1)
        r0, r1 = r1, rem
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1))
    if len(r0) != 1:
        raise DegenerateInstance("polynomials share a common factor")
    inv = 1 / r0[0]
    return _poly_divmod([x * inv for x in s0], f)[1]


def univariate_residue_oracle(f0, f1, a, i=0):
    """Total sum of the point residues of t^(a-1) dt / (f0 f1) over the
    zero set of f_(1-i), via exact linear algebra: the trace of
    multiplication by t^(a-1) * f_other^-1 * f_own'^-1 on Q[t]/(f_own),
    signed by (-1)^i.

    Requires a nonzero resultant at the declared degrees and a nonzero
    constant term of the pole polynomial (no zero on the torus
    boundary).
    """
    f0 = _trim([Fraction(c) for c in f0])
    f1 = _trim([Fraction(c) for c in f1])
    if i == 0:
        own, other = f1, f0
    elif i == 1:
        own, other = f0, f1
    else:
        raise DomainError("i must be 0 or 1")
    if len(own) < 2:
        raise DegenerateInstance("pole polynomial must have positive degree")
    if resultant_value(f0, f1) == 0:
        raise DegenerateInstance("resultant vanishes: common root")
    if not own[0]:
        raise DegenerateInstance("pole at the torus boundary (t = 0)")
    m = len(own) - 1
    dpoly = _trim([own[k] * k for k in range(1, len(own))])
    inv_other = _poly_mod_inverse(other, own)
    inv_d = _poly_mod_inverse(dpoly, own)
    t_power = [Fraction(0)] * (a - 1) + [Fraction(1)] if a >= 1 else None
    if t_power is None:
        raise DomainError("exponent a must be >= 1")
    h = _poly_divmod(_poly_mul(_poly_mul(t_power, inv_other), inv_d), own)[1]
    # trace of multiplication by h on the basis 1, t, ..., t^(m-1)
    trace = Fraction(0)
    for k in range(m):
        shifted = _poly_divmod([Fraction(0)] * k + list(h), own)[1]
        trace += shifted[k] if k < len(shifted) else Fraction(0)
    sign = -1 if i == 1 else 1
    return sign * trace


# -- symbolic residue witnesses for r = 1 --------------------------------


def _degree_monomials(nvars_group, degree):
    """Exponent tuples of total degree `degree` in nvars_group slots."""
    out = []

    def rec(prefix, remaining, pos):
        if pos == nvars_group - 1:
            out.append(prefix + (remaining,))
            return
        for k in range(remaining + 1):
            rec(prefix + (k,), remaining - k, pos + 1)

    rec((), degree, 0)
    return sorted(out)


def _solve_exact_overdetermined(rows, rhs):
    """Solve rows . c = rhs exactly; None when inconsistent, "under"
    when the rows do not determine c uniquely."""
    m = len(rows)
    n = len(rows[0])
    aug = [list(map(Fraction, row)) + [Fraction(v)] for row, v in zip(rows, rhs)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if aug[i][col]), None)
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        inv = 1 / aug[r][col]
        aug[r] = [x * inv for x in aug[r]]
        for i2 in range(m):
            if i2 != r and aug[i2][col]:
                f = aug[i2][col]
                aug[i2] = [x - f * y for x, y in zip(aug[i2], aug[r])]
        pivots.append(col)
        r += 1
    for i2 in range(r, m):
        if aug[i2][n]:
            return None
    if r < n:
        return "under"
    c = [Fraction(0)] * n
    for idx, col in enumerate(pivots):
        c[col] = aug[idx][n]
    return c


def residue_witness(cs, seed=0, certify=True,
                    budget=groebner.DEFAULT_BUDGET, max_samples=400):
    """Symbolic residues Res(t^a) for the Cayley configuration of two
    full segments [0, m], m <= 3: for each interior a the numerator is
    interpolated against the known Sylvester-resultant denominator from
    deterministic rational instances, then certified hypergeometric.

    Returns (witnesses, certificates): witnesses maps a to a
    RationalFunction in the configuration's column variables.
    """
    import random

    from gkzrational.polytope import Configuration
    from gkzrational.weyl import verify_hypergeometric

    if cs.r != 1:
        raise DomainError("residue witnesses are implemented for r = 1 only")
    slots = []
    for gi, factor in enumerate(cs.factors):
        values = [p[0] for p in factor]
        lo, hi = min(values), max(values)
        if sorted(values) != list(range(lo, hi + 1)):
            raise DomainError("factors must be all lattice points of a segment")
        slots.append([v - lo for v in values])
    m = len(slots[0]) - 1
    if len(slots[1]) - 1 != m:
        raise DomainError("both segments must have the same length")
    if not 1 <= m <= 3:
        raise DomainError("segment length must be between 1 and 3")

    s = 2 * (m + 1)
    # variable permutation: generic resultant slot -> configuration column
    perm = [0] * s
    for gi, group in enumerate(cs.groups):
        for j, delta in zip(group, slots[gi]):
            perm[gi * (m + 1) + delta] = j
    r_sym = generic_resultant(m).permute_variables(perm)

    rng = random.Random(seed)
    mono0 = _degree_monomials(m + 1, m - 1)
    mono1 = _degree_monomials(m + 1, m - 1)
    basis = [(e0, e1) for e0 in mono0 for e1 in mono1]

    def sample_instance():
        while True:
            c0 = [Fraction(rng.randint(1, 30)) for _ in range(m + 1)]
            c1 = [Fraction(rng.randint(1, 30)) for _ in range(m + 1)]
            if resultant_value(c0, c1) == 0 or not c1[0] or not c0[0]:
                continue
            return c0, c1

    witnesses = {}
    certificates = {}
    config = Configuration(cs.assembled)
    interior = list(range(1, 2 * m))
    samples = []
    values_cache = []
    attempts = 0

    def add_sample():
        nonlocal attempts
        attempts += 1
        c0, c1 = sample_instance()
        try:
            prob = ResidueProblem(1, m, [c0, c1], (1,))
            ctx = _NormalFormContext(prob, "grevlex", budget)
            kappa = ctx.calibration()
            prob_values = {a: kappa * ctx.raw_residue((a,)) for a in interior}
        except DegenerateInstance:
            return False
        samples.append((c0, c1))
        values_cache.append(prob_values)
        return True

    for a in interior:
        needed = len(basis) + 5
        coeffs = None
        while True:
            while len(samples) < needed:
                if attempts >= max_samples:
                    raise DomainError("interpolation degree bound exceeded")
                add_sample()
            rows = []
            rhs = []
            for (c0, c1), vals in zip(samples, values_cache):
                point = list(c0) + list(c1)
                rows.append([
                    _eval_monomial(point, e0, e1, m) for (e0, e1) in basis])
                rsv = resultant_value(c0, c1)
                rhs.append(rsv * vals[a])
            sol = _solve_exact_overdetermined(rows, rhs)
            if sol == "under":
                needed += len(basis)
                continue
            if sol is None:
                raise DomainError("interpolation degree bound exceeded: "
                                  "inconsistent samples")
            coeffs = sol
            break
        terms = {}
        for (e0, e1), c in zip(basis, coeffs):
            if not c:
                continue
            slot_exp = tuple(e0) + tuple(e1)
            e = [0] * s
            for slot, k in enumerate(slot_exp):
                e[perm[slot]] = k
            terms[tuple(e)] = c
        numerator = LaurentPolynomial(s, terms)
        witness = (RationalFunction(numerator, [(r_sym, 1)])
                   if not numerator.is_zero() else RationalFunction.zero(s))
        witnesses[a] = witness
        if certify and not witness.is_zero():
            cert = verify_hypergeometric(config, witness, budget=budget)
            if not cert.certified:
                raise AssertionError(
                    f"interpolated residue for a={a} failed certification; "
                    f"counterexample {cert.counterexample!r}")
            certificates[a] = cert
    if all(w.is_zero() for w in witnesses.values()):
        raise AssertionError("every interior residue vanished identically")
    return witnesses, certificates


def _eval_monomial(point, e0, e1, m):
    v = Fraction(1)
    for k, x in zip(e0, point[:m + 1]):
        if k:
            v *= Fraction(x) ** k
    for k, x in zip(e1, point[m + 1:]):
        if k:
            v *= Fraction(x) ** k
    return v
