"""Cayley-structure detection and the master classifier.

A Cayley structure on a configuration A is a partition of the columns
into r+1 groups, each group's 0/1 indicator lying in the rational row
span, together with reduced factor configurations in Z^r read off from
lattice coordinates on the within-group difference space.  A candidate
is kept only if the assembled matrix has the same saturated integer
kernel as A, which is the invariant the hypergeometric system depends
on.  The structure is essential when every proper nonempty subset I of
the factors has Minkowski-sum dimension at least |I|.

The classifier runs a decision cascade; every verdict carries the rule
that fired and a machine-checkable witness:

    point / pyramid            -> Degenerate    (discriminant trivial)
    essential Cayley structure -> Rational
    unbalanced spanning circuit-> NotRational
    three parallel lines, d=4  -> Degenerate    (discriminant trivial)
    affine dimension <= 3      -> NotRational
    otherwise                  -> ConjecturallyNotRational
"""

from fractions import Fraction
from itertools import combinations, product
from math import comb, gcd

from gkzrational.circuits import Circuit, enumerate_circuits, is_balanced
from gkzrational.errors import SearchSpaceExceeded
from gkzrational.intlinalg import (
    IntMatrix,
    integer_kernel,
    rational_rank_of_vectors,
    saturation_coordinates,
    solve_rational,
)
from gkzrational.polytope import (
    Configuration,
    facial_subsets,
    interior_points,
    is_pyramid,
    is_spanning,
    _pull_triangulation,
)

DEFAULT_NODE_BUDGET = 10 ** 6
DEFAULT_CIRCUIT_BUDGET = 200_000


class CayleyStructure:
    """A verified partition of columns into Cayley groups with reduced
    factors in Z^r."""

    __slots__ = ("groups", "factors", "base_indices", "assembled")

    def __init__(self, groups, factors, base_indices, assembled):
        self.groups = tuple(tuple(sorted(g)) for g in groups)
        self.factors = tuple(tuple(f) for f in factors)
        self.base_indices = tuple(base_indices)
        self.assembled = assembled

    @property
    def r(self):
        return len(self.groups) - 1

    def sort_key(self):
        return (-self.r, self.groups)

    def minkowski_rank(self, subset):
        """Affine dimension of the Minkowski sum of the factors indexed
        by `subset`: rank of their stacked difference vectors."""
        diffs = []
        for i in subset:
            pts = self.factors[i]
            base = pts[0]
            for p in pts[1:]:
                diffs.append(tuple(x - y for x, y in zip(p, base)))
        return rational_rank_of_vectors(diffs)

    def to_json_dict(self):
        return {
            "type": "cayley",
            "r": self.r,
            "groups": [[j + 1 for j in g] for g in self.groups],
            "factors": [[list(p) for p in f] for f in self.factors],
        }

    def __repr__(self):
        return f"CayleyStructure(groups={self.groups})"


def _indicator_subsets(config):
    """All proper nonempty column subsets whose 0/1 indicator lies in
    the rational row span.

    An indicator in the row span is determined by its values on any
    column basis, so 2^d candidate patterns suffice; this stays cheap
    even for large s.
    """
    matrix = config.matrix
    d, s = config.d, config.s
    # greedy column basis
    basis_cols = []
    basis_vecs = []
    for j in range(s):
        cand = basis_vecs + [list(map(Fraction, matrix.column(j)))]
        if rational_rank_of_vectors(cand) > len(basis_vecs):
            basis_cols.append(j)
            basis_vecs.append(cand[-1])
        if len(basis_cols) == d:
            break
    system = [list(matrix.column(j)) for j in basis_cols]  # rows: <w, a_j>
    subsets = set()
    for pattern in product((0, 1), repeat=d):
        w = solve_rational(system, list(pattern))
        if w is None:
            continue
        values = [sum(Fraction(w[i]) * matrix.column(j)[i] for i in range(d))
                  for j in range(s)]
        if any(v != 0 and v != 1 for v in values):
            continue
        subset = frozenset(j for j in range(s) if values[j] == 1)
        if subset and len(subset) < s:
            subsets.add(subset)
    return sorted(subsets, key=lambda t: (min(t), sorted(t)))


def _partitions_from_subsets(subsets, s, node_budget):
    """All set partitions of {0..s-1} into >= 2 of the given subsets,
    found by exact-cover search over the smallest uncovered index."""
    by_min = {}
    for sub in subsets:
        by_min.setdefault(min(sub), []).append(sub)
    results = []
    nodes = 0

    def dfs(covered, parts):
        nonlocal nodes
        nodes += 1
        if nodes > node_budget:
            raise SearchSpaceExceeded(
                f"Cayley partition search exceeded {node_budget} nodes")
        if len(covered) == s:
            if len(parts) >= 2:
                results.append(tuple(parts))
            return
        m = min(set(range(s)) - covered)
        for sub in by_min.get(m, ()):
            if sub & covered:
                continue
            dfs(covered | sub, parts + [sub])

    dfs(frozenset(), [])
    return results


def _build_structure(config, parts):
    """Assemble and verify one candidate partition; None if the factors
    do not fit in Z^r or the kernel check fails."""
    groups = sorted((tuple(sorted(p)) for p in parts), key=lambda g: g[0])
    r = len(groups) - 1
    d, s = config.d, config.s
    matrix = config.matrix
    base_indices = [g[0] for g in groups]
    diffs = []
    for gi, group in enumerate(groups):
        base = matrix.column(base_indices[gi])
        for j in group:
            col = matrix.column(j)
            diffs.append(tuple(col[i] - base[i] for i in range(d)))
    e, coord = saturation_coordinates(diffs, d)
    if e > r:
        return None
    phi = {}
    for gi, group in enumerate(groups):
        base = matrix.column(base_indices[gi])
        for j in group:
            col = matrix.column(j)
            c = coord(tuple(col[i] - base[i] for i in range(d)))
            phi[j] = c + (0,) * (r - e)
    rows = []
    for group in groups:
        rows.append([1 if j in group else 0 for j in range(s)])
    for k in range(r):
        rows.append([phi[j][k] for j in range(s)])
    assembled = IntMatrix(rows)
    if integer_kernel(assembled) != integer_kernel(matrix):
        return None
    factors = [tuple(phi[j] for j in group) for group in groups]
    return CayleyStructure(groups, factors, base_indices, assembled)


def detect_cayley(config, node_budget=DEFAULT_NODE_BUDGET):
    """All Cayley structures on the configuration, largest r first,
    then lexicographically smallest partition."""
    subsets = _indicator_subsets(config)
    structures = []
    for parts in _partitions_from_subsets(subsets, config.s, node_budget):
        cs = _build_structure(config, parts)
        if cs is not None:
            structures.append(cs)
    structures.sort(key=CayleyStructure.sort_key)
    return structures


def is_essential(cs):
    """(True, None) when every proper nonempty factor subset I has
    Minkowski-sum dimension >= |I|; otherwise (False, violating I)."""
    n = cs.r + 1
    for size in range(1, n):
        for subset in combinations(range(n), size):
            if cs.minkowski_rank(subset) < size:
                return False, subset
    return True, None


def detect_simplex_multiple(config):
    """(r, q) when A consists of ALL lattice points of a q-simplex with
    edges of lattice length r, up to a unimodular affine change of
    coordinates; None otherwise."""
    q = config.affine_dim
    if q == 0:
        return (1, 0) if config.s == 1 else None
    vertices = sorted(j for f in facial_subsets(config)
                      if len(f.indices) == 1 for j in f.indices)
    if len(vertices) != q + 1:
        return None
    pts = config.affine_points
    v0 = pts[vertices[0]]
    edge = tuple(x - y for x, y in zip(pts[vertices[1]], v0))
    r = 0
    for x in edge:
        r = gcd(r, abs(x))
    if r == 0 or config.s != comb(r + q, q):
        return None
    # candidate unimodular map sending v0 -> 0, v_i -> r e_i; row i of N
    # solves <N_i, v_j - v0> = r delta_ij over the vertex differences
    system = [[pts[vertices[j + 1]][k] - v0[k] for k in range(q)] for j in range(q)]
    n_rows = []
    for i in range(q):
        target = [Fraction(r) if j == i else Fraction(0) for j in range(q)]
        sol = solve_rational(system, target)
        if sol is None:
            return None
        row = []
        for x in sol:
            if x.denominator != 1:
                return None
            row.append(x.numerator)
        n_rows.append(row)
    from gkzrational.intlinalg import det_int
    if abs(det_int(n_rows)) != 1:
        return None
    image = set()
    for p in pts:
        delta = [p[k] - v0[k] for k in range(q)]
        image.add(tuple(sum(n_rows[i][k] * delta[k] for k in range(q)) for i in range(q)))
    expected = set()

    def gen(prefix, remaining, pos):
        if pos == q - 1:
            for k in range(remaining + 1):
                expected.add(prefix + (k,))
            return
        for k in range(remaining + 1):
            gen(prefix + (k,), remaining - k, pos + 1)

    gen((), r, 0)
    if image != expected:
        return None
    return (r, q)


class Classification:
    __slots__ = ("verdict", "rule", "witness", "notes")

    def __init__(self, verdict, rule, witness=None, notes=None):
        self.verdict = verdict
        self.rule = rule
        self.witness = witness
        self.notes = notes or []

    def to_json_dict(self):
        witness = self.witness
        if hasattr(witness, "to_json_dict"):
            witness = witness.to_json_dict()
        return {"verdict": self.verdict, "rule": self.rule,
                "witness": witness, "notes": list(self.notes)}

    def __repr__(self):
        return f"Classification({self.verdict}, rule={self.rule})"


def _interior_point_circuit(config, interior_idx):
    """Constructive unbalanced spanning circuit through an interior
    column: the interior point plus the vertex set of a containing
    simplex in a triangulation of the remaining columns."""
    others = [j for j in range(config.s) if j != interior_idx]
    pts = config.affine_points
    target = pts[interior_idx]
    dim = config.affine_dim
    for simplex in _pull_triangulation(pts, others):
        base = pts[simplex[0]]
        system = [[pts[j][k] - base[k] for j in simplex[1:]] for k in range(dim)]
        rhs = [target[k] - base[k] for k in range(dim)]
        sol = solve_rational(system, rhs)
        if sol is None:
            continue
        lams = [Fraction(1) - sum(sol)] + list(sol)
        if any(l < 0 for l in lams):
            continue
        support = [j for j, l in zip(simplex, lams) if l > 0]
        weights = [l for l in lams if l > 0]
        denom = 1
        for l in weights:
            denom = denom * l.denominator // gcd(denom, l.denominator)
        b = [0] * config.s
        b[interior_idx] = denom
        for j, l in zip(support, weights):
            b[j] = -int(l * denom)
        return Circuit(b)
    return None


def classify(config,
             node_budget=DEFAULT_NODE_BUDGET,
             circuit_budget=DEFAULT_CIRCUIT_BUDGET):
    """Decision cascade over the rules in the module docstring."""
    if config.s == 1:
        return Classification("Degenerate", "point",
                              {"type": "point", "index": 1})
    apex = is_pyramid(config)
    if apex is not None:
        return Classification("Degenerate", "pyramid",
                              {"type": "apex", "index": apex + 1})

    structures = detect_cayley(config, node_budget=node_budget)
    for cs in structures:
        ok, _violating = is_essential(cs)
        if ok:
            return Classification("Rational", "essential-cayley", cs)

    notes = []
    # constructive route: an interior column yields an unbalanced
    # spanning circuit directly
    interior = interior_points(config)
    if interior:
        circuit = _interior_point_circuit(config, interior[0])
        if circuit is not None:
            return Classification(
                "NotRational", "unbalanced-spanning-circuit",
                {"type": "circuit", "support": [i + 1 for i in circuit.support],
                 "b": list(circuit.b),
                 "via_interior_point": interior[0] + 1})

    subset_count = sum(comb(config.s, k)
                       for k in range(3, min(config.s, config.d + 1) + 1))
    exhaustive = subset_count <= circuit_budget
    circuits = enumerate_circuits(config) if exhaustive else None
    if exhaustive:
        for circuit in circuits:
            if is_balanced(circuit) is None and is_spanning(config, circuit.support):
                return Classification(
                    "NotRational", "unbalanced-spanning-circuit",
                    {"type": "circuit", "support": [i + 1 for i in circuit.support],
                     "b": list(circuit.b)})
    else:
        notes.append(f"circuit search skipped: {subset_count} subsets exceed "
                     f"the budget of {circuit_budget}")

    if config.d == 4:
        for cs in structures:
            if cs.r == 2 and cs.minkowski_rank(range(3)) <= 1:
                return Classification("Degenerate", "three-parallel-lines", cs,
                                      notes=notes)

    if config.d <= 4:
        return Classification("NotRational", "low-dimension",
                              {"type": "dimension", "d": config.d}, notes=notes)

    if exhaustive and config.s == config.d + 1:
        if any(len(c.support) == config.s for c in circuits):
            raise AssertionError(
                "a full circuit must have been decided by the balanced/"
                "unbalanced rules above")

    sm = detect_simplex_multiple(config)
    if sm is not None and sm[0] >= 2:
        notes.append(f"all lattice points of {sm[0]}*simplex_{sm[1]}: "
                     "such configurations admit no rational hypergeometric "
                     "function with non-monomial discriminant denominator")
    return Classification("ConjecturallyNotRational", "cayley-conjecture",
                          {"type": "no-essential-cayley",
                           "simplex_multiple": list(sm) if sm else None},
                          notes=notes)
