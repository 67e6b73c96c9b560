"""Convex geometry of an integer point configuration.

A Configuration is a d x s integer matrix of full rank d whose distinct
columns carry (1,...,1) in their rational row span, so the columns are s
points in affine (d-1)-space.  All geometric computations happen in
exact affine lattice coordinates obtained from a Smith-normal-form basis
of the difference lattice; the unimodular simplex in those coordinates
has normalized volume 1.

Face enumeration is brute force over supporting hyperplanes spanned by
affinely independent column subsets, followed by closure under
intersection.  That is adequate at the scale of interest (s up to ~20).
"""

from fractions import Fraction
from itertools import combinations

from gkzrational.errors import ConfigurationError
from gkzrational.intlinalg import (
    IntMatrix,
    det_int,
    rank,
    rational_rank_of_vectors,
    row_span_contains,
    saturation_coordinates,
    solve_rational,
)


class Configuration:
    """Validated point configuration with cached affine coordinates."""

    __slots__ = ("matrix", "d", "s", "affine_points", "affine_dim", "_faces")

    def __init__(self, matrix):
        if not isinstance(matrix, IntMatrix):
            matrix = IntMatrix(matrix)
        d, s = matrix.rows, matrix.cols
        if s == 0:
            raise ConfigurationError("configuration must have at least one column")
        if rank(matrix) != d:
            raise ConfigurationError(f"rank must equal the number of rows ({d})")
        cols = matrix.columns()
        if len(set(cols)) != s:
            raise ConfigurationError("columns must be pairwise distinct")
        if not row_span_contains(matrix, (1,) * s):
            raise ConfigurationError("(1,...,1) must lie in the rational row span")
        self.matrix = matrix
        self.d = d
        self.s = s
        base = cols[0]
        diffs = [tuple(c[i] - base[i] for i in range(d)) for c in cols[1:]]
        e, coord = saturation_coordinates(diffs, d)
        self.affine_dim = e
        self.affine_points = [coord(tuple(c[i] - base[i] for i in range(d))) for c in cols]
        self._faces = None

    @classmethod
    def from_json_dict(cls, payload):
        try:
            d = int(payload["d"])
            s = int(payload["s"])
            matrix = payload["matrix"]
        except (KeyError, TypeError, ValueError) as exc:
            raise ConfigurationError(f"malformed configuration JSON: {exc}") from None
        m = IntMatrix(matrix)
        if m.rows != d or m.cols != s:
            raise ConfigurationError("matrix shape disagrees with d/s fields")
        return cls(m)

    def to_json_dict(self):
        return {"d": self.d, "s": self.s,
                "matrix": [list(r) for r in self.matrix.entries]}

    def column(self, j):
        return self.matrix.column(j)

    def __repr__(self):
        return f"Configuration(d={self.d}, s={self.s})"


class Face:
    """A face of conv(A): the full set of column indices lying on it,
    plus an exact witness functional with <w, a_j> = c on the face and
    < c off it.  The improper face carries w = 0, c = 0."""

    __slots__ = ("indices", "w", "c")

    def __init__(self, indices, w, c):
        self.indices = frozenset(indices)
        self.w = tuple(Fraction(x) for x in w)
        self.c = Fraction(c)

    def is_improper(self, config):
        return len(self.indices) == config.s

    def sort_key(self):
        return (len(self.indices), tuple(sorted(self.indices)))

    def to_json_dict(self):
        from gkzrational.exprparse import format_fraction
        return {"indices": sorted(i + 1 for i in self.indices),
                "w": [format_fraction(x) for x in self.w],
                "c": format_fraction(self.c)}

    def __repr__(self):
        return f"Face({sorted(self.indices)})"


def _facet_data(points, active):
    """Facets of conv(points[j] for j in active), computed inside its own
    affine hull.  Returns a sorted list of (facet_indices, values, c):
    `values[j]` is the witness value at point j (j ranging over active),
    maximal and equal to c exactly on the facet."""
    active = sorted(active)
    base = points[active[0]]
    dim_amb = len(base)
    diffs = {j: [Fraction(points[j][i] - base[i]) for i in range(dim_amb)] for j in active}
    # pick a basis of the hull's difference space
    basis_rows = []
    for j in active[1:]:
        cand = basis_rows + [diffs[j]]
        if rational_rank_of_vectors(cand) > len(basis_rows):
            basis_rows = cand
    m = len(basis_rows)
    if m == 0:
        return []
    system = [[basis_rows[i][k] for i in range(m)] for k in range(dim_amb)]
    coords = {j: tuple(solve_rational(system, diffs[j])) for j in active}
    facets = {}
    for subset in combinations(active, m):
        hp = _hyperplane_through(coords, subset, m)
        if hp is None:
            continue
        w, c = hp
        values = {j: sum(w[i] * coords[j][i] for i in range(m)) for j in active}
        pos = any(values[j] > c for j in active)
        neg = any(values[j] < c for j in active)
        if pos and neg:
            continue
        if pos:
            values = {j: -v for j, v in values.items()}
            c = -c
        on = frozenset(j for j in active if values[j] == c)
        if len(on) == len(active):
            continue
        facets[on] = (values, c)
    return [(sorted(k), v[0], v[1])
            for k, v in sorted(facets.items(), key=lambda kv: sorted(kv[0]))]


def _hyperplane_through(coords, subset, dim):
    """Functional (w, c), w != 0, constant on the affinely independent
    subset spanning a hyperplane of Q^dim; None if degenerate."""
    base = coords[subset[0]]
    rows = [[coords[j][i] - base[i] for i in range(dim)] for j in subset[1:]]
    if rows and rational_rank_of_vectors(rows) != dim - 1:
        return None
    for pivot in range(dim):
        colsel = [c for c in range(dim) if c != pivot]
        w = [Fraction(0)] * dim
        w[pivot] = Fraction(1)
        if rows:
            rhs = [-r[pivot] for r in rows]
            sol = solve_rational([[r[c] for c in colsel] for r in rows], rhs)
            if sol is None:
                continue
            # solution must actually annihilate all rows (overdetermined case)
            ok = True
            for r in rows:
                if r[pivot] + sum(r[c] * v for c, v in zip(colsel, sol)):
                    ok = False
                    break
            if not ok:
                continue
            for c, v in zip(colsel, sol):
                w[c] = v
        cval = sum(w[i] * base[i] for i in range(dim))
        return tuple(w), cval
    return None


def _lift_values_to_witness(config, values):
    """Solve A^T w = values for w in Q^d.  Solvable whenever `values`
    comes from an affine functional on the configuration, since the
    constants lie in the row span."""
    w = solve_rational([list(config.column(j)) for j in range(config.s)],
                       [values[j] for j in range(config.s)])
    if w is None:
        raise AssertionError("affine functional not liftable; invariant broken")
    return tuple(w)


def facial_subsets(config):
    """All nonempty faces of conv(A), deterministically ordered by
    (size, sorted indices).  Vertices and the improper face included;
    the empty face is not reported."""
    if config._faces is not None:
        return config._faces
    s = config.s
    faces = {}
    improper = Face(range(s), (Fraction(0),) * config.d, 0)
    faces[improper.indices] = improper

    if config.affine_dim > 0:
        known = {}
        for on, values, c in _facet_data(config.affine_points, range(s)):
            w = _lift_values_to_witness(config, values)
            known[frozenset(on)] = (w, c)
        frontier = list(known)
        while frontier:
            new = []
            for a in frontier:
                for b in list(known):
                    inter = a & b
                    if not inter or inter in known:
                        continue
                    wa, ca = known[a]
                    wb, cb = known[b]
                    w = tuple(x + y for x, y in zip(wa, wb))
                    c = ca + cb
                    on = frozenset(j for j in range(s)
                                   if _apply(w, config.column(j)) == c)
                    if on not in known:
                        known[on] = (w, c)
                        new.append(on)
            frontier = new
        for key, (w, c) in known.items():
            faces[key] = Face(key, w, c)
    result = sorted(faces.values(), key=Face.sort_key)
    config._faces = result
    return result


def _apply(w, column):
    return sum(Fraction(x) * y for x, y in zip(w, column))


def smallest_face_containing(config, subset):
    """The intersection of all faces containing the 0-based index
    subset; faces of a polytope are intersection-closed, so this is
    itself a face."""
    subset = frozenset(subset)
    if not subset:
        raise ValueError("subset must be nonempty")
    best = None
    for face in facial_subsets(config):
        if subset <= face.indices:
            if best is None or face.indices < best.indices:
                best = face
    return best


def is_spanning(config, subset):
    """True when no proper face contains the subset."""
    return smallest_face_containing(config, subset).is_improper(config)


def interior_points(config):
    """Indices of columns in the relative interior of conv(A), i.e. on
    no proper face."""
    on_proper = set()
    for face in facial_subsets(config):
        if not face.is_improper(config):
            on_proper |= face.indices
    return sorted(set(range(config.s)) - on_proper)


def is_pyramid(config):
    """Smallest apex index (0-based) such that dropping that column
    lowers the rank; None when no apex exists."""
    if config.s == 1:
        return 0
    for j in range(config.s):
        if rank(config.matrix.drop_column(j)) < config.d:
            return j
    return None


def _pull_triangulation(points, active):
    """Pulling triangulation: recursively cone the lexicographically
    least point over the facets that avoid it."""
    active = sorted(active, key=lambda j: (points[j], j))
    base = points[active[0]]
    n = len(base)
    diffs = [[points[j][i] - base[i] for i in range(n)] for j in active[1:]]
    m = rational_rank_of_vectors(diffs) if diffs else 0
    if len(active) == m + 1:
        return [tuple(sorted(active))]
    v = active[0]
    simplices = []
    for on, _values, _c in _facet_data(points, active):
        if v in on:
            continue
        for simplex in _pull_triangulation(points, on):
            simplices.append(tuple(sorted(simplex + (v,))))
    return simplices


def normalized_volume(config):
    """Lattice-normalized volume of conv(A): unimodular simplices of the
    difference lattice have volume 1, so a circuit has volume rho."""
    dim = config.affine_dim
    if dim == 0:
        return 1
    points = config.affine_points
    total = 0
    for simplex in _pull_triangulation(points, range(config.s)):
        spanning = [j for j in simplex]
        base = points[spanning[0]]
        rows = [[points[j][i] - base[i] for i in range(dim)] for j in spanning[1:]]
        total += abs(det_int(rows))
    return total


def triangulation(config):
    """The pulling triangulation as sorted tuples of 0-based indices."""
    return sorted(_pull_triangulation(config.affine_points, range(config.s)))
