"""Named configuration constructors and the shipped fixture corpus.

Each constructor returns a Configuration; corpus() pairs them with the
expected classification verdicts used by the CLI fixture files and the
acceptance suite.
"""

from itertools import product as iter_product
from math import gcd

from gkzrational.errors import ConfigurationError
from gkzrational.intlinalg import IntMatrix
from gkzrational.polytope import Configuration


def gauss_square():
    """The 2x2-determinant configuration: the smallest rational one."""
    return Configuration([[1, 0, 1, 0],
                          [0, 1, 0, 1],
                          [0, 1, 1, 0]])


def scroll():
    """Two triples of equidistant points on parallel lines: the Cayley
    configuration of {0,1,2} with itself, a rational normal scroll."""
    return Configuration([[1, 1, 1, 0, 0, 0],
                          [0, 0, 0, 1, 1, 1],
                          [0, 1, 2, 0, 1, 2]])


def veronese_six_points():
    """All lattice points of twice the unimodular triangle; the toric
    variety is the Veronese surface."""
    return Configuration([[2, 1, 0, 1, 0, 0],
                          [0, 1, 2, 0, 1, 0],
                          [0, 0, 0, 1, 1, 2]])


def wedge(p, q):
    """Two segments through a common origin in the plane with
    primitive direction multiples p < q."""
    if not (1 <= p <= q) or gcd(p, q) != 1:
        raise ConfigurationError("need 1 <= p <= q coprime")
    return Configuration([[1, 1, 1, 1, 1],
                          [0, p, q, 0, 0],
                          [0, 0, 0, p, q]])


def axis_pairs(p, q):
    """Six points {q e_i, -p e_i} on the three coordinate axes of
    3-space: an octahedron for p > 0, a skew triangular prism for
    p < 0."""
    if q <= 0 or p == 0 or gcd(p, q) != 1 or q == -p:
        raise ConfigurationError("need q > 0, p nonzero, gcd(p,q)=1, q != -p")
    cols = []
    for i in range(3):
        for v in (q, -p):
            e = [1, 0, 0, 0]
            e[1 + i] = v
            cols.append(e)
    return Configuration([[c[i] for c in cols] for i in range(4)])


def octahedron(p=1, q=1):
    if p <= 0:
        raise ConfigurationError("octahedron needs p > 0")
    return axis_pairs(p, q)


def skew_prism(p=-2, q=1):
    if p >= 0:
        raise ConfigurationError("the prism case needs p < 0")
    return axis_pairs(p, q)


def axis_pairs_with_origin(p, q):
    """The seven-point configuration: the origin together with
    axis_pairs(p, q)."""
    base = axis_pairs(p, q)
    cols = [[1, 0, 0, 0]] + [list(base.column(j)) for j in range(6)]
    return Configuration([[c[i] for c in cols] for i in range(4)])


def product_of_simplices(p, q):
    """Delta_p x Delta_q: columns indexed by (i, j) in lexicographic
    order, with indicator rows for i and coordinate rows for j."""
    cols = []
    for i in range(p + 1):
        for j in range(q + 1):
            col = [0] * (p + 1) + [0] * q
            col[i] = 1
            if j > 0:
                col[p + j] = 1
            cols.append(col)
    return Configuration([[c[k] for c in cols] for k in range(p + 1 + q)])


def simplex_multiple(r, q):
    """All lattice points of r * Delta_q, homogenized: columns are the
    monomial exponents of degree r in q+1 variables."""
    if r < 1 or q < 1:
        raise ConfigurationError("need r >= 1 and q >= 1")
    cols = sorted(
        (e for e in iter_product(range(r + 1), repeat=q + 1) if sum(e) == r),
        reverse=True)
    return Configuration([[c[k] for c in cols] for k in range(q + 1)])


def segment_points(r):
    """All integer points of the segment [0, r], homogenized."""
    return Configuration([[1] * (r + 1), list(range(r + 1))])


def cayley_of_segments(ends):
    """Cayley configuration of full integer segments [0, m_i]: groups
    are listed in order, each contributing the points 0..m_i."""
    k = len(ends)
    cols = []
    for i, m in enumerate(ends):
        for v in range(m + 1):
            col = [0] * k + [0]
            col[i] = 1
            col[k] = v
            cols.append(col)
    return Configuration([[c[j] for c in cols] for j in range(k + 1)])


def cayley_segment_pair():
    """Cayley configuration of {0,1} and {0,2}."""
    return Configuration([[1, 1, 0, 0],
                          [0, 0, 1, 1],
                          [0, 1, 0, 2]])


def line_configuration(ks):
    """d = 2 configuration [[1,...,1], [k_1,...,k_s]]."""
    ks = sorted(set(int(k) for k in ks))
    return Configuration([[1] * len(ks), ks])


def corpus():
    """The shipped fixture corpus: name -> (Configuration, expected
    verdict)."""
    entries = {
        "gauss_square": (gauss_square(), "Rational"),
        "scroll": (scroll(), "Rational"),
        "veronese_six_points": (veronese_six_points(), "NotRational"),
        "wedge_1_2": (wedge(1, 2), "NotRational"),
        "octahedron_1_1": (octahedron(1, 1), "NotRational"),
        "skew_prism": (skew_prism(-2, 1), "NotRational"),
        "seven_points_1_2": (axis_pairs_with_origin(1, 2), "NotRational"),
        "cayley_segments_01_02": (cayley_segment_pair(), "Rational"),
    }
    for p in (1, 2):
        for q in (1, 2):
            verdict = "Rational" if p == q else "Degenerate"
            entries[f"product_simplices_{p}_{q}"] = (product_of_simplices(p, q), verdict)
    for r in (1, 2, 3):
        for q in (1, 2, 3):
            if r == 1:
                verdict = "Degenerate"  # unimodular simplex: a pyramid
            else:
                verdict = "NotRational"
            entries[f"simplex_multiple_{r}_{q}"] = (simplex_multiple(r, q), verdict)
    return entries


def write_corpus(directory):
    """Write the corpus as JSON files (used to generate the shipped
    fixture data)."""
    import json
    import pathlib

    directory = pathlib.Path(directory)
    directory.mkdir(parents=True, exist_ok=True)
    for name, (config, verdict) in sorted(corpus().items()):
        payload = {"name": name,
                   "config": config.to_json_dict(),
                   "expected_verdict": verdict}
        (directory / f"{name}.json").write_text(
            json.dumps(payload, indent=1, sort_keys=True) + "\n")


def corpus_data_dir():
    """Directory holding the shipped JSON corpus."""
    import pathlib

    return pathlib.Path(__file__).parent / "data"


def load_corpus_json():
    """The shipped corpus files as {name: payload}."""
    import json

    out = {}
    for path in sorted(corpus_data_dir().glob("*.json")):
        out[path.stem] = json.loads(path.read_text())
    return out
