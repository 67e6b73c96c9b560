import pytest

from gkzrational.cayley import (
    CayleyStructure,
    classify,
    detect_cayley,
    detect_simplex_multiple,
    is_essential,
)
from gkzrational.circuits import Circuit, enumerate_circuits, is_balanced, realize_circuit
from gkzrational.errors import SearchSpaceExceeded
from gkzrational.fixtures import (
    axis_pairs_with_origin,
    cayley_segment_pair,
    corpus,
    gauss_square,
    octahedron,
    product_of_simplices,
    scroll,
    simplex_multiple,
    skew_prism,
    veronese_six_points,
    wedge,
)
from gkzrational.intlinalg import IntMatrix
from gkzrational.polytope import Configuration, interior_points, is_spanning

from helpers import random_unimodular, rng


def test_scroll_detection():
    structures = detect_cayley(scroll())
    assert structures
    top = structures[0]
    assert top.groups == ((0, 1, 2), (3, 4, 5))
    assert top.factors == (((0,), (1,), (2,)), ((0,), (1,), (2,)))
    ok, _ = is_essential(top)
    assert ok


def test_square_detection():
    structures = detect_cayley(gauss_square())
    partitions = {s.groups for s in structures}
    assert ((0, 2), (1, 3)) in partitions
    assert all(is_essential(s)[0] for s in structures)


def test_veronese_has_no_cayley_structure():
    assert detect_cayley(veronese_six_points()) == []


def test_essential_counterexample():
    # factors {0} and {0,1}: the singleton violates the condition
    config = Configuration([[1, 1, 0], [0, 0, 1], [0, 1, 0]])
    structures = detect_cayley(config)
    assert structures
    found = False
    for cs in structures:
        ok, witness = is_essential(cs)
        if not ok and any(len(cs.factors[i]) == 1 for i in witness):
            found = True
    assert found


def test_three_unit_squares_are_essential():
    # Cayley of three copies of the unit square in Z^2
    square = [(0, 0), (1, 0), (0, 1), (1, 1)]
    cols = []
    for i in range(3):
        for p in square:
            e = [0, 0, 0, 0, 0]
            e[i] = 1
            e[3], e[4] = p
            cols.append(e)
    config = Configuration([[c[k] for c in cols] for k in range(5)])
    structures = detect_cayley(config)
    top = next(s for s in structures if s.r == 2)
    ok, _ = is_essential(top)
    assert ok


def test_kernel_check_rejects_mismatched_partitions():
    # on the octahedron no coordinate-pair partition has indicators in
    # the row span, so nothing is detected at all
    assert detect_cayley(octahedron(1, 1)) == []


def test_detect_simplex_multiple():
    assert detect_simplex_multiple(veronese_six_points()) == (2, 2)
    assert detect_simplex_multiple(gauss_square()) is None
    assert detect_simplex_multiple(Configuration(IntMatrix.identity(4))) == (1, 3)
    assert detect_simplex_multiple(simplex_multiple(3, 2)) == (3, 2)
    # a simplex with the right volume but a missing lattice point
    partial = Configuration([[2, 0, 0, 1], [0, 2, 0, 1], [0, 0, 2, 0]])
    assert detect_simplex_multiple(partial) is None


def test_classify_fixture_corpus():
    for name, (config, expected) in sorted(corpus().items()):
        result = classify(config)
        assert result.verdict == expected, (name, result.verdict, expected)


def test_classify_rules():
    assert classify(gauss_square()).rule == "essential-cayley"
    assert classify(scroll()).rule == "essential-cayley"
    assert classify(product_of_simplices(1, 2)).rule == "three-parallel-lines"
    assert classify(veronese_six_points()).rule == "low-dimension"
    assert classify(wedge(1, 2)).rule == "low-dimension"
    assert classify(octahedron(1, 1)).rule == "low-dimension"
    assert classify(skew_prism()).rule == "low-dimension"
    assert classify(axis_pairs_with_origin(1, 2)).rule == "unbalanced-spanning-circuit"
    assert classify(Configuration([[1]])).rule == "point"


def test_products_rational_iff_equal():
    for p in (1, 2):
        for q in (1, 2):
            verdict = classify(product_of_simplices(p, q)).verdict
            assert (verdict == "Rational") == (p == q)


def test_simplex_multiples_never_rational():
    config = simplex_multiple(2, 4)  # d = 5, exhaustive circuit search feasible
    result = classify(config)
    assert result.verdict != "Rational"
    big = simplex_multiple(3, 5)  # s = 56: circuit search must hit its budget
    result_big = classify(big)
    assert result_big.verdict != "Rational"
    assert any("circuit search skipped" in n for n in result_big.notes)


def test_classification_witness_shapes():
    rational = classify(gauss_square())
    assert isinstance(rational.witness, CayleyStructure)
    payload = rational.to_json_dict()
    assert payload["witness"]["type"] == "cayley"
    notrational = classify(axis_pairs_with_origin(1, 2))
    assert notrational.witness["type"] == "circuit"
    support = [i - 1 for i in notrational.witness["support"]]
    c = Circuit(notrational.witness["b"])
    assert is_balanced(c) is None
    assert is_spanning(axis_pairs_with_origin(1, 2), support)


def test_lemma_balanced_iff_all_pairs_essential_cayley():
    for b in [(1, 1, -1, -1), (2, 1, -2, -1), (1, -2, 1), (3, -1, -1, -1),
              (2, 2, -1, -1, -1, -1), (3, 1, -3, -1), (1, 1, 1, -1, -1, -1)]:
        circuit = Circuit(b)
        config = realize_circuit(b)
        structures = detect_cayley(config)
        has_pairs = any(
            all(len(g) == 2 for g in cs.groups) and is_essential(cs)[0]
            for cs in structures)
        assert has_pairs == (is_balanced(circuit) is not None), b


def test_rational_verdicts_have_no_unbalanced_spanning_circuit():
    for name, (config, expected) in corpus().items():
        if expected != "Rational":
            continue
        for c in enumerate_circuits(config):
            if is_balanced(c) is None:
                assert not is_spanning(config, c.support), (name, c.b)
        assert interior_points(config) == []


def test_roundtrip_random_essential_cayley():
    r = rng(61)
    trials = 0
    while trials < 6:
        rdim = r.choice([1, 2])
        groups = rdim + 1
        factors = []
        for _ in range(groups):
            npts = r.randint(2, 3)
            pts = set()
            while len(pts) < npts:
                pts.add(tuple(r.randint(0, 2) for _ in range(rdim)))
            factors.append(sorted(pts))
        cols = []
        for i, factor in enumerate(factors):
            for p in factor:
                e = [0] * groups + list(p)
                e[i] = 1
                cols.append(e)
        if len({tuple(c) for c in cols}) != len(cols):
            continue
        matrix = IntMatrix([[c[k] for c in cols] for k in range(groups + rdim)])
        try:
            config = Configuration(matrix)
        except Exception:
            continue
        structures = detect_cayley(config)
        expected_partition = []
        idx = 0
        for factor in factors:
            expected_partition.append(tuple(range(idx, idx + len(factor))))
            idx += len(factor)
        partitions = {cs.groups for cs in structures}
        assert tuple(expected_partition) in partitions
        if any(is_essential(cs)[0] for cs in structures):
            assert classify(config).verdict == "Rational"
        trials += 1


def test_classify_invariance():
    r = rng(62)
    for config_fn, expected in [(gauss_square, "Rational"),
                                (veronese_six_points, "NotRational"),
                                (lambda: product_of_simplices(1, 2), "Degenerate")]:
        config = config_fn()
        for _ in range(3):
            u = random_unimodular(r, config.d)
            transformed = Configuration(u.mul(config.matrix))
            assert classify(transformed).verdict == expected
            perm = list(range(config.s))
            r.shuffle(perm)
            permuted = Configuration(config.matrix.submatrix_columns(perm))
            assert classify(permuted).verdict == expected


def test_search_budget_raises():
    with pytest.raises(SearchSpaceExceeded):
        detect_cayley(product_of_simplices(2, 2), node_budget=2)
