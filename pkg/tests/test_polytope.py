from fractions import Fraction

import pytest

from gkzrational.circuits import Circuit, realize_circuit
from gkzrational.errors import ConfigurationError
from gkzrational.fixtures import (
    gauss_square,
    octahedron,
    simplex_multiple,
    veronese_six_points,
    wedge,
)
from gkzrational.intlinalg import IntMatrix
from gkzrational.polytope import (
    Configuration,
    facial_subsets,
    interior_points,
    is_pyramid,
    is_spanning,
    normalized_volume,
    smallest_face_containing,
)

from helpers import circuit_classes, random_unimodular, rng


def unimodular_simplex(d):
    return Configuration(IntMatrix.identity(d))


def test_validation_rejects_bad_configurations():
    with pytest.raises(ConfigurationError):
        Configuration([[1, 2], [2, 4]])  # rank < d
    with pytest.raises(ConfigurationError):
        Configuration([[1, 1], [0, 0]])  # repeated columns
    with pytest.raises(ConfigurationError):
        Configuration([[1, 2]])  # (1,1) not in the row span


def test_square_faces():
    faces = facial_subsets(gauss_square())
    sizes = sorted(len(f.indices) for f in faces)
    assert sizes == [1, 1, 1, 1, 2, 2, 2, 2, 4]


def test_simplex_every_subset_is_a_face():
    config = unimodular_simplex(3)
    faces = facial_subsets(config)
    assert len(faces) == 2 ** 3 - 1
    assert {frozenset(f.indices) for f in faces} == {
        frozenset(s) for s in
        [(0,), (1,), (2,), (0, 1), (0, 2), (1, 2), (0, 1, 2)]}


def test_veronese_faces():
    faces = facial_subsets(veronese_six_points())
    verts = sorted(tuple(sorted(f.indices)) for f in faces if len(f.indices) == 1)
    edges = sorted(tuple(sorted(f.indices)) for f in faces if len(f.indices) == 3)
    assert verts == [(0,), (2,), (5,)]
    assert edges == [(0, 1, 2), (0, 3, 5), (2, 4, 5)]


def test_face_witnesses_are_exact():
    for config in (gauss_square(), veronese_six_points(), wedge(1, 2)):
        for face in facial_subsets(config):
            for j in range(config.s):
                value = sum(Fraction(w) * x
                            for w, x in zip(face.w, config.column(j)))
                if j in face.indices:
                    assert value == face.c
                else:
                    assert value < face.c


def test_face_lattice_closed_under_nonempty_intersection():
    for config in (gauss_square(), veronese_six_points(), octahedron(1, 1)):
        keys = {f.indices for f in facial_subsets(config)}
        for a in keys:
            for b in keys:
                inter = a & b
                if inter:
                    assert inter in keys


def test_octahedron_equator_is_spanning():
    config = octahedron(1, 1)
    assert is_spanning(config, {0, 1, 2, 3})
    assert not is_spanning(config, {0})


def test_wedge_spanning_circuit():
    config = wedge(1, 2)
    assert is_spanning(config, {1, 2, 3, 4})
    assert not is_spanning(config, {0, 1, 2})


def test_spanning_is_monotone():
    config = octahedron(1, 1)
    r = rng(31)
    for _ in range(10):
        size = r.randint(1, 5)
        s = set(r.sample(range(6), size))
        if is_spanning(config, s):
            t = s | {r.randrange(6)}
            assert is_spanning(config, t)


def test_smallest_face():
    config = gauss_square()
    face = smallest_face_containing(config, {0})
    assert face.indices == frozenset({0})


def test_normalized_volume_examples():
    assert normalized_volume(gauss_square()) == 2
    assert normalized_volume(unimodular_simplex(4)) == 1
    assert normalized_volume(veronese_six_points()) == 4


def test_volume_equals_rho_on_circuit_classes():
    for b in circuit_classes(max_abs=3, max_len=5):
        config = realize_circuit(b)
        assert normalized_volume(config) == Circuit(b).rho


def test_volume_invariance():
    r = rng(32)
    config = veronese_six_points()
    base = normalized_volume(config)
    for _ in range(5):
        u = random_unimodular(r, config.d)
        transformed = Configuration(u.mul(config.matrix))
        assert normalized_volume(transformed) == base
        perm = list(range(config.s))
        r.shuffle(perm)
        permuted = Configuration(config.matrix.submatrix_columns(perm))
        assert normalized_volume(permuted) == base


def test_interior_points():
    assert interior_points(simplex_multiple(2, 2)) == []
    config = simplex_multiple(3, 2)
    inside = interior_points(config)
    assert len(inside) == 1
    assert config.column(inside[0]) == (1, 1, 1)
    assert interior_points(gauss_square()) == []


def test_pyramid_detection():
    # cone over a planar set: apex found
    cone = Configuration([[1, 0, 0, 0],
                          [0, 1, 1, 1],
                          [0, 0, 1, 2],
                          [0, 0, 0, 3]])
    # column 0 is off the hyperplane of the rest
    assert is_pyramid(cone) == 0
    assert is_pyramid(gauss_square()) is None
    assert is_pyramid(unimodular_simplex(3)) == 0


def test_point_configuration():
    config = Configuration([[1]])
    assert facial_subsets(config)[0].indices == frozenset({0})
    assert normalized_volume(config) == 1
    assert is_pyramid(config) == 0
