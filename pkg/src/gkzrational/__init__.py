"""Exact-arithmetic analysis of integer point configurations: circuit
combinatorics, Cayley structure, hypergeometric certification, and
toric residues, all over arbitrary-precision rationals."""

from gkzrational.cayley import (
    CayleyStructure,
    Classification,
    classify,
    detect_cayley,
    detect_simplex_multiple,
    is_essential,
)
from gkzrational.circuits import (
    Circuit,
    CircuitSeriesSpec,
    balanced_series,
    canonical_coefficient,
    circuit_discriminant,
    circuit_gkz_rational,
    enumerate_circuits,
    is_balanced,
    realize_circuit,
)
from gkzrational.errors import (
    BudgetExceeded,
    ConfigurationError,
    DegenerateInstance,
    DomainError,
    GKZError,
    ParseError,
    SearchSpaceExceeded,
)
from gkzrational.exprparse import parse
from gkzrational.groebner import GroebnerBasis, buchberger
from gkzrational.intlinalg import IntMatrix, integer_kernel, rank, smith_normal_form
from gkzrational.kernel import KERNEL_NAME
from gkzrational.laurent import LaurentPolynomial, RationalFunction, differentiate
from gkzrational.polytope import (
    Configuration,
    Face,
    facial_subsets,
    interior_points,
    is_pyramid,
    is_spanning,
    normalized_volume,
    smallest_face_containing,
)
from gkzrational.residue import (
    ResidueProblem,
    residue_witness,
    toric_jacobian,
    toric_residue,
    univariate_residue_oracle,
)
from gkzrational.resultant import generic_resultant, sylvester_resultant
from gkzrational.weyl import (
    EulerOp,
    OctahedronSeries,
    ToricBinomialOp,
    apply_toric,
    homogeneity_degree,
    octahedron_coefficient,
    octahedron_quotients,
    toric_ideal_generators,
    verify_hypergeometric,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
