"""Exact computation of binary-form invariant rings and their syzygies."""

from .rings import (
    ContextMismatchError,
    NonIsobaricError,
    Polynomial,
    RingKind,
    VarContext,
    ZeroPolynomialError,
    coeff_vector,
    degree,
    gen_ring,
    is_isobaric_balanced,
    normalize,
    substitute,
    u_ring,
    weight_u,
    weight_x,
    x_ring,
)
from .linalg import RationalMatrix, nullspace, rank, solve_affine
from .exponents import grad, powers, powers2
from .derivations import (
    Derivation,
    ResidualDenominatorError,
    apply_derivation,
    expand_u_to_x,
    full_operator,
    grading_derivation,
    kernel_projection,
    lowering_derivation,
    project_x_to_u,
    raising_derivation,
    reduced_operator,
    u_lowering_derivation,
    u_raising_derivation,
    u_variable_in_x,
    x_variable_in_u,
)
from .invariants import (
    DegreeMismatchError,
    Generator,
    GeneratorSet,
    InvariantBasis,
    UnsupportedFormDegreeError,
    invariant_basis,
    invariant_basis_direct,
    is_member,
    known_degree_table,
    mingenset,
    verify_invariant_u,
    verify_invariant_x,
)
from .syzygies import Syzygy, check_syzygy, expand_in_generators, minimal_syzygies, syzygy_basis
from .textio import PolyParseError, format_poly, parse_poly
from .fixtures import FixtureRecord, fixture_generator_set, load_fixtures

__version__ = "0.1.0"
