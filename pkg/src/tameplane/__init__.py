"""Exact computation with polynomial automorphisms of the affine plane.

The package factors tame automorphisms into elementary and affine pieces,
normalizes the resulting words, realizes the origin-preserving subgroup with
identity differential inside a group of polynomial matrices, and carries a
small lab of group-theoretic consistency checks built on the same exact
arithmetic.
"""

from .scalars import QQ, PrimeField
from .ratfunc import RationalFunctionField, field_from_spec
from .poly import NEG_INF, Poly1, Poly2
from .linear import Mat2, PolyMat2, PolyVec, ProjPoint, det_polarization, nil_endo
from .automorphisms import (
    AffineAuto,
    ElemAuto,
    NotAnAutomorphism,
    PlaneAuto,
    as_affine,
    as_elementary,
    classify,
    compose_all,
    line_shear,
    scaled_shear,
    shear_in_y,
    swap_map,
)
from .amalgam import (
    AmalgamWord,
    WordType,
    borel_escape_witness,
    conjugate_to_corner,
    free_reduce,
    in_borel,
    invert,
    normal_form,
    shear_decompose,
    shear_recompose,
    vdk_factor,
    word_from_json,
    word_of_atoms,
    word_to_json,
    word_type,
)
from .matrixrep import (
    NotInMatrixGroup,
    PingPongResult,
    ShearFactor,
    base_value_membership,
    from_matrix,
    line_matrix,
    matrix_factor,
    matrix_recompose,
    matrix_reduced_word,
    pingpong_check,
    to_matrix,
)
from .textio import (
    ParseError,
    field_spec,
    format_auto,
    format_poly1,
    format_poly2,
    format_polymat,
    format_scalar,
    parse_auto,
    parse_poly1,
    parse_poly2,
    parse_polymat,
    parse_scalar,
)

__all__ = [
    "QQ",
    "PrimeField",
    "RationalFunctionField",
    "field_from_spec",
    "NEG_INF",
    "Poly1",
    "Poly2",
    "Mat2",
    "PolyMat2",
    "PolyVec",
    "ProjPoint",
    "det_polarization",
    "nil_endo",
    "AffineAuto",
    "ElemAuto",
    "NotAnAutomorphism",
    "PlaneAuto",
    "as_affine",
    "as_elementary",
    "classify",
    "compose_all",
    "line_shear",
    "scaled_shear",
    "shear_in_y",
    "swap_map",
    "AmalgamWord",
    "WordType",
    "borel_escape_witness",
    "conjugate_to_corner",
    "free_reduce",
    "in_borel",
    "invert",
    "normal_form",
    "shear_decompose",
    "shear_recompose",
    "vdk_factor",
    "word_from_json",
    "word_of_atoms",
    "word_to_json",
    "word_type",
    "NotInMatrixGroup",
    "PingPongResult",
    "ShearFactor",
    "base_value_membership",
    "from_matrix",
    "line_matrix",
    "matrix_factor",
    "matrix_recompose",
    "matrix_reduced_word",
    "pingpong_check",
    "to_matrix",
    "ParseError",
    "field_spec",
    "format_auto",
    "format_poly1",
    "format_poly2",
    "format_polymat",
    "format_scalar",
    "parse_auto",
    "parse_poly1",
    "parse_poly2",
    "parse_polymat",
    "parse_scalar",
]

__version__ = "0.1.0"
