"""Exploration of two-generator matrix groups through palindromic axes.

The library models elements of PSL(2, C) as unimodular matrices up to
sign, indexes the primitive conjugacy classes of the rank-2 free group by
rationals through the Stern-Brocot tree, evaluates palindromic
representatives in a concrete representation, and measures where their
axes cross the core geodesic of the generator pair. The boundedness of
those crossing positions is the discreteness evidence reported by the
probe.
"""
from .config import DEFAULT_ESCAPE, DEFAULT_PLATEAU, DEFAULT_TOLERANCES, Tolerances
from .errors import (
    CommutingPair,
    DegenerateAxis,
    DegenerateGeodesic,
    ElementaryGroup,
    IdentityElement,
    IdentityImage,
    InvalidRational,
    NotOrthogonal,
    NotPalindrome,
    OrthogonalityViolation,
    PalcoreError,
    SchemeViolation,
    SharedEndpoint,
    SingularMatrix,
    TrivialPalindromization,
)
from .farey import (
    FareyNode,
    are_associates,
    christoffel,
    enumerate_farey,
    farey_parents,
    farey_to_csv,
    primitive_word,
    slope_depth,
)
from .geodesics import (
    VERTICAL_AXIS,
    Geodesic,
    are_orthogonal,
    axis,
    common_perpendicular,
    geodesic_distance,
    half_turn_conjugate,
    line_matrix,
    orthogonality_residual,
    position_on_vertical_axis,
    transform,
)
from .probe import (
    BOUNDED_CONSISTENT_WITH_GF,
    INCONCLUSIVE,
    PARABOLIC_ENDS_DETECTED,
    UNBOUNDED_EVIDENCE_NONDISCRETE,
    JorgensenResult,
    ProbeReport,
    SampleEntry,
    SpectrumEntry,
    WitnessRecord,
    jorgensen_baseline,
    pi_spectrum,
    probe,
    sample_palindromizations,
    spectrum_to_csv,
    witness_search,
)
from .representation import (
    Hexagon,
    PiImage,
    Representation,
    build,
    hexagon,
    pair_perpendicular_by_axes,
    palindromize,
    pi_of_pair,
    pi_of_palindrome,
    rational_pi,
    rep_from_json,
)
from .sl2c import (
    INFINITY,
    GroupElement,
    boundary_key,
    chordal_distance,
    classify,
    fixed_points,
    is_identity,
    matrix_from_json,
    normalize,
    psl_distance,
    psl_equal,
)
from .words import (
    AbelianImage,
    EllipticPowerFactorization,
    Word,
    abelianize,
    cyclic_reduce,
    cyclically_equal,
    elliptic_power_factorization,
    evaluate,
    expand_generators,
    is_palindrome,
    is_primitive,
    nielsen_reduce_pair,
    parse,
    reduce,
    reduced_words,
    reverse,
    rewrite_in_generators,
)

__version__ = "0.1.0"

__all__ = [
    "AbelianImage",
    "BOUNDED_CONSISTENT_WITH_GF",
    "CommutingPair",
    "DEFAULT_ESCAPE",
    "DEFAULT_PLATEAU",
    "DEFAULT_TOLERANCES",
    "DegenerateAxis",
    "DegenerateGeodesic",
    "ElementaryGroup",
    "EllipticPowerFactorization",
    "FareyNode",
    "Geodesic",
    "GroupElement",
    "Hexagon",
    "INCONCLUSIVE",
    "INFINITY",
    "IdentityElement",
    "IdentityImage",
    "InvalidRational",
    "JorgensenResult",
    "NotOrthogonal",
    "NotPalindrome",
    "OrthogonalityViolation",
    "PARABOLIC_ENDS_DETECTED",
    "PalcoreError",
    "PiImage",
    "ProbeReport",
    "Representation",
    "SampleEntry",
    "SchemeViolation",
    "SharedEndpoint",
    "SingularMatrix",
    "SpectrumEntry",
    "Tolerances",
    "TrivialPalindromization",
    "UNBOUNDED_EVIDENCE_NONDISCRETE",
    "VERTICAL_AXIS",
    "WitnessRecord",
    "Word",
    "abelianize",
    "are_associates",
    "are_orthogonal",
    "axis",
    "boundary_key",
    "build",
    "chordal_distance",
    "christoffel",
    "classify",
    "common_perpendicular",
    "cyclic_reduce",
    "cyclically_equal",
    "elliptic_power_factorization",
    "enumerate_farey",
    "evaluate",
    "expand_generators",
    "farey_parents",
    "farey_to_csv",
    "fixed_points",
    "geodesic_distance",
    "half_turn_conjugate",
    "hexagon",
    "is_identity",
    "is_palindrome",
    "is_primitive",
    "jorgensen_baseline",
    "line_matrix",
    "matrix_from_json",
    "nielsen_reduce_pair",
    "normalize",
    "orthogonality_residual",
    "pair_perpendicular_by_axes",
    "palindromize",
    "parse",
    "pi_of_pair",
    "pi_of_palindrome",
    "pi_spectrum",
    "position_on_vertical_axis",
    "primitive_word",
    "probe",
    "psl_distance",
    "psl_equal",
    "rational_pi",
    "reduce",
    "reduced_words",
    "rep_from_json",
    "reverse",
    "rewrite_in_generators",
    "sample_palindromizations",
    "slope_depth",
    "spectrum_to_csv",
    "transform",
    "witness_search",
]
