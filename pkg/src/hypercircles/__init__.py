"""Hypercircles: curves traced by Moebius units over a number field,
with exact constructions, implicitization and Weil-descent
reparametrization over Q."""

from .errors import (
    DegenerateUnitError,
    FieldMismatchError,
    HypercircleError,
    InconclusiveError,
    InexactDivisionError,
    NotRationalizedError,
    PreconditionError,
    ReducibleFieldError,
    SchemaError,
    StageError,
    UnreachablePointError,
)
from .exactnum import NFElement, NumberField, certify_irreducible, min_poly_over_Q
from .geometry import (
    affine_equivalence_witness,
    embed_nonprimitive,
    implicitize_normal,
    inverse_unit_equations,
    normal_curve_affine_map,
    normal_curve_projective_map,
    verify_hypercircle,
)
from .hypercircle import (
    Parametrization,
    hc_degree,
    inverse_point_map,
    is_line,
    is_primitive,
    parametrize_unit,
    points_at_infinity_principal,
    reduced_form,
    same_hypercircle,
    unit_through_three_points,
)
from .polyalg import MoebiusUnit, MultiPoly, RatFunc, UniPoly
from .weil import descente, find_rational_points, pipeline, reparametrize

__version__ = "0.1.0"
