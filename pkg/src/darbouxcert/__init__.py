"""Exact Newton-polytope integrability bounds and Darboux certificates.

The package analyzes polynomial derivations D = sum_i A_i d/dX_i with exact
arithmetic over Q(t1, ..., tk): it computes the support polytope and the
sparse bound B (the number of its nonnegative lattice points), verifies
Darboux polynomials, and builds machine-checkable first-integral
certificates from linear relations among cofactors.
"""

from .corpus import (
    CorpusInstance,
    FamilySpec,
    gen_dense,
    gen_figure_family,
    gen_optimality_family,
)
from .darboux import (
    Certificate,
    CofactorSupportError,
    DarbouxPair,
    RelationSpace,
    certificate_checks,
    cofactor,
    darboux_first_integral,
    rational_first_integral,
    relation_space_field,
    relation_space_rational,
    verify_certificate,
)
from .derivation import BoundsReport, Derivation, bounds_report
from .expressions import ParseError, format_poly, format_scalar, parse_expression
from .laurent import LaurentPoly, exact_divide
from .polytope import (
    Halfspace,
    IntPolytope,
    ccw_vertex_ring,
    contains_point,
    convex_hull,
    deg_nu,
    facets_2d,
    lattice_points_nonneg,
    minkowski_sum,
    newton_polytope,
    translate,
)
from .scalars import (
    FieldScalar,
    ParamPoly,
    Rational,
    param_components,
    param_gcd,
    param_lcm,
)
from .svgfig import emit_svg
from .systemfile import InputError, LoadedSystem, load_system, parse_system_data

__version__ = "0.1.0"

__all__ = [
    "BoundsReport",
    "Certificate",
    "CofactorSupportError",
    "CorpusInstance",
    "DarbouxPair",
    "Derivation",
    "FamilySpec",
    "FieldScalar",
    "Halfspace",
    "InputError",
    "IntPolytope",
    "LaurentPoly",
    "LoadedSystem",
    "ParamPoly",
    "ParseError",
    "Rational",
    "RelationSpace",
    "bounds_report",
    "ccw_vertex_ring",
    "certificate_checks",
    "cofactor",
    "contains_point",
    "convex_hull",
    "darboux_first_integral",
    "deg_nu",
    "emit_svg",
    "exact_divide",
    "facets_2d",
    "format_poly",
    "format_scalar",
    "gen_dense",
    "gen_figure_family",
    "gen_optimality_family",
    "lattice_points_nonneg",
    "load_system",
    "minkowski_sum",
    "newton_polytope",
    "param_components",
    "param_gcd",
    "param_lcm",
    "parse_expression",
    "parse_system_data",
    "rational_first_integral",
    "relation_space_field",
    "relation_space_rational",
    "translate",
    "verify_certificate",
]
