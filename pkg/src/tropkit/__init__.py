"""tropkit: exact-arithmetic tropical geometry toolkit."""

from .enumeration import (FloorDiagram, TropicalTree, count_curves,
                          count_markings, cross_ratios,
                          enumerate_floor_diagrams, kontsevich_N,
                          node_polynomial)
from .errors import DomainError, EmptyCurve, InputError, TropkitError
from .jacobian import Jacobian, JacobianPoint, abel_jacobi, jac_equal, period_matrix
from .metricgraph import (Divisor, Edge, MetricGraph, RationalFunction,
                          canonical_divisor, contract_leaf, divisor_of,
                          edge_point, genus, linearly_equivalent, modify,
                          rank, reduced_divisor, riemann_roch_check,
                          trees_equivalent, vertex_point)
from .planecurve import (IntersectionReport, PlaneTropicalCurve, Ray, Segment,
                         bezout_total, check_balanced, corner_locus, degree,
                         stable_intersection, standard_line)
from .polynomial import (LatticePolytope, Monomial, TropicalPolynomial,
                         active_terms, concavify, evaluate, functionally_equal,
                         newton_polytope, restrict_to_active, trop_product)
from .semiring import NEG_INF, ZERO, TropicalScalar, trop_add, trop_mul, trop_pow

__version__ = "0.1.0"

__all__ = [
    "TropicalScalar", "NEG_INF", "ZERO", "trop_add", "trop_mul", "trop_pow",
    "TropicalPolynomial", "Monomial", "LatticePolytope", "evaluate",
    "trop_product", "newton_polytope", "concavify", "active_terms",
    "restrict_to_active", "functionally_equal",
    "PlaneTropicalCurve", "Segment", "Ray", "IntersectionReport",
    "standard_line", "corner_locus", "check_balanced", "stable_intersection",
    "bezout_total", "degree",
    "MetricGraph", "Edge", "Divisor", "RationalFunction", "vertex_point",
    "edge_point", "genus", "canonical_divisor", "divisor_of",
    "reduced_divisor", "linearly_equivalent", "rank", "riemann_roch_check",
    "modify", "contract_leaf", "trees_equivalent",
    "Jacobian", "JacobianPoint", "period_matrix", "abel_jacobi", "jac_equal",
    "FloorDiagram", "enumerate_floor_diagrams", "count_markings",
    "count_curves", "kontsevich_N", "node_polynomial", "TropicalTree",
    "cross_ratios",
    "TropkitError", "DomainError", "InputError", "EmptyCurve",
]
