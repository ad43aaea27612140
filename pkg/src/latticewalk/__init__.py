"""Exact Groebner bases, generic walks and truncated Groebner fans for lattice ideals."""

from .buchberger import GroebnerBasis, autoreduce, initial_forms, is_groebner, truncated_buchberger
from .fan import FanCell, cone_of, enumerate_fan, flip, locate_cell
from .ip import feasibility_ideal, optimize, solve_feasibility, toric_ideal
from .lattice import kernel_basis, lll_reduce, saturate
from .order import (
    ALL, Grading, LinearBound, RhsBound, TermOrder, WalkContext, compare, degree, facet_compare,
    is_candidate, omega_contains, orient, validate_positive_grading, weight_order)
from .walk import WalkStats, generic_walk

__version__ = "0.1.0"

__all__ = [
    "ALL", "FanCell", "Grading", "GroebnerBasis", "LinearBound", "RhsBound", "TermOrder", "WalkContext",
    "WalkStats", "autoreduce", "compare", "cone_of", "degree", "enumerate_fan", "facet_compare",
    "feasibility_ideal", "flip", "generic_walk", "initial_forms", "is_candidate", "is_groebner",
    "kernel_basis", "lll_reduce", "locate_cell", "omega_contains", "optimize", "orient", "saturate",
    "solve_feasibility", "toric_ideal", "truncated_buchberger", "validate_positive_grading", "weight_order",
]
