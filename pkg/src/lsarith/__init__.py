"""Exact Langlands-Shahidi bookkeeping for classical maximal parabolics and
explicit GL(2) intertwining operators over cyclotomic fields."""

from .lsdecomp import LSReport, adjoint_levels, h_exponents, is_critical, ls_report
from .parabolic import MaximalParabolic, all_parabolics, point_of_evaluation
from .rootsys import CartanType, build_root_datum

__version__ = "0.1.0"

__all__ = [
    "CartanType",
    "LSReport",
    "MaximalParabolic",
    "adjoint_levels",
    "all_parabolics",
    "build_root_datum",
    "h_exponents",
    "is_critical",
    "ls_report",
    "point_of_evaluation",
]
