"""Exact-arithmetic engine for su(2,2|N) and its Galilean superconformal contraction."""

from .scalars import GaussianRational, LaurentPoly, parse_scalar, render_scalar
from .core import Gen, LinearCombination, SuperAlgebra, verify_graded_jacobi, compute_center
from .builder import build_su22N, build_su22n_with_report
from .projection import build_omega, build_projectors, projected_su22n
from .contraction import (WeightAssignment, contract, rescale, standard_weights, verify_target,
                          contracted_su22n, galilean_target)
from .search import SearchSpec, scan_weights

__all__ = [
    "GaussianRational", "LaurentPoly", "parse_scalar", "render_scalar",
    "Gen", "LinearCombination", "SuperAlgebra", "verify_graded_jacobi", "compute_center",
    "build_su22N", "build_su22n_with_report",
    "build_omega", "build_projectors", "projected_su22n",
    "WeightAssignment", "contract", "rescale", "standard_weights", "verify_target",
    "contracted_su22n", "galilean_target",
    "SearchSpec", "scan_weights",
]
__version__ = "0.1.0"
