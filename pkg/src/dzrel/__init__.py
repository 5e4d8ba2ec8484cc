"""Exact construction and verification of period polynomial relations among
double zeta values of odd weight."""

from .exact import HomPoly, Mat2, QMatrix, binom
from .formal import build_space, check_relation
from .period import dim_cusp_forms, dim_modular_forms, is_period_polynomial, period_space_basis
from .relation import Relation, b_coeffs, c_coeffs, type1_relation, type2_relation
from .zagier import canonical_relation, combine_kernel_element, relation_rank, zagier_matrix

__version__ = "0.1.0"
