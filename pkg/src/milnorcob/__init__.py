"""Exact GF(2) machinery for equivariant cobordism of Milnor hypersurfaces."""

from .criteria import (
    Certificate,
    SearchPolicy,
    build_linind_family,
    is_nonbounding,
    test_indecomposable,
    verify_linear_independence,
)
from .gf2poly import Poly, PolyContext, divide_by_linear_form, linear_form_poly, poly_add, poly_mul
from .linratfun import RationalFunction, lagrange_ii, lagrange_p, lagrange_q, rat_add, rat_is_zero, rat_to_polynomial
from .milnor import (
    FixedPoint,
    MilnorAction,
    eta_closed_formula,
    eta_fixed_point_sum,
    fixed_points,
    projective_class,
    tangential_rep,
    validate_pullback_action,
)
from .repring import GroupHom, RepElement, pullback, rep_mul
from .tomdieck import BMultiIndex, b_coefficient, check_integrality

__version__ = "0.1.0"
