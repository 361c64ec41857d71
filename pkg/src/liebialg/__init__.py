"""Exact construction and certification of coisotropic subalgebras of Lie bialgebras."""

from .field import GaussianRational, I, format_scalar, parse_scalar
from .linalg import ZERO_PAIR, kernel_basis, rref, solve_proportionality
from .liealg import (
    LieAlgebra,
    Verdict,
    ad_matrix,
    adjoint_group_action,
    bracket,
    jacobi_check,
    killing_form,
    sl2,
    su2,
)
from .multivector import Multivector, ad_invariant, contract, schouten, wedge
from .bialgebra import (
    Subspace,
    annihilator,
    cobracket,
    drinfeld_double,
    dual_bracket,
    is_coisotropic,
    is_lagrangian,
    is_r_matrix,
    is_subalgebra,
    manin_triple_self_test,
)
from .construction import (
    build_h,
    check_condi,
    construct,
    eta_from_group,
    h_from_group,
    inversion_property_check,
)
from .classical import (
    boxed_family,
    build_series,
    format_root,
    line_condition,
    parse_root,
    reproduce_families,
    standard_r_matrix,
    vanish_conditions,
)

__version__ = "0.1.0"
