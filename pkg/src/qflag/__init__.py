"""Exact computations on quantum SU_N, its flag calculus and bundles."""

from .qfield import Field, QScalar, q_power
from .ncalg import (NCPoly, TensorPoly, antipode, coproduct, counit, equals, get_algebra, mat,
                    multiply, normal_form, quantum_determinant, su, um)
from .killing import closed_Q, killing_Q, r_bar_form, r_form
from .calculus import Omega1, bc_coset, calculus, coset, ext_d, right_act, theta
from .bundles import (ALPHA, BETA, GAMMA, SubalgebraElement, coaction, connection_project,
                      covariant_derivative, dolbeault, galois_ver, galois_ver_inv, hopf_map,
                      is_coinvariant, line_bundle_degree)
from .verify import run_suite, suite_names

__version__ = "0.1.0"

__all__ = [
    "ALPHA", "BETA", "GAMMA", "Field", "NCPoly", "Omega1", "QScalar", "SubalgebraElement",
    "TensorPoly", "antipode", "bc_coset", "calculus", "closed_Q", "coaction",
    "connection_project", "coproduct", "coset", "counit", "covariant_derivative", "dolbeault",
    "equals", "ext_d", "galois_ver", "galois_ver_inv", "get_algebra", "hopf_map",
    "is_coinvariant", "killing_Q", "line_bundle_degree", "mat", "multiply", "normal_form",
    "q_power", "quantum_determinant", "r_bar_form", "r_form", "right_act", "run_suite", "su",
    "suite_names", "theta", "um",
]
