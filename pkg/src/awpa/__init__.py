"""Exact symbolic computation in affine wreath product algebras.

The package builds graded Frobenius superalgebras F from structure
constants, forms the affine wreath product algebra A_n(F) with its
normal-form monomial basis x^alpha * b * pi, and computes cyclotomic
quotients together with their trace forms.  All coefficients live in
cyclotomic number fields Q(zeta_m); nothing is approximated.

Values are immutable after construction and all operations are pure, so
algebras and elements can be shared freely across threads.
"""

from .cyclotomic import (
    CycloElem,
    CycloParams,
    CyclotomicAlgebra,
    InductionStructure,
    induction_basis,
    level_one_matches_wreath,
    make_params,
    nakayama_check,
)
from .engine import AwpaAlgebra, AwpaElem, PolyModElem
from .frobenius import (
    AlgElem,
    FrobAlg,
    builtin,
    check_frobenius_morphism,
    clifford_algebra,
    cyclic_group_algebra,
    dual_numbers_algebra,
    group_algebra,
    opposite_algebra,
    parse_alg_elem,
    symmetric_group_algebra,
    taft_algebra,
    trivial_algebra,
)
from .scalars import CycScalar, parse_scalar, root_of_unity
from .textio import element_str, parse_element
from .verify import run_suite
from .wreath import TensorElem, WreathElem, superpermute

__all__ = [
    "AlgElem",
    "AwpaAlgebra",
    "AwpaElem",
    "CycScalar",
    "CycloElem",
    "CycloParams",
    "CyclotomicAlgebra",
    "FrobAlg",
    "InductionStructure",
    "PolyModElem",
    "TensorElem",
    "WreathElem",
    "builtin",
    "check_frobenius_morphism",
    "clifford_algebra",
    "cyclic_group_algebra",
    "dual_numbers_algebra",
    "element_str",
    "group_algebra",
    "induction_basis",
    "level_one_matches_wreath",
    "make_params",
    "nakayama_check",
    "opposite_algebra",
    "parse_alg_elem",
    "parse_element",
    "parse_scalar",
    "root_of_unity",
    "run_suite",
    "superpermute",
    "symmetric_group_algebra",
    "taft_algebra",
    "trivial_algebra",
]
