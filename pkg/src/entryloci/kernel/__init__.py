"""Exact-arithmetic kernel: polynomials, Groebner bases, linear algebra."""

from .errors import (
    BudgetExceededError,
    CharacteristicError,
    CoefficientError,
    DegenerateInputError,
    HomogeneityError,
    KernelError,
    NotSquarefreeError,
    ParseError,
    RingMismatchError,
)
from .fields import QQ, PrimeField, field_from_descriptor, is_prime, next_prime
from .groebner import Budget
from .ideals import (
    GroebnerBasis,
    Ideal,
    eliminate,
    groebner_basis,
    homogeneous_generators,
    ideal_contains,
    in_irrelevant_saturation,
    intersect,
    normal_form,
    radical_membership,
    same_saturation,
    saturate,
    saturate_single,
    saturate_wrt_variable,
    verify_groebner_basis,
)
from .orders import GREVLEX, LEX, Block, order_from_name
from .poly import Polynomial, RingContext, parse_polynomial

__all__ = [
    "QQ",
    "PrimeField",
    "field_from_descriptor",
    "is_prime",
    "next_prime",
    "Budget",
    "GroebnerBasis",
    "Ideal",
    "eliminate",
    "groebner_basis",
    "homogeneous_generators",
    "ideal_contains",
    "in_irrelevant_saturation",
    "intersect",
    "normal_form",
    "radical_membership",
    "same_saturation",
    "saturate",
    "saturate_single",
    "saturate_wrt_variable",
    "verify_groebner_basis",
    "GREVLEX",
    "LEX",
    "Block",
    "order_from_name",
    "Polynomial",
    "RingContext",
    "parse_polynomial",
    "KernelError",
    "ParseError",
    "RingMismatchError",
    "CoefficientError",
    "HomogeneityError",
    "CharacteristicError",
    "NotSquarefreeError",
    "BudgetExceededError",
    "DegenerateInputError",
]
