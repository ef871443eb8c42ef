"""Iterated unit groups U^k(Z_n), their classification, and Pratt trees.

The classifier lives at ``gku.classify.classify``; it is not re-exported
here because the name would shadow the submodule.
"""

__version__ = "0.1.0"

from .abelian import GroupShape, from_cyclic, is_boolean, is_trivial, product, render
from .arith import Factorization, divisors, factorize, find_primitive_root, is_prime, pow_mod
from .classify import (
    Classification,
    TrivializingBound,
    check_bound,
    shift_equivalence,
    stabilization_index,
    trivializing_bound,
)
from .oracle import brute_uk, brute_unit_shape
from .pratt import PrattCert, PrattTree, build_cert, build_tree, correspondence_check, verify_cert
from .units import (
    decomposition_trace,
    iterate_units,
    uk_shape,
    unit_shape,
    unit_shape_prime_power,
)

__all__ = [
    "Classification", "Factorization", "GroupShape", "PrattCert", "PrattTree", "TrivializingBound",
    "brute_uk", "brute_unit_shape", "build_cert", "build_tree", "check_bound",
    "correspondence_check", "decomposition_trace", "divisors", "factorize", "find_primitive_root",
    "from_cyclic", "is_boolean", "is_prime", "is_trivial", "iterate_units", "pow_mod", "product",
    "render", "shift_equivalence", "stabilization_index", "trivializing_bound", "uk_shape",
    "unit_shape", "unit_shape_prime_power", "verify_cert",
]
