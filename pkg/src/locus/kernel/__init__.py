"""Exact polynomial arithmetic and ideal primitives."""
from .cancel import CancelToken, cancellable, checkpoint
from .fields import GF, QQ, PrimeField, RationalField, field_from_tag
from .ideal import (
    Ideal,
    colon,
    divide_exact,
    eliminate,
    eliminate_within,
    ideal_equal,
    intersect,
    intersect_all,
    radical_member,
    reduce,
    saturate,
    saturate_by_colon,
    unit_in_quotient,
)
from .poly import GREVLEX, LEX, MonomialOrder, Polynomial, PolyRing, elimination_order
from .primes import (
    irreducible_decomposition,
    minimal_primes,
    nilpotency_index,
    radical,
    recognized_prime,
    squarefree_part,
)

__all__ = [
    "CancelToken", "cancellable", "checkpoint",
    "GF", "QQ", "PrimeField", "RationalField", "field_from_tag",
    "Ideal", "colon", "divide_exact", "eliminate", "eliminate_within", "ideal_equal",
    "intersect", "intersect_all", "radical_member", "reduce", "saturate",
    "saturate_by_colon", "unit_in_quotient",
    "GREVLEX", "LEX", "MonomialOrder", "Polynomial", "PolyRing", "elimination_order",
    "irreducible_decomposition", "minimal_primes", "nilpotency_index", "radical",
    "recognized_prime", "squarefree_part",
]
