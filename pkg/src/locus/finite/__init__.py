"""Exhaustive oracle over small finite commutative rings."""
from .lab import (
    FiniteLocalization,
    SurveyReport,
    all_ideals,
    ass_bruteforce,
    is_localizable,
    is_prime_ideal,
    localizable_monoids,
    localize_finite,
    minimal_primes_finite,
    monoid_closure,
    survey,
)
from .table import (
    FiniteRingTable,
    RingAxiomError,
    cyclic,
    find_isomorphism,
    gfpoly,
    is_isomorphism,
    product,
    quotient,
    zero_ring,
)
from .crosscheck import CrosscheckReport, crosscheck, crosscheck_gfpoly, natural_map, verify_isomorphism

__all__ = [
    "FiniteLocalization", "SurveyReport", "all_ideals", "ass_bruteforce", "is_localizable",
    "is_prime_ideal", "localizable_monoids", "localize_finite", "minimal_primes_finite",
    "monoid_closure", "survey",
    "FiniteRingTable", "RingAxiomError", "cyclic", "find_isomorphism", "gfpoly", "is_isomorphism",
    "product", "quotient", "zero_ring",
    "CrosscheckReport", "crosscheck", "crosscheck_gfpoly", "natural_map", "verify_isomorphism",
]
