"""Gluings, special-gap adjunction, irreducibility and PI-monoids."""

from .gluing import GluingCert, GluingError, check_gluing, pf_of_gluing
from .irreducibility import (
    C_IRREDUCIBLE, NOT_IRREDUCIBLE, IrreducibilityVerdict, adjoin_special_gap,
    irreducibility_verdict, verify_split,
)
from .pi import (
    LimitMember, PICheck, PIMonoid, canonical_pi_of, direct_limit_family, is_pi_monoid, multiplicity,
    pi_apery, pi_conditions, pi_construct, pi_decompose, pi_minimal_generators,
    pi_is_pseudo_frobenius, pi_pseudo_frobenius,
)

__all__ = [
    "GluingCert", "GluingError", "check_gluing", "pf_of_gluing",
    "C_IRREDUCIBLE", "NOT_IRREDUCIBLE", "IrreducibilityVerdict", "adjoin_special_gap",
    "irreducibility_verdict", "verify_split",
    "LimitMember", "PICheck", "PIMonoid", "canonical_pi_of", "direct_limit_family", "is_pi_monoid",
    "multiplicity", "pi_apery", "pi_conditions", "pi_construct", "pi_decompose",
    "pi_is_pseudo_frobenius", "pi_minimal_generators", "pi_pseudo_frobenius",
]
