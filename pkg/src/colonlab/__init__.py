"""Colon ideals and the m-full / full / weakly m-full / Burch classes in
polynomial rings over a prime field, localized at the origin."""

from __future__ import annotations

from .errors import (ColonLabError, ContextMismatch, EngineInconsistency, GenericityError,
                     HypothesisNotMet, NotMPrimary, OracleError, ParseError, ResourceError)
from .fullness import (ClassificationReport, burch_construct, classify, intersect_preserves, is_burch,
                       is_full, is_m_full, is_weakly_m_full)
from .groebner import GroebnerBasis, buchberger, is_groebner, is_reduced, normal_form
from .ideal import (Ideal, MPrimaryCertificate, certify_m_primary, colength, colon, intersect,
                    is_m_primary, minimal_generators, mu, ord_ideal, power_of_maximal, saturate)
from .parsing import parse_ideal_generators, parse_polynomial
from .polynomial import Polynomial, random_linear_form
from .ring import GREVLEX, LEX, Monomial, MonomialOrder, PrimeField, RingContext

__version__ = "0.1.0"

__all__ = [
    "ColonLabError", "ContextMismatch", "EngineInconsistency", "GenericityError", "HypothesisNotMet",
    "NotMPrimary", "OracleError", "ParseError", "ResourceError",
    "ClassificationReport", "burch_construct", "classify", "intersect_preserves", "is_burch",
    "is_full", "is_m_full", "is_weakly_m_full",
    "GroebnerBasis", "buchberger", "is_groebner", "is_reduced", "normal_form",
    "Ideal", "MPrimaryCertificate", "certify_m_primary", "colength", "colon", "intersect",
    "is_m_primary", "minimal_generators", "mu", "ord_ideal", "power_of_maximal", "saturate",
    "parse_ideal_generators", "parse_polynomial", "Polynomial", "random_linear_form",
    "GREVLEX", "LEX", "Monomial", "MonomialOrder", "PrimeField", "RingContext",
]
