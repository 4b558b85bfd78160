"""Meixner's orthogonal Sheffer polynomials: exact series, classification and checks."""
from .classify import ClassificationResult, classify, eigen_equation_check, mgf_identity_check, recover_operator
from .errors import MeixnerError
from .families import (
    Charlier,
    Hermite,
    Krawtchouk,
    Laguerre,
    Meixner,
    MeixnerPollaczek,
    acceptance_families,
    parse_family,
)
from .recurrence import RecurrenceSpec, favard_check
from .scalar import Angle, QuadraticNumber
from .series import TruncatedSeries
from .sheffer import Poly, ShefferPair, expand

__version__ = "0.1.0"

__all__ = [
    "Angle",
    "Charlier",
    "ClassificationResult",
    "Hermite",
    "Krawtchouk",
    "Laguerre",
    "Meixner",
    "MeixnerError",
    "MeixnerPollaczek",
    "Poly",
    "QuadraticNumber",
    "RecurrenceSpec",
    "ShefferPair",
    "TruncatedSeries",
    "acceptance_families",
    "classify",
    "eigen_equation_check",
    "expand",
    "favard_check",
    "mgf_identity_check",
    "parse_family",
    "recover_operator",
]
