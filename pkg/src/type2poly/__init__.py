"""Exact generating-function constructions of type 2 Changhee, Daehee, Euler and
Bernoulli polynomials, with coefficient-exact identity verification."""

from .algebra import Polynomial, Series
from .centralfact import central_factorial, central_T, delta, to_central_basis
from .families import Family, FamilyId, FamilyTable, family_numbers, family_table
from .identities import VerificationReport, verify_all

__all__ = [
    "Family",
    "FamilyId",
    "FamilyTable",
    "Polynomial",
    "Series",
    "VerificationReport",
    "central_T",
    "central_factorial",
    "delta",
    "family_numbers",
    "family_table",
    "to_central_basis",
    "verify_all",
]

__version__ = "0.1.0"
