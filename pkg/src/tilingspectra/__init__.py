"""Exact spectral analysis of self-similar substitution tilings.

The library validates user-defined tile substitutions with a pure
dilation x -> theta*x, and decides their spectral properties exactly:
Pisot-ness of theta, weak mixing, and membership of candidate vectors in
the group of dynamical eigenvalues.  All geometry and all verdicts run in
exact arithmetic over Q(theta); floats appear only in clearly labeled
diagnostic views.
"""

from .algebraic import AlgebraicReal, make_algebraic
from .errors import (
    BudgetError,
    FieldMismatchError,
    PrecisionError,
    SystemFileError,
    TilingError,
    UndecidedError,
    ValidationError,
)
from .field import NumberField, QThetaElem, QThetaVec, golden_field, parse_rational
from .pisot import PisotCertificate, is_pisot
from .polys import IntPoly
from .spectra import Alpha, eigenvalue_module, eigenvalue_report, is_eigenvalue, weak_mixing
from .systemfile import parse_system
from .tiles import Patch, PlacedTile, Prototile, SubstitutionSystem, validate
from .traces import TraceSequenceReport, dist_to_int_limit, trace

__version__ = "0.1.0"

__all__ = [
    "AlgebraicReal",
    "Alpha",
    "BudgetError",
    "FieldMismatchError",
    "IntPoly",
    "NumberField",
    "Patch",
    "PisotCertificate",
    "PlacedTile",
    "PrecisionError",
    "Prototile",
    "QThetaElem",
    "QThetaVec",
    "SubstitutionSystem",
    "SystemFileError",
    "TilingError",
    "TraceSequenceReport",
    "UndecidedError",
    "ValidationError",
    "dist_to_int_limit",
    "eigenvalue_module",
    "eigenvalue_report",
    "golden_field",
    "is_eigenvalue",
    "is_pisot",
    "make_algebraic",
    "parse_rational",
    "parse_system",
    "trace",
    "validate",
    "weak_mixing",
    "__version__",
]
