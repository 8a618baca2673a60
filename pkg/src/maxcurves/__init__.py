"""Exact arithmetic for the curve family y^m = x^i (x^2 + 1) over GF(q^2).

m = (q+1)/2 for an odd prime power q; valid indices satisfy
gcd(i, m) = gcd(i+2, m) = 1 and every member has genus m - 1.
"""

__version__ = "0.1.0"

from .classify import Classification, ClassReport, class_count, classify, phi2
from .curve import CurveParams, Divisor, Place
from .ffield import FieldCtx, FieldElem, field_for_q, field_make
from .numsg import NumericalSemigroup
from .wsemi import GapSequence, gaps_closed_form, h_p0, h_pinf

__all__ = [
    "Classification",
    "ClassReport",
    "CurveParams",
    "Divisor",
    "FieldCtx",
    "FieldElem",
    "GapSequence",
    "NumericalSemigroup",
    "Place",
    "class_count",
    "classify",
    "field_for_q",
    "field_make",
    "gaps_closed_form",
    "h_p0",
    "h_pinf",
    "phi2",
    "__version__",
]
