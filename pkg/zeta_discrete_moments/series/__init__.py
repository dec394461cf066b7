"""Exact and numeric Laurent series about s = 1."""

from .exact_poly import ExactPoly
from .laurent import (
    LaurentSeries,
    differentiate,
    inv_s_series,
    multiply,
    multiply_all,
    reciprocal,
    zeta_series,
)
from .rings import EXACT, ComplexRing, ExactRing, RealRing, Ring, ring_for

__all__ = [
    "EXACT",
    "ComplexRing",
    "ExactPoly",
    "ExactRing",
    "LaurentSeries",
    "RealRing",
    "Ring",
    "differentiate",
    "inv_s_series",
    "multiply",
    "multiply_all",
    "reciprocal",
    "ring_for",
    "zeta_series",
]
