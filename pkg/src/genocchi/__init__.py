"""Exact computation of Genocchi, second-kind Genocchi/Euler, Gould-Hopper and
Hermite-based second-kind Genocchi polynomials, with identity verification."""

from .algebra import ONE, X, Y, ZERO, BivarPoly, format_rational, parse_rational
from .families import (
    Family,
    FamilySpec,
    FamilyValue,
    classical_genocchi,
    evaluate,
    gould_hopper,
    hermite_euler,
    hermite_genocchi,
    second_kind_euler,
    second_kind_genocchi,
)
from .series import EgfSeries, egf_coefficient

__version__ = "0.1.0"
