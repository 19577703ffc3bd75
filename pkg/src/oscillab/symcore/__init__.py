"""Exact arithmetic layer: rationals, multivariate polynomials, polynomial
vector fields, Lie brackets, and the one-variable gap-interval machinery."""

from oscillab.symcore.poly import MultiPoly, Rat, parse_poly
from oscillab.symcore.fields import PolyVectorField, lie_bracket
from oscillab.symcore.gap import GapIntervalSet, gap_intervals, gap_verify

__all__ = [
    "MultiPoly",
    "Rat",
    "parse_poly",
    "PolyVectorField",
    "lie_bracket",
    "GapIntervalSet",
    "gap_intervals",
    "gap_verify",
]
