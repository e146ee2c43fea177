"""Exact polynomial algebra: sparse integer polynomials, resultants, root isolation."""

from .multipoly import GENERATORS, MultiPoly, primitive_normalize, symbols
from .resultant import bareiss_det, discriminant, mobius_substitute, resultant, sylvester_matrix
from .roots import DEFAULT_TOL, RootEnclosure, isolate_positive_root, positive_roots
from .univariate import RationalQFunction

sylvester_resultant = resultant

__all__ = [
    "GENERATORS", "MultiPoly", "primitive_normalize", "symbols",
    "bareiss_det", "discriminant", "mobius_substitute", "resultant", "sylvester_resultant",
    "sylvester_matrix", "DEFAULT_TOL", "RootEnclosure", "isolate_positive_root",
    "positive_roots", "RationalQFunction",
]
