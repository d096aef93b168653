"""Polynomial, rational-function and Moebius-unit arithmetic."""

from .unipoly import UniPoly, poly_gcd, exact_div, poly_compose
from .multipoly import MultiPoly, normalize_jointly
from .ratfunc import RatFunc
from .resultant import sylvester_matrix, det_bareiss, resultant_y, norm_of, norm_and_cofactor
from .moebius import MoebiusUnit, moebius_compose, moebius_invert, alpha_components, recombine

__all__ = [
    "UniPoly", "poly_gcd", "exact_div", "poly_compose",
    "MultiPoly", "normalize_jointly",
    "RatFunc",
    "sylvester_matrix", "det_bareiss", "resultant_y", "norm_of", "norm_and_cofactor",
    "MoebiusUnit", "moebius_compose", "moebius_invert", "alpha_components", "recombine",
]
