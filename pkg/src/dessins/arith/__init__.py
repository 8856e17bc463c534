"""Exact arithmetic: quadratic fields, polynomials, rational functions, resultants."""

from .bivar import BivarPoly, format_bivar
from .palindromic import expand_in_y, is_palindromic, laurent_of, palindromic_reduce
from .poly import Poly, format_poly, poly_gcd, squarefree_factor
from .quadext import QuadExt, format_scalar
from .ratfunc import RatFunc, format_ratfunc, mobius, ratfunc_compose
from .resultant import resultant

__all__ = [
    "BivarPoly", "Poly", "QuadExt", "RatFunc",
    "expand_in_y", "format_bivar", "format_poly", "format_ratfunc", "format_scalar",
    "is_palindromic", "laurent_of", "mobius", "palindromic_reduce", "poly_gcd",
    "ratfunc_compose", "resultant", "squarefree_factor",
]
