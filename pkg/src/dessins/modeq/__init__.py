"""Modular equations for X_0(N) and exact j-values."""

from .modeq import (
    INVOLUTION, LEVEL_PAIRS, SPECIAL_POINTS, ModularPolynomial, SpecialPoint, SpecialValue,
    SymmetricRoute, involution_check, level_pair, modular_polynomial, modular_polynomial_level,
    is_squarefree_relation, normalize_phi, parse_value, special_values, special_values_level, substitution_check,
    symmetric_route, symmetric_route_check,
)

__all__ = [
    "INVOLUTION", "LEVEL_PAIRS", "SPECIAL_POINTS", "ModularPolynomial", "SpecialPoint",
    "SpecialValue", "SymmetricRoute", "involution_check", "level_pair", "modular_polynomial",
    "modular_polynomial_level", "is_squarefree_relation", "normalize_phi", "parse_value", "special_values",
    "special_values_level", "substitution_check", "symmetric_route", "symmetric_route_check",
]
