"""Dessins from coset tables: passports, monodromy triples, diagnostics and DOT export."""

from .export import export_dot
from .passport import (DessinPassport, Diagnostics, MonodromyTriple, diagnostics, euler_genus,
                       face_walks, is_uniform, passport_from_construction1,
                       passport_from_construction2, passport_of_triple, triple_from_table,
                       uniform_genus)

__all__ = [
    "export_dot", "DessinPassport", "Diagnostics", "MonodromyTriple", "diagnostics",
    "euler_genus", "face_walks", "is_uniform", "passport_from_construction1",
    "passport_from_construction2", "passport_of_triple", "triple_from_table", "uniform_genus",
]
