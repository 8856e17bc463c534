"""The modular group: matrices, words, subgroup specs, coset tables, cusps and point orbits."""

from .cosets import GAMMA1, GAMMA2, CosetTable, coset_table, index_formulas, mu_gamma, mu_gamma0
from .cusps import (Cusp, cusp_classes, cusp_orbit_classify, cusp_width, elliptic_counts,
                    genus_formula, parse_cusp)
from .matrix import GEN_A, GEN_B, I2, S, T, Mat2, in_gamma2, parse_matrix
from .orbits import OrbitPoint, gamma0_left_coset_reps, scaled_orbit_partition
from .subgroups import (Gamma2KernelOfHom, GammaZero, JoinWithCyclic, PrincipalCongruence,
                        SubgroupSpec, is_member, parse_spec)
from .words import format_word, gamma2_word_decompose, parse_word, reduce_word, word_eval, word_matrix

__all__ = [
    "GAMMA1", "GAMMA2", "CosetTable", "coset_table", "index_formulas", "mu_gamma", "mu_gamma0",
    "Cusp", "cusp_classes", "cusp_orbit_classify", "cusp_width", "elliptic_counts",
    "genus_formula", "parse_cusp", "GEN_A", "GEN_B", "I2", "S", "T", "Mat2", "in_gamma2",
    "parse_matrix", "OrbitPoint", "gamma0_left_coset_reps", "scaled_orbit_partition",
    "Gamma2KernelOfHom", "GammaZero", "JoinWithCyclic", "PrincipalCongruence", "SubgroupSpec",
    "is_member", "parse_spec", "format_word", "gamma2_word_decompose", "parse_word",
    "reduce_word", "word_eval", "word_matrix",
]
