"""Self-isogenies of the hexagonal and square curves and the matching p-function identities."""

from .curves import EllCurveHyper, IsogenyMap, IsogenyResult, PRESETS, preset, verify_isogeny
from .wp import (DEFAULT_SAMPLES, HEXAGONAL, SQUARE, IdentityReport, WpLattice, reduce_to_cell,
                 verify_wp_identity, wp_eval)

__all__ = [
    "EllCurveHyper", "IsogenyMap", "IsogenyResult", "PRESETS", "preset", "verify_isogeny",
    "DEFAULT_SAMPLES", "HEXAGONAL", "SQUARE", "IdentityReport", "WpLattice", "reduce_to_cell",
    "verify_wp_identity", "wp_eval",
]
