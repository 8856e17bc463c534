"""Rational Belyi maps: ramification profiles, the Belyi test and exact identity checks."""

from .belyi import (MapPassport, RamProfile, fiber, is_belyi, passport_of_map, ram_profile,
                    verify_identity)
from .constrained import concrete_check, constrained_identity_check, parametric_check

__all__ = [
    "MapPassport", "RamProfile", "fiber", "is_belyi", "passport_of_map", "ram_profile",
    "verify_identity", "concrete_check", "constrained_identity_check", "parametric_check",
]
