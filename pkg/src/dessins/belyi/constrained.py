"""The alpha, beta identity behind the level-3 Belyi map.

For alpha^2 + 4 alpha beta + beta^2 = 0 and u = (alpha + beta)^3:

    t (t + u)^3 / (k u) - (t - u/8)^3 = (t - alpha^3)^2 (t - beta^3)^2 / (k u)

holds with k = 8.  Both sides are multiplied by k u before comparing, so the
check stays polynomial even when alpha, beta are polynomials in a parameter s.
"""

from fractions import Fraction

from ..arith.poly import Poly
from ..arith.quadext import QuadExt


def _sides(alpha, beta, k, var="t"):
    t = Poly.x(var)
    u = (alpha + beta) ** 3
    lhs = t * (t + u) ** 3 - (t - u * Fraction(1, 8)) ** 3 * (u * k)
    rhs = (t - alpha ** 3) ** 2 * (t - beta ** 3) ** 2
    return lhs, rhs


def concrete_check(k=8) -> bool:
    """alpha = 1 + sqrt(3), beta = 1 - sqrt(3)."""
    lhs, rhs = _sides(QuadExt(1, 1, 3), QuadExt(1, -1, 3), k)
    return lhs == rhs


def parametric_check(k=8) -> bool:
    """alpha = s, beta = s(-2 + sqrt(3)) as polynomials in s over Q(sqrt(3))."""
    s = Poly((0, QuadExt(1, 0, 3)), "s")
    alpha = s
    beta = s * QuadExt(-2, 1, 3)
    lhs, rhs = _sides(alpha, beta, k)
    return lhs == rhs


def constrained_identity_check(k=8) -> dict:
    return {"concrete": concrete_check(k), "parametric": parametric_check(k)}
