"""Explicit Belyi maps and identities for small-level modular curves, stored as text.

Every entry is parsed with the command-line grammar, so the catalog doubles
as a round-trip test of the parser.
"""

from functools import lru_cache

from ..arith.parse import parse_ratfunc
from ..arith.poly import Poly
from ..arith.quadext import QuadExt
from ..arith.ratfunc import mobius

MAPS = {
    # X(2) -> X(1)
    "f2": "(3*z^2+1)^3/(9*z^2-1)^2",
    "f2_minus_1": "27*z^2*(z^2-1)^2/(9*z^2-1)^2",
    # X(3) -> X(1)
    "f3": "z^3*(z^3+8)^3/(64*(z^3-1)^3)",
    "f3_minus_1": "(z^6-20*z^3-8)^2/(64*(z^3-1)^3)",
    # x-coordinate of the degree-3 self-isogeny of y^2 = x^3 - 1, and the level-6 composite
    "h6": "(4-z^3)/(3*z^2)",
    "f6_composite": "-((z^3-4)*((z^3-4)^3-216*z^6)/(12*z^2*(z^3-1)*(z^3+8)^2))^3",
    # X(4) -> X(2)
    "f4": "-(z^2-1)^2/(4*z^2)",
    "f4_minus_1": "-(z^2+1)^2/(4*z^2)",
    # X(4) -> X(1)
    "f24": "(z^8+14*z^4+1)^3/(108*z^4*(z^4-1)^4)",
    "f24_minus_1": "(z^4+1)^2*(z^4+6*z^2+1)^2*(z^4-6*z^2+1)^2/(108*z^4*(z^4-1)^4)",
    # X_0(N) -> X(1), z -> j(z)/1728 and z -> j(Nz)/1728
    "f02": "(z+3)^3/(27*(z-1)^2)",
    "f02_minus_1": "z*(z-9)^2/(27*(z-1)^2)",
    "g02": "(4*z-3)^3/(27*(z-1))",
    "g02_minus_1": "z*(8*z-9)^2/(27*(z-1))",
    "f03": "z*(z+8)^3/(64*(z-1)^3)",
    "f03_minus_1": "(z^2-20*z-8)^2/(64*(z-1)^3)",
    "g03": "z*(9*z-8)^3/(64*(z-1))",
    "g03_minus_1": "(27*z^2-36*z+8)^2/(64*(z-1))",
    "f06": "-(z-4)^3*(z^3-228*z^2+48*z-64)^3/(1728*z^2*(z-1)^3*(z+8)^6)",
    "f06_minus_1": "-((z^3+258*z^2+48*z-64)^2-78732*z^4)^2/(1728*z^2*(z-1)^3*(z+8)^6)",
    # Mobius maps used in quotient and composition diagrams
    "q2": "((z+1)/(z-1/3))^2",
    "m24": "(z+1)/(3*(z-1))",
    "deck2_s": "-z",
    "deck2_t": "(-z+1)/(3*z+1)",
    "deck3": "(z+2)/(z-1)",
}

# which subgroup each Belyi map belongs to, as (spec text, construction)
SUBGROUPS = {
    "f2": ("gamma:2", 1),
    "f3": ("gamma:3", 1),
    "f6_composite": ("join:gamma:6;word=T^3", 1),
    "f4": ("gamma:4", 2),
    "f24": ("gamma:4", 1),
    "f02": ("gamma0:2", 1),
    "f03": ("gamma0:3", 1),
    "f06": ("gamma0:6", 1),
}


@lru_cache(maxsize=None)
def get(name):
    return parse_ratfunc(MAPS[name])


def identities():
    """``(label, lhs, rhs)`` triples of exact identities between rational functions."""
    f2, f3, f4 = get("f2"), get("f3"), get("f4")
    out = []
    for base in ("f2", "f3", "f4", "f24", "f02", "g02", "f03", "g03", "f06"):
        out.append((f"{base} - 1", get(base) - 1, get(base + "_minus_1")))
    z = Poly.x("z")
    out += [
        ("f3 o h = level-6 composite", f3.compose(get("h6")), get("f6_composite")),
        ("f2 o M o f4 = degree-24 map", f2.compose(get("m24").compose(f4)), get("f24")),
        ("f02 o ((z+1)/(z-1/3))^2 = f2", get("f02").compose(get("q2")), f2),
        ("f03(z^3) = f3", get("f03").compose(z ** 3), f3),
        ("f06(z^3) = level-6 composite", get("f06").compose(z ** 3), get("f6_composite")),
        ("f2 o (-z) = f2", f2.compose(get("deck2_s")), f2),
        ("f2 o ((-z+1)/(3z+1)) = f2", f2.compose(get("deck2_t")), f2),
        ("f3 o ((z+2)/(z-1)) = f3", f3.compose(get("deck3")), f3),
    ]
    return out


def alpha_beta_f3():
    """f3 written through alpha = 1 + sqrt(3), beta = 1 - sqrt(3):
    z^3 (z^3 + s^3)^3 / (8 s^3 (z^3 - (s/2)^3)^3) with s = alpha + beta."""
    from ..arith.ratfunc import RatFunc
    a = QuadExt(1, 1, 3)
    b = QuadExt(1, -1, 3)
    s = a + b
    z3 = Poly.monomial(1, 3, "z")
    num = z3 * (z3 + s ** 3) ** 3
    den = (z3 - (s / 2) ** 3) ** 3 * (8 * s ** 3)
    return RatFunc(num, den)


__all__ = ["MAPS", "SUBGROUPS", "get", "identities", "alpha_beta_f3", "mobius"]
