"""Exact verification of isogenies (x, y) -> (h(x), g(x) y) between curves y^2 = C(x)."""

from dataclasses import dataclass

from ..arith.parse import parse_poly, parse_ratfunc
from ..arith.poly import Poly, squarefree_factor
from ..arith.ratfunc import RatFunc
from ..errors import DomainError


@dataclass(frozen=True)
class EllCurveHyper:
    C: Poly

    def __post_init__(self):
        if self.C.degree not in (3, 4):
            raise DomainError("curve polynomial must have degree 3 or 4")
        _, factors = squarefree_factor(self.C)
        if any(k > 1 for _, k in factors):
            raise DomainError("curve polynomial must be squarefree")

    @classmethod
    def parse(cls, text, var="x", allow_i=False):
        return cls(parse_poly(text, var, allow_i))

    def text(self):
        from ..arith.poly import format_poly
        return f"y^2={format_poly(self.C)}"


@dataclass(frozen=True)
class IsogenyMap:
    h: RatFunc
    g: RatFunc

    def flipped(self):
        return IsogenyMap(self.h, -self.g)


@dataclass(frozen=True)
class IsogenyResult:
    ok: bool
    degree: int


def _check_fields(*items):
    tags = {x.field() for x in items} - {None}
    if len(tags) > 1:
        raise DomainError(f"isogeny data mixes quadratic fields {sorted(tags)}")


def verify_isogeny(source: EllCurveHyper, target: EllCurveHyper, m: IsogenyMap) -> IsogenyResult:
    """Check ``C_target(h) == g^2 * C_source`` exactly."""
    var = m.h.var
    cs = RatFunc(source.C.to_var(var))
    ct = RatFunc(target.C.to_var(var))
    _check_fields(cs, ct, m.h, m.g)
    lhs = ct.compose(m.h)
    rhs = m.g * m.g * cs
    return IsogenyResult(lhs == rhs, m.h.degree)


PRESETS = {
    "hexagonal3": {
        "curve": "x^3-1",
        "h": "(4-x^3)/(3*x^2)",
        "g": "sqrt(-3)/9*(x^3+8)/x^3",
    },
    "square5": {
        "curve": "x^3-x",
        "h": "(-1+2i)^2*x*(x^2-(1+2i))^2/(5*x^2-(1-2i))^2",
        "g": "(-1+2i)^3*(x^2-(1+2i))*(x^4+(8i+2)*x^2+1)/(5*x^2-(1-2i))^3",
    },
}


def preset(name):
    """``(curve, map)`` of a stored self-isogeny."""
    if name not in PRESETS:
        raise DomainError(f"unknown preset {name!r}; expected one of {sorted(PRESETS)}")
    p = PRESETS[name]
    allow_i = "i" in p["h"] + p["g"]
    curve = EllCurveHyper.parse(p["curve"], "x", allow_i)
    m = IsogenyMap(parse_ratfunc(p["h"], "x", allow_i), parse_ratfunc(p["g"], "x", allow_i))
    return curve, m
