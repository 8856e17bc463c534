"""Ramification profiles and the Belyi test for rational maps of P^1."""

from dataclasses import dataclass

from ..arith.poly import Poly, squarefree_factor
from ..arith.ratfunc import RatFunc
from ..errors import DomainError, PreconditionError


def _as_map(f) -> RatFunc:
    if not isinstance(f, RatFunc):
        f = RatFunc(f)
    if f.degree < 1:
        raise DomainError("a Belyi map must be nonconstant")
    return f


def _multiplicities(p: Poly):
    """Root multiplicities of ``p`` (one entry per distinct root)."""
    if p.degree <= 0:
        return []
    _, factors = squarefree_factor(p)
    out = []
    for q, k in factors:
        out.extend([k] * q.degree)
    return out


def fiber(f, c=None):
    """Multiplicities of the points over ``c`` (``None`` is infinity),
    including the point at infinity of the domain."""
    f = _as_map(f)
    n = f.degree
    if c is None:
        mults = _multiplicities(f.den)
        drop = f.num.degree - f.den.degree
    else:
        p = f.num - f.den * c
        mults = _multiplicities(p)
        drop = n - p.degree
    if drop > 0:
        mults.append(drop)
    return tuple(sorted(mults, reverse=True))


@dataclass(frozen=True)
class RamProfile:
    degree: int
    over0: tuple
    over1: tuple
    overinf: tuple

    def partitions(self):
        return (self.over0, self.over1, self.overinf)

    def text(self):
        def fmt(parts):
            return "[" + ",".join(str(x) for x in parts) + "]"
        return f"deg={self.degree}; over0={fmt(self.over0)}; over1={fmt(self.over1)}; overinf={fmt(self.overinf)}"


def ram_profile(f) -> RamProfile:
    f = _as_map(f)
    return RamProfile(f.degree, fiber(f, 0), fiber(f, 1), fiber(f, None))


def ramification_total(prof: RamProfile) -> int:
    return sum(prof.degree - len(p) for p in prof.partitions())


def is_belyi(f) -> bool:
    """Riemann-Hurwitz on P^1: all 2d-2 of ramification must lie over 0, 1, infinity."""
    prof = ram_profile(f)
    return ramification_total(prof) == 2 * prof.degree - 2


def verify_identity(lhs, rhs) -> bool:
    """Exact equality of reduced rational functions over a common field."""
    lhs = lhs if isinstance(lhs, RatFunc) else RatFunc(lhs)
    rhs = rhs if isinstance(rhs, RatFunc) else RatFunc(rhs)
    dl, dr = lhs.field(), rhs.field()
    if dl is not None and dr is not None and dl != dr:
        raise DomainError(f"identity mixes Q(sqrt({dl})) and Q(sqrt({dr}))")
    if lhs.var != rhs.var:
        rhs = rhs.to_var(lhs.var)
    return lhs == rhs


@dataclass(frozen=True)
class MapPassport:
    """Partitions over 0, 1, infinity of a genus-0 Belyi map, comparable with a dessin passport."""
    m: int
    black: tuple
    white: tuple
    faces: tuple
    genus: int = 0

    def matches(self, pp) -> bool:
        return (self.m, self.genus, self.black, self.white, self.faces) == (
            pp.m, pp.genus, tuple(pp.black), tuple(pp.white), tuple(pp.faces))

    def text(self):
        def fmt(parts):
            return "[" + ",".join(str(x) for x in parts) + "]"
        return (f"m={self.m}; g={self.genus}; black={fmt(self.black)}; "
                f"white={fmt(self.white)}; faces={fmt(self.faces)}")


def passport_of_map(f) -> MapPassport:
    prof = ram_profile(f)
    if ramification_total(prof) != 2 * prof.degree - 2:
        raise PreconditionError("map is not a Belyi map")
    return MapPassport(prof.degree, prof.over0, prof.over1, prof.overinf)
