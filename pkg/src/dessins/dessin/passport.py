"""Passports and monodromy triples of dessins built from coset tables."""

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .. import perm as P
from ..errors import DomainError, PreconditionError
from ..psl2.cosets import GAMMA1, GAMMA2, CosetTable
from ..psl2.cusps import genus_formula

GROUP_ORDER_LIMIT = 10**6


def _parts(p):
    return P.cycle_type(p)


def euler_genus(m, cb, cw, cf) -> int:
    two_g = 2 - (cb + cw + cf - m)
    if two_g < 0 or two_g % 2:
        raise PreconditionError(f"cycle counts ({cb}, {cw}, {cf}) on {m} edges give no valid genus")
    return two_g // 2


def uniform_genus(m, k0, k1, kinf) -> Fraction:
    """Genus of a uniform dessin with vertex degrees k0, k1 and face degree kinf."""
    return 1 + Fraction(m, 2) * (1 - Fraction(1, k0) - Fraction(1, k1) - Fraction(1, kinf))


@dataclass(frozen=True)
class MonodromyTriple:
    """Permutations with ``s0 * s1 * sinf = id`` (product read left to right)."""
    s0: tuple
    s1: tuple
    sinf: tuple

    def __post_init__(self):
        n = len(self.s0)
        if not (len(self.s1) == len(self.sinf) == n):
            raise DomainError("triple permutations have different degrees")
        for p in (self.s0, self.s1, self.sinf):
            if not P.is_perm(p):
                raise DomainError("triple entries must be permutations")
        if P.mul(P.mul(self.s0, self.s1), self.sinf) != P.identity(n):
            raise DomainError("s0 * s1 * sinf is not the identity")

    @classmethod
    def from_pair(cls, s0, s1):
        return cls(s0, s1, P.inverse(P.mul(s0, s1)))

    @property
    def m(self):
        return len(self.s0)

    def relabel(self, r):
        return MonodromyTriple(*(P.conjugate(p, r) for p in (self.s0, self.s1, self.sinf)))

    def is_transitive(self):
        return P.is_transitive([self.s0, self.s1])


@dataclass(frozen=True)
class DessinPassport:
    m: int
    genus: int
    black: tuple
    white: tuple
    faces: tuple
    nu2: Optional[int] = None
    nu3: Optional[int] = None
    nu_inf: Optional[int] = None

    def partitions(self):
        return (self.black, self.white, self.faces)

    def text(self):
        def fmt(parts):
            return "[" + ",".join(str(x) for x in parts) + "]"
        s = f"m={self.m}; g={self.genus}; black={fmt(self.black)}; white={fmt(self.white)}; faces={fmt(self.faces)}"
        return s

    def as_dict(self):
        d = {"m": self.m, "g": self.genus, "black": list(self.black),
             "white": list(self.white), "faces": list(self.faces)}
        if self.nu2 is not None:
            d.update(nu2=self.nu2, nu3=self.nu3, nuinf=self.nu_inf)
        return d

    def __str__(self):
        return self.text()


def passport_of_triple(tr: MonodromyTriple) -> DessinPassport:
    b, w, f = _parts(tr.s0), _parts(tr.s1), _parts(tr.sinf)
    return DessinPassport(tr.m, euler_genus(tr.m, len(b), len(w), len(f)), b, w, f)


def triple_from_table(t: CosetTable) -> MonodromyTriple:
    """Construction 1 (ambient Gamma(1)): s0 from ST, s1 from S.
    Construction 2 (ambient Gamma(2)): s0 from B = ST^2S^-1, sinf from A = T^2."""
    if t.ambient == GAMMA1:
        return MonodromyTriple.from_pair(t.sigma("ST"), t.sigma("S"))
    s0, sinf = t.perms["B"], t.perms["A"]
    s1 = P.inverse(P.mul(sinf, s0))
    return MonodromyTriple(s0, s1, sinf)


def passport_from_construction1(t: CosetTable) -> DessinPassport:
    if t.ambient != GAMMA1:
        raise DomainError("construction 1 needs a coset table over Gamma(1)")
    sst, ss, st = t.sigma("ST"), t.sigma("S"), t.perms["T"]
    b, w, f = _parts(sst), _parts(ss), _parts(st)
    m = t.m
    g = euler_genus(m, len(b), len(w), len(f))
    nu2, nu3, nuinf = P.fixed_points(ss), P.fixed_points(sst), len(f)
    if genus_formula(m, nu2, nu3, nuinf) != g:
        raise AssertionError("Euler genus disagrees with the elliptic-point formula")
    return DessinPassport(m, g, b, w, f, nu2, nu3, nuinf)


def passport_from_construction2(t: CosetTable):
    """Returns ``(passport, triple)``."""
    if t.ambient != GAMMA2:
        raise DomainError("construction 2 needs a coset table over Gamma(2)")
    tr = triple_from_table(t)
    pp = passport_of_triple(tr)
    if is_uniform(pp):
        ug = uniform_genus(pp.m, pp.black[0], pp.white[0], pp.faces[0])
        if ug != pp.genus:
            raise AssertionError("Euler genus disagrees with the uniform-dessin formula")
    return pp, tr


def is_uniform(pp: DessinPassport) -> bool:
    return all(len(set(parts)) == 1 for parts in pp.partitions())


@dataclass(frozen=True)
class Diagnostics:
    transitive: bool
    uniform: bool
    regular: bool
    monodromy_group_order: int
    center_trivial: bool

    def as_dict(self):
        return dict(self.__dict__)


def diagnostics(tr: MonodromyTriple, limit=GROUP_ORDER_LIMIT) -> Diagnostics:
    group = P.closure([tr.s0, tr.sinf], limit)
    center = [z for z in group
              if P.mul(z, tr.s0) == P.mul(tr.s0, z) and P.mul(z, tr.sinf) == P.mul(tr.sinf, z)]
    pp = passport_of_triple(tr)
    return Diagnostics(
        transitive=tr.is_transitive(),
        uniform=is_uniform(pp),
        regular=len(group) == tr.m,
        monodromy_group_order=len(group),
        center_trivial=len(center) == 1,
    )


def face_walks(tr: MonodromyTriple):
    """Boundary walks of the faces as lists of edge-sides ``(edge, 'bw' | 'wb')``.

    Leave edge e from its black end, turn at the white vertex by s1, return
    along that edge, turn at the black vertex by s0, and repeat.
    """
    seen = set()
    walks = []
    for start in range(tr.m):
        if start in seen:
            continue
        sides = []
        e = start
        while True:
            seen.add(e)
            e1 = tr.s1[e]
            sides.append((e, "bw"))
            sides.append((e1, "wb"))
            e = tr.s0[e1]
            if e == start:
                break
        walks.append(sides)
    return walks
