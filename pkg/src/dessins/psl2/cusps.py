"""Cusps, cusp widths and elliptic-point counts read off coset tables."""

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .. import perm as P
from ..errors import DomainError, ParseError
from .cosets import GAMMA1, coset_table
from .matrix import T, matrix_mapping_inf_to
from .subgroups import PrincipalCongruence


@dataclass(frozen=True, order=True)
class Cusp:
    """A point p/q of P^1(Q); infinity is (1, 0)."""
    p: int
    q: int

    def __post_init__(self):
        p, q = self.p, self.q
        if p == 0 and q == 0:
            raise DomainError("0/0 is not a cusp")
        g = gcd(p, q)
        p, q = p // g, q // g
        if q < 0 or (q == 0 and p < 0):
            p, q = -p, -q
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)

    @classmethod
    def infinity(cls):
        return cls(1, 0)

    @classmethod
    def of(cls, x):
        if isinstance(x, Cusp):
            return x
        if x is None:
            return cls.infinity()
        if isinstance(x, str):
            return parse_cusp(x)
        f = Fraction(x)
        return cls(f.numerator, f.denominator)

    def is_infinity(self):
        return self.q == 0

    def matrix(self):
        """An SL2(Z) matrix sending infinity to this cusp."""
        return matrix_mapping_inf_to(self.p, self.q)

    def __str__(self):
        if self.q == 0:
            return "inf"
        if self.q == 1:
            return str(self.p)
        return f"{self.p}/{self.q}"


_CUSP = re.compile(r"^\s*(-?\d+)\s*(?:/\s*(\d+))?\s*$")


def parse_cusp(text: str) -> Cusp:
    t = text.strip()
    if t in ("inf", "oo", "infinity", "1/0"):
        return Cusp.infinity()
    m = _CUSP.match(t)
    if not m:
        raise ParseError("expected a cusp like 'inf', '0', '2/3'", 1, text)
    q = int(m.group(2)) if m.group(2) else 1
    if q == 0:
        raise ParseError("use 'inf' for the cusp at infinity", 1, text)
    return Cusp(int(m.group(1)), q)


def _table(spec, table):
    if table is None:
        return coset_table(spec, GAMMA1)
    if table.ambient != GAMMA1:
        raise DomainError("cusp computations need a table over Gamma(1)")
    return table


def cusp_width(spec, c, table=None, limit=None) -> int:
    """Least k >= 1 with g T^k g^-1 in the subgroup, where g sends infinity to ``c``."""
    c = Cusp.of(c)
    g = c.matrix()
    ginv = g.inverse()
    if limit is None:
        limit = _table(spec, table).m
    for k in range(1, limit + 1):
        if spec.is_member(g * T**k * ginv):
            return k
    raise DomainError(f"no width found up to {limit}")


def cusp_cycle(table, c) -> tuple:
    """The sigma_T-cycle of cosets attached to cusp ``c``."""
    c = Cusp.of(c)
    i = table.coset_of(c.matrix())
    for cyc in P.cycles(table.perms["T"]):
        if i in cyc:
            return cyc
    raise AssertionError("unreachable")


def cusp_classes(table):
    """One ``(cusp, width)`` per sigma_T-cycle, ordered by the cycle's least coset.

    Coset ``Gamma r`` corresponds to the cusp ``r(infinity)``.
    """
    out = []
    for cyc in P.cycles(table.perms["T"]):
        r = table.reps[cyc[0]]
        out.append((Cusp(r.a, r.c), len(cyc)))
    return out


def _gamma2_parity(c: Cusp):
    return (c.p % 2, c.q % 2)


def cusp_orbit_classify(spec, cusps, table=None):
    """Group ``cusps`` into orbits of the subgroup; classes keep input order."""
    cusps = [Cusp.of(c) for c in cusps]
    if isinstance(spec, PrincipalCongruence) and spec.N == 2:
        key = _gamma2_parity
    else:
        t = _table(spec, table)
        key = lambda c: min(cusp_cycle(t, c))  # noqa: E731
    classes = {}
    for c in cusps:
        classes.setdefault(key(c), []).append(c)
    return list(classes.values())


def elliptic_counts(table):
    """``(nu2, nu3)``: fixed cosets of S and of ST."""
    return P.fixed_points(table.sigma("S")), P.fixed_points(table.sigma("ST"))


def genus_formula(m, nu2, nu3, nu_inf) -> Fraction:
    return 1 + Fraction(m, 12) - Fraction(nu2, 4) - Fraction(nu3, 3) - Fraction(nu_inf, 2)
