"""Integer 2x2 matrices of determinant one, and their images in PSL2(Z)."""

import re
from dataclasses import dataclass

from ..errors import DomainError, ParseError


@dataclass(frozen=True)
class Mat2:
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise DomainError(f"determinant of {self} is not 1")

    @classmethod
    def identity(cls):
        return cls(1, 0, 0, 1)

    def __mul__(self, o: "Mat2") -> "Mat2":
        return Mat2(self.a * o.a + self.b * o.c, self.a * o.b + self.b * o.d,
                    self.c * o.a + self.d * o.c, self.c * o.b + self.d * o.d)

    def inverse(self) -> "Mat2":
        return Mat2(self.d, -self.b, -self.c, self.a)

    def __neg__(self):
        return Mat2(-self.a, -self.b, -self.c, -self.d)

    def __pow__(self, k: int) -> "Mat2":
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = Mat2.identity()
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def transpose(self):
        return Mat2(self.a, self.c, self.b, self.d)

    def psl(self) -> "Mat2":
        """Canonical sign: c > 0, or c == 0 and a > 0."""
        if self.c < 0 or (self.c == 0 and self.a < 0):
            return -self
        return self

    def same_psl(self, other) -> bool:
        return self.psl() == other.psl()

    def is_identity_psl(self):
        return self.psl() == Mat2.identity()

    def mod(self, n):
        return (self.a % n, self.b % n, self.c % n, self.d % n)

    def rows(self):
        return ((self.a, self.b), (self.c, self.d))

    def act(self, z):
        """Mobius action on a number; ``None`` stands for the point at infinity."""
        if z is None:
            return None if self.c == 0 else self.a / self.c
        den = self.c * z + self.d
        if den == 0:
            return None
        return (self.a * z + self.b) / den

    def __str__(self):
        return f"[[{self.a},{self.b}],[{self.c},{self.d}]]"


S = Mat2(0, -1, 1, 0)
T = Mat2(1, 1, 0, 1)
I2 = Mat2.identity()
GEN_A = T ** 2  # T^2
GEN_B = S * T ** 2 * S.inverse()  # S T^2 S^-1 = [[1,0],[-2,1]]

_MAT = re.compile(r"^\s*\[\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*,\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*\]\s*$")


def parse_matrix(text: str) -> Mat2:
    m = _MAT.match(text)
    if not m:
        raise ParseError("expected a matrix of the form [[a,b],[c,d]]", 1, text)
    return Mat2(*(int(x) for x in m.groups()))


def in_gamma2(g: Mat2) -> bool:
    """Diagonal odd and off-diagonal even (the sign is irrelevant mod 2)."""
    return g.a % 2 == 1 and g.d % 2 == 1 and g.b % 2 == 0 and g.c % 2 == 0


def matrix_mapping_inf_to(p: int, q: int) -> Mat2:
    """A matrix in SL2(Z) with first column (p, q), so that it sends infinity to p/q."""
    from math import gcd
    if gcd(p, q) != 1:
        raise DomainError("cusp must be given in lowest terms")
    # extended Euclid: p*d - b*q = 1
    old_r, r = p, q
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r:
        k = old_r // r
        old_r, r = r, old_r - k * r
        old_s, s = s, old_s - k * s
        old_t, t = t, old_t - k * t
    # old_s*p + old_t*q = old_r = +-1
    d, b = old_s * old_r, -old_t * old_r
    return Mat2(p, b, q, d)
