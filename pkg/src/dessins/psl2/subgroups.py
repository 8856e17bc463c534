"""Finite-index subgroups of PSL2(Z) described by small specs.

Each spec knows how to test membership and how to map a matrix ``g`` to a
hashable key that identifies its right coset ``Gamma g``.
"""

import re
from dataclasses import dataclass, field
from math import gcd

from .. import perm as P
from ..errors import DomainError, ParseError
from .matrix import S, T, Mat2, in_gamma2
from .words import format_word, gamma2_word_decompose, parse_word, word_matrix


def _mat_mod(m, n):
    return tuple(x % n for x in m)


def _mul_mod(x, y, n):
    a, b, c, d = x
    e, f, g, h = y
    return ((a * e + b * g) % n, (a * f + b * h) % n, (c * e + d * g) % n, (c * f + d * h) % n)


def _neg_mod(x, n):
    return tuple((-v) % n for v in x)


def _tuple(g: Mat2):
    return (g.a, g.b, g.c, g.d)


class SubgroupSpec:
    kind = "abstract"

    def is_member(self, g: Mat2) -> bool:
        raise NotImplementedError

    def coset_key(self, g: Mat2):
        raise NotImplementedError

    def in_gamma2(self) -> bool:
        raise NotImplementedError

    def gamma2_key(self, g: Mat2):
        """Right-coset key for ``g`` in Gamma(2); default uses the ambient key."""
        return self.coset_key(g)

    def text(self) -> str:
        raise NotImplementedError

    def __str__(self):
        return self.text()


@dataclass(frozen=True)
class PrincipalCongruence(SubgroupSpec):
    """Gamma(N): matrices congruent to +-I mod N."""
    N: int
    kind = "gamma"

    def __post_init__(self):
        if self.N < 1:
            raise DomainError("level must be at least 1")

    def is_member(self, g):
        n = self.N
        r = _mat_mod(_tuple(g), n)
        one = (1 % n, 0, 0, 1 % n)
        return r == one or r == _neg_mod(one, n)

    def coset_key(self, g):
        r = _mat_mod(_tuple(g), self.N)
        return min(r, _neg_mod(r, self.N))

    def in_gamma2(self):
        return self.N % 2 == 0

    def text(self):
        return f"gamma:{self.N}"


@dataclass(frozen=True)
class GammaZero(SubgroupSpec):
    """Gamma_0(N): lower-left entry divisible by N."""
    N: int
    kind = "gamma0"

    def __post_init__(self):
        if self.N < 1:
            raise DomainError("level must be at least 1")

    def is_member(self, g):
        return g.c % self.N == 0

    def coset_key(self, g):
        # Gamma_0(N) g is determined by the bottom row (c : d) in P^1(Z/N)
        n = self.N
        units = [u for u in range(1, n + 1) if gcd(u, n) == 1]
        return min(((u * g.c) % n, (u * g.d) % n) for u in units)

    def in_gamma2(self):
        return False  # T lies in every Gamma_0(N)

    def text(self):
        return f"gamma0:{self.N}"


@dataclass(frozen=True)
class JoinWithCyclic(SubgroupSpec):
    """Gamma(N) together with one extra element given by a word."""
    base: PrincipalCongruence
    word: str
    kind = "join"
    _image: frozenset = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        if not isinstance(self.base, PrincipalCongruence):
            raise DomainError("join is only supported over a principal congruence subgroup")
        n = self.base.N
        w = _mat_mod(_tuple(word_matrix(self.word)), n)
        one = (1 % n, 0, 0, 1 % n)
        elems = {one, _neg_mod(one, n)}
        frontier = list(elems)
        while frontier:
            nxt = []
            for x in frontier:
                y = _mul_mod(x, w, n)
                if y not in elems:
                    elems.add(y)
                    nxt.append(y)
            frontier = nxt
        object.__setattr__(self, "_image", frozenset(elems))

    @property
    def N(self):
        return self.base.N

    def generator(self) -> Mat2:
        return word_matrix(self.word)

    def is_member(self, g):
        return _mat_mod(_tuple(g), self.N) in self._image

    def coset_key(self, g):
        r = _mat_mod(_tuple(g), self.N)
        return min(_mul_mod(h, r, self.N) for h in self._image)

    def in_gamma2(self):
        return self.base.in_gamma2() and in_gamma2(self.generator())

    def text(self):
        return f"join:{self.base.text()};word={self.word}"


def _gamma2_coset_reps():
    """Matrices representing the six cosets of Gamma(2) in Gamma(1), keyed by residue mod 2."""
    reps = {}
    frontier = [Mat2.identity()]
    reps[_mat_mod(_tuple(frontier[0]), 2)] = frontier[0]
    while len(reps) < 6:
        nxt = []
        for g in frontier:
            for x in (S, T):
                h = g * x
                k = _mat_mod(_tuple(h), 2)
                if k not in reps:
                    reps[k] = h
                    nxt.append(h)
        frontier = nxt
    return reps


_G2_REPS = _gamma2_coset_reps()


@dataclass(frozen=True)
class Gamma2KernelOfHom(SubgroupSpec):
    """Kernel of the map from the free group Gamma(2) = <A, B> sending A to
    ``sigma_a`` and B to ``sigma_b`` (products read left to right)."""
    sigma_a: tuple
    sigma_b: tuple
    kind = "kernel"

    def __post_init__(self):
        n = max(len(self.sigma_a), len(self.sigma_b))
        a, b = P.pad(self.sigma_a, n), P.pad(self.sigma_b, n)
        if not (P.is_perm(a) and P.is_perm(b)):
            raise DomainError("kernel images must be permutations")
        if not P.is_transitive([a, b]):
            raise DomainError("kernel images do not generate a transitive group")
        object.__setattr__(self, "sigma_a", a)
        object.__setattr__(self, "sigma_b", b)

    @property
    def degree(self):
        return len(self.sigma_a)

    def image(self, word):
        """Image of a word in A, B under the homomorphism."""
        out = P.identity(self.degree)
        gens = {"A": self.sigma_a, "B": self.sigma_b}
        for letter, e in word:
            out = P.mul(out, P.power(gens[letter], e))
        return out

    def phi(self, g: Mat2):
        return self.image(gamma2_word_decompose(g))

    def is_member(self, g):
        if not in_gamma2(g):
            return False
        return self.phi(g) == P.identity(self.degree)

    def gamma2_key(self, g):
        return self.phi(g)

    def coset_key(self, g):
        r = _G2_REPS[_mat_mod(_tuple(g), 2)]
        return (self.phi(g * r.inverse()), _tuple(r))

    def in_gamma2(self):
        return True

    def text(self):
        return f"kernel:sigmaA={P.format_cycles(self.sigma_a)};sigmaB={P.format_cycles(self.sigma_b)}"


def is_member(spec: SubgroupSpec, g: Mat2) -> bool:
    return spec.is_member(g)


_LEVEL = re.compile(r"^(gamma0|gamma):\s*(\d+)$")


def parse_spec(text: str) -> SubgroupSpec:
    """Parse ``gamma:N``, ``gamma0:N``, ``kernel:sigmaA=..;sigmaB=..`` or ``join:gamma:N;word=..``."""
    s = text.strip()
    m = _LEVEL.match(s)
    if m:
        n = int(m.group(2))
        if n < 1:
            raise ParseError("level must be at least 1", m.start(2) + 1, text)
        return PrincipalCongruence(n) if m.group(1) == "gamma" else GammaZero(n)
    if s.startswith("kernel:"):
        fields = _fields(s[len("kernel:"):], text, len("kernel:"))
        if set(fields) != {"sigmaA", "sigmaB"}:
            raise ParseError("kernel spec needs sigmaA=... and sigmaB=...", 8, text)
        a = P.parse_cycles(fields["sigmaA"])
        b = P.parse_cycles(fields["sigmaB"])
        n = max(len(a), len(b))
        return Gamma2KernelOfHom(P.pad(a, n), P.pad(b, n))
    if s.startswith("join:"):
        body = s[len("join:"):]
        base_text, _, rest = body.partition(";")
        base = parse_spec(base_text)
        if not isinstance(base, PrincipalCongruence):
            raise ParseError("join base must be gamma:N", len("join:") + 1, text)
        fields = _fields(rest, text, len("join:") + len(base_text) + 1)
        if set(fields) != {"word"}:
            raise ParseError("join spec needs word=...", len("join:") + len(base_text) + 2, text)
        parse_word(fields["word"])
        return JoinWithCyclic(base, fields["word"])
    raise ParseError("unknown subgroup spec; expected gamma:N, gamma0:N, kernel:... or join:...", 1, text)


def _fields(body, text, offset):
    out = {}
    pos = offset
    for part in body.split(";"):
        key, eq, val = part.partition("=")
        if not eq:
            raise ParseError(f"expected key=value, got {part!r}", pos + 1, text)
        out[key.strip()] = val.strip()
        pos += len(part) + 1
    return out


__all__ = [
    "SubgroupSpec", "PrincipalCongruence", "GammaZero", "JoinWithCyclic",
    "Gamma2KernelOfHom", "is_member", "parse_spec", "format_word",
]
