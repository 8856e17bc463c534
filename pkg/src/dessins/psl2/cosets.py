"""Right-coset tables and closed-form indices."""

from dataclasses import dataclass
from fractions import Fraction

from .. import perm as P
from ..errors import DomainError
from .matrix import GEN_A, GEN_B, S, T, Mat2
from .words import format_word, reduce_word

GAMMA1 = "gamma1"
GAMMA2 = "gamma2"

_GENS = {
    GAMMA1: (("S", S), ("T", T)),
    GAMMA2: (("A", GEN_A), ("B", GEN_B)),
}

MAX_INDEX = 10**6


@dataclass(frozen=True)
class CosetTable:
    """Right cosets ``Gamma r_i`` of ``spec`` inside the ambient group.

    ``perms[g][i] = j`` means ``r_i * g`` lies in coset ``j``; coset 0 is the
    subgroup itself.  Indices are 0-based internally and printed 1-based.
    """
    spec: object
    ambient: str
    reps: tuple  # matrices
    words: tuple  # reduced words
    perms: dict

    @property
    def m(self) -> int:
        return len(self.reps)

    index = m

    @property
    def generators(self):
        return tuple(name for name, _ in _GENS[self.ambient])

    def sigma(self, name):
        if name in self.perms:
            return self.perms[name]
        if self.ambient == GAMMA1 and name == "ST":
            return P.mul(self.perms["S"], self.perms["T"])
        raise DomainError(f"no generator {name!r} for ambient {self.ambient}")

    def key(self, g: Mat2):
        return self.spec.coset_key(g) if self.ambient == GAMMA1 else self.spec.gamma2_key(g)

    def coset_of(self, g: Mat2) -> int:
        k = self.key(g)
        try:
            return self._lookup[k]
        except KeyError:
            raise DomainError(f"{g} is not in the ambient group of this table") from None

    @property
    def _lookup(self):
        cache = self.__dict__.get("_lookup_cache")
        if cache is None:
            cache = {self.key(r): i for i, r in enumerate(self.reps)}
            object.__setattr__(self, "_lookup_cache", cache)
        return cache

    def rep_text(self, i):
        return format_word(self.words[i])


def coset_table(spec, ambient=GAMMA1) -> CosetTable:
    """Enumerate right cosets breadth-first in the positive generators.

    Representatives are shortlex-least words: generators are tried in the
    order S < T (ambient Gamma(1)) or A < B (ambient Gamma(2)).
    """
    if ambient not in _GENS:
        raise DomainError(f"unknown ambient group {ambient!r}")
    if ambient == GAMMA2 and not spec.in_gamma2():
        raise DomainError(f"{spec.text()} is not contained in Gamma(2)")
    gens = _GENS[ambient]
    key = spec.coset_key if ambient == GAMMA1 else spec.gamma2_key
    e = Mat2.identity()
    reps, words = [e], [()]
    lookup = {key(e): 0}
    edges = []
    head = 0
    while head < len(reps):
        r, w = reps[head], words[head]
        row = []
        for name, g in gens:
            h = r * g
            k = key(h)
            j = lookup.get(k)
            if j is None:
                j = len(reps)
                if j >= MAX_INDEX:
                    raise DomainError("index exceeds the enumeration limit")
                lookup[k] = j
                reps.append(h)
                words.append(reduce_word(w + ((name, 1),)))
            row.append(j)
        edges.append(row)
        head += 1
    perms = {name: tuple(edges[i][gi] for i in range(len(reps))) for gi, (name, _) in enumerate(gens)}
    table = CosetTable(spec, ambient, tuple(reps), tuple(words), perms)
    object.__setattr__(table, "_lookup_cache", lookup)
    return table


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def mu_gamma(N) -> int:
    """[PSL2(Z) : image of Gamma(N)]."""
    if N == 1:
        return 1
    if N == 2:
        return 6
    v = Fraction(N**3, 2)
    for p in _prime_factors(N):
        v *= 1 - Fraction(1, p * p)
    return int(v)


def mu_gamma0(N) -> int:
    v = Fraction(N)
    for p in _prime_factors(N):
        v *= 1 + Fraction(1, p)
    return int(v)


def gamma_in_gamma2(level) -> int:
    """[image of Gamma(2) : image of Gamma(level)] for even ``level`` = 2n:
    4 for n = 2, mu_n for odd n, 4/3 mu_n for even n >= 4."""
    if level % 2 or level < 2:
        raise DomainError("Gamma(level) lies in Gamma(2) only for even level")
    n = level // 2
    if n == 1:
        return 1
    if n == 2:
        return 4
    if n % 2:
        return mu_gamma(n)
    return mu_gamma(n) * 4 // 3


FAMILIES = {"gamma": mu_gamma, "gamma0": mu_gamma0, "gamma_in_gamma2": gamma_in_gamma2}


def index_formulas(N, family) -> int:
    if family not in FAMILIES:
        raise DomainError(f"unsupported family {family!r}; expected one of {sorted(FAMILIES)}")
    if N < 1:
        raise DomainError("N must be positive")
    return FAMILIES[family](N)
