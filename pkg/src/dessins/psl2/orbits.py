"""Gamma_0(N)-orbits of the points gamma_j^t(tau)/N, tau in {i, rho}.

Two points M1(tau), M2(tau) with M_k = diag(1, N) gamma_k^t are in one
orbit iff M2 s M1^-1 lies in Gamma_0(N) for some s in the PSL2(Z)-stabilizer
of tau.  Conjugating Gamma_0(N) by diag(1, N) lands in SL2(Z), so this finite
search is complete.
"""

from dataclasses import dataclass
from fractions import Fraction

from ..arith.quadext import QuadExt
from ..arith.poly import format_terms
from ..errors import DomainError
from .matrix import S, T, Mat2
from .subgroups import GammaZero
from .words import format_word, reduce_word

TAUS = ("i", "rho")

_STABILIZERS = {
    "i": (Mat2.identity(), S),
    "rho": (Mat2.identity(), T * S, (T * S) ** 2),
}

# tau as an element of Q(sqrt(-1)) or Q(sqrt(-3)); rho = exp(i*pi/3)
_TAU_VALUE = {
    "i": QuadExt(0, 1, -1),
    "rho": QuadExt(Fraction(1, 2), Fraction(1, 2), -3),
}


def _rmul(x, y):
    a, b, c, d = x
    e, f, g, h = y
    return (a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h)


def _rinv(x):
    a, b, c, d = x
    det = Fraction(a * d - b * c)
    return (d / det, -b / det, -c / det, a / det)


@dataclass(frozen=True)
class OrbitPoint:
    base: str
    M: tuple  # (a, b, c, d) rationals, det > 0
    label: str = ""

    def __post_init__(self):
        if self.base not in TAUS:
            raise DomainError(f"base point must be one of {TAUS}")
        a, b, c, d = self.M
        if a * d - b * c <= 0:
            raise DomainError("orbit point matrix needs positive determinant")

    def value(self) -> QuadExt:
        a, b, c, d = self.M
        t = _TAU_VALUE[self.base]
        return (t * a + b) / (t * c + d)

    def text(self):
        v = self.value()
        if self.base == "i":
            return format_terms([t for t in ((v.b, "i"), (v.a, "")) if t[0]])
        # x + y*rho with rho = 1/2 + sqrt(-3)/2
        y = 2 * v.b
        x = v.a - v.b
        return format_terms([t for t in ((y, "rho"), (x, "")) if t[0]])

    def __str__(self):
        return self.text()


@dataclass(frozen=True)
class Orbit:
    members: tuple  # indices j (0-based) into the point list
    elliptic: bool


def _as_tuple(g):
    return (g.a, g.b, g.c, g.d) if isinstance(g, Mat2) else tuple(g)


def gamma0_left_coset_reps(N):
    """Left coset representatives of Gamma_0(N): BFS over words in S < T, keeping
    a word iff its coset ``g Gamma_0(N)`` is new.

    Words grow on the left, since left multiplication permutes left cosets.
    """
    spec = GammaZero(N)
    target = _mu0(N)
    e = Mat2.identity()
    out = [(e, ())]
    seen = {spec.coset_key(e.inverse())}
    head = 0
    while len(out) < target:
        g, w = out[head]
        for name, x in (("S", S), ("T", T)):
            h = x * g
            k = spec.coset_key(h.inverse())
            if k not in seen:
                seen.add(k)
                out.append((h, reduce_word(((name, 1),) + w)))
        head += 1
    return out[:target]


def _mu0(N):
    from .cosets import mu_gamma0
    return mu_gamma0(N)


def orbit_points(N, tau, reps=None):
    if tau not in TAUS:
        raise DomainError(f"tau must be one of {TAUS}")
    if reps is None:
        reps = [g for g, _ in gamma0_left_coset_reps(N)]
    D = (1, 0, 0, N)
    pts = []
    for g in reps:
        gt = _as_tuple(g)
        gt = (gt[0], gt[2], gt[1], gt[3])  # transpose
        M = tuple(Fraction(x) for x in _rmul(D, gt))
        pts.append(OrbitPoint(tau, M))
    return pts


def _in_gamma0(x, N):
    if any(Fraction(v).denominator != 1 for v in x):
        return False
    a, b, c, d = (int(v) for v in x)
    return a * d - b * c == 1 and c % N == 0


def equivalent(p1: OrbitPoint, p2: OrbitPoint, N) -> bool:
    inv1 = _rinv(p1.M)
    for s in _STABILIZERS[p1.base]:
        if _in_gamma0(_rmul(_rmul(p2.M, _as_tuple(s)), inv1), N):
            return True
    return False


def is_elliptic(p: OrbitPoint, N) -> bool:
    inv = _rinv(p.M)
    for s in _STABILIZERS[p.base][1:]:
        if _in_gamma0(_rmul(_rmul(p.M, _as_tuple(s)), inv), N):
            return True
    return False


def scaled_orbit_partition(N, tau, reps=None):
    """Partition the points ``gamma_j^t(tau)/N`` into Gamma_0(N)-orbits.

    Returns ``(points, orbits)``; each orbit lists member indices in order and
    flags whether its points are elliptic for Gamma_0(N).
    """
    if N < 2:
        raise DomainError("N must be at least 2")
    pts = orbit_points(N, tau, reps)
    orbits = []
    for j, p in enumerate(pts):
        for o in orbits:
            if equivalent(pts[o[0]], p, N):
                o.append(j)
                break
        else:
            orbits.append([j])
    return pts, [Orbit(tuple(o), is_elliptic(pts[o[0]], N)) for o in orbits]


__all__ = [
    "OrbitPoint", "Orbit", "gamma0_left_coset_reps", "orbit_points",
    "scaled_orbit_partition", "equivalent", "is_elliptic", "format_word",
]
