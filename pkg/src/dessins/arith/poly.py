"""Dense univariate polynomials over an exact coefficient ring.

Coefficients may be ints, Fractions, :class:`QuadExt` elements, or other
:class:`Poly` instances in a different variable; the nested case gives the
recursive representation used for elimination over ``Z[X][Y]``.
"""

from fractions import Fraction
from math import gcd as igcd
from numbers import Rational

from ..errors import DomainError
from .quadext import QuadExt, format_scalar

ZERO_DEGREE = -1  # degree reported for the zero polynomial


def _is_zero(c):
    return not c


def exquo(a, b):
    """Quotient ``a / b`` in the coefficient ring (field division for scalars).

    A polynomial divided by a coefficient-level element is divided termwise.
    """
    if _is_zero(a):
        return 0
    if isinstance(a, Poly) and isinstance(b, Poly) and a.var == b.var:
        return a.exquo(b)
    if isinstance(b, Poly) and b.is_constant():
        return exquo(a, b[0])
    if isinstance(a, Poly):
        return a.map_coeffs(lambda c: exquo(c, b))
    if isinstance(b, Poly):
        raise ArithmeticError("inexact division by a nonconstant polynomial")
    return _fdiv(a, b)


def _fdiv(a, b):
    if isinstance(a, int) and isinstance(b, int):
        return Fraction(a, b)
    return a / b


def _normalize_scalar(c):
    if isinstance(c, QuadExt) and c.b == 0:
        c = c.a
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


class Poly:
    """Polynomial ``sum(coeffs[k] * var**k)``; coefficients stored low to high.

    Trailing zeros are trimmed, so the leading coefficient is nonzero unless the
    polynomial is zero, whose degree is ``ZERO_DEGREE``. Instances are immutable.
    """

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs=(), var="z"):
        cs = [_normalize_scalar(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    # construction -------------------------------------------------------
    @classmethod
    def constant(cls, c, var="z"):
        return cls((c,), var)

    @classmethod
    def x(cls, var="z"):
        return cls((0, 1), var)

    @classmethod
    def monomial(cls, c, k, var="z"):
        return cls((0,) * k + (c,), var)

    # basic properties ----------------------------------------------------
    @property
    def degree(self):
        return len(self.coeffs) - 1

    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def __getitem__(self, k):
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return 0

    def __bool__(self):
        return bool(self.coeffs)

    def is_constant(self):
        return len(self.coeffs) <= 1

    def __eq__(self, other):
        if isinstance(other, Poly):
            if other.var != self.var:
                return self.is_constant() and other.is_constant() and self[0] == other[0]
            return self.coeffs == other.coeffs
        if self.is_constant():
            return self[0] == other
        return False

    def __hash__(self):
        if self.is_constant():
            return hash(self[0])
        return hash((self.var, self.coeffs))

    def __repr__(self):
        return f"Poly({list(self.coeffs)!r}, var={self.var!r})"

    def __str__(self):
        return format_poly(self)

    # arithmetic ----------------------------------------------------------
    def _lift(self, other):
        if isinstance(other, Poly) and other.var == self.var:
            return other
        return Poly((other,), self.var)

    def map_coeffs(self, fn):
        return Poly([fn(c) for c in self.coeffs], self.var)

    def __add__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[k] + o[k] for k in range(n)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return Poly([-c for c in self.coeffs], self.var)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        return Poly([self[k] - o[k] for k in range(n)], self.var)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not (isinstance(other, Poly) and other.var == self.var):
            if _is_zero(other):
                return Poly((), self.var)
            return Poly([c * other for c in self.coeffs], self.var)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return Poly((), self.var)
        out = [0] * (len(a) + len(b) - 1)
        for i, ai in enumerate(a):
            if _is_zero(ai):
                continue
            for j, bj in enumerate(b):
                out[i + j] = out[i + j] + ai * bj
        return Poly(out, self.var)

    def __rmul__(self, other):
        if _is_zero(other):
            return Poly((), self.var)
        return Poly([other * c for c in self.coeffs], self.var)

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("polynomial powers need a nonnegative integer exponent")
        result = Poly((1,), self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if other.var == self.var and other.degree > 0:
                return NotImplemented
            other = other[0]
        if _is_zero(other):
            raise DomainError("division by zero")
        return self.map_coeffs(lambda c: _fdiv(c, other))

    def scale_var(self, s):
        """Return ``p(s * var)``."""
        out, pw = [], 1
        for c in self.coeffs:
            out.append(c * pw)
            pw = pw * s
        return Poly(out, self.var)

    def shift(self, k):
        """Multiply by ``var**k``."""
        if not self.coeffs:
            return self
        return Poly((0,) * k + self.coeffs, self.var)

    def reverse(self, n=None):
        """Return ``var**n * p(1/var)``; ``n`` defaults to the degree."""
        if n is None:
            n = self.degree
        if n < self.degree:
            raise DomainError("reversal length below degree")
        cs = list(self.coeffs) + [0] * (n + 1 - len(self.coeffs))
        return Poly(cs[::-1], self.var)

    # evaluation ----------------------------------------------------------
    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner):
        """Return ``self(inner)`` for a polynomial ``inner``."""
        acc = Poly((), inner.var)
        for c in reversed(self.coeffs):
            acc = acc * inner + c
        return acc

    def derivative(self):
        return Poly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    # division --------------------------------------------------------------
    def divmod(self, other):
        """Euclidean division; coefficients must live in a field."""
        if not other:
            raise DomainError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc()
        q = [0] * max(len(r) - db, 0)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if _is_zero(c):
                continue
            t = _fdiv(c, lb)
            q[k - db] = t
            for j, bj in enumerate(other.coeffs):
                r[k - db + j] = r[k - db + j] - t * bj
        return Poly(q, self.var), Poly(r[:db] if db > 0 else (), self.var)

    def __mod__(self, other):
        return self.divmod(other)[1]

    def __floordiv__(self, other):
        return self.divmod(other)[0]

    def prem(self, other):
        """Pseudo-remainder: ``lc(other)**(deg self - deg other + 1) * self mod other``."""
        if not other:
            raise DomainError("pseudo-division by zero")
        db = other.degree
        if self.degree < db:
            return self
        lb = other.lc()
        r = list(self.coeffs)
        steps = self.degree - db + 1
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            r = [x * lb for x in r]
            if not _is_zero(c):
                for j, bj in enumerate(other.coeffs):
                    r[k - db + j] = r[k - db + j] - c * bj
            steps -= 1
            r[k] = 0
        res = Poly(r[:db] if db > 0 else (), self.var)
        if steps:
            res = res * (lb ** steps)
        return res

    def exquo(self, other):
        """Exact quotient over an integral domain; raises ArithmeticError if inexact."""
        if not other:
            raise DomainError("polynomial division by zero")
        r = list(self.coeffs)
        db = other.degree
        lb = other.lc()
        if len(r) - 1 < db:
            if not self:
                return Poly((), self.var)
            raise ArithmeticError("inexact polynomial division")
        q = [0] * (len(r) - db)
        for k in range(len(r) - 1, db - 1, -1):
            c = r[k]
            if _is_zero(c):
                continue
            t = exquo(c, lb)
            q[k - db] = t
            for j, bj in enumerate(other.coeffs):
                r[k - db + j] = r[k - db + j] - t * bj
        if any(not _is_zero(c) for c in r[:db]):
            raise ArithmeticError("inexact polynomial division")
        return Poly(q, self.var)

    # normalization -----------------------------------------------------------
    def is_rational(self):
        return all(isinstance(c, Rational) for c in self.coeffs)

    def monic(self):
        if not self:
            return self
        lc = self.lc()
        if lc == 1:
            return self
        return self.map_coeffs(lambda c: _fdiv(c, lc))

    def content(self):
        """Positive rational content of a rational polynomial (0 for the zero polynomial)."""
        num, den = 0, 1
        for c in self.coeffs:
            c = _as_fraction(c)
            num = igcd(num, c.numerator)
            den = den * c.denominator // igcd(den, c.denominator)
        if num == 0:
            return Fraction(0)
        return Fraction(num, den)

    def primitive(self):
        """Integer primitive part with positive leading coefficient (rational input only)."""
        if not self:
            return self
        c = self.content()
        if self.lc() < 0:
            c = -c
        return Poly([_as_fraction(x) / c for x in self.coeffs], self.var)

    def to_var(self, var):
        return Poly(self.coeffs, var)


def _as_fraction(c):
    if isinstance(c, QuadExt):
        if c.b != 0:
            raise DomainError("content is only defined for rational polynomials")
        return c.a
    return Fraction(c)


# gcd and squarefree decomposition ---------------------------------------------

def _rational_gcd(a, b):
    a, b = a.primitive(), b.primitive()
    while b:
        r = a.prem(b)
        a, b = b, (r.primitive() if r else r)
    return a.monic()


def poly_gcd(a, b):
    """Monic gcd of two polynomials over a field (Q or Q(sqrt d))."""
    if not a:
        return b.monic()
    if not b:
        return a.monic()
    if a.is_rational() and b.is_rational():
        return _rational_gcd(a, b)
    while b:
        a, b = b, a % b
    return a.monic()


def squarefree_factor(p):
    """Yun's squarefree decomposition.

    Returns ``(unit, [(factor, multiplicity), ...])`` with monic, squarefree,
    pairwise coprime factors such that ``unit * prod(f**m) == p``.
    """
    if not p:
        raise DomainError("squarefree factorization of the zero polynomial")
    unit = p.lc()
    f = p.monic()
    out = []
    if f.degree == 0:
        return unit, out
    d = f.derivative()
    a = poly_gcd(f, d)
    b = f.exquo(a) if a.degree > 0 else f
    c = d.exquo(a) if a.degree > 0 else d
    dd = c - b.derivative()
    k = 1
    while b.degree > 0:
        g = poly_gcd(b, dd)
        if g.degree > 0:
            out.append((g, k))
        b = b.exquo(g)
        c = dd.exquo(g)
        dd = c - b.derivative()
        k += 1
    return unit, out


# printing --------------------------------------------------------------------

def _coeff_text(c):
    if isinstance(c, Poly):
        return f"({format_poly(c)})"
    s = format_scalar(c)
    if isinstance(c, QuadExt) and c.b != 0 and c.a != 0:
        return f"({s})"
    return s


def _is_negative_scalar(c):
    if isinstance(c, QuadExt):
        return c.b == 0 and c.a < 0 or (c.a == 0 and c.b < 0)
    if isinstance(c, Rational):
        return c < 0
    return False


def format_terms(terms):
    """Join ``(coefficient, monomial_text)`` pairs into canonical ``+``/``-`` text."""
    parts = []
    for c, mono in terms:
        neg = _is_negative_scalar(c)
        mag = -c if neg else c
        if mono:
            if mag == 1:
                body = mono
            else:
                body = f"{_coeff_text(mag)}*{mono}"
        else:
            body = _coeff_text(mag)
        if parts:
            parts.append(("-" if neg else "+") + body)
        else:
            parts.append(("-" if neg else "") + body)
    return "".join(parts) if parts else "0"


def format_poly(p):
    """Canonical text: descending powers, explicit signs, ``^`` for powers, no spaces."""
    terms = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if _is_zero(c):
            continue
        mono = "" if k == 0 else (p.var if k == 1 else f"{p.var}^{k}")
        terms.append((c, mono))
    return format_terms(terms)
