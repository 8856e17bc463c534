"""Reduced rational functions over Q or Q(sqrt d)."""

from fractions import Fraction
from math import gcd as igcd

from ..errors import DomainError, PoleError
from .poly import Poly, format_poly, poly_gcd
from .quadext import field_tag


class RatFunc:
    """``num / den`` with coprime numerator and monic denominator.

    Construction reduces by the gcd unless ``reduced=True`` promises coprimality,
    in which case only the denominator is made monic.
    """

    __slots__ = ("num", "den")

    def __init__(self, num, den=None, *, reduced=False):
        if not isinstance(num, Poly):
            var = den.var if isinstance(den, Poly) else "z"
            num = Poly.constant(num, var)
        if den is None:
            den = Poly.constant(1, num.var)
        elif not isinstance(den, Poly):
            den = Poly.constant(den, num.var)
        if not den:
            raise DomainError("rational function with zero denominator")
        if num.var != den.var:
            if den.is_constant():
                den = den.to_var(num.var)
            elif num.is_constant():
                num = num.to_var(den.var)
            else:
                raise DomainError(f"variable mismatch {num.var!r} vs {den.var!r}")
        if not num:
            num, den = num, Poly.constant(1, num.var)
        elif not reduced and den.degree > 0:
            g = poly_gcd(num, den)
            if g.degree > 0:
                num, den = num.exquo(g), den.exquo(g)
        lc = den.lc()
        if lc != 1:
            num, den = num / lc, den / lc
        self.num = num
        self.den = den

    @classmethod
    def variable(cls, var="z"):
        return cls(Poly.x(var))

    @classmethod
    def constant(cls, c, var="z"):
        return cls(Poly.constant(c, var))

    @property
    def var(self):
        return self.num.var

    @property
    def degree(self):
        return max(self.num.degree, self.den.degree)

    def is_constant(self):
        return self.num.degree <= 0 and self.den.degree == 0

    def field(self):
        """``d`` of the quadratic field the coefficients live in, or None for Q."""
        return field_tag(self.num.coeffs + self.den.coeffs)

    def _lift(self, other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, Poly):
            return RatFunc(other.to_var(self.var) if other.is_constant() else other)
        return RatFunc.constant(other, self.var)

    def __add__(self, other):
        o = self._lift(other)
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._lift(other)
        if not o.num:
            raise DomainError("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        return self._lift(other) / self

    def __pow__(self, n):
        if not isinstance(n, int):
            raise DomainError("rational function powers need an integer exponent")
        if n < 0:
            if not self.num:
                raise DomainError("negative power of zero")
            return RatFunc(self.den ** -n, self.num ** -n, reduced=True)
        return RatFunc(self.num ** n, self.den ** n, reduced=True)

    def __eq__(self, other):
        if not isinstance(other, RatFunc):
            try:
                other = self._lift(other)
            except DomainError:
                return NotImplemented
        return self.num * other.den == other.num * self.den

    def __hash__(self):
        return hash((self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if not d:
            raise PoleError(f"{x} is a pole")
        n = self.num(x)
        if isinstance(n, int) and isinstance(d, int):
            return Fraction(n, d)
        return n / d

    def compose(self, inner):
        """Return ``self(inner(z))``; the degree multiplies.

        Homogenized substitution of coprime parts stays coprime, so no gcd is
        taken.
        """
        if not isinstance(inner, RatFunc):
            inner = RatFunc(inner)
        if inner.degree < 1:
            raise DomainError("composition with a constant inner function")
        k = self.degree
        n, d = inner.num, inner.den

        def hom(p):
            acc = Poly((), n.var)
            dpow = Poly.constant(1, n.var)
            # sum c_i n^i d^(k-i), built from the top so powers of d accumulate
            for i in range(k, -1, -1):
                c = p[i]
                if c:
                    acc = acc + (n ** i) * dpow * c
                dpow = dpow * d
            return acc

        return RatFunc(hom(self.num), hom(self.den), reduced=True)

    def to_var(self, var):
        return RatFunc(self.num.to_var(var), self.den.to_var(var), reduced=True)

    def __repr__(self):
        return f"RatFunc({self.num!r}, {self.den!r})"

    def __str__(self):
        return format_ratfunc(self)


def integral_parts(f):
    """For rational coefficients: integer ``(num, den)`` with ``num/den == f``,
    jointly primitive and ``lc(den) > 0``.  Otherwise the stored parts."""
    coeffs = f.num.coeffs + f.den.coeffs
    if field_tag(coeffs) is not None:
        return f.num, f.den
    fr = [Fraction(c) for c in coeffs if c]
    L = 1
    for c in fr:
        L = L * c.denominator // igcd(L, c.denominator)
    G = 0
    for c in fr:
        G = igcd(G, (c * L).numerator)
    scale = Fraction(L, G)
    return f.num * scale, f.den * scale


def format_ratfunc(f):
    num, den = integral_parts(f)
    if den.degree == 0:
        if den.lc() == 1:
            return format_poly(num)
        return f"({format_poly(num)})/{format_poly(den)}"
    return f"({format_poly(num)})/({format_poly(den)})"


def ratfunc_compose(outer, inner):
    return outer.compose(inner)


def mobius(a, b, c, d, var="z"):
    """The rational function ``(a*z + b) / (c*z + d)``; singular matrices are rejected."""
    if a * d - b * c == 0:
        raise DomainError("singular Mobius map")
    return RatFunc(Poly((b, a), var), Poly((d, c), var))
