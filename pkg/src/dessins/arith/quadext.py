"""Elements a + b*sqrt(d) of a quadratic field Q(sqrt(d))."""

from fractions import Fraction
from numbers import Rational

from ..errors import DomainError


def is_squarefree(n):
    n = abs(n)
    if n == 0:
        return False
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


class QuadExt:
    """An element ``a + b*sqrt(d)`` with rational ``a``, ``b``.

    ``d`` is a squarefree integer different from 0 and 1. Operations between
    elements with different ``d`` raise :class:`DomainError`; plain ints and
    Fractions are embedded with ``b = 0``.
    """

    __slots__ = ("a", "b", "d")

    def __init__(self, a, b=0, d=-1):
        if d in (0, 1) or not is_squarefree(d):
            raise DomainError(f"quadratic field tag d={d} must be squarefree and not 0 or 1")
        self.a = Fraction(a)
        self.b = Fraction(b)
        self.d = int(d)

    @classmethod
    def sqrt(cls, d):
        return cls(0, 1, d)

    def _coerce(self, other):
        if isinstance(other, QuadExt):
            if other.d != self.d:
                raise DomainError(f"cannot mix Q(sqrt({self.d})) with Q(sqrt({other.d}))")
            return other
        if isinstance(other, Rational):
            return QuadExt(other, 0, self.d)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadExt(-self.a, -self.b, self.d)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, Rational):
            return QuadExt(self.a * other, self.b * other, self.d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadExt(self.a * o.a + self.d * self.b * o.b,
                       self.a * o.b + self.b * o.a, self.d)

    __rmul__ = __mul__

    def conjugate(self):
        return QuadExt(self.a, -self.b, self.d)

    def norm(self):
        return self.a * self.a - self.d * self.b * self.b

    def trace(self):
        return 2 * self.a

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise DomainError("inverse of zero in a quadratic field")
        return QuadExt(self.a / n, -self.b / n, self.d)

    def __truediv__(self, other):
        if isinstance(other, Rational):
            if other == 0:
                raise DomainError("division by zero")
            return QuadExt(self.a / other, self.b / other, self.d)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, n):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else self.inverse()
        n = abs(n)
        result = QuadExt(1, 0, self.d)
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadExt):
            if self.b == 0 and other.b == 0:
                return self.a == other.a
            return self.d == other.d and self.a == other.a and self.b == other.b
        if isinstance(other, Rational):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b, self.d))

    def __bool__(self):
        return bool(self.a) or bool(self.b)

    def is_rational(self):
        return self.b == 0

    def __complex__(self):
        if self.d < 0:
            return complex(float(self.a), float(self.b) * (-self.d) ** 0.5)
        return complex(float(self.a) + float(self.b) * self.d ** 0.5)

    def __repr__(self):
        return f"QuadExt({self.a}, {self.b}, d={self.d})"

    def __str__(self):
        return format_scalar(self)


def _fmt_rational(q):
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(c):
    """Canonical text of a rational or quadratic scalar.

    Rationals print as ``p`` or ``p/q``; quadratic elements as
    ``a+b*sqrt(d)`` with the rational part omitted when zero.
    """
    if isinstance(c, QuadExt):
        if c.b == 0:
            return _fmt_rational(c.a)
        root = f"sqrt({c.d})"
        if c.b == 1:
            irr = root
        elif c.b == -1:
            irr = "-" + root
        else:
            irr = f"{_fmt_rational(c.b)}*{root}"
        if c.a == 0:
            return irr
        sep = "" if irr.startswith("-") else "+"
        return f"{_fmt_rational(c.a)}{sep}{irr}"
    return _fmt_rational(c)


def field_tag(values):
    """Return the common ``d`` of any quadratic values among ``values`` (None if all rational)."""
    d = None
    for v in values:
        if isinstance(v, QuadExt) and v.b != 0:
            if d is None:
                d = v.d
            elif d != v.d:
                raise DomainError(f"cannot mix Q(sqrt({d})) with Q(sqrt({v.d}))")
    return d
