"""Sparse bivariate polynomials in X and Y with exact coefficients."""

from fractions import Fraction
from math import gcd as igcd

from ..errors import DomainError
from .poly import Poly, format_terms


def term_order(exps):
    """Sort key: larger max(i, j) first, then larger total degree, then larger X power."""
    i, j = exps
    return (-max(i, j), -(i + j), -i)


class BivarPoly:
    """``sum(c * X**i * Y**j)`` stored as ``{(i, j): c}`` without zero entries."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for k, c in (terms or {}).items():
            if c:
                if isinstance(c, Fraction) and c.denominator == 1:
                    c = c.numerator
                clean[(int(k[0]), int(k[1]))] = c
        self.terms = clean

    @classmethod
    def X(cls):
        return cls({(1, 0): 1})

    @classmethod
    def Y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c):
        return cls({(0, 0): c})

    # conversion to and from the nested representation Poly_Y[Poly_X[...]]
    @classmethod
    def from_nested(cls, p, xvar="X", yvar="Y"):
        out = {}

        def walk(node, i, j):
            if isinstance(node, Poly):
                for k, c in enumerate(node.coeffs):
                    if node.var == xvar:
                        walk(c, i + k, j)
                    elif node.var == yvar:
                        walk(c, i, j + k)
                    else:
                        raise DomainError(f"unexpected variable {node.var!r}")
            elif node:
                out[(i, j)] = out.get((i, j), 0) + node

        walk(p, 0, 0)
        return cls(out)

    def to_nested(self, xvar="X", yvar="Y"):
        """Nested ``Poly`` in ``yvar`` whose coefficients are polynomials in ``xvar``."""
        dy = self.degree_y()
        rows = [[0] * (self.degree_x() + 1) for _ in range(max(dy, 0) + 1)]
        for (i, j), c in self.terms.items():
            rows[j][i] = c
        return Poly([Poly(r, xvar) for r in rows], yvar)

    # properties ------------------------------------------------------------
    def degree_x(self):
        return max((i for i, _ in self.terms), default=-1)

    def degree_y(self):
        return max((j for _, j in self.terms), default=-1)

    def total_degree(self):
        return max((i + j for i, j in self.terms), default=-1)

    def __getitem__(self, exps):
        return self.terms.get(tuple(exps), 0)

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, BivarPoly):
            return self.terms == other.terms
        if not other:
            return not self.terms
        return self.terms == {(0, 0): other}

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    # arithmetic ---------------------------------------------------------------
    def _lift(self, other):
        return other if isinstance(other, BivarPoly) else BivarPoly.constant(other)

    def __add__(self, other):
        o = self._lift(other)
        out = dict(self.terms)
        for k, c in o.terms.items():
            out[k] = out.get(k, 0) + c
        return BivarPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivarPoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, BivarPoly):
            return BivarPoly({k: c * other for k, c in self.terms.items()})
        out = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivarPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, c):
        if isinstance(c, BivarPoly):
            if set(c.terms) != {(0, 0)}:
                raise DomainError("division by a nonconstant bivariate polynomial")
            c = c.terms[(0, 0)]
        if not c:
            raise DomainError("division by zero")
        return BivarPoly({k: Fraction(v) / c for k, v in self.terms.items()})

    def __pow__(self, n):
        if not isinstance(n, int) or n < 0:
            raise DomainError("bivariate powers need a nonnegative integer exponent")
        result = BivarPoly.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # transformations -----------------------------------------------------------
    def swap(self):
        """Return ``P(Y, X)``."""
        return BivarPoly({(j, i): c for (i, j), c in self.terms.items()})

    def substitute(self, x_value, y_value):
        """Evaluate with X, Y replaced by ring elements (numbers, polynomials, rational functions)."""
        xs, ys = {}, {}

        def pw(cache, base, k):
            if k not in cache:
                cache[k] = base ** k if k else 1
            return cache[k]

        acc = 0
        for (i, j), c in sorted(self.terms.items()):
            acc = acc + c * pw(xs, x_value, i) * pw(ys, y_value, j)
        return acc

    def content(self):
        num, den = 0, 1
        for c in self.terms.values():
            c = Fraction(c)
            num = igcd(num, c.numerator)
            den = den * c.denominator // igcd(den, c.denominator)
        return Fraction(num, den) if num else Fraction(0)

    def leading_sign_term(self):
        """The term whose sign fixes the normalization: first in canonical order among
        those of highest total degree."""
        top = self.total_degree()
        cands = [k for k in self.terms if sum(k) == top]
        return min(cands, key=lambda k: (-k[0], k[1]))

    def normalized(self):
        """Divide by the content and fix the sign; returns ``(poly, factor)`` with
        ``poly == self / factor``."""
        if not self.terms:
            raise DomainError("cannot normalize the zero polynomial")
        c = self.content()
        if self.terms[self.leading_sign_term()] < 0:
            c = -c
        return BivarPoly({k: Fraction(v) / c for k, v in self.terms.items()}), c

    def is_integral(self):
        return all(Fraction(c).denominator == 1 for c in self.terms.values())

    def proportional_to(self, other):
        """Return the rational ``r`` with ``self == r * other``, or None."""
        if set(self.terms) != set(other.terms) or not self.terms:
            return None
        k0 = next(iter(self.terms))
        r = Fraction(self.terms[k0]) / Fraction(other.terms[k0])
        if all(Fraction(self.terms[k]) == r * Fraction(other.terms[k]) for k in self.terms):
            return r
        return None

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: term_order(kv[0]))

    def __repr__(self):
        return f"BivarPoly({self.terms!r})"

    def __str__(self):
        return format_bivar(self)


def _mono(i, j):
    parts = []
    if i:
        parts.append("X" if i == 1 else f"X^{i}")
    if j:
        parts.append("Y" if j == 1 else f"Y^{j}")
    return "*".join(parts)


def format_bivar(p):
    """Canonical text, e.g. ``X^3+Y^3-X^2*Y^2+1488*X^2*Y+...``."""
    return format_terms([(c, _mono(i, j)) for (i, j), c in p.sorted_terms()])
