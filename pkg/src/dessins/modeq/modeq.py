"""Modular equations of X_0(N) by elimination, plus special values of j = 1728 f."""

from dataclasses import dataclass
from fractions import Fraction

from ..arith.bivar import BivarPoly
from ..arith.palindromic import laurent_of, palindromic_reduce
from ..arith.parse import parse_poly
from ..arith.poly import Poly, squarefree_factor
from ..arith.quadext import QuadExt
from ..arith.ratfunc import RatFunc, integral_parts, mobius
from ..arith.resultant import resultant
from ..belyi.catalog import get
from ..errors import DegenerateInputError, DomainError, PoleError, PreconditionError

# built-in (f, g) pairs: z -> j(z)/1728 and z -> j(Nz)/1728 on X_0(N)
LEVEL_PAIRS = {2: ("f02", "g02"), 3: ("f03", "g03")}
INVOLUTION = (1, 0, 1, -1)  # z -> z/(z-1)


@dataclass(frozen=True)
class ModularPolynomial:
    phi: BivarPoly
    level: object = None
    content_removed: Fraction = Fraction(1)
    sign_flipped: bool = False
    symmetric: bool = False
    monic_in_x: bool = False

    @property
    def bidegree(self):
        return self.phi.degree_x(), self.phi.degree_y()

    def text(self):
        return str(self.phi)


def _as_rational_map(f, name):
    if not isinstance(f, RatFunc):
        f = RatFunc(f)
    if f.degree < 1:
        raise DomainError(f"{name} must be nonconstant")
    if not (f.num.is_rational() and f.den.is_rational()):
        raise DomainError(f"{name} must have rational coefficients")
    return f


def _pad(p, n):
    return [p[k] for k in range(n)]


def _x(coeffs):
    return Poly(coeffs, "X")


def normalize_phi(raw: BivarPoly):
    """Content removal and sign choice.

    The sign is chosen so the highest pure power of X has coefficient +1
    when such a term exists, otherwise by the canonical leading term.
    Returns ``(poly, content, flipped)``.
    """
    poly, c = raw.normalized()
    dx = max((i for i, j in poly.terms if j == 0), default=None)
    flipped = c < 0
    if dx is not None and poly[(dx, 0)] < 0:
        poly, flipped = -poly, not flipped
    return poly, abs(c), flipped


def is_squarefree_relation(phi: BivarPoly) -> bool:
    """Whether Phi is squarefree as a polynomial in Y over Q(X).

    Phi(x0, Y) is tested for x0 = 0, 1, ...; a squarefree Phi can fail only at
    roots of its discriminant in X, whose degree is below (2 dy) dx + 1.
    """
    dx, dy = phi.degree_x(), phi.degree_y()
    if dy < 1:
        return True
    for x0 in range(2 * dy * max(dx, 1) + 2):
        fiber = Poly([sum(c * x0 ** i for (i, j), c in phi.terms.items() if j == k)
                      for k in range(dy + 1)], "Y")
        if fiber.degree < dy:
            continue
        _, factors = squarefree_factor(fiber)
        if all(k == 1 for _, k in factors):
            return True
    return False


def modular_polynomial(f, g, scale=1728, level=None) -> ModularPolynomial:
    """``Res_z(scale*N_f - X*D_f, scale*N_g - Y*D_g)``, made primitive.

    For reduced f the resultant never vanishes identically; a dependent pair
    such as g = f shows up as a non-squarefree eliminant and is rejected.
    """
    f = _as_rational_map(f, "f")
    g = _as_rational_map(g, "g")
    if f.var != g.var:
        raise DomainError("f and g must use the same variable")
    nf, df = integral_parts(f)
    ng, dg = integral_parts(g)
    n1 = max(nf.degree, df.degree) + 1
    n2 = max(ng.degree, dg.degree) + 1
    # coefficients nested as Poly_Y[Poly_X]
    A = Poly([Poly([_x([scale * a, -b])], "Y") for a, b in zip(_pad(nf, n1), _pad(df, n1))], "z")
    B = Poly([Poly([_x([scale * a]), _x([-b])], "Y") for a, b in zip(_pad(ng, n2), _pad(dg, n2))], "z")
    res = resultant(A, B)
    raw = BivarPoly.from_nested(res) if isinstance(res, Poly) else BivarPoly.constant(res)
    if not raw or raw.total_degree() < 1:
        raise DegenerateInputError("resultant vanishes identically or is constant")
    phi, content, flipped = normalize_phi(raw)
    if not is_squarefree_relation(phi):
        raise DegenerateInputError("f and g are degenerately dependent: the eliminant is a power")
    dx = phi.degree_x()
    return ModularPolynomial(
        phi, level, content, flipped,
        symmetric=phi == phi.swap(),
        monic_in_x=phi[(dx, 0)] == 1,
    )


def level_pair(level):
    if level not in LEVEL_PAIRS:
        raise DomainError(f"no built-in pair for level {level}; available: {sorted(LEVEL_PAIRS)}")
    a, b = LEVEL_PAIRS[level]
    return get(a), get(b)


def modular_polynomial_level(level) -> ModularPolynomial:
    f, g = level_pair(level)
    return modular_polynomial(f, g, level=level)


def substitution_check(mp: ModularPolynomial, f, g, scale=1728) -> bool:
    """Phi(scale f(z), scale g(z)) vanishes as a rational function of z."""
    val = mp.phi.substitute(f * scale, g * scale)
    return not (val.num if isinstance(val, RatFunc) else val)


def involution_check(f, g, M) -> bool:
    """``g == f o M`` and ``f == g o M``; ``M`` is a 4-tuple ``(a, b, c, d)`` or a RatFunc."""
    if isinstance(M, RatFunc):
        if M.degree != 1:
            raise DomainError("Mobius map must have degree 1")
        m = M
    else:
        a, b, c, d = M
        m = mobius(a, b, c, d, f.var)
    return f.compose(m) == g and g.compose(m) == f


@dataclass
class SymmetricRoute:
    p: Poly
    q: Poly
    eliminated: BivarPoly
    ratio: object
    matches: bool


def _reduce_symmetric(h):
    lowest, coeffs = laurent_of(h)
    return palindromic_reduce(lowest, coeffs, "y")


def symmetric_route(f, g, shift, scale=1728, phi=None) -> SymmetricRoute:
    """Eliminate through y = z + 1/z after shifting z by ``shift``.

    With F, G the shifted, scaled maps, F + G = p(y) and F G = q(y);
    ``Res_y(p - U, q - V)`` at U = X + Y, V = X Y is compared with Phi.
    """
    f = _as_rational_map(f, "f")
    g = _as_rational_map(g, "g")
    move = Poly((Fraction(shift), 1), f.var)
    F = f.compose(move) * scale
    G = g.compose(move) * scale
    try:
        p = _reduce_symmetric(F + G)
        q = _reduce_symmetric(F * G)
    except PreconditionError as exc:
        raise PreconditionError(f"shifted pair is not palindromic: {exc}") from None
    if p.degree < 1 or q.degree < 1:
        raise PreconditionError("shifted pair reduces to a constant")
    P = Poly([Poly([_x([p[0], -1])], "Y")] + [Poly([_x([c])], "Y") for c in p.coeffs[1:]], "y")
    Q = Poly([Poly([_x([q[0]]), _x([-1])], "Y")] + [Poly([_x([c])], "Y") for c in q.coeffs[1:]], "y")
    R = BivarPoly.from_nested(resultant(P, Q))
    X, Y = BivarPoly.X(), BivarPoly.Y()
    sub = R.substitute(X + Y, X * Y)
    sub = sub if isinstance(sub, BivarPoly) else BivarPoly.constant(sub)
    if phi is None:
        phi = modular_polynomial(f, g, scale).phi
    ratio = sub.proportional_to(phi)
    return SymmetricRoute(p, q, sub, ratio, ratio is not None)


def symmetric_route_check(f, g, shift, scale=1728) -> bool:
    return symmetric_route(f, g, shift, scale).matches


# ----------------------------------------------------------------------------
# special values

@dataclass(frozen=True)
class SpecialPoint:
    label: str  # orbit on X_0(N)
    j_of: str  # the point of the upper half plane with the same j
    coord: str  # coordinate on the genus-0 curve
    factored: str = ""


SPECIAL_POINTS = {
    2: [
        SpecialPoint("[rho/2]", "sqrt(3)*i", "3/4", "16*15^3"),
        SpecialPoint("[i/2]", "2*i", "9/8", "66^3"),
        SpecialPoint("[sqrt(2)*i/2]", "sqrt(2)*i", "2", "20^3"),
        SpecialPoint("[(i-1)/2]", "i", "0", "1728"),
    ],
    3: [
        SpecialPoint("[rho/3]", "(1+3*sqrt(3)*i)/2", "8/9", "-3*160^3"),
        SpecialPoint("[(i+1)/3]", "(1+3*i)/2", "(6-2*sqrt(3))/9", "(18-6*sqrt(3))*(82-54*sqrt(3))^3"),
        SpecialPoint("[i/3]", "3*i", "(6+2*sqrt(3))/9", "(18+6*sqrt(3))*(82+54*sqrt(3))^3"),
        SpecialPoint("[sqrt(3)*i/3]", "sqrt(3)*i", "2", "2*30^3"),
        SpecialPoint("[rho]", "rho", "0", "0"),
    ],
}


def parse_value(text):
    """A constant in Q or Q(sqrt(d)) from its text form."""
    p = parse_poly(text, "z")
    if p.degree > 0:
        raise DomainError(f"{text!r} is not a constant")
    return p[0]


@dataclass
class SpecialValue:
    label: str
    point: object
    value: object = None
    error: str = ""
    factored: str = ""
    factored_ok: object = None
    j_of: str = ""


def special_values(f, points, scale=1728):
    """Exact ``scale * f(v)`` for each ``(label, v)``; poles become error entries."""
    out = []
    for item in points:
        if isinstance(item, SpecialPoint):
            label, v, fac, jof = item.label, parse_value(item.coord), item.factored, item.j_of
        else:
            label, v = item
            fac, jof = "", ""
        try:
            val = f(v) * scale
        except PoleError as exc:
            out.append(SpecialValue(label, v, error=str(exc), j_of=jof))
            continue
        if isinstance(val, QuadExt) and val.b == 0:
            val = val.a
        if isinstance(val, Fraction) and val.denominator == 1:
            val = val.numerator
        ok = parse_value(fac) == val if fac else None
        out.append(SpecialValue(label, v, val, factored=fac, factored_ok=ok, j_of=jof))
    return out


def special_values_level(level):
    if level not in SPECIAL_POINTS:
        raise DomainError(f"no special points registered for level {level}")
    f, _ = level_pair(level)
    return special_values(f, SPECIAL_POINTS[level])
