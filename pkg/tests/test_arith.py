from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from dessins.arith import (BivarPoly, Poly, QuadExt, RatFunc, expand_in_y, format_poly,
                           laurent_of, palindromic_reduce, poly_gcd, resultant,
                           squarefree_factor)
from dessins.arith.parse import parse_bivar, parse_poly, parse_ratfunc
from dessins.arith.ratfunc import integral_parts, mobius
from dessins.errors import DomainError, ParseError, PreconditionError

from oracles import sylvester_resultant

z = Poly.x("z")
ints = st.integers(-20, 20)
nonzero = ints.filter(bool)


def int_poly(min_deg=1, max_deg=4):
    return st.lists(ints, min_size=min_deg, max_size=max_deg).flatmap(
        lambda low: nonzero.map(lambda lc: Poly(low + [lc], "z")))


# -- QuadExt -------------------------------------------------------------------

def test_quadext_arithmetic():
    s3 = QuadExt.sqrt(3)
    assert s3 * s3 == 3
    a = QuadExt(1, 1, 3)
    assert a * a.conjugate() == -2
    assert a.norm() == -2
    assert a * a.inverse() == 1


def test_quadext_mixing_fields_rejected():
    with pytest.raises(DomainError):
        QuadExt(1, 1, 3) + QuadExt(1, 1, 2)


@pytest.mark.parametrize("d", [0, 1, 4, 12])
def test_quadext_bad_tag(d):
    with pytest.raises(DomainError):
        QuadExt(1, 1, d)


quad = st.tuples(ints, ints, st.integers(1, 9), st.integers(1, 9))


@given(quad, quad, st.sampled_from([-1, -3, 2, 3, 5, -7]))
def test_quadext_norm_multiplicative(x, y, d):
    u = QuadExt(Fraction(x[0], x[2]), Fraction(x[1], x[3]), d)
    v = QuadExt(Fraction(y[0], y[2]), Fraction(y[1], y[3]), d)
    assert (u * v).norm() == u.norm() * v.norm()


# -- Poly ------------------------------------------------------------------

def test_poly_basic():
    p = (z + 1) ** 3
    assert p.coeffs == (1, 3, 3, 1)
    assert p.derivative() == (z + 1) ** 2 * 3
    q, r = p.divmod(z - 1)
    assert q * (z - 1) + r == p and r == 8


def test_gcd():
    g = poly_gcd((z - 1) * (z + 2), (z - 1) * (z - 3))
    assert g == z - 1


def test_squarefree_groups_by_multiplicity():
    # 27 z^2 (z^2 - 1)^2: all three roots have multiplicity 2, so one factor z^3 - z
    p = (z ** 2 - 1) ** 2 * z ** 2 * 27
    unit, factors = squarefree_factor(p)
    assert unit == 27
    assert factors == [(z ** 3 - z, 2)]


def test_squarefree_mixed():
    p = (z - 1) * (z + 2) ** 3 * (z ** 2 + 1)
    _, factors = squarefree_factor(p)
    assert dict((k, f) for f, k in factors) == {1: (z - 1) * (z ** 2 + 1), 3: z + 2}


def test_format_poly():
    assert format_poly((z - 1) ** 2) == "z^2-2*z+1"
    assert format_poly(Poly((), "z")) == "0"


# -- resultant ---------------------------------------------------------------

def test_resultant_sign_convention():
    X, Y = Poly.x("X"), Poly.x("Y")
    a = Poly([Poly([-X], "Y"), 1], "z")
    b = Poly([Poly([0, -1], "Y"), 1], "z")
    res = resultant(a, b)
    assert BivarPoly.from_nested(res) == BivarPoly.X() - BivarPoly.Y()
    assert X and Y


def test_resultant_common_root():
    assert resultant((z - 2) * (z + 1), (z - 2) * (z - 7)) == 0


@given(int_poly(), int_poly())
def test_resultant_matches_sylvester(p, q):
    assert resultant(p, q) == sylvester_resultant(p.coeffs, q.coeffs)


@given(int_poly(2, 3), int_poly(2, 3), int_poly(2, 4))
def test_resultant_multiplicative(f, g, h):
    assert resultant(f * g, h) == resultant(f, h) * resultant(g, h)


def test_resultant_rejects_zero():
    with pytest.raises(DomainError):
        resultant(Poly((), "z"), z)


# -- palindromic --------------------------------------------------------------

@given(st.lists(ints, min_size=1, max_size=6))
def test_palindromic_round_trip(coeffs):
    q = Poly(coeffs, "y")
    lowest, laurent = expand_in_y(q)
    assert palindromic_reduce(lowest, laurent, "y") == q


def test_palindromic_example():
    # z^2 + 1/z^2 = y^2 - 2
    assert palindromic_reduce(-2, [1, 0, 0, 0, 1]) == Poly((-2, 0, 1), "y")


def test_not_palindromic():
    with pytest.raises(PreconditionError):
        palindromic_reduce(-1, [1, 0, 2])


def test_laurent_needs_monomial_denominator():
    with pytest.raises(PreconditionError):
        laurent_of(RatFunc(z, z + 1))


# -- rational functions and parsing -------------------------------------------

def test_ratfunc_reduces():
    f = RatFunc((z - 1) * (z + 2), (z - 1) * z)
    assert f.num == z + 2 and f.den == z
    assert f.degree == 1


def test_compose_and_mobius_singular():
    f = parse_ratfunc("(z+3)^3/(27*(z-1)^2)")
    assert f.compose(mobius(1, 0, 1, -1)) == parse_ratfunc("(4*z-3)^3/(27*(z-1))")
    with pytest.raises(DomainError):
        mobius(1, 2, 2, 4)


def test_integral_parts():
    num, den = integral_parts(parse_ratfunc("(z/2+1)/(z/3)"))
    assert num == z * 3 + 6 and den == z * 2


def test_pole():
    from dessins.errors import PoleError
    with pytest.raises(PoleError):
        parse_ratfunc("1/(z-1)")(1)


@pytest.mark.parametrize("text", [
    "(3*z^2+1)^3/(9*z^2-1)^2",
    "z^3*(z^3+8)^3/(64*(z^3-1)^3)",
    "-(z^2-1)^2/(4*z^2)",
    "sqrt(-3)/9*(z^3+8)/z^3",
    "2z(z-1)^-2",
])
def test_parse_print_round_trip(text):
    f = parse_ratfunc(text)
    assert parse_ratfunc(str(f)) == f


def test_parse_with_i():
    f = parse_ratfunc("(1+2i)*z", allow_i=True)
    assert f.num[1] == QuadExt(1, 2, -1)
    with pytest.raises(ParseError):
        parse_ratfunc("(1+2i)*z")


@pytest.mark.parametrize("text,column", [("(z+1", 5), ("z+*2", 3), ("z^x", 3), ("q+1", 1)])
def test_parse_error_column(text, column):
    with pytest.raises(ParseError) as exc:
        parse_ratfunc(text)
    assert exc.value.column == column


def test_parse_poly_rejects_fraction():
    with pytest.raises(ParseError):
        parse_poly("1/z")


# -- bivariate -------------------------------------------------------------

def test_bivar_text_round_trip():
    text = "X^3+Y^3-X^2*Y^2+1488*X^2*Y+1488*X*Y^2-162000*X^2-162000*Y^2+40773375*X*Y"
    p = parse_bivar(text)
    assert str(p) == text
    assert p.swap() == p


def test_bivar_nested_round_trip():
    p = parse_bivar("3*X^2*Y-X*Y^3+7")
    assert BivarPoly.from_nested(p.to_nested()) == p


def test_bivar_normalized():
    p = parse_bivar("-6*X^2+4*Y")
    q, c = p.normalized()
    assert q * c == p
    assert q.content() == 1


def test_bivar_proportional():
    p = parse_bivar("X+2*Y")
    assert (p * Fraction(-3, 2)).proportional_to(p) == Fraction(-3, 2)
    assert parse_bivar("X+3*Y").proportional_to(p) is None
