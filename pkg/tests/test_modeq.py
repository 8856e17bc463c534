from fractions import Fraction

import pytest

from dessins.arith import BivarPoly, QuadExt, RatFunc
from dessins.arith.parse import parse_bivar, parse_ratfunc
from dessins.belyi import catalog
from dessins.errors import DegenerateInputError, DomainError, PreconditionError
from dessins.modeq import (INVOLUTION, SPECIAL_POINTS, involution_check, level_pair,
                           modular_polynomial, modular_polynomial_level, special_values,
                           special_values_level, substitution_check, symmetric_route)

PHI2 = ("X^3+Y^3-X^2*Y^2+1488*(X^2*Y+X*Y^2)-162000*(X^2+Y^2)+40773375*X*Y"
        "+8748000000*(X+Y)-157464000000000")
PHI3 = ("X^4+Y^4-X^3*Y^3+2232*(X^3*Y^2+X^2*Y^3)+2587918086*X^2*Y^2-1069956*(X^3*Y+X*Y^3)"
        "+36864000*(X^3+Y^3)+8900222976000*(X^2*Y+X*Y^2)+452984832000000*(X^2+Y^2)"
        "-770845966336000000*X*Y+1855425871872000000000*(X+Y)")


def test_trivial_pair():
    z = RatFunc.variable()
    mp = modular_polynomial(z, z, scale=1)
    assert mp.phi == BivarPoly.X() - BivarPoly.Y()
    assert not mp.symmetric


@pytest.mark.parametrize("level,reference", [(2, PHI2), (3, PHI3)])
def test_reference_polynomials(level, reference):
    mp = modular_polynomial_level(level)
    assert mp.phi == parse_bivar(reference)
    assert mp.phi.is_integral() and mp.phi.content() == 1
    assert mp.symmetric and mp.phi - mp.phi.swap() == BivarPoly()
    assert mp.monic_in_x
    assert mp.bidegree == (level + 1, level + 1)


def test_canonical_text_level2():
    assert str(modular_polynomial_level(2).phi) == (
        "X^3+Y^3-X^2*Y^2+1488*X^2*Y+1488*X*Y^2-162000*X^2-162000*Y^2+40773375*X*Y"
        "+8748000000*X+8748000000*Y-157464000000000")


@pytest.mark.parametrize("level", [2, 3])
def test_substitution(level):
    f, g = level_pair(level)
    assert substitution_check(modular_polynomial_level(level), f, g)


def test_substitution_detects_wrong_pair():
    f, _ = level_pair(2)
    g = catalog.get("g03")
    assert not substitution_check(modular_polynomial_level(2), f, g)


def test_bidegree_of_unequal_degrees():
    f = parse_ratfunc("z^2")
    g = parse_ratfunc("z^3")
    mp = modular_polynomial(f, g, scale=1)
    # X^3 = Y^2 after eliminating z
    assert mp.phi == parse_bivar("X^3-Y^2")
    assert mp.bidegree == (g.degree, f.degree)


def test_degenerate():
    with pytest.raises(DegenerateInputError):
        modular_polynomial(parse_ratfunc("z^2"), parse_ratfunc("z^2"), scale=1)


def test_rejects_irrational_or_constant():
    with pytest.raises(DomainError):
        modular_polynomial(parse_ratfunc("sqrt(2)*z"), parse_ratfunc("z"))
    with pytest.raises(DomainError):
        modular_polynomial(RatFunc.constant(2), parse_ratfunc("z"))


@pytest.mark.parametrize("level", [2, 3])
def test_involution(level):
    f, g = level_pair(level)
    assert involution_check(f, g, INVOLUTION)
    assert not involution_check(f, g, (1, 0, 0, 1))


def test_singular_involution():
    f, g = level_pair(2)
    with pytest.raises(DomainError):
        involution_check(f, g, (1, 1, 2, 2))


@pytest.mark.parametrize("level,p,q", [
    (2, "4096*y^2+3136*y-6656", "262144*y^3+3342336*y^2+14204928*y+20123648"),
    (3, "19683*y^3+26244*y^2-51732*y-50976",
     "531441*y^4+15588936*y^3+161400600*y^2+666644256*y+803894544"),
])
def test_symmetric_route(level, p, q):
    f, g = level_pair(level)
    r = symmetric_route(f, g, 1)
    assert str(r.p) == p and str(r.q) == q
    assert r.matches and r.ratio != 0


def test_symmetric_route_precondition():
    z = RatFunc.variable()
    with pytest.raises(PreconditionError):
        symmetric_route(z, z, 0)


def _by_label(level):
    return {v.label: v for v in special_values_level(level)}


def test_special_values_level2():
    v = _by_label(2)
    assert v["[rho/2]"].value == 54000 == 16 * 15 ** 3
    assert v["[i/2]"].value == 287496 == 66 ** 3
    assert v["[sqrt(2)*i/2]"].value == 8000 == 20 ** 3
    assert v["[(i-1)/2]"].value == 1728
    assert all(x.factored_ok for x in v.values())


def test_special_values_level3():
    v = _by_label(3)
    s3 = QuadExt.sqrt(3)
    assert v["[rho/3]"].value == -12288000 == -3 * 160 ** 3
    assert v["[i/3]"].value == (18 + 6 * s3) * (82 + 54 * s3) ** 3
    assert v["[(i+1)/3]"].value == (18 - 6 * s3) * (82 - 54 * s3) ** 3
    assert v["[sqrt(3)*i/3]"].value == 2 * 30 ** 3
    assert v["[rho]"].value == 0
    assert all(x.factored_ok for x in v.values())


def test_special_value_pole_entry():
    f, _ = level_pair(2)
    out = special_values(f, [("pole", 1), ("ok", Fraction(3, 4))])
    assert out[0].error and out[0].value is None
    assert out[1].value == 54000


def test_registered_levels():
    assert sorted(SPECIAL_POINTS) == [2, 3]
    with pytest.raises(DomainError):
        special_values_level(5)


def test_degenerate_composite_pair():
    # g = f^2 + 1 is a function of f, so the eliminant is a power
    f = parse_ratfunc("(z+1)/(z^2+3)")
    with pytest.raises(DegenerateInputError):
        modular_polynomial(f, f * f + 1, scale=1)
