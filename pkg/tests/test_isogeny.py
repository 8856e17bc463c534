import pytest
from hypothesis import given, strategies as st

from dessins.arith.parse import parse_ratfunc
from dessins.errors import DomainError, PoleError
from dessins.isogeny import (DEFAULT_SAMPLES, HEXAGONAL, SQUARE, EllCurveHyper, IsogenyMap,
                             WpLattice, preset, verify_isogeny, verify_wp_identity, wp_eval)

from oracles import wp_oracle


@pytest.mark.parametrize("name,degree,d", [("hexagonal3", 3, -3), ("square5", 5, -1)])
def test_presets(name, degree, d):
    curve, m = preset(name)
    res = verify_isogeny(curve, curve, m)
    assert res.ok and res.degree == degree
    assert m.g.field() == d
    assert verify_isogeny(curve, curve, m.flipped()).ok


def test_wrong_map_fails():
    curve, m = preset("hexagonal3")
    bad = IsogenyMap(m.h, m.g * 2)
    assert not verify_isogeny(curve, curve, bad).ok


def test_identity_map():
    curve = EllCurveHyper.parse("x^3-x")
    ident = IsogenyMap(parse_ratfunc("x", "x"), parse_ratfunc("1", "x"))
    assert verify_isogeny(curve, curve, ident).ok


def test_curve_checks():
    with pytest.raises(DomainError):
        EllCurveHyper.parse("x^2-1")
    with pytest.raises(DomainError):
        EllCurveHyper.parse("x^3-x^2")


def test_auxiliary_identity():
    # (h^3 - 1)/(x^3 - 1) = -(x^3 + 8)^2/(27 x^6) with h the degree-3 x-map
    _, m = preset("hexagonal3")
    x3 = parse_ratfunc("x^3", "x")
    lhs = (m.h ** 3 - 1) / (x3 - 1)
    assert lhs == parse_ratfunc("-(x^3+8)^2/(27*x^6)", "x")


def test_unknown_preset():
    with pytest.raises(DomainError):
        preset("cube7")


# -- Weierstrass p ------------------------------------------------------------

@pytest.mark.parametrize("lat", [SQUARE, HEXAGONAL], ids=["square", "hexagonal"])
@pytest.mark.parametrize("z", [0.23 + 0.11j, 0.31 + 0.27j, -0.17 + 0.4j])
def test_q_series_against_lattice_sum(lat, z):
    assert abs(wp_eval(lat, z) - wp_oracle(z, lat.omega1, lat.omega2)) < 1e-6


@given(st.floats(-0.45, 0.45), st.floats(0.05, 0.4), st.integers(-2, 2), st.integers(-2, 2))
def test_wp_even_and_periodic(x, y, m, n):
    lat = HEXAGONAL
    z = complex(x, y)
    v = wp_eval(lat, z)
    tol = 10 * lat.eps * max(1.0, abs(v))
    assert abs(wp_eval(lat, -z) - v) <= tol
    assert abs(wp_eval(lat, z + m * lat.omega1 + n * lat.omega2) - v) <= tol


def test_wp_pole():
    with pytest.raises(PoleError):
        wp_eval(SQUARE, 1 + 1j)


def test_square_lattice_values():
    # p(i z) = -p(z) on the square lattice, so p(1/2 + i/2) = 0
    assert abs(wp_eval(SQUARE, 0.5 + 0.5j)) < 1e-9
    z = 0.2 + 0.1j
    assert abs(wp_eval(SQUARE, 1j * z) + wp_eval(SQUARE, z)) < 1e-9


def test_lattice_validation():
    with pytest.raises(DomainError):
        WpLattice(1, -1j)
    with pytest.raises(DomainError):
        WpLattice(1, 1j, eps=1e-3)


@pytest.mark.parametrize("which", ["square", "hexagonal"])
def test_wp_identities(which):
    rep = verify_wp_identity(which, DEFAULT_SAMPLES)
    assert rep.passed and rep.max_error < 1e-6 and rep.skipped == 0
    assert len(DEFAULT_SAMPLES) >= 3


def test_hexagonal_uses_standard_assignment():
    assert verify_wp_identity("hexagonal", DEFAULT_SAMPLES).assignment == "standard"


def test_perturbed_identity_fails():
    assert not verify_wp_identity("square", DEFAULT_SAMPLES, perturb=True).passed
