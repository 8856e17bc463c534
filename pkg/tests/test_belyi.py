
import pytest
from hypothesis import given, strategies as st

from dessins.arith import RatFunc, mobius
from dessins.arith.parse import parse_ratfunc
from dessins.belyi import (constrained_identity_check, fiber, is_belyi, passport_of_map,
                           ram_profile, verify_identity)
from dessins.belyi import catalog
from dessins.dessin import passport_from_construction1, passport_from_construction2
from dessins.errors import DomainError, PreconditionError
from dessins.psl2 import GAMMA1, GAMMA2, coset_table, parse_spec


@pytest.mark.parametrize("label,lhs,rhs", catalog.identities(), ids=lambda x: x if isinstance(x, str) else "")
def test_identity(label, lhs, rhs):
    assert verify_identity(lhs, rhs), label


def test_degrees():
    assert catalog.get("f6_composite").degree == 36
    assert catalog.get("f24").degree == 24
    assert catalog.get("f06").degree == 12


@pytest.mark.parametrize("name", sorted(catalog.SUBGROUPS))
def test_maps_are_belyi_and_match_dessins(name):
    f = catalog.get(name)
    assert is_belyi(f)
    spec, construction = catalog.SUBGROUPS[name]
    if construction == 1:
        pp = passport_from_construction1(coset_table(parse_spec(spec), GAMMA1))
    else:
        pp, _ = passport_from_construction2(coset_table(parse_spec(spec), GAMMA2))
    assert passport_of_map(f).matches(pp)


def test_profile_of_f2():
    prof = ram_profile(catalog.get("f2"))
    assert prof.text() == "deg=6; over0=[3,3]; over1=[2,2,2]; overinf=[2,2,2]"


def test_fiber_includes_infinity():
    # double pole at z = 1 and a simple pole at infinity
    assert fiber(catalog.get("f02"), None) == (2, 1)
    assert fiber(catalog.get("f02"), 0) == (3,)


def test_not_belyi():
    f = parse_ratfunc("z*(z-2)")
    assert not is_belyi(f)
    with pytest.raises(PreconditionError):
        passport_of_map(f)


def test_constant_rejected():
    with pytest.raises(DomainError):
        ram_profile(RatFunc.constant(3))


def test_mixed_fields_rejected():
    with pytest.raises(DomainError):
        verify_identity(parse_ratfunc("sqrt(2)*z"), parse_ratfunc("sqrt(3)*z"))


def test_alpha_beta_form():
    assert catalog.alpha_beta_f3() == catalog.get("f3")


def test_constrained_identity():
    assert constrained_identity_check(8) == {"concrete": True, "parametric": True}
    assert constrained_identity_check(9) == {"concrete": False, "parametric": False}


small = st.integers(-5, 5)


@given(small, small, small, small, st.sampled_from(["f2", "f3", "f02", "f4"]))
def test_profile_mobius_invariant(a, b, c, d, name):
    # precomposition with an automorphism of P^1 keeps the ramification data
    if a * d - b * c == 0:
        return
    f = catalog.get(name)
    g = f.compose(mobius(a, b, c, d))
    assert ram_profile(g) == ram_profile(f)
