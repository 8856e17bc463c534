import pytest
from hypothesis import given, strategies as st

from dessins import perm as P
from dessins.errors import ParseError, ResourceError


def test_mul_is_left_to_right():
    p = P.parse_cycles("(1 2)", 3)
    q = P.parse_cycles("(2 3)", 3)
    # 1 -> 2 under p, then 2 -> 3 under q
    assert P.mul(p, q)[0] == 2


def test_cycles_and_type():
    p = P.parse_cycles("(1 2 3)(4 5)", 6)
    assert P.cycle_type(p) == (3, 2, 1)
    assert P.fixed_points(p) == 1
    assert P.format_cycles(p) == "(1 2 3)(4 5)"


def test_parse_errors():
    with pytest.raises(ParseError):
        P.parse_cycles("(1 2 2)")
    with pytest.raises(ParseError):
        P.parse_cycles("(1 2")


def test_closure_limit():
    gens = [P.parse_cycles("(1 2 3 4 5 6 7)"), P.parse_cycles("(1 2)", 7)]
    assert len(P.closure(gens)) == 5040
    with pytest.raises(ResourceError):
        P.closure(gens, limit=100)


def test_transitive():
    assert P.is_transitive([P.parse_cycles("(1 2)(3 4)"), P.parse_cycles("(2 3)", 4)])
    assert not P.is_transitive([P.parse_cycles("(1 2)(3 4)")])


perms = st.integers(2, 9).flatmap(lambda n: st.permutations(range(n)).map(tuple))


@given(perms)
def test_inverse_and_power(p):
    n = len(p)
    assert P.mul(p, P.inverse(p)) == P.identity(n)
    k = 1
    for c in P.cycle_type(p):
        from math import lcm
        k = lcm(k, c)
    assert P.power(p, k) == P.identity(n)


@given(perms)
def test_cycles_format_round_trip(p):
    assert P.parse_cycles(P.format_cycles(p), len(p)) == p
