import pytest
from hypothesis import assume, given, strategies as st

from dessins import perm as P
from dessins.dessin import (MonodromyTriple, diagnostics, euler_genus, export_dot, face_walks,
                            is_uniform, passport_from_construction1, passport_from_construction2,
                            passport_of_triple, triple_from_table, uniform_genus)
from dessins.errors import DomainError
from dessins.psl2 import GAMMA2, coset_table, parse_spec


def c1(spec):
    return passport_from_construction1(coset_table(parse_spec(spec)))


def c2(spec):
    return passport_from_construction2(coset_table(parse_spec(spec), GAMMA2))


def test_gamma2_passport_text():
    assert c1("gamma:2").text() == "m=6; g=0; black=[3,3]; white=[2,2,2]; faces=[2,2,2]"


@pytest.mark.parametrize("spec,m,g,black,white,faces", [
    ("gamma0:2", 3, 0, (3,), (2, 1), (2, 1)),
    ("gamma0:3", 4, 0, (3, 1), (2, 2), (3, 1)),
    ("gamma0:6", 12, 0, (3,) * 4, (2,) * 6, (6, 3, 2, 1)),
    ("gamma0:11", 12, 1, (3,) * 4, (2,) * 6, (11, 1)),
    ("gamma:3", 12, 0, (3,) * 4, (2,) * 6, (3,) * 4),
    ("join:gamma:6;word=T^3", 36, 0, (3,) * 12, (2,) * 18, (6,) * 4 + (3,) * 4),
])
def test_construction1(spec, m, g, black, white, faces):
    pp = c1(spec)
    assert (pp.m, pp.genus, pp.black, pp.white, pp.faces) == (m, g, black, white, faces)


def test_construction2_gamma4():
    pp, tr = c2("gamma:4")
    assert pp.m == 4 and pp.genus == 0
    assert set(pp.black + pp.white + pp.faces) == {2}
    d = diagnostics(tr)
    assert d.regular and d.monodromy_group_order == 4 and not d.center_trivial


def test_construction2_gamma8():
    pp, tr = c2("gamma:8")
    assert pp.m == 32 and pp.genus == 5
    assert pp.black == pp.white == pp.faces == (4,) * 8
    assert is_uniform(pp)


def test_construction2_a6_kernel():
    pp, tr = c2("kernel:sigmaA=(1 2 3);sigmaB=(2 3 4 5 6)")
    assert pp.m == 360 and pp.genus == 40
    assert pp.black == (5,) * 72 and pp.white == (4,) * 90 and pp.faces == (3,) * 120
    d = diagnostics(tr)
    assert d.monodromy_group_order == 360 and d.center_trivial and d.regular


@pytest.mark.parametrize("N", [2, 3, 4, 5])
def test_uniform_genus_of_gamma_2n(N):
    pp, _ = c2(f"gamma:{2 * N}")
    assert pp.genus == 1 + pp.m * (1 - 3 / N) / 2
    assert pp.genus == uniform_genus(pp.m, N, N, N)


def test_construction1_rejects_gamma2_table():
    with pytest.raises(DomainError):
        passport_from_construction1(coset_table(parse_spec("gamma:4"), GAMMA2))


def test_triple_validation():
    a = P.parse_cycles("(1 2 3)")
    with pytest.raises(DomainError):
        MonodromyTriple(a, a, P.identity(3))
    tr = MonodromyTriple.from_pair(a, P.parse_cycles("(1 2)", 3))
    assert P.mul(P.mul(tr.s0, tr.s1), tr.sinf) == P.identity(3)


def test_euler_genus():
    assert euler_genus(6, 2, 3, 3) == 0
    assert euler_genus(12, 4, 6, 2) == 1


def test_face_walks_cover_edges():
    tr = triple_from_table(coset_table(parse_spec("gamma0:6")))
    walks = face_walks(tr)
    # every edge is walked once from each side
    sides = sorted(side for w in walks for side in w)
    assert sides == sorted((e, d) for e in range(12) for d in ("bw", "wb"))
    assert sorted(len(w) // 2 for w in walks) == [1, 2, 3, 6]


def test_dot_export():
    dot = export_dot(coset_table(parse_spec("gamma0:2")))
    assert dot.startswith("graph dessin {")
    assert dot.count(" -- ") == 3
    assert export_dot(coset_table(parse_spec("gamma0:2"))) == dot


def _pair(n):
    return st.tuples(st.permutations(range(n)).map(tuple), st.permutations(range(n)).map(tuple),
                     st.permutations(range(n)).map(tuple))


@given(st.integers(3, 9).flatmap(_pair))
def test_passport_conjugation_invariant(data):
    s0, s1, r = data
    tr = MonodromyTriple.from_pair(s0, s1)
    assume(tr.is_transitive())
    assert passport_of_triple(tr.relabel(r)) == passport_of_triple(tr)
