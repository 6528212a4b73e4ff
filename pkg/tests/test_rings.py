import pytest
from hypothesis import given, strategies as st

from tambara.rings import RingError, builtin_ring, gf4, product, zmod

NAMES = ["Z/1", "Z/2", "Z/4", "Z/6", "Z/8", "Z/12", "F4", "F2xF2", "F2^3", "Z/4xF2"]


@pytest.mark.parametrize("name", NAMES)
def test_builtin_rings_satisfy_axioms(name):
    assert builtin_ring(name).check_axioms() == []


def test_broken_table_reports_axiom():
    r = zmod(3)
    mul = [list(row) for row in [[r.mul(a, b) for b in range(3)] for a in range(3)]]
    mul[1][2] = 1
    from tambara.rings import FiniteRing
    bad = FiniteRing([[(a + b) % 3 for b in range(3)] for a in range(3)], mul, 0, 1)
    assert bad.check_axioms()


def test_ideals_of_z12():
    r = zmod(12)
    assert len(r.ideals) == 6
    assert r.nilradical == frozenset({0, 6})
    assert r.radical({0, 4, 8}) == frozenset({0, 2, 4, 6, 8, 10})


def test_gf4_is_a_field():
    f = gf4()
    assert f.ideals == (frozenset({0}), frozenset({0, 1, 2, 3}))
    w = f.parse_element("w")
    assert f.mul(w, w) == f.parse_element("w+1")


def test_product_names_and_parse():
    r = builtin_ring("F2xF2")
    assert r.element_name(r.parse_element("(1,0)")) == "(1,0)"
    with pytest.raises(RingError):
        r.parse_element("(2,0)")


def test_quotient_and_subring():
    r = zmod(8)
    q = r.quotient({0, 4})
    assert len(q) == 4
    assert q.check_axioms() == []
    with pytest.raises(RingError):
        r.subring({0, 2, 4, 6})


@given(st.sampled_from(NAMES), st.data())
def test_nilpotent_iff_in_nilradical(name, data):
    r = builtin_ring(name)
    a = data.draw(st.sampled_from(list(r.elements)))
    assert (a in r.nilradical) == r.is_nilpotent(a)
    assert r.radical({r.zero}) == r.nilradical


def test_unknown_ring():
    with pytest.raises(RingError):
        builtin_ring("Q")
