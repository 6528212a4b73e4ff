import itertools

import pytest
from hypothesis import given, settings, strategies as st

from conftest import NAMED_FINITE, finite_corpus, functor
from tambara.functors import BurnsideFunctor, Element, FixedPointFunctor
from tambara.groups import cyclic
from tambara.ideals import (
    GeneratedIdeal,
    IdealError,
    Inconclusive,
    TambaraIdeal,
    enumerate_ideals,
    generalized_products,
    ideal_closure,
    ideal_from_levels,
    ideal_intersection,
    ideal_product,
    ideal_sum,
    ideal_violations,
    is_ideal,
    is_prime,
    maximal_disjoint_prime,
    multiplicative_closure,
    multiplicative_translates,
    nakaoka_radical_search,
    nilpotent,
    nilradical_levelwise,
    power_iteration_to_zero,
    principal_ideal,
    principal_ideal_by_transfers,
    principal_membership,
    product_by_transfers,
    q_predicate,
    radical,
    whole_ideal,
    zero_ideal,
)
from tambara.rings import zmod

SMALL = ["fp_f2xf2_swap_c2", "fp_f4_frob_c2", "fp_z4_c2", "fp_z4_c3", "fp_z8_c2"]


def burnside_c2():
    A = BurnsideFunctor(cyclic(2))
    G = A.group
    return A, G.whole, G.trivial


def prime_by_ideal_pairs(T, P, ideals):
    """Prime in the sense of ideal products: IJ in P forces I in P or J in P."""
    if not P.is_proper():
        return False
    for I, J in itertools.combinations_with_replacement(ideals, 2):
        if ideal_product(I, J) <= P and not (I <= P or J <= P):
            return False
    return True


# -- translates and Q --------------------------------------------------------


def test_translates_of_t_in_burnside_c2():
    A, C2, e = burnside_c2()
    tr = {(el.subgroup, el.value) for el in multiplicative_translates(A, Element(C2, (1, 0)))}
    assert (C2, (1, 0)) in tr
    assert (e, (2,)) in tr
    assert (C2, (1, 2)) in tr


def test_translates_trivial_group():
    T = FixedPointFunctor(cyclic(1), zmod(4))
    h = T.group.whole
    assert multiplicative_translates(T, Element(h, 3)) == [Element(h, 3)]


def test_translates_of_zero_vanish():
    for name in SMALL:
        T = functor(name)
        for h in T.subgroups:
            zero = T.level(h).zero
            assert all(T.level(el.subgroup).zero == el.value
                       for el in multiplicative_translates(T, Element(h, zero)))


def test_generalized_products_burnside():
    A, C2, e = burnside_c2()
    prods = {(p.subgroup, p.value) for p in generalized_products(A, Element(C2, (1, -2)), Element(C2, (1, 0)))}
    # (t-2)t = 0 and res(t-2) = 0, but nm(2) = t+2 is a translate of t and (t-2)(t+2) = 2t-4
    assert (C2, (0, 0)) in prods and (e, (0,)) in prods
    assert (C2, (2, -4)) in prods
    ok, wit = q_predicate(A, Element(C2, (1, -2)), Element(C2, (1, 0)), GeneratedIdeal(A, []))
    assert not ok and wit.product == (2, -4)
    # marks give the same product independently
    lvl = A.level(C2)
    assert lvl.from_marks(tuple(a * b for a, b in zip(lvl.marks((1, -2)), lvl.marks((1, 2))))) == (2, -4)


def test_q_with_whole_and_zero():
    T = functor("fp_z4_c2")
    W, Z = whole_ideal(T), zero_ideal(T)
    els = T.all_elements()
    for x in els:
        for y in els:
            assert q_predicate(T, x, y, W)[0]
        assert q_predicate(T, Element(x.subgroup, 0), x, Z)[0]


def test_q_witness_is_a_product():
    T = functor("fp_f2xf2_swap_c2")
    Z = zero_ideal(T)
    for x in T.all_elements():
        for y in T.all_elements():
            ok, wit = q_predicate(T, x, y, Z)
            if not ok:
                lvl = T.level(wit.level)
                assert lvl.mul(wit.x_translate, wit.y_translate) == wit.product
                assert wit.product not in Z.level(wit.level)


@pytest.mark.parametrize("name", SMALL)
def test_translate_of_translate_is_product_of_translates(name):
    T = functor(name)
    for x in T.all_elements():
        by_level: dict = {}
        for el in multiplicative_translates(T, x):
            by_level.setdefault(el.subgroup, set()).add(el.value)
        products = {h: multiplicative_closure(T, h, v) for h, v in by_level.items()}
        for y in multiplicative_translates(T, x):
            for z in multiplicative_translates(T, y):
                assert z.value in products.get(z.subgroup, ()), (x, y, z)


# -- closure and membership ----------------------------------------------------


def test_closure_of_nothing_and_of_one():
    T = functor("fp_z8_c2")
    assert ideal_closure(T, []) == zero_ideal(T)
    for h in T.subgroups:
        assert ideal_closure(T, [Element(h, T.level(h).one)]) == whole_ideal(T)


def test_principal_ideal_of_two_in_z4():
    # e:{0,2}, C2:{0} is already an ideal containing 2@e, so it is <2@e>
    T = functor("fp_z4_c2")
    G = T.group
    candidate = TambaraIdeal(T, {G.trivial: {0, 2}, G.whole: {0}})
    assert is_ideal(T, candidate)
    got = principal_ideal(T, Element(G.trivial, 2))
    assert got == candidate
    assert got == principal_ideal_by_transfers(T, Element(G.trivial, 2))


@pytest.mark.parametrize("name", SMALL + ["tables_s3_f2cubed"])
def test_principal_ideal_matches_transfer_description(name):
    T = functor(name)
    for y in T.all_elements():
        assert principal_ideal(T, y) == principal_ideal_by_transfers(T, y)


def test_membership_in_burnside_principal_ideal():
    A, C2, e = burnside_c2()
    I = GeneratedIdeal(A, [Element(e, (2,))])
    # every vector a*t + b in <2@e> has b even and a = b/2 mod 2
    for a, b in I.lattice_basis(C2):
        assert b % 2 == 0 and (a - b // 2) % 2 == 0
    assert not principal_membership(A, Element(C2, (1, 0)), Element(e, (2,)))
    assert principal_membership(A, Element(C2, (2, 0)), Element(e, (2,)))
    assert principal_membership(A, Element(C2, (1, 2)), Element(e, (2,)))
    assert principal_membership(A, Element(C2, (0, 0)), Element(e, (2,)))
    y = Element(C2, (1, -2))
    assert principal_membership(A, y, y)


def test_ideal_from_levels_validates():
    T = functor("fp_z4_c2")
    assert ideal_from_levels(T, {"e": [0, 2]}) == principal_ideal(T, Element(T.group.trivial, 2))
    with pytest.raises(IdealError):
        ideal_from_levels(T, {"C2": [0, 2]})


def test_violations_reported():
    T = functor("fp_z4_c2")
    G = T.group
    bad = TambaraIdeal(T, {G.trivial: {0}, G.whole: {0, 2}})
    assert ideal_violations(T, bad)


# -- arithmetic ----------------------------------------------------------------


@pytest.mark.parametrize("name", ["fp_z4_c2", "fp_z8_c2", "fp_f2xf2_swap_c2", "fp_z4_c3"])
def test_products_sums_and_intersections(name):
    T = functor(name)
    ideals = enumerate_ideals(T)
    Z = zero_ideal(T)
    W = whole_ideal(T)
    for I in ideals:
        assert ideal_sum(I, Z) == I
        assert ideal_product(I, W) <= I
    for I, J in itertools.product(ideals, repeat=2):
        P = ideal_product(I, J)
        assert P == product_by_transfers(I, J)
        assert P <= ideal_intersection([I, J], T)
        assert is_ideal(T, ideal_sum(I, J))
    for I, J, K in itertools.product(ideals, repeat=3):
        assert ideal_product(ideal_sum(I, J), K) == ideal_sum(ideal_product(I, K), ideal_product(J, K))


def test_empty_intersection_is_whole():
    T = functor("fp_z4_c2")
    assert ideal_intersection([], T) == whole_ideal(T)


# -- primes ----------------------------------------------------------------------


def test_whole_is_not_prime():
    T = functor("fp_z4_c2")
    assert is_prime(T, whole_ideal(T)) == (False, None)


def test_zero_ideal_of_frobenius_f4_is_prime():
    T = functor("fp_f4_frob_c2")
    assert is_prime(T, zero_ideal(T))[0]


def test_zero_ideal_of_swap_is_prime():
    # the conjugate of (1,0) is (0,1), so (1,0)^2 is a generalized product of the pair
    T = functor("fp_f2xf2_swap_c2")
    e = T.group.trivial
    R = T.level(e)
    x, y = Element(e, R.parse_element("(1,0)")), Element(e, R.parse_element("(0,1)"))
    ok, wit = q_predicate(T, x, y, zero_ideal(T))
    assert not ok and wit.product != R.zero
    assert is_prime(T, zero_ideal(T))[0]
    assert prime_by_ideal_pairs(T, zero_ideal(T), enumerate_ideals(T))


@pytest.mark.parametrize("name", finite_corpus())
def test_prime_criterion_matches_ideal_pairs(name):
    T = functor(name)
    ideals = enumerate_ideals(T)
    for P in ideals:
        ok, pair = is_prime(T, P)
        assert ok == prime_by_ideal_pairs(T, P, ideals), P
        if pair is not None:
            x, y = pair
            assert x not in P and y not in P and q_predicate(T, x, y, P)[0]


@pytest.mark.parametrize("name", SMALL)
def test_primes_are_levelwise_radical(name):
    T = functor(name)
    for P in enumerate_ideals(T):
        if is_prime(T, P)[0]:
            assert radical(T, P) == P


def test_zero_functor_has_one_ideal_no_primes():
    T = FixedPointFunctor(cyclic(2), zmod(1))
    ideals = enumerate_ideals(T)
    assert len(ideals) == 1
    assert not any(is_prime(T, I)[0] for I in ideals)


def test_maximal_disjoint_prime():
    T = functor("fp_z8_c2")
    G = T.group
    P = maximal_disjoint_prime(T, G.whole, [1])
    assert is_prime(T, P)[0]
    x = Element(G.whole, 3)
    Q = maximal_disjoint_prime(T, G.whole, [3])
    assert x not in Q and is_prime(T, Q)[0]
    with pytest.raises(IdealError):
        maximal_disjoint_prime(T, G.whole, [2])


# -- radicals and nilpotence ---------------------------------------------------


def test_radical_of_zero_is_nilradical():
    T = functor("fp_z4_c2")
    N = radical(T, zero_ideal(T))
    assert N == nilradical_levelwise(T)
    assert all(N.level(h) == frozenset({0, 2}) for h in T.subgroups)
    assert is_ideal(T, N)


@pytest.mark.parametrize("name", SMALL)
def test_radical_idempotent(name):
    T = functor(name)
    for I in enumerate_ideals(T):
        r = radical(T, I)
        assert is_ideal(T, r)
        assert radical(T, r) == r


def test_nilpotent_examples():
    T = functor("fp_z4_c2")
    e = T.group.trivial
    assert nilpotent(T, Element(e, 0)) and nilpotent(T, Element(e, 2))
    assert not nilpotent(T, Element(e, 1))
    A, C2, _ = burnside_c2()
    assert not A.level(C2).is_nilpotent((1, -2))


def test_radical_search_edges():
    T = functor("fp_z8_c2")
    G = T.group
    Z = zero_ideal(T)
    N = nilradical_levelwise(T)
    s = nakaoka_radical_search(T, Element(G.trivial, 2), N)
    assert s.member and s.exponent == 1
    assert nakaoka_radical_search(T, Element(G.trivial, 2), Z).member
    assert not nakaoka_radical_search(T, Element(G.whole, 1), N).member
    with pytest.raises(Inconclusive):
        nakaoka_radical_search(T, Element(G.trivial, 2), Z, n_max=1)


def test_finitely_generated_nilpotent_ideal():
    T = functor("fp_z8_c2")
    G = T.group
    I = ideal_closure(T, [Element(G.trivial, 2), Element(G.whole, 4)])
    power, n = I, 1
    while power != zero_ideal(T):
        power, n = ideal_product(power, I), n + 1
        assert n <= 10
    assert n == 3
    assert power_iteration_to_zero(T, Element(G.trivial, 2)) == 3


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.data())
def test_principal_ideal_contains_generator(name, data):
    T = functor(name)
    y = data.draw(st.sampled_from(T.all_elements()))
    I = principal_ideal(T, y)
    assert y in I and is_ideal(T, I)
