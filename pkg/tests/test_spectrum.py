import itertools

import pytest

from conftest import BURNSIDE, NAMED_FINITE, finite_corpus, fixed_point_corpus, functor
from tambara.functors import BurnsideFunctor, Element, FixedPointFunctor
from tambara.groups import builtin_group, cyclic
from tambara.ideals import enumerate_ideals, nilradical_levelwise, radical, zero_ideal
from tambara.lattice import in_lattice
from tambara.rings import builtin_ring, zmod
from tambara.spectrum import (
    SpectrumError,
    SpectrumSpace,
    check_d_intersection,
    check_spectral,
    is_kilpotent,
    kil_burnside_level,
    kilpotent_set,
    kilradical_trivial_action,
    localization_oracle_fp,
    localization_size,
    nil_via_primes,
    radical_via_primes,
    spectrum,
    weyl_product,
)


def test_field_has_one_point():
    T = functor("fp_f4_frob_c2")
    space = spectrum(T)
    assert space.n == 1
    assert space.points[0] == zero_ideal(T)


def test_zero_functor_has_empty_spectrum():
    T = FixedPointFunctor(cyclic(2), zmod(1))
    space = spectrum(T)
    assert space.n == 0
    assert check_spectral(space).spectral


@pytest.mark.parametrize("name", NAMED_FINITE)
def test_nil_equals_intersection_of_primes(name):
    T = functor(name)
    assert nil_via_primes(T) == nilradical_levelwise(T)


@pytest.mark.parametrize("name", finite_corpus())
def test_spectra_are_spectral(name):
    rep = check_spectral(spectrum(functor(name)))
    assert rep.spectral, rep.violations


def test_duplicate_points_break_t0():
    T = functor("fp_z6_c2")
    space = spectrum(T)
    bad = SpectrumSpace(T, space.points + [space.points[0]])
    rep = check_spectral(bad)
    assert not rep.t0 and not rep.spectral


def test_specialization_edges_z6():
    # Z/6 has two maximal primes and nothing between them
    T = functor("fp_z6_c2")
    space = spectrum(T)
    assert space.n >= 2
    for i, j in space.specialization_edges():
        assert space.points[i] < space.points[j]


def test_jobs_do_not_change_result():
    T = functor("tables_s3_f2cubed")
    assert spectrum(T, jobs=4).points == spectrum(T).points


@pytest.mark.parametrize("name", ["fp_z4_c2", "fp_z6_c2", "fp_f2xf2_swap_c2", "fp_z12_c2"])
def test_radical_via_primes(name):
    T = functor(name)
    for I in enumerate_ideals(T):
        assert radical(T, I) == radical_via_primes(T, I)


@pytest.mark.parametrize("name", ["fp_z6_c2", "fp_f2xf2_swap_c2", "fp_z12_c2"])
def test_d_intersection_pointwise(name):
    T = functor(name)
    space = spectrum(T)
    els = T.all_elements()
    for e, f in itertools.product(els, repeat=2):
        assert check_d_intersection(space, e, f)


def test_localization_size_examples():
    R = zmod(6)
    assert localization_size(R, {1}) == 6
    assert localization_size(R, {1, 2, 4}) == 3
    assert localization_size(R, {1, 0}) == 1


@pytest.mark.parametrize("name", fixed_point_corpus())
def test_kilpotence_matches_localization(name):
    T = functor(name)
    for x in T.all_elements():
        assert is_kilpotent(T, x) == localization_oracle_fp(T, x), x


def test_swap_idempotent_is_kilpotent():
    T = functor("fp_f2xf2_swap_c2")
    e = T.group.trivial
    x = Element(e, T.level(e).parse_element("(0,1)"))
    assert weyl_product(T, x) == T.level(e).zero
    assert is_kilpotent(T, x)
    assert not T.level(e).is_nilpotent(x.value)


@pytest.mark.parametrize("name", BURNSIDE)
def test_burnside_kil_is_kernel_of_restriction(name):
    A = functor(name)
    G = A.group
    e = G.trivial
    for h in A.subgroups:
        lvl = A.level(h)
        basis = kil_burnside_level(G, h)
        for x in itertools.product(range(-3, 4), repeat=lvl.rank):
            in_kernel = A.res(h, e, x) == (0,)
            assert is_kilpotent(A, Element(h, x)) == in_kernel
            assert in_lattice(basis, x) == in_kernel


@pytest.mark.parametrize("p", [2, 3])
def test_t_minus_p(p):
    A = BurnsideFunctor(cyclic(p))
    C = A.group.whole
    x = (1, -p)
    assert A.res(C, A.group.trivial, x) == (0,)
    assert is_kilpotent(A, Element(C, x))
    assert not A.level(C).is_nilpotent(x)


def test_kilradical_trivial_action():
    T = functor("fp_z8_c2")
    pre = kilradical_trivial_action(T)
    kil = kilpotent_set(T)
    assert all(pre.level(h) == kil[h] for h in T.subgroups)
    with pytest.raises(SpectrumError):
        kilradical_trivial_action(functor("fp_f2xf2_swap_c2"))
