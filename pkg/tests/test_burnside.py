import itertools

import pytest
from hypothesis import given, settings, strategies as st

from tambara.burnside import BurnsideLevel, coinduce, coset_action
from tambara.functors import BurnsideFunctor
from tambara.groups import builtin_group, cyclic

GROUPS = ["C2", "C3", "C4", "S3", "C2xC2"]


def hset(level, coords):
    """An explicit H-set with the given nonnegative basis coordinates."""
    G, h = level.group, level.h
    perms = {g: [] for g in h}
    n = 0
    for k, c in zip(level.basis, coords):
        reps, act = coset_action(G, h, k)
        for _ in range(c):
            for g in h:
                perms[g].extend(n + i for i in act[g])
            n += len(reps)
    return {g: tuple(p) for g, p in perms.items()}, n


def test_c2_products():
    lvl = BurnsideLevel(cyclic(2), cyclic(2).whole)
    t = (1, 0)
    assert lvl.mul(t, t) == (2, 0)
    assert lvl.one == (0, 1)


def test_c2_restriction_and_norm():
    A = BurnsideFunctor(cyclic(2))
    G = A.group
    assert A.res(G.whole, G.trivial, (1, 0)) == (2,)
    for n in range(-3, 4):
        # nm(n) = n + ((n^2 - n)/2) t
        assert A.nm(G.whole, G.trivial, (n,)) == ((n * n - n) // 2, n)


@pytest.mark.parametrize("name", GROUPS)
def test_marks_are_ring_maps(name):
    G = builtin_group(name)
    for h in G.subgroups:
        lvl = BurnsideLevel(G, h)
        basis = [lvl.basis_vector(i) for i in range(lvl.rank)]
        for a, b in itertools.product(basis, repeat=2):
            m = lvl.marks(lvl.mul(a, b))
            assert m == tuple(x * y for x, y in zip(lvl.marks(a), lvl.marks(b)))
        assert lvl.from_marks(lvl.marks(basis[0])) == basis[0]


@pytest.mark.parametrize("name", ["C2", "C3", "S3", "C4"])
def test_norm_matches_literal_coinduction(name):
    # independent oracle: Map_H(K, X) built point by point
    G = builtin_group(name)
    A = BurnsideFunctor(G)
    for k in G.subgroups:
        for h in G.subgroups:
            if not h < k:
                continue
            lh, lk = A.level(h), A.level(k)
            for coords in itertools.product(range(3), repeat=lh.rank):
                act, n = hset(lh, coords)
                if n ** (k.order // h.order) > 5000:
                    continue
                _, kact = coinduce(G, k, h, act, n)
                npts = len(next(iter(kact.values())))
                assert lk.decompose(kact, npts) == A.nm(k, h, coords), (k, h, coords)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(GROUPS), st.data())
def test_restriction_is_a_ring_map(name, data):
    G = builtin_group(name)
    A = BurnsideFunctor(G)
    k = data.draw(st.sampled_from(G.subgroups))
    h = data.draw(st.sampled_from([s for s in G.subgroups if s <= k]))
    lk, lh = A.level(k), A.level(h)
    vec = st.lists(st.integers(-4, 4), min_size=lk.rank, max_size=lk.rank).map(tuple)
    x, y = data.draw(vec), data.draw(vec)
    assert A.res(k, h, lk.mul(x, y)) == lh.mul(A.res(k, h, x), A.res(k, h, y))
    assert A.res(k, h, lk.add(x, y)) == lh.add(A.res(k, h, x), A.res(k, h, y))


def test_cardinality_is_restriction_to_e():
    G = builtin_group("S3")
    A = BurnsideFunctor(G)
    for h in G.subgroups:
        lvl = A.level(h)
        for x in itertools.islice(lvl.window(2), 200):
            assert A.res(h, G.trivial, x) == (lvl.cardinality(x),)


def test_symbol_table_and_names():
    lvl = BurnsideLevel(cyclic(3), cyclic(3).whole)
    sym = lvl.symbol_table()
    assert sym["t"] == (1, 0) and sym["1"] == (0, 1)
    assert lvl.element_name((1, -3)) == "[C3/e]-3"
