"""Deliberately corrupted functors, each paired with the identity it must break."""

from __future__ import annotations

from conftest import functor
from tambara.burnside import BurnsideLevel
from tambara.functors import BurnsideFunctor, TableFunctor, materialize
from tambara.groups import cyclic
from tambara.rings import FiniteRing


def _table(name: str) -> TableFunctor:
    return materialize(functor(name), name=f"{name}*")


def res_one_to_zero():
    T = _table("fp_z4_c2")
    G = T.group
    T.res_tables[(G.whole, G.trivial)][1] = 0
    return T, "res_unit"


def tr_entry_changed():
    T = _table("fp_z4_c2")
    G = T.group
    T.tr_tables[(G.whole, G.trivial)][1] = 1
    return T, "tr_additive"


def nm_one_to_zero():
    T = _table("fp_z8_c2")
    G = T.group
    T.nm_tables[(G.whole, G.trivial)][1] = 0
    return T, "nm_unit"


def nm_entry_changed():
    T = _table("fp_z8_c2")
    G = T.group
    T.nm_tables[(G.whole, G.trivial)][3] = 3
    return T, "nm_multiplicative"


def conj_not_additive():
    T = _table("fp_f2xf2_swap_c2")
    G = T.group
    e = G.trivial
    R = T.level(e)
    a, b = R.parse_element("(1,0)"), R.parse_element("(0,1)")
    T.conj_tables[(1, e)][a] = a
    return T, "conj_additive"


def ring_multiplication_broken():
    T = _table("fp_z4_c2")
    G = T.group
    R = T.level(G.whole)
    mul = [[R.mul(a, b) for b in R.elements] for a in R.elements]
    add = [[R.add(a, b) for b in R.elements] for a in R.elements]
    mul[2][3] = 1
    T._given[G.whole] = FiniteRing(add, mul, R.zero, R.one)
    T._levels.clear()
    return T, "level_ring"


def transfer_is_identity():
    T = _table("fp_z4_c2")
    G = T.group
    T.tr_tables[(G.whole, G.trivial)] = {x: x for x in range(4)}
    return T, "double_coset_tr"


def norm_is_identity():
    T = _table("fp_z4_c2")
    G = T.group
    T.nm_tables[(G.whole, G.trivial)] = {x: x for x in range(4)}
    return T, "double_coset_nm"


def weyl_moves_level():
    T = _table("fp_f2xf2_swap_c2")
    G = T.group
    e = G.trivial
    R = T.level(e)
    swap = {x: T.conj_tables[(1, e)][x] for x in R.elements}
    T.conj_tables[(1, G.whole)] = {x: x for x in T.level(G.whole).elements}
    # conjugating a level by its own subgroup must be the identity
    T.conj_tables[(0, e)] = swap
    return T, "weyl_trivial"


def res_not_transitive():
    T = _table("tables_s3_f2cubed")
    G = T.group
    S3, e = G.whole, G.trivial
    table = T.res_tables[(S3, e)]
    table[T.level(S3).one] = T.level(e).zero
    return T, "res_transitive"


def frobenius_broken():
    T = _table("fp_z8_c2")
    G = T.group
    T.tr_tables[(G.whole, G.trivial)] = {x: (2 * x) % 8 if x != 2 else 0 for x in range(8)}
    return T, "frobenius"


class _NormIsTransfer(BurnsideFunctor):
    name = "burnside_c2_nm_eq_tr"

    def nm(self, k, h, x):
        return self.tr(k, h, x)


def burnside_norm_is_transfer():
    return _NormIsTransfer(cyclic(2)), "nm_multiplicative"


class _BadConj(BurnsideFunctor):
    name = "burnside_c2_bad_conj"

    def conj(self, g, h, x):
        if g == 1 and h == self.group.whole:
            return tuple(-v for v in x)
        return super().conj(g, h, x)


def burnside_conj_negates():
    return _BadConj(cyclic(2)), "conj_multiplicative"


MUTATIONS = [
    res_one_to_zero,
    tr_entry_changed,
    nm_one_to_zero,
    nm_entry_changed,
    conj_not_additive,
    ring_multiplication_broken,
    transfer_is_identity,
    norm_is_identity,
    weyl_moves_level,
    res_not_transitive,
    frobenius_broken,
    burnside_norm_is_transfer,
    burnside_conj_negates,
]
