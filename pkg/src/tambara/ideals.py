"""Tambara ideals: translates, the Q-predicate, closures, primes and radicals.

Finite functors carry explicit ideals (:class:`TambaraIdeal`, one frozen
element set per level).  Functors with integer levels (Burnside) carry
:class:`GeneratedIdeal`, decided by lattice membership in the span of
transfers ``tr^K_L(b * y')`` of multiplicative translates ``y'``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .functors import Element, FunctorError, TambaraFunctor
from .groups import Subgroup
from .lattice import hermite_basis, in_lattice


class IdealError(ValueError):
    pass


class Inconclusive(RuntimeError):
    """A bounded search ran out before deciding."""


# -- ideal values ----------------------------------------------------------


class TambaraIdeal:
    """Explicit per-level element sets of a finite functor."""

    kind = "finite"

    def __init__(self, functor: TambaraFunctor, levels: Mapping[Subgroup, Iterable]):
        self.functor = functor
        self.levels = {h: frozenset(levels.get(h, ())) for h in functor.subgroups}

    def level(self, h: Subgroup) -> frozenset:
        return self.levels[h]

    def contains(self, h: Subgroup, x) -> bool:
        return x in self.levels[h]

    def __contains__(self, el: Element) -> bool:
        return el.value in self.levels[el.subgroup]

    @property
    def key(self) -> tuple:
        return tuple(tuple(sorted(self.levels[h])) for h in self.functor.subgroups)

    def __eq__(self, other) -> bool:
        return isinstance(other, TambaraIdeal) and self.functor is other.functor and self.key == other.key

    def __hash__(self) -> int:
        return hash(self.key)

    def __le__(self, other: "TambaraIdeal") -> bool:
        return all(self.levels[h] <= other.levels[h] for h in self.functor.subgroups)

    def __lt__(self, other: "TambaraIdeal") -> bool:
        return self <= other and self != other

    def is_proper(self) -> bool:
        T = self.functor
        return any(T.level(h).one not in self.levels[h] for h in T.subgroups)

    def size(self) -> int:
        return sum(len(v) for v in self.levels.values())

    def elements(self) -> list[Element]:
        return [Element(h, x) for h in self.functor.subgroups for x in sorted(self.levels[h])]

    def to_json(self) -> dict:
        T = self.functor
        return {"kind": "finite",
                "levels": {h.name: sorted(self.levels[h]) for h in T.subgroups}}

    def __repr__(self) -> str:
        body = ", ".join(f"{h.name}:{sorted(v)}" for h, v in self.levels.items())
        return f"TambaraIdeal({body})"


def zero_ideal(T: TambaraFunctor) -> TambaraIdeal:
    return TambaraIdeal(T, {h: {T.level(h).zero} for h in T.subgroups})


def whole_ideal(T: TambaraFunctor) -> TambaraIdeal:
    return TambaraIdeal(T, {h: T.elements(h) for h in T.subgroups})


# -- translates --------------------------------------------------------------


def _cache(T: TambaraFunctor, name: str) -> dict:
    store = T.__dict__.setdefault("_ideal_caches", {})
    return store.setdefault(name, {})


def multiplicative_translates(T: TambaraFunctor, x: Element) -> list[Element]:
    """All ``nm^L_(gKg^-1) conj_(g,K) res^H_K(x)``, deduplicated, in canonical order."""
    cache = _cache(T, "translates")
    key = (x.subgroup, x.value)
    if key in cache:
        return cache[key]
    G = T.group
    h = x.subgroup
    seen: set = set()
    out = []
    for k in G.subgroups:
        if not k <= h:
            continue
        r = T.res(h, k, x.value)
        for g in G.elements:
            gk = G.conjugate(g, k)
            c = T.conj(g, k, r)
            for l in G.subgroups:
                if not gk <= l:
                    continue
                v = T.nm(l, gk, c)
                if (l, v) not in seen:
                    seen.add((l, v))
                    out.append(Element(l, v))
    order = {s: i for i, s in enumerate(G.subgroups)}
    out.sort(key=lambda el: (order[el.subgroup], repr(el.value)))
    cache[key] = out
    return out


def translates_by_level(T: TambaraFunctor, x: Element) -> dict:
    out: dict = {}
    for el in multiplicative_translates(T, x):
        out.setdefault(el.subgroup, []).append(el.value)
    return out


def generalized_products(T: TambaraFunctor, x: Element, y: Element) -> list[Element]:
    """Same-level products of a translate of ``x`` with a translate of ``y`` (deduplicated)."""
    tx, ty = translates_by_level(T, x), translates_by_level(T, y)
    out = []
    for l in T.subgroups:
        lvl = T.level(l)
        vals = []
        for a in tx.get(l, ()):
            for b in ty.get(l, ()):
                v = lvl.mul(a, b)
                if v not in vals:
                    vals.append(v)
        out.extend(Element(l, v) for v in vals)
    return out


@dataclass(frozen=True)
class QWitness:
    """A generalized product ``x_translate * y_translate`` at ``level``."""
    level: Subgroup
    x_translate: object
    y_translate: object
    product: object


def q_predicate(T: TambaraFunctor, x: Element, y: Element, ideal) -> tuple[bool, QWitness | None]:
    """``Q(x, y, I)``: every generalized product lies in ``I``; a witness on failure."""
    tx, ty = translates_by_level(T, x), translates_by_level(T, y)
    for l in T.subgroups:
        lvl = T.level(l)
        for a in tx.get(l, ()):
            for b in ty.get(l, ()):
                v = lvl.mul(a, b)
                if not ideal.contains(l, v):
                    return False, QWitness(l, a, b, v)
    return True, None


# -- ideal checks and closure -----------------------------------------------


def ideal_violations(T: TambaraFunctor, ideal) -> list[str]:
    """Why an explicit family of subsets is not a Tambara ideal (empty if it is)."""
    G = T.group
    bad = []
    for h in T.subgroups:
        if not T.level(h).is_ideal(ideal.level(h)):
            bad.append(f"level {h.name} is not a ring ideal")
    if bad:
        return bad
    for k in T.subgroups:
        for h in T.subgroups:
            if not h < k:
                continue
            for x in ideal.level(k):
                if T.res(k, h, x) not in ideal.level(h):
                    bad.append(f"res {k.name}->{h.name} leaves the ideal at {x!r}")
            for x in ideal.level(h):
                if T.tr(k, h, x) not in ideal.level(k):
                    bad.append(f"tr {h.name}->{k.name} leaves the ideal at {x!r}")
                if T.nm(k, h, x) not in ideal.level(k):
                    bad.append(f"nm {h.name}->{k.name} leaves the ideal at {x!r}")
    for g in G.elements:
        for h in T.subgroups:
            gh = G.conjugate(g, h)
            for x in ideal.level(h):
                if T.conj(g, h, x) not in ideal.level(gh):
                    bad.append(f"conj g={g} leaves the ideal at {h.name}, {x!r}")
    return bad


def is_ideal(T: TambaraFunctor, ideal) -> bool:
    return not ideal_violations(T, ideal)


def ideal_closure(T: TambaraFunctor, generators: Iterable[Element]) -> TambaraIdeal:
    """Least Tambara ideal containing ``generators`` (finite levels only)."""
    if not T.is_finite:
        raise IdealError("ideal_closure needs finite levels; use GeneratedIdeal for integer levels")
    G = T.group
    sets = {h: {T.level(h).zero} for h in T.subgroups}
    for el in generators:
        sets[el.subgroup].add(el.value)
    changed = True
    while changed:
        changed = False
        for h in T.subgroups:
            closed = T.level(h).ideal_generated(sets[h])
            if closed != sets[h]:
                sets[h] = set(closed)
                changed = True
        for k in T.subgroups:
            for h in T.subgroups:
                if not h < k:
                    continue
                for x in list(sets[k]):
                    v = T.res(k, h, x)
                    if v not in sets[h]:
                        sets[h].add(v)
                        changed = True
                for x in list(sets[h]):
                    for v in (T.tr(k, h, x), T.nm(k, h, x)):
                        if v not in sets[k]:
                            sets[k].add(v)
                            changed = True
        for g in G.elements:
            for h in T.subgroups:
                gh = G.conjugate(g, h)
                for x in list(sets[h]):
                    v = T.conj(g, h, x)
                    if v not in sets[gh]:
                        sets[gh].add(v)
                        changed = True
    return TambaraIdeal(T, sets)


def principal_ideal(T: TambaraFunctor, y: Element) -> TambaraIdeal:
    cache = _cache(T, "principal")
    key = (y.subgroup, y.value)
    if key not in cache:
        cache[key] = ideal_closure(T, [y])
    return cache[key]


def principal_ideal_by_transfers(T: TambaraFunctor, y: Element) -> TambaraIdeal:
    """``<y>(G/K)`` as sums of ``tr^K_L(x * y')``, ``y'`` a translate at ``L`` (finite levels)."""
    by_level = translates_by_level(T, y)
    sets = {}
    for k in T.subgroups:
        lk = T.level(k)
        terms = set()
        for l, ys in by_level.items():
            if not l <= k:
                continue
            ll = T.level(l)
            for yp in ys:
                for x in ll.elements:
                    terms.add(T.tr(k, l, ll.mul(x, yp)))
        span = {lk.zero}
        frontier = list(terms)
        span |= terms
        while frontier:
            a = frontier.pop()
            for b in list(span):
                c = lk.add(a, b)
                if c not in span:
                    span.add(c)
                    frontier.append(c)
        sets[k] = span
    return TambaraIdeal(T, sets)


class GeneratedIdeal:
    """Ideal generated by finitely many elements, with exact lattice membership.

    Intended for integer (Burnside) levels; level ``K`` is the Z-span of all
    ``tr^K_L(b * y')`` with ``b`` a basis element of level ``L`` and ``y'`` a
    multiplicative translate of a generator at ``L``.
    """

    kind = "generated"

    def __init__(self, functor: TambaraFunctor, generators: Iterable[Element]):
        self.functor = functor
        self.generators = list(generators)
        self._bases: dict = {}

    def lattice_basis(self, k: Subgroup) -> list[tuple]:
        if k in self._bases:
            return self._bases[k]
        T = self.functor
        lk = T.level(k)
        vectors = []
        for y in self.generators:
            for l, ys in translates_by_level(T, y).items():
                if not l <= k:
                    continue
                ll = T.level(l)
                for yp in ys:
                    for i in range(ll.rank):
                        vectors.append(T.tr(k, l, ll.mul(ll.basis_vector(i), yp)))
        basis = hermite_basis(vectors, lk.rank)
        self._bases[k] = basis
        return basis

    def contains(self, h: Subgroup, x) -> bool:
        return in_lattice(self.lattice_basis(h), x)

    def __contains__(self, el: Element) -> bool:
        return self.contains(el.subgroup, el.value)

    def to_json(self) -> dict:
        T = self.functor
        return {"kind": "generated",
                "generators": [f"{T.level(g.subgroup).element_name(g.value)}@{g.subgroup.name}"
                               for g in self.generators],
                "levels": {h.name: [list(v) for v in self.lattice_basis(h)] for h in T.subgroups}}


def principal_membership(T: TambaraFunctor, z: Element, y: Element) -> bool:
    """``z in <y>``: exact for finite levels and for integer lattices."""
    if T.is_finite:
        return principal_ideal(T, y).contains(z.subgroup, z.value)
    return GeneratedIdeal(T, [y]).contains(z.subgroup, z.value)


# -- arithmetic ---------------------------------------------------------------


def ideal_sum(I: TambaraIdeal, J: TambaraIdeal) -> TambaraIdeal:
    T = I.functor
    sets = {}
    for h in T.subgroups:
        lvl = T.level(h)
        sets[h] = {lvl.add(a, b) for a in I.level(h) for b in J.level(h)}
    return TambaraIdeal(T, sets)


def ideal_intersection(ideals: Iterable[TambaraIdeal], T: TambaraFunctor) -> TambaraIdeal:
    """Levelwise intersection; the empty intersection is the whole functor."""
    sets = {h: set(T.elements(h)) for h in T.subgroups}
    for I in ideals:
        for h in T.subgroups:
            sets[h] &= I.level(h)
    return TambaraIdeal(T, sets)


def ideal_product(I: TambaraIdeal, J: TambaraIdeal) -> TambaraIdeal:
    """Least ideal containing every levelwise product ``I(G/H) * J(G/H)``."""
    T = I.functor
    gens = []
    for h in T.subgroups:
        lvl = T.level(h)
        prods = {lvl.mul(a, b) for a in I.level(h) for b in J.level(h)}
        gens.extend(Element(h, v) for v in prods)
    return ideal_closure(T, gens)


def ideal_power(I: TambaraIdeal, n: int) -> TambaraIdeal:
    if n < 1:
        raise IdealError("ideal powers start at 1")
    out = I
    for _ in range(n - 1):
        out = ideal_product(out, I)
    return out


def product_by_transfers(I: TambaraIdeal, J: TambaraIdeal) -> TambaraIdeal:
    """``IJ`` as sums of transfers ``tr^K_L(a * b)``, ``a in I(L)``, ``b in J(L)``."""
    T = I.functor
    sets = {}
    for k in T.subgroups:
        lk = T.level(k)
        terms = set()
        for l in T.subgroups:
            if not l <= k:
                continue
            ll = T.level(l)
            for a in I.level(l):
                for b in J.level(l):
                    terms.add(T.tr(k, l, ll.mul(a, b)))
        span = {lk.zero} | terms
        frontier = list(terms)
        while frontier:
            a = frontier.pop()
            for b in list(span):
                c = lk.add(a, b)
                if c not in span:
                    span.add(c)
                    frontier.append(c)
        sets[k] = span
    return TambaraIdeal(T, sets)


# -- enumeration ---------------------------------------------------------------


def _pair_consistent(T: TambaraFunctor, assigned: dict, new: Subgroup) -> bool:
    """Closure constraints between the newly assigned level and the earlier ones."""
    G = T.group
    cand = assigned[new]
    for h, ih in assigned.items():
        if h < new:
            if any(T.res(new, h, x) not in ih for x in cand):
                return False
            if any(T.tr(new, h, x) not in cand or T.nm(new, h, x) not in cand for x in ih):
                return False
        elif new < h:
            if any(T.res(h, new, x) not in cand for x in ih):
                return False
            if any(T.tr(h, new, x) not in ih or T.nm(h, new, x) not in ih for x in cand):
                return False
    for g in G.elements:
        gn = G.conjugate(g, new)
        if gn in assigned:
            if any(T.conj(g, new, x) not in assigned[gn] for x in cand):
                return False
            ginv = G.inv[g]
            if any(T.conj(ginv, gn, x) not in cand for x in assigned[gn]):
                return False
    return True


def iter_ideals(T: TambaraFunctor) -> Iterator[TambaraIdeal]:
    """Every Tambara ideal of a finite functor, by backtracking over levelwise ring ideals."""
    subs = list(T.subgroups)
    options = [T.level(h).ideals for h in subs]
    assigned: dict = {}

    def search(i: int):
        if i == len(subs):
            yield TambaraIdeal(T, assigned)
            return
        h = subs[i]
        for cand in options[i]:
            assigned[h] = cand
            if _pair_consistent(T, assigned, h):
                yield from search(i + 1)
            del assigned[h]

    yield from search(0)


def enumerate_ideals(T: TambaraFunctor) -> list[TambaraIdeal]:
    cache = _cache(T, "ideals")
    if "all" not in cache:
        ideals = list(iter_ideals(T))
        ideals.sort(key=lambda I: (I.size(), I.key))
        cache["all"] = ideals
    return cache["all"]


# -- primes ---------------------------------------------------------------------


def is_prime(T: TambaraFunctor, ideal: TambaraIdeal) -> tuple[bool, tuple[Element, Element] | None]:
    """Proper, and ``Q(x, y, I)`` forces ``x in I`` or ``y in I``; counterexample pair otherwise."""
    if not ideal.is_proper():
        return False, None
    outside = [el for el in T.all_elements() if el not in ideal]
    for i, x in enumerate(outside):
        for y in outside[i:]:
            if q_predicate(T, x, y, ideal)[0]:
                return False, (x, y)
    return True, None


# -- nilpotence and radicals -----------------------------------------------------


def nilpotent(T: TambaraFunctor, x: Element) -> bool:
    return T.level(x.subgroup).is_nilpotent(x.value)


def nilradical_levelwise(T: TambaraFunctor) -> TambaraIdeal:
    return TambaraIdeal(T, {h: T.level(h).nilradical for h in T.subgroups})


def radical(T: TambaraFunctor, ideal: TambaraIdeal) -> TambaraIdeal:
    """Levelwise radical of ``I``."""
    return TambaraIdeal(T, {h: T.level(h).radical(ideal.level(h)) for h in T.subgroups})


def power_index_into(T: TambaraFunctor, x: Element, ideal) -> int | None:
    """Least ``m >= 1`` with ``x^m in I``, or ``None``."""
    lvl = T.level(x.subgroup)
    v = x.value
    for m in range(1, len(lvl) + 2):
        if ideal.contains(x.subgroup, v):
            return m
        v = lvl.mul(v, x.value)
    return None


def pigeonhole_bound(T: TambaraFunctor, x: Element, ideal=None) -> int:
    """Exponent beyond which ``<x>^n`` lies in ``I`` when some ``x^m`` does.

    With ``t`` the largest number of distinct translates of ``x`` at one level,
    every product of ``t(m-1)+1`` translates repeats one of them ``m`` times.
    """
    ideal = ideal if ideal is not None else zero_ideal(T)
    m = power_index_into(T, x, ideal)
    by_level = translates_by_level(T, x)
    t = max(len(v) for v in by_level.values())
    if m is None:
        m = max(len(T.level(h)) for h in T.subgroups) + 1
    return t * (m - 1) + 1


@dataclass(frozen=True)
class RadicalSearch:
    member: bool
    exponent: int | None
    reason: str


def nakaoka_radical_search(T: TambaraFunctor, x: Element, ideal: TambaraIdeal,
                           n_max: int | None = None) -> RadicalSearch:
    """Search ``n <= n_max`` with ``<x>^n`` inside ``I``.

    The powers decrease; once two consecutive powers agree they are constant,
    which settles non-membership before the bound is reached.
    """
    if n_max is None:
        n_max = pigeonhole_bound(T, x, ideal)
    base = principal_ideal(T, x)
    power = base
    for n in range(1, n_max + 1):
        if power <= ideal:
            return RadicalSearch(True, n, "contained")
        nxt = ideal_product(power, base)
        if nxt == power:
            return RadicalSearch(False, None, f"powers stabilize at n={n}")
        power = nxt
    raise Inconclusive(f"<x>^n not inside I for n <= {n_max}")


def nakaoka_radical_membership(T: TambaraFunctor, x: Element, ideal: TambaraIdeal,
                               n_max: int | None = None) -> bool:
    return nakaoka_radical_search(T, x, ideal, n_max).member


def power_iteration_to_zero(T: TambaraFunctor, y: Element, bound: int | None = None) -> int | None:
    """Least ``n <= bound`` with ``<y>^n = 0``, or ``None`` if none up to the bound."""
    zero = zero_ideal(T)
    if bound is None:
        bound = pigeonhole_bound(T, y, zero)
    base = principal_ideal(T, y)
    power = base
    for n in range(1, bound + 1):
        if power == zero:
            return n
        power = ideal_product(power, base)
    return None


def multiplicative_closure(T: TambaraFunctor, h: Subgroup, seeds: Iterable) -> frozenset:
    lvl = T.level(h)
    out = set(seeds)
    frontier = list(out)
    while frontier:
        a = frontier.pop()
        for b in list(out):
            c = lvl.mul(a, b)
            if c not in out:
                out.add(c)
                frontier.append(c)
    return frozenset(out)


def maximal_disjoint_prime(T: TambaraFunctor, h: Subgroup, S: Iterable) -> TambaraIdeal:
    """An ideal maximal among those with ``I(G/H)`` disjoint from ``S`` (found by enumeration).

    ``S`` is replaced by its multiplicative closure.
    """
    S = multiplicative_closure(T, h, S)
    if not S:
        raise IdealError("S must be nonempty")
    if T.level(h).zero in S:
        raise IdealError("S must not contain 0")
    candidates = [I for I in enumerate_ideals(T) if not (I.level(h) & S)]
    maximal = [I for I in candidates if not any(I < J for J in candidates)]
    if not maximal:
        raise IdealError("no ideal avoids S")
    return maximal[0]


def ideal_from_levels(T: TambaraFunctor, levels: Mapping[str, Iterable], check: bool = True) -> TambaraIdeal:
    """Build an explicit ideal from ``{subgroup name: elements}``."""
    sets = {}
    for name, values in levels.items():
        h = T.group.subgroup_by_name(name)
        sets[h] = {T.level(h).parse_element(str(v)) if isinstance(v, str) else v for v in values}
    for h in T.subgroups:
        sets.setdefault(h, {T.level(h).zero})
    ideal = TambaraIdeal(T, sets)
    if check:
        bad = ideal_violations(T, ideal)
        if bad:
            raise IdealError("not a Tambara ideal: " + "; ".join(bad[:3]))
    return ideal


__all__ = [
    "FunctorError", "GeneratedIdeal", "IdealError", "Inconclusive", "QWitness", "RadicalSearch",
    "TambaraIdeal", "enumerate_ideals", "generalized_products", "ideal_closure", "ideal_from_levels",
    "ideal_intersection", "ideal_power", "ideal_product", "ideal_sum", "ideal_violations", "is_ideal",
    "is_prime", "iter_ideals", "maximal_disjoint_prime", "multiplicative_closure",
    "multiplicative_translates", "nakaoka_radical_membership", "nakaoka_radical_search", "nilpotent",
    "nilradical_levelwise", "pigeonhole_bound", "power_index_into", "power_iteration_to_zero",
    "principal_ideal", "principal_ideal_by_transfers", "principal_membership", "product_by_transfers",
    "q_predicate", "radical", "translates_by_level", "whole_ideal", "zero_ideal",
]
