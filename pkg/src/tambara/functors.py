"""Tambara functors as level rings plus restriction, transfer, norm and conjugation.

A functor exposes ``level(H)`` for every subgroup ``H`` and the four families
of structure maps on level elements:

* ``res(K, H, x)``: ``T(G/K) -> T(G/H)`` for ``H <= K``
* ``tr(K, H, x)`` and ``nm(K, H, x)``: ``T(G/H) -> T(G/K)`` for ``H <= K``
* ``conj(g, H, x)``: ``T(G/H) -> T(G/gHg^-1)``

Values on arbitrary finite G-sets are equivariant sections (one level element
per point, see :mod:`tambara.evaluation`).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Callable, Hashable, Iterable, Mapping

from .burnside import BurnsideLevel, coset_action
from .groups import FiniteGroup, Subgroup
from .rings import FiniteRing, RingError


class FunctorError(ValueError):
    pass


@dataclass(frozen=True)
class Element:
    """A level element ``x`` in ``T(G/H)``."""
    subgroup: Subgroup
    value: Hashable

    def __repr__(self) -> str:
        return f"Element({self.value!r}@{self.subgroup.name})"


class TambaraFunctor:
    """Base class; subclasses provide ``_level`` and the four structure maps."""

    name = "T"

    def __init__(self, group: FiniteGroup):
        self.group = group
        self._levels: dict = {}

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self.name}, {self.group.name})"

    @property
    def subgroups(self) -> tuple[Subgroup, ...]:
        return self.group.subgroups

    def level(self, h: Subgroup):
        try:
            return self._levels[h]
        except KeyError:
            lvl = self._levels[h] = self._level(h)
            return lvl

    def _level(self, h: Subgroup):
        raise NotImplementedError

    def res(self, k: Subgroup, h: Subgroup, x):
        raise NotImplementedError

    def tr(self, k: Subgroup, h: Subgroup, x):
        raise NotImplementedError

    def nm(self, k: Subgroup, h: Subgroup, x):
        raise NotImplementedError

    def conj(self, g: int, h: Subgroup, x):
        raise NotImplementedError

    # -- derived ---------------------------------------------------------

    @property
    def bottom(self) -> Subgroup:
        return self.group.trivial

    @cached_property
    def is_finite(self) -> bool:
        return all(getattr(self.level(h), "is_finite", False) for h in self.subgroups)

    def elements(self, h: Subgroup) -> tuple:
        lvl = self.level(h)
        if not getattr(lvl, "is_finite", False):
            raise FunctorError(f"level {h.name} of {self.name} is infinite")
        return lvl.elements

    def all_elements(self) -> list[Element]:
        return [Element(h, x) for h in self.subgroups for x in self.elements(h)]

    def level_sizes(self) -> dict:
        return {h.name: len(self.level(h)) for h in self.subgroups}

    def weyl_action_trivial(self) -> bool:
        e = self.bottom
        lvl = self.level(e)
        if getattr(lvl, "is_finite", False):
            xs = lvl.elements
        else:
            xs = [lvl.basis_vector(i) for i in range(lvl.rank)]
        return all(lvl.eq(self.conj(g, e, x), x) for g in self.group.elements for x in xs)


def is_zero_functor(T: TambaraFunctor) -> bool:
    return any(T.level(h).is_zero_ring() for h in T.subgroups)


# -- fixed points ----------------------------------------------------------


class FixedPointFunctor(TambaraFunctor):
    """``FP(R)``: levels ``R^H``, inclusions, Galois trace and norm.

    ``action`` is either ``None`` (trivial), a callable ``(g, r) -> g.r``, or
    one permutation table per group element (a mapping or sequence indexed by
    ring labels).  Non-enumerable rings are only accepted with trivial action.
    """

    def __init__(self, group: FiniteGroup, ring, action=None, name: str | None = None, check: bool = True):
        super().__init__(group)
        self.ring = ring
        self.name = name or f"FP({getattr(ring, 'name', 'R')})"
        self.trivial_action = action is None
        if action is None:
            self._act = lambda g, r: r
        elif callable(action):
            self._act = action
        else:
            tables = [dict(enumerate(t)) if not isinstance(t, Mapping) else dict(t) for t in action]
            if len(tables) != group.order:
                raise FunctorError("action needs one permutation per group element")
            self._act = lambda g, r, _t=tables: _t[g][r]
        if check:
            self._check_action()

    def _check_action(self) -> None:
        ring = self.ring
        if not getattr(ring, "is_finite", False):
            if not self.trivial_action:
                raise FunctorError("fixed-point functors over infinite rings need the trivial action")
            return
        mul = self.group.mul
        for g in self.group.elements:
            perm = {r: self._act(g, r) for r in ring.elements}
            if not ring.is_automorphism(perm):
                raise FunctorError(f"group element {g} does not act by a ring automorphism")
        for g in self.group.elements:
            for h in self.group.elements:
                if any(self._act(mul[g][h], r) != self._act(g, self._act(h, r)) for r in ring.elements):
                    raise FunctorError(f"action is not a group action at ({g}, {h})")
        if any(self._act(0, r) != r for r in ring.elements):
            raise FunctorError("identity must act trivially")

    def act(self, g: int, r):
        return self._act(g, r)

    def _level(self, h: Subgroup):
        if not getattr(self.ring, "is_finite", False):
            return self.ring
        fixed = [r for r in self.ring.elements if all(self._act(g, r) == r for g in h)]
        return self.ring.subring(fixed, name=f"{self.ring.name}^{h.name}")

    def res(self, k, h, x):
        return x

    def tr(self, k, h, x):
        ring = self.ring
        return ring.sum(self._act(g, x) for g in self.group.left_coset_reps(k, h))

    def nm(self, k, h, x):
        ring = self.ring
        return ring.prod(self._act(g, x) for g in self.group.left_coset_reps(k, h))

    def conj(self, g, h, x):
        return self._act(g, x)


# -- Burnside --------------------------------------------------------------


class BurnsideFunctor(TambaraFunctor):
    """The Burnside Tambara functor ``G/H -> A(H)``."""

    def __init__(self, group: FiniteGroup):
        super().__init__(group)
        self.name = f"A_{group.name}"

    def _level(self, h):
        return BurnsideLevel(self.group, h)

    @lru_cache(maxsize=None)
    def _res_matrix(self, k: Subgroup, h: Subgroup) -> tuple:
        lk, lh = self.level(k), self.level(h)
        rows = []
        for l in lk.basis:
            reps, act = coset_action(self.group, k, l)
            rows.append(lh.decompose({g: act[g] for g in h}, len(reps)))
        return tuple(rows)

    def res(self, k, h, x):
        if not h <= k:
            raise FunctorError("res needs H <= K")
        lh = self.level(h)
        out = [0] * lh.rank
        for c, row in zip(x, self._res_matrix(k, h)):
            if c:
                for i, v in enumerate(row):
                    out[i] += c * v
        return tuple(out)

    @lru_cache(maxsize=None)
    def _tr_images(self, k: Subgroup, h: Subgroup) -> tuple:
        lk, lh = self.level(k), self.level(h)
        return tuple(lk.class_index(l) for l in lh.basis)

    def tr(self, k, h, x):
        if not h <= k:
            raise FunctorError("tr needs H <= K")
        lk = self.level(k)
        out = [0] * lk.rank
        for c, i in zip(x, self._tr_images(k, h)):
            out[i] += c
        return tuple(out)

    @lru_cache(maxsize=None)
    def _norm_plan(self, k: Subgroup, h: Subgroup) -> tuple:
        g = self.group
        plan = []
        for l in self.level(k).basis:
            factors = []
            for gamma in g.double_coset_reps(h, l, within=k):
                conj_l = g.conjugate(gamma, l)
                factors.append(g.intersect(h, conj_l))
            plan.append(tuple(factors))
        return tuple(plan)

    def nm(self, k, h, x):
        """Norm through marks: ``|Map_H(K, X)^L| = prod |X^(H & gLg^-1)|`` over ``H\\K/L``."""
        if not h <= k:
            raise FunctorError("nm needs H <= K")
        lh, lk = self.level(h), self.level(k)
        marks = []
        for factors in self._norm_plan(k, h):
            m = 1
            for sub in factors:
                m *= lh.mark(sub, x)
            marks.append(m)
        return lk.from_marks(marks)

    @lru_cache(maxsize=None)
    def _conj_images(self, g: int, h: Subgroup) -> tuple:
        target = self.level(self.group.conjugate(g, h))
        return tuple(target.class_index(self.group.conjugate(g, l)) for l in self.level(h).basis)

    def conj(self, g, h, x):
        target = self.level(self.group.conjugate(g, h))
        out = [0] * target.rank
        for c, i in zip(x, self._conj_images(g, h)):
            out[i] += c
        return tuple(out)

    def kernel_of_restriction_basis(self, h: Subgroup) -> list[tuple]:
        """Basis ``[H/K] - [H:K][H/H]`` (``K`` not ``H``) of ``ker res^H_e``."""
        lvl = self.level(h)
        top = lvl.rank - 1
        out = []
        for i, k in enumerate(lvl.basis[:-1]):
            v = [0] * lvl.rank
            v[i] = 1
            v[top] = -(h.order // k.order)
            out.append(tuple(v))
        return out


# -- explicit tables ---------------------------------------------------------


class TableFunctor(TambaraFunctor):
    """A functor given by explicit finite level rings and map tables.

    ``levels`` maps each subgroup to a :class:`FiniteRing`; ``res``, ``tr``
    and ``nm`` map ``(K, H)`` with ``H < K`` to element dictionaries; ``conj``
    maps ``(g, H)`` to an element dictionary.  Identity entries may be
    omitted.  Nothing is validated here; use :func:`tambara.axioms.check_axioms`.
    """

    def __init__(self, group: FiniteGroup, levels: Mapping, res: Mapping, tr: Mapping, nm: Mapping,
                 conj: Mapping, name: str = "T"):
        super().__init__(group)
        self.name = name
        self._given = dict(levels)
        missing = [h.name for h in group.subgroups if h not in self._given]
        if missing:
            raise FunctorError(f"missing levels for {missing}")
        self.res_tables = {key: dict(v) for key, v in res.items()}
        self.tr_tables = {key: dict(v) for key, v in tr.items()}
        self.nm_tables = {key: dict(v) for key, v in nm.items()}
        self.conj_tables = {key: dict(v) for key, v in conj.items()}

    def _level(self, h):
        return self._given[h]

    def _lookup(self, tables, key, x, what):
        try:
            table = tables[key]
        except KeyError:
            raise FunctorError(f"no {what} table for {key[0].name} > {key[1].name}") from None
        try:
            return table[x]
        except KeyError:
            raise FunctorError(f"{what} {key[0].name}/{key[1].name} undefined on {x!r}") from None

    def res(self, k, h, x):
        if k == h and (k, h) not in self.res_tables:
            return x
        return self._lookup(self.res_tables, (k, h), x, "res")

    def tr(self, k, h, x):
        if k == h and (k, h) not in self.tr_tables:
            return x
        return self._lookup(self.tr_tables, (k, h), x, "tr")

    def nm(self, k, h, x):
        if k == h and (k, h) not in self.nm_tables:
            return x
        return self._lookup(self.nm_tables, (k, h), x, "nm")

    def conj(self, g, h, x):
        if (g, h) not in self.conj_tables:
            if g in h:
                return x
            raise FunctorError(f"no conj table for ({g}, {h.name})")
        return self.conj_tables[(g, h)][x]


def materialize(T: TambaraFunctor, name: str | None = None) -> TableFunctor:
    """Tabulate a finite functor completely (every strict pair and every conjugation)."""
    if not T.is_finite:
        raise FunctorError("only finite functors can be tabulated")
    subs = T.subgroups
    levels = {h: T.level(h) for h in subs}
    res, tr, nm, conj = {}, {}, {}, {}
    for k in subs:
        for h in subs:
            if h < k:
                res[(k, h)] = {x: T.res(k, h, x) for x in T.elements(k)}
                tr[(k, h)] = {x: T.tr(k, h, x) for x in T.elements(h)}
                nm[(k, h)] = {x: T.nm(k, h, x) for x in T.elements(h)}
    for g in T.group.elements:
        for h in subs:
            conj[(g, h)] = {x: T.conj(g, h, x) for x in T.elements(h)}
    return TableFunctor(T.group, levels, res, tr, nm, conj, name=name or T.name)


# -- quotients -------------------------------------------------------------


class QuotientFunctor(TambaraFunctor):
    """``T / I`` for a Tambara ideal of a finite functor; cosets are least-label reps."""

    def __init__(self, base: TambaraFunctor, ideal, check: bool = True):
        super().__init__(base.group)
        self.base = base
        self.ideal = ideal
        self.name = f"{base.name}/I"
        if check:
            from .ideals import is_ideal
            if not is_ideal(base, ideal):
                raise FunctorError("quotient needs a Tambara ideal")

    def _level(self, h):
        try:
            return self.base.level(h).quotient(self.ideal.level(h), name=f"{self.base.level(h).name}/I")
        except RingError as exc:
            raise FunctorError(str(exc)) from None

    def _red(self, h, x):
        return self.level(h)._red(x)

    def res(self, k, h, x):
        return self._red(h, self.base.res(k, h, x))

    def tr(self, k, h, x):
        return self._red(k, self.base.tr(k, h, x))

    def nm(self, k, h, x):
        return self._red(k, self.base.nm(k, h, x))

    def conj(self, g, h, x):
        return self._red(self.group.conjugate(g, h), self.base.conj(g, h, x))

    def project(self, el: Element) -> Element:
        return Element(el.subgroup, self._red(el.subgroup, el.value))


def quotient_functor(T: TambaraFunctor, ideal) -> QuotientFunctor:
    return QuotientFunctor(T, ideal)


# -- morphisms -------------------------------------------------------------


class TambaraMorphism:
    """Per-level ring maps ``components[H]: T(G/H) -> S(G/H)``."""

    def __init__(self, source: TambaraFunctor, target: TambaraFunctor, components: Mapping[Subgroup, Callable]):
        self.source = source
        self.target = target
        self.components = dict(components)

    def __call__(self, el: Element) -> Element:
        return Element(el.subgroup, self.components[el.subgroup](el.value))

    def check(self, samples: Mapping[Subgroup, Iterable] | None = None) -> list[str]:
        """Ring-map and naturality failures on the given (or all finite) level elements."""
        S, T, G = self.source, self.target, self.source.group
        els = {h: list(samples[h]) if samples else list(S.elements(h)) for h in S.subgroups}
        phi = self.components
        bad = []
        for h in S.subgroups:
            ls, lt = S.level(h), T.level(h)
            if not lt.eq(phi[h](ls.one), lt.one):
                bad.append(f"unit at {h.name}")
            for x in els[h]:
                if phi[h](x) not in lt:
                    bad.append(f"component {h.name} leaves the target level at {x!r}")
                for y in els[h]:
                    if not lt.eq(phi[h](ls.add(x, y)), lt.add(phi[h](x), phi[h](y))):
                        bad.append(f"additivity at {h.name}: {x!r}, {y!r}")
                    if not lt.eq(phi[h](ls.mul(x, y)), lt.mul(phi[h](x), phi[h](y))):
                        bad.append(f"multiplicativity at {h.name}: {x!r}, {y!r}")
        for k in S.subgroups:
            for h in S.subgroups:
                if not h <= k:
                    continue
                lk, lh = T.level(k), T.level(h)
                for x in els[k]:
                    if not lh.eq(phi[h](S.res(k, h, x)), T.res(k, h, phi[k](x))):
                        bad.append(f"res naturality {k.name}->{h.name} at {x!r}")
                for x in els[h]:
                    if not lk.eq(phi[k](S.tr(k, h, x)), T.tr(k, h, phi[h](x))):
                        bad.append(f"tr naturality {h.name}->{k.name} at {x!r}")
                    if not lk.eq(phi[k](S.nm(k, h, x)), T.nm(k, h, phi[h](x))):
                        bad.append(f"nm naturality {h.name}->{k.name} at {x!r}")
        for g in G.elements:
            for h in S.subgroups:
                gh = G.conjugate(g, h)
                for x in els[h]:
                    if not T.level(gh).eq(phi[gh](S.conj(g, h, x)), T.conj(g, h, phi[h](x))):
                        bad.append(f"conj naturality g={g} at {h.name}, {x!r}")
        return bad


def unit_to_fixed_points(T: TambaraFunctor) -> TambaraMorphism:
    """The unit ``T -> FP(T(G/e))``: restriction to the bottom level, which lands in fixed points."""
    e = T.bottom
    ring = T.level(e)
    if getattr(ring, "is_finite", False):
        fp = FixedPointFunctor(T.group, ring, action=lambda g, r: T.conj(g, e, r), name=f"FP({T.name}(G/e))")
    else:
        if not T.weyl_action_trivial():
            raise FunctorError("unit map over an infinite bottom level needs the trivial Weyl action")
        fp = FixedPointFunctor(T.group, ring, None, name=f"FP({T.name}(G/e))")
    comps = {h: (lambda x, _h=h: T.res(_h, e, x)) for h in T.subgroups}
    return TambaraMorphism(T, fp, comps)


def zero_functor(group: FiniteGroup) -> TableFunctor:
    ring = FiniteRing([[0]], [[0]], 0, 0, name="0")
    levels = {h: ring for h in group.subgroups}
    one = {0: 0}
    subs = group.subgroups
    pairs = [(k, h) for k in subs for h in subs if h < k]
    return TableFunctor(group, levels,
                        {p: one for p in pairs}, {p: one for p in pairs}, {p: one for p in pairs},
                        {(g, h): one for g in group.elements for h in subs}, name="0")
