"""Finite G-sets, equivariant maps, and the constructions used for bispans.

A :class:`GSet` is an explicit action table ``act[g][x]``.  Constructions
(pullbacks, dependent products, disjoint unions, orbits ``G/H``) always
materialize their points; the labels they were built from are kept in
``GSet.labels`` for debugging and for the counit of the dependent product.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Hashable, Iterable, Sequence

from .groups import FiniteGroup, Subgroup


class GSetError(ValueError):
    pass


class GSet:
    def __init__(self, group: FiniteGroup, act: Sequence[Sequence[int]], labels: Sequence | None = None,
                 check: bool = True):
        self.group = group
        self.act = tuple(tuple(row) for row in act)
        if len(self.act) != group.order:
            raise GSetError("action table needs one row per group element")
        self.size = len(self.act[0]) if self.act else 0
        self.labels = tuple(labels) if labels is not None else tuple(range(self.size))
        if check:
            self._validate()

    def _validate(self) -> None:
        n = self.size
        if any(len(row) != n for row in self.act):
            raise GSetError("ragged action table")
        if self.act[0] != tuple(range(n)):
            raise GSetError("identity must act trivially")
        mul = self.group.mul
        for g in self.group.elements:
            row = self.act[g]
            if sorted(row) != list(range(n)):
                raise GSetError(f"element {g} does not act by a permutation")
            for h in self.group.elements:
                gh = self.act[mul[g][h]]
                hrow = self.act[h]
                if any(gh[x] != row[hrow[x]] for x in range(n)):
                    raise GSetError(f"action is not a homomorphism at ({g}, {h})")

    @classmethod
    def from_labels(cls, group: FiniteGroup, labels: Sequence[Hashable],
                    action: Callable[[int, Hashable], Hashable]) -> "GSet":
        labels = list(labels)
        index = {lab: i for i, lab in enumerate(labels)}
        act = [[index[action(g, lab)] for lab in labels] for g in group.elements]
        return cls(group, act, labels, check=False)

    @classmethod
    def empty(cls, group: FiniteGroup) -> "GSet":
        return cls(group, [() for _ in group.elements], (), check=False)

    @classmethod
    def point(cls, group: FiniteGroup) -> "GSet":
        return cls(group, [(0,) for _ in group.elements], (None,), check=False)

    @classmethod
    def orbit(cls, group: FiniteGroup, h: Subgroup) -> "GSet":
        """``G/H`` with points the left cosets, ordered by least element; point 0 is ``eH``."""
        reps = group.left_coset_reps(group.whole, h)
        coset_of = {}
        for i, r in enumerate(reps):
            for x in group.left_coset(r, h):
                coset_of[x] = i
        act = [[coset_of[group.mul[g][r]] for r in reps] for g in group.elements]
        return cls(group, act, reps, check=False)

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"GSet({self.group.name}, size={self.size})"

    def __eq__(self, other) -> bool:
        return isinstance(other, GSet) and self.group is other.group and self.act == other.act

    def __hash__(self) -> int:
        return hash((id(self.group), self.act))

    @property
    def points(self) -> range:
        return range(self.size)

    def stabilizer(self, x: int) -> Subgroup:
        return self.group.subgroup(g for g in self.group.elements if self.act[g][x] == x)

    def orbit_of(self, x: int) -> tuple[int, ...]:
        return tuple(sorted({self.act[g][x] for g in self.group.elements}))

    @cached_property
    def orbits(self) -> tuple[tuple[int, ...], ...]:
        """Orbits as sorted point tuples, ordered by their least point."""
        seen: set = set()
        out = []
        for x in self.points:
            if x in seen:
                continue
            orb = self.orbit_of(x)
            seen.update(orb)
            out.append(orb)
        return tuple(out)

    @cached_property
    def stabilizers(self) -> tuple[Subgroup, ...]:
        return tuple(self.stabilizer(x) for x in self.points)

    @cached_property
    def transporters(self) -> tuple[int, ...]:
        """For each point ``x`` the least ``g`` with ``g * base(x) = x``."""
        out = [0] * self.size
        for orb in self.orbits:
            base = orb[0]
            for g in reversed(self.group.elements):
                out[self.act[g][base]] = g
        return tuple(out)

    @cached_property
    def orbit_index(self) -> tuple[int, ...]:
        out = [0] * self.size
        for i, orb in enumerate(self.orbits):
            for x in orb:
                out[x] = i
        return tuple(out)

    def restricted_orbits(self, points: Iterable[int], k: Subgroup) -> list[tuple[int, ...]]:
        """Orbits of the subgroup ``K`` on a ``K``-stable subset of points."""
        remaining = sorted(points)
        seen: set = set()
        out = []
        for x in remaining:
            if x in seen:
                continue
            orb = tuple(sorted({self.act[g][x] for g in k}))
            seen.update(orb)
            out.append(orb)
        return out

    def invariant_key(self) -> tuple:
        """Isomorphism invariant: sorted multiset of orbit stabilizer conjugacy classes."""
        g = self.group
        return tuple(sorted(g.subgroup_position(g.class_rep(self.stabilizers[o[0]])) for o in self.orbits))


@dataclass(frozen=True, eq=False)
class GMap:
    source: GSet
    target: GSet
    table: tuple

    def __post_init__(self):
        object.__setattr__(self, "table", tuple(self.table))
        if len(self.table) != self.source.size:
            raise GSetError("map table length must equal source size")
        if self.source.group is not self.target.group:
            raise GSetError("maps must be between G-sets of the same group")

    def __call__(self, x: int) -> int:
        return self.table[x]

    def __eq__(self, other) -> bool:
        return (isinstance(other, GMap) and self.source == other.source and self.target == other.target
                and self.table == other.table)

    def __hash__(self) -> int:
        return hash((self.source, self.target, self.table))

    def __repr__(self) -> str:
        return f"GMap({self.source.size}->{self.target.size}, {list(self.table)})"

    def is_equivariant(self) -> bool:
        s, t = self.source, self.target
        return all(self.table[s.act[g][x]] == t.act[g][self.table[x]]
                   for g in s.group.elements for x in s.points)

    def check(self) -> "GMap":
        if any(not 0 <= y < self.target.size for y in self.table):
            raise GSetError("map sends a point outside its target")
        if not self.is_equivariant():
            raise GSetError("map is not equivariant")
        return self

    def fiber(self, y: int) -> tuple[int, ...]:
        return tuple(x for x in self.source.points if self.table[x] == y)

    def is_bijective(self) -> bool:
        return self.source.size == self.target.size and len(set(self.table)) == self.source.size

    def inverse(self) -> "GMap":
        if not self.is_bijective():
            raise GSetError("map is not invertible")
        inv = [0] * self.source.size
        for x, y in enumerate(self.table):
            inv[y] = x
        return GMap(self.target, self.source, tuple(inv))

    def then(self, after: "GMap") -> "GMap":
        """``after o self``."""
        if after.source is not self.target and after.source != self.target:
            raise GSetError("maps are not composable")
        return GMap(self.source, after.target, tuple(after.table[y] for y in self.table))


def identity(x: GSet) -> GMap:
    return GMap(x, x, tuple(x.points))


def compose(f: GMap, g: GMap) -> GMap:
    """``f o g``."""
    return g.then(f)


def empty_map(x: GSet) -> GMap:
    return GMap(GSet.empty(x.group), x, ())


def quotient_map(group: FiniteGroup, h: Subgroup, k: Subgroup) -> GMap:
    """The canonical projection ``G/H -> G/K`` for ``H <= K``."""
    if not h <= k:
        raise GSetError("quotient map needs H <= K")
    src, dst = GSet.orbit(group, h), GSet.orbit(group, k)
    reps_k = dst.labels
    which = {}
    for i, r in enumerate(reps_k):
        for x in group.left_coset(r, k):
            which[x] = i
    return GMap(src, dst, tuple(which[r] for r in src.labels))


def conjugation_map(group: FiniteGroup, h: Subgroup, g: int) -> GMap:
    """The isomorphism ``G/H -> G/gHg^-1``, ``xH -> x g^-1 (gHg^-1)``."""
    src = GSet.orbit(group, h)
    k = group.conjugate(g, h)
    dst = GSet.orbit(group, k)
    which = {}
    for i, r in enumerate(dst.labels):
        for x in group.left_coset(r, k):
            which[x] = i
    ginv = group.inv[g]
    return GMap(src, dst, tuple(which[group.mul[r][ginv]] for r in src.labels))


def disjoint_union(*parts: GSet) -> tuple[GSet, list[GMap]]:
    if not parts:
        raise GSetError("disjoint_union needs at least one part")
    group = parts[0].group
    offsets = list(itertools.accumulate([0] + [p.size for p in parts]))
    act = [[] for _ in group.elements]
    labels = []
    for i, p in enumerate(parts):
        for g in group.elements:
            act[g].extend(offsets[i] + y for y in p.act[g])
        labels.extend((i, lab) for lab in p.labels)
    total = GSet(group, act, labels, check=False)
    incs = [GMap(p, total, tuple(offsets[i] + x for x in p.points)) for i, p in enumerate(parts)]
    return total, incs


def copair(total: GSet, maps: Sequence[GMap], target: GSet) -> GMap:
    """The map out of a disjoint union built by :func:`disjoint_union`."""
    table = []
    for m in maps:
        table.extend(m.table)
    return GMap(total, target, tuple(table))


def fold_map(x: GSet, copies: int = 2) -> GMap:
    total, _ = disjoint_union(*([x] * copies))
    return GMap(total, x, tuple(p for _ in range(copies) for p in x.points))


def pullback(f: GMap, g: GMap) -> tuple[GSet, GMap, GMap]:
    """Pullback of ``f: X -> Z`` and ``g: Y -> Z``.

    Returns ``(P, p_X, p_Y)`` with ``P = {(x, y) | f(x) = g(y)}`` under the
    diagonal action, points in lexicographic order.
    """
    if f.target != g.target:
        raise GSetError("pullback needs a common target")
    X, Y = f.source, g.source
    pairs = [(x, y) for x in X.points for y in Y.points if f.table[x] == g.table[y]]
    index = {p: i for i, p in enumerate(pairs)}
    act = [[index[(X.act[h][x], Y.act[h][y])] for (x, y) in pairs] for h in X.group.elements]
    P = GSet(X.group, act, pairs, check=False)
    return P, GMap(P, X, tuple(p[0] for p in pairs)), GMap(P, Y, tuple(p[1] for p in pairs))


MAX_DEPENDENT_PRODUCT = 200_000


def dependent_product(f: GMap, g: GMap, limit: int | None = None) -> GMap:
    """``Pi_f g`` for ``f: Y -> Z`` and ``g: X -> Y``.

    The fiber over ``z`` is the set of sections ``s`` of ``g`` over ``f^-1(z)``;
    a point is stored as the label ``(z, ((y, s(y)), ...))`` and ``k`` acts by
    ``(k.s)(y) = k.s(k^-1 y)``.
    """
    if g.target != f.source:
        raise GSetError("dependent product needs g: X -> Y and f: Y -> Z")
    Y, Z, X = f.source, f.target, g.source
    group = Y.group
    limit = MAX_DEPENDENT_PRODUCT if limit is None else limit
    total = sum(math.prod(len(g.fiber(y)) for y in f.fiber(z)) for z in Z.points)
    if total > limit:
        raise GSetError(f"dependent product would have {total} points (limit {limit})")
    labels = []
    for z in Z.points:
        ys = f.fiber(z)
        choices = [g.fiber(y) for y in ys]
        for sec in itertools.product(*choices):
            labels.append((z, tuple(zip(ys, sec))))

    def action(k: int, lab):
        z, sec = lab
        moved = sorted((Y.act[k][y], X.act[k][x]) for y, x in sec)
        return (Z.act[k][z], tuple(moved))

    P = GSet.from_labels(group, labels, action)
    return GMap(P, Z, tuple(lab[0] for lab in labels))


@dataclass(frozen=True)
class ExponentialDiagram:
    """``X <-eps- E' -f'-> Pi -pi-> Z`` for ``g: X -> Y``, ``f: Y -> Z``.

    ``E' = Y x_Z Pi``; ``to_y`` is the projection to ``Y``.
    """
    counit: GMap
    f_prime: GMap
    pi: GMap
    to_y: GMap


def exponential_diagram(f: GMap, g: GMap) -> ExponentialDiagram:
    pi = dependent_product(f, g)
    E, to_y, f_prime = pullback(f, pi)
    sec_of = pi.source.labels
    counit = []
    for (y, p) in E.labels:
        counit.append(dict(sec_of[p][1])[y])
    eps = GMap(E, g.source, tuple(counit))
    return ExponentialDiagram(eps, f_prime, pi, to_y)


def orbit_decomposition(x: GSet) -> list[tuple[Subgroup, int]]:
    """One ``(stabilizer, base point)`` per orbit; the base point is the least point."""
    return [(x.stabilizers[orb[0]], orb[0]) for orb in x.orbits]


def equivariant_maps(src: GSet, dst: GSet) -> list[GMap]:
    """All equivariant maps, by choosing images of orbit base points."""
    group = src.group
    options = []
    for stab, base in orbit_decomposition(src):
        options.append([y for y in dst.points if all(dst.act[h][y] == y for h in stab)])
    out = []
    for choice in itertools.product(*options):
        table = [0] * src.size
        for (stab, base), y in zip(orbit_decomposition(src), choice):
            for h in group.elements:
                table[src.act[h][base]] = dst.act[h][y]
        out.append(GMap(src, dst, tuple(table)))
    return out
