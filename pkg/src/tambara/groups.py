"""Finite groups given by multiplication tables, and their subgroup lattices.

Elements are the integers ``0..n-1`` with ``0`` the identity.  Subgroups are
immutable member sets; every subgroup of a group is computed once and cached,
and the rest of the package indexes levels by :class:`Subgroup` identity.
"""

from __future__ import annotations

import itertools
from functools import cached_property
from typing import Iterable, Sequence


class GroupError(ValueError):
    pass


class Subgroup:
    """A subgroup of a :class:`FiniteGroup`, stored as a sorted member tuple."""

    __slots__ = ("group", "members", "_set", "_hash")

    def __init__(self, group: "FiniteGroup", members: Iterable[int]):
        self.group = group
        self.members = tuple(sorted(set(members)))
        self._set = frozenset(self.members)
        self._hash = hash((id(group), self.members))

    def __contains__(self, g: int) -> bool:
        return g in self._set

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.group is other.group and self.members == other.members

    def __hash__(self) -> int:
        return self._hash

    def __le__(self, other: "Subgroup") -> bool:
        return self._set <= other._set

    def __lt__(self, other: "Subgroup") -> bool:
        return self._set < other._set

    def __ge__(self, other: "Subgroup") -> bool:
        return self._set >= other._set

    def __gt__(self, other: "Subgroup") -> bool:
        return self._set > other._set

    @property
    def order(self) -> int:
        return len(self.members)

    @property
    def sort_key(self) -> tuple:
        return (len(self.members), self.members)

    @property
    def name(self) -> str:
        return self.group.subgroup_name(self)

    def index_in(self, other: "Subgroup") -> int:
        return other.order // self.order

    def __repr__(self) -> str:
        return f"Subgroup({self.name})"


class FiniteGroup:
    """A finite group from its multiplication table.

    ``mul[a][b]`` is the product ``a*b``; row/column 0 must be the identity.
    The constructor validates the group axioms exhaustively, which is cheap
    at the sizes this package targets (order at most 24 or so).
    """

    def __init__(self, mul: Sequence[Sequence[int]], name: str = "G",
                 subgroup_names: dict | None = None, points: Sequence[Sequence[int]] | None = None):
        n = len(mul)
        if n == 0:
            raise GroupError("empty multiplication table")
        self.mul = tuple(tuple(int(v) for v in row) for row in mul)
        self.order = n
        self.name = name
        self._validate()
        self.inv = tuple(next(b for b in range(n) if self.mul[a][b] == 0) for a in range(n))
        self._given_names = dict(subgroup_names or {})
        # optional permutation representation (used for "permute" ring actions)
        self.points = tuple(tuple(p) for p in points) if points is not None else None

    def _validate(self) -> None:
        n = self.order
        for a in range(n):
            row = self.mul[a]
            if len(row) != n or any(not 0 <= v < n for v in row):
                raise GroupError(f"row {a} is not a valid table row")
            if sorted(row) != list(range(n)):
                raise GroupError(f"row {a} is not a permutation")
        if any(self.mul[0][a] != a or self.mul[a][0] != a for a in range(n)):
            raise GroupError("element 0 must be the two-sided identity")
        for col in range(n):
            if sorted(self.mul[a][col] for a in range(n)) != list(range(n)):
                raise GroupError(f"column {col} is not a permutation")
        m = self.mul
        for a, b, c in itertools.product(range(n), repeat=3):
            if m[m[a][b]][c] != m[a][m[b][c]]:
                raise GroupError(f"associativity fails at ({a}, {b}, {c})")

    def __repr__(self) -> str:
        return f"FiniteGroup({self.name}, order={self.order})"

    @property
    def elements(self) -> range:
        return range(self.order)

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def conj_elem(self, g: int, h: int) -> int:
        """``g h g^-1``."""
        return self.mul[self.mul[g][h]][self.inv[g]]

    def is_abelian(self) -> bool:
        return all(self.mul[a][b] == self.mul[b][a] for a in self.elements for b in self.elements)

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.mul[x][g]
            k += 1
        return k

    # -- subgroups -------------------------------------------------------

    def generated(self, gens: Iterable[int]) -> frozenset:
        members = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for g in gens:
                y = self.mul[x][g]
                if y not in members:
                    members.add(y)
                    frontier.append(y)
        return frozenset(members)

    @cached_property
    def subgroups(self) -> tuple[Subgroup, ...]:
        """All subgroups, sorted by (order, member tuple)."""
        found = {frozenset([0])}
        frontier = [frozenset([0])]
        while frontier:
            h = frontier.pop()
            for g in self.elements:
                if g in h:
                    continue
                k = self.generated(set(h) | {g})
                if k not in found:
                    found.add(k)
                    frontier.append(k)
        subs = [Subgroup(self, s) for s in found]
        subs.sort(key=lambda s: s.sort_key)
        return tuple(subs)

    @cached_property
    def _subgroup_index(self) -> dict:
        return {s.members: i for i, s in enumerate(self.subgroups)}

    def subgroup(self, members: Iterable[int]) -> Subgroup:
        key = tuple(sorted(set(members)))
        try:
            return self.subgroups[self._subgroup_index[key]]
        except KeyError:
            raise GroupError(f"{sorted(key)} is not a subgroup of {self.name}") from None

    def subgroup_position(self, h: Subgroup) -> int:
        return self._subgroup_index[h.members]

    @property
    def trivial(self) -> Subgroup:
        return self.subgroups[0]

    @property
    def whole(self) -> Subgroup:
        return self.subgroups[-1]

    def conjugate(self, g: int, h: Subgroup) -> Subgroup:
        """``g H g^-1``."""
        return self.subgroup(self.conj_elem(g, x) for x in h)

    def conjugacy_class(self, h: Subgroup, within: Subgroup | None = None) -> tuple[Subgroup, ...]:
        ambient = within.members if within is not None else self.elements
        cls = {self.conjugate(g, h) for g in ambient}
        return tuple(sorted(cls, key=lambda s: s.sort_key))

    def class_representatives(self, within: Subgroup | None = None) -> tuple[Subgroup, ...]:
        """Representatives of ``within``-conjugacy classes of subgroups of ``within``.

        The representative of each class is its least member in subgroup order.
        """
        within = within if within is not None else self.whole
        seen: set = set()
        reps = []
        for s in self.subgroups:
            if not s <= within or s in seen:
                continue
            cls = self.conjugacy_class(s, within)
            seen.update(cls)
            reps.append(cls[0])
        return tuple(reps)

    def class_rep(self, h: Subgroup, within: Subgroup | None = None) -> Subgroup:
        return self.conjugacy_class(h, within)[0]

    def normalizer(self, h: Subgroup) -> Subgroup:
        return self.subgroup(g for g in self.elements if self.conjugate(g, h) == h)

    def intersect(self, a: Subgroup, b: Subgroup) -> Subgroup:
        return self.subgroup(set(a.members) & set(b.members))

    def left_coset(self, g: int, h: Subgroup) -> frozenset:
        return frozenset(self.mul[g][x] for x in h)

    def left_coset_reps(self, k: Subgroup, h: Subgroup) -> tuple[int, ...]:
        """One representative (the least element) of each coset ``kH`` in ``K/H``."""
        seen: set = set()
        reps = []
        for g in k:
            if g in seen:
                continue
            coset = self.left_coset(g, h)
            seen |= coset
            reps.append(min(coset))
        return tuple(reps)

    def double_coset_reps(self, h: Subgroup, k: Subgroup, within: Subgroup | None = None) -> tuple[int, ...]:
        """One representative (the least element) per double coset ``H g K``.

        With ``within`` given, the double cosets partition ``within`` instead
        of the whole group (both ``H`` and ``K`` must lie inside it).
        """
        ambient = within.members if within is not None else self.elements
        seen: set = set()
        reps = []
        for g in ambient:
            if g in seen:
                continue
            dc = frozenset(self.mul[self.mul[a][g]][b] for a in h for b in k)
            seen |= dc
            reps.append(min(dc))
        return tuple(reps)

    # -- naming ----------------------------------------------------------

    @cached_property
    def _names(self) -> dict:
        names: dict = {}
        by_type: dict = {}
        for s in self.subgroups:
            if s.members in self._given_names:
                names[s] = self._given_names[s.members]
                continue
            if s.order == 1:
                names[s] = "e"
                continue
            if s.order == self.order:
                names[s] = self.name
                continue
            by_type.setdefault(self._iso_label(s), []).append(s)
        for label, subs in by_type.items():
            if len(subs) == 1:
                names[subs[0]] = label
            else:
                for i, s in enumerate(subs, 1):
                    names[s] = f"{label}_{i}"
        return names

    def _iso_label(self, s: Subgroup) -> str:
        n = s.order
        if any(self.element_order(g) == n for g in s):
            return f"C{n}"
        abelian = all(self.mul[a][b] == self.mul[b][a] for a in s for b in s)
        if n == 4 and abelian:
            return "C2xC2"
        if n == 6 and not abelian:
            return "S3"
        if n == 8 and not abelian:
            return "D8" if sum(1 for g in s if self.element_order(g) == 2) == 5 else "Q8"
        return f"H{n}"

    def subgroup_name(self, s: Subgroup) -> str:
        return self._names[s]

    def subgroup_by_name(self, name: str) -> Subgroup:
        """Resolve a subgroup label: a name, ``#i`` position, or ``{a,b,...}`` member list."""
        name = name.strip()
        if name.startswith("#"):
            return self.subgroups[int(name[1:])]
        if name.startswith("{") and name.endswith("}"):
            body = name[1:-1].strip()
            members = [int(x) for x in body.split(",")] if body else [0]
            return self.subgroup(members)
        for s, label in self._names.items():
            if label == name:
                return s
        if name in ("G", self.name):
            return self.whole
        raise GroupError(f"no subgroup named {name!r} in {self.name}")


# -- builtin groups ------------------------------------------------------


def cyclic(n: int) -> FiniteGroup:
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    points = [[(a + x) % n for x in range(n)] for a in range(n)]
    return FiniteGroup(mul, name=f"C{n}", points=points)


def symmetric3() -> FiniteGroup:
    perms = [(0, 1, 2), (1, 0, 2), (0, 2, 1), (2, 1, 0), (1, 2, 0), (2, 0, 1)]
    index = {p: i for i, p in enumerate(perms)}

    def compose(p, q):  # (p*q)(x) = p(q(x))
        return tuple(p[q[x]] for x in range(3))

    mul = [[index[compose(p, q)] for q in perms] for p in perms]
    names = {(0, 1): "C2_1", (0, 2): "C2_2", (0, 3): "C2_3"}
    return FiniteGroup(mul, name="S3", subgroup_names=names, points=perms)


def klein4() -> FiniteGroup:
    mul = [[a ^ b for b in range(4)] for a in range(4)]
    names = {(0, 1): "C2_1", (0, 2): "C2_2", (0, 3): "C2_3"}
    points = [[a ^ x for x in range(4)] for a in range(4)]
    return FiniteGroup(mul, name="C2xC2", subgroup_names=names, points=points)


BUILTIN_GROUPS = ("C1", "C2", "C3", "C4", "C5", "C6", "S3", "C2xC2")


def builtin_group(name: str) -> FiniteGroup:
    if name == "S3":
        return symmetric3()
    if name in ("C2xC2", "V4"):
        return klein4()
    if name.startswith("C") and name[1:].isdigit() and int(name[1:]) >= 1:
        return cyclic(int(name[1:]))
    raise GroupError(f"unknown builtin group {name!r}")
