"""Burnside rings ``A(H)`` of subgroups of a finite group.

``A(H)`` is the free abelian group on ``H``-conjugacy classes of subgroups of
``H``; the class of ``K`` stands for the ``H``-set ``H/K``.  Elements are
integer coefficient tuples in basis order (subgroup size, then member tuple).
Products come from decomposing ``H/K x H/L`` into orbits; restriction from
decomposing ``K/L`` as an ``H``-set.  Norms are computed through the table of
marks (``BurnsideFunctor.nm``); literal coinduction is available
as :func:`coinduce` for genuine ``H``-sets.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

from .groups import FiniteGroup, Subgroup


class BurnsideError(ValueError):
    pass


def coset_reps(group: FiniteGroup, h: Subgroup, k: Subgroup) -> tuple[int, ...]:
    return group.left_coset_reps(h, k)


def coset_action(group: FiniteGroup, h: Subgroup, k: Subgroup) -> tuple[tuple[int, ...], dict]:
    """``H/K`` as a permutation action of ``H``: ``(reps, {h: perm})``."""
    reps = coset_reps(group, h, k)
    where = {}
    for i, r in enumerate(reps):
        for x in group.left_coset(r, k):
            where[x] = i
    act = {g: tuple(where[group.mul[g][r]] for r in reps) for g in h}
    return reps, act


class BurnsideLevel:
    """The ring ``A(H)`` for a subgroup ``H`` of ``G``."""

    is_finite = False

    def __init__(self, group: FiniteGroup, h: Subgroup):
        self.group = group
        self.h = h
        self.basis = group.class_representatives(h)
        self.rank = len(self.basis)
        self._basis_index = {b: i for i, b in enumerate(self.basis)}
        self.name = f"A({h.name})"

    def __repr__(self) -> str:
        return f"BurnsideLevel({self.h.name}, rank={self.rank})"

    # -- basis bookkeeping ---------------------------------------------

    @lru_cache(maxsize=None)
    def class_index(self, k: Subgroup) -> int:
        """Basis position of the ``H``-conjugacy class of ``K <= H``."""
        return self._basis_index[self.group.class_rep(k, self.h)]

    def basis_vector(self, i: int, coeff: int = 1) -> tuple:
        v = [0] * self.rank
        v[i] = coeff
        return tuple(v)

    def decompose(self, act: dict, npoints: int) -> tuple:
        """Coordinates of a finite ``H``-set given as ``{h: permutation}``."""
        coords = [0] * self.rank
        seen: set = set()
        for x in range(npoints):
            if x in seen:
                continue
            orbit = {act[g][x] for g in self.h}
            seen |= orbit
            stab = self.group.subgroup(g for g in self.h if act[g][x] == x)
            coords[self.class_index(stab)] += 1
        return tuple(coords)

    # -- ring structure --------------------------------------------------

    @property
    def zero(self) -> tuple:
        return (0,) * self.rank

    @property
    def one(self) -> tuple:
        return self.basis_vector(self.rank - 1)

    @cached_property
    def structure_constants(self) -> tuple:
        """``c[i][j]`` = coordinates of ``H/K_i x H/K_j``."""
        table = []
        actions = [coset_action(self.group, self.h, k) for k in self.basis]
        for (ri, ai) in actions:
            row = []
            for (rj, aj) in actions:
                pairs = list(itertools.product(range(len(ri)), range(len(rj))))
                index = {p: n for n, p in enumerate(pairs)}
                act = {g: tuple(index[(ai[g][a], aj[g][b])] for a, b in pairs) for g in self.h}
                row.append(self.decompose(act, len(pairs)))
            table.append(tuple(row))
        return tuple(table)

    def add(self, a, b) -> tuple:
        return tuple(x + y for x, y in zip(a, b))

    def neg(self, a) -> tuple:
        return tuple(-x for x in a)

    def sub(self, a, b) -> tuple:
        return tuple(x - y for x, y in zip(a, b))

    def mul(self, a, b) -> tuple:
        out = [0] * self.rank
        c = self.structure_constants
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if not y:
                    continue
                for k, v in enumerate(c[i][j]):
                    out[k] += x * y * v
        return tuple(out)

    def times(self, n: int, a) -> tuple:
        return tuple(n * x for x in a)

    def eq(self, a, b) -> bool:
        return tuple(a) == tuple(b)

    def is_zero(self, a) -> bool:
        return not any(a)

    def is_zero_ring(self) -> bool:
        return False

    def sum(self, xs: Iterable) -> tuple:
        out = self.zero
        for x in xs:
            out = self.add(out, x)
        return out

    def prod(self, xs: Iterable) -> tuple:
        out = self.one
        for x in xs:
            out = self.mul(out, x)
        return out

    def power(self, a, n: int) -> tuple:
        out = self.one
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def __contains__(self, a) -> bool:
        return isinstance(a, tuple) and len(a) == self.rank and all(isinstance(x, int) for x in a)

    def is_nilpotent(self, a) -> bool:
        # the mark homomorphism embeds A(H) in a product of copies of Z
        return self.is_zero(a)

    def nilpotency_index(self, a):
        return 1 if self.is_zero(a) else None

    def cardinality(self, a) -> int:
        """Underlying-set size (the mark at the trivial subgroup)."""
        return sum(x * (self.h.order // k.order) for x, k in zip(a, self.basis))

    # -- marks -----------------------------------------------------------

    @lru_cache(maxsize=None)
    def marks_of_basis(self, m: Subgroup) -> tuple:
        """``|(H/K_j)^M|`` for each basis ``K_j`` and a subgroup ``M <= H``."""
        out = []
        for k in self.basis:
            reps = coset_reps(self.group, self.h, k)
            fixed = 0
            for r in reps:
                coset = self.group.left_coset(r, k)
                if all(self.group.mul[g][r] in coset for g in m):
                    fixed += 1
            out.append(fixed)
        return tuple(out)

    def mark(self, m: Subgroup, a) -> int:
        return sum(x * y for x, y in zip(self.marks_of_basis(m), a))

    def marks(self, a) -> tuple:
        return tuple(self.mark(k, a) for k in self.basis)

    def from_marks(self, phi: Sequence[int]) -> tuple:
        """Invert the table of marks (triangular in basis order)."""
        n = self.rank
        table = [self.marks_of_basis(k) for k in self.basis]
        x = [Fraction(0)] * n
        for j in reversed(range(n)):
            acc = Fraction(phi[j]) - sum(table[j][jj] * x[jj] for jj in range(j + 1, n))
            x[j] = acc / table[j][j]
        if any(v.denominator != 1 for v in x):
            raise BurnsideError(f"mark vector {tuple(phi)} is not in the image of A({self.h.name})")
        return tuple(int(v) for v in x)

    # -- naming ----------------------------------------------------------

    def basis_name(self, i: int) -> str:
        return f"[{self.h.name}/{self.basis[i].name}]"

    def element_name(self, a) -> str:
        terms = []
        for i, x in enumerate(a):
            if not x:
                continue
            name = "1" if i == self.rank - 1 else self.basis_name(i)
            if name == "1":
                terms.append(f"{x}")
            elif x == 1:
                terms.append(name)
            elif x == -1:
                terms.append(f"-{name}")
            else:
                terms.append(f"{x}*{name}")
        if not terms:
            return "0"
        return "+".join(terms).replace("+-", "-")

    def symbol_table(self) -> dict:
        """Names usable in element literals: ``[H/K]``, ``1``, and ``t`` for ``[H/e]``."""
        table = {}
        for i, k in enumerate(self.basis):
            table[self.basis_name(i)] = self.basis_vector(i)
            table[f"[{k.name}]"] = self.basis_vector(i)
        table["1"] = self.one
        if self.h.order > 1:
            table["t"] = self.basis_vector(0)
        return table

    def window(self, bound: int) -> Iterable[tuple]:
        """All elements with every coefficient in ``[-bound, bound]``."""
        return itertools.product(range(-bound, bound + 1), repeat=self.rank)


def coinduce(group: FiniteGroup, k: Subgroup, h: Subgroup, act: dict, npoints: int) -> tuple[list, dict]:
    """Literal coinduction ``Map_H(K, X)`` of an ``H``-set ``X``.

    ``act`` maps each ``h`` in ``H`` to a permutation of ``range(npoints)``.
    Returns ``(points, {k: permutation})`` where a point is the tuple of values
    on the right-coset representatives of ``H`` in ``K`` and
    ``(k . phi)(x) = phi(x k)``.
    """
    mul = group.mul
    # right cosets H x of K
    reps = []
    seen: set = set()
    for x in k:
        if x in seen:
            continue
        coset = frozenset(mul[y][x] for y in h)
        seen |= coset
        reps.append(min(coset))
    which = {}
    for i, r in enumerate(reps):
        for y in h:
            which[mul[y][r]] = (i, y)
    points = list(itertools.product(range(npoints), repeat=len(reps)))
    index = {p: n for n, p in enumerate(points)}

    def moved(g: int, phi: tuple) -> tuple:
        out = []
        for r in reps:
            i, y = which[mul[r][g]]
            out.append(act[y][phi[i]])
        return tuple(out)

    kact = {g: tuple(index[moved(g, p)] for p in points) for g in k}
    return points, kact
