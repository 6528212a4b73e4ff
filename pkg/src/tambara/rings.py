"""Finite commutative rings given by tables.

Elements are integer labels.  A :class:`FiniteRing` keeps its parent's full
add/mul tables plus the subset of labels it owns, so subrings (fixed points)
share tables with the ambient ring, and quotients canonicalize through a
``reduce`` table.
"""

from __future__ import annotations

import itertools
from functools import cached_property, reduce as _fold
from typing import Iterable, Sequence


class RingError(ValueError):
    pass


class FiniteRing:
    is_finite = True

    def __init__(self, add: Sequence[Sequence[int]], mul: Sequence[Sequence[int]], zero: int, one: int,
                 elements: Iterable[int] | None = None, names: Sequence[str] | None = None,
                 reduce: Sequence[int] | None = None, name: str = "R"):
        self._add = tuple(tuple(r) for r in add)
        self._mul = tuple(tuple(r) for r in mul)
        size = len(self._add)
        self._reduce = tuple(reduce) if reduce is not None else None
        self.elements = tuple(sorted(set(elements))) if elements is not None else tuple(range(size))
        self._elset = frozenset(self.elements)
        self.zero = self._red(zero)
        self.one = self._red(one)
        self.names = tuple(names) if names is not None else None
        self.name = name

    def _red(self, x: int) -> int:
        return self._reduce[x] if self._reduce is not None else x

    def __repr__(self) -> str:
        return f"FiniteRing({self.name}, {len(self)} elements)"

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._elset

    @property
    def size(self) -> int:
        return len(self.elements)

    def add(self, a: int, b: int) -> int:
        return self._red(self._add[a][b])

    def mul(self, a: int, b: int) -> int:
        return self._red(self._mul[a][b])

    @cached_property
    def _neg(self) -> dict:
        return {a: next(b for b in self.elements if self.add(a, b) == self.zero) for a in self.elements}

    def neg(self, a: int) -> int:
        return self._neg[a]

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def eq(self, a: int, b: int) -> bool:
        return a == b

    def is_zero(self, a: int) -> bool:
        return a == self.zero

    def sum(self, xs: Iterable[int]) -> int:
        return _fold(self.add, xs, self.zero)

    def prod(self, xs: Iterable[int]) -> int:
        return _fold(self.mul, xs, self.one)

    def power(self, a: int, n: int) -> int:
        out = self.one
        for _ in range(n):
            out = self.mul(out, a)
        return out

    def times(self, n: int, a: int) -> int:
        """``n * a`` for an integer ``n``."""
        out = self.zero
        for _ in range(abs(n)):
            out = self.add(out, a)
        return self.neg(out) if n < 0 else out

    def element_name(self, a: int) -> str:
        if self.names is not None:
            return self.names[a]
        return str(a)

    def parse_element(self, text: str) -> int:
        text = text.strip()
        if self.names is not None and text in self.names:
            x = self.names.index(text)
            return self._red(x)
        try:
            x = int(text)
        except ValueError:
            raise RingError(f"cannot parse ring element {text!r}") from None
        x = self._red(x)
        if x not in self:
            raise RingError(f"{text!r} is not an element of {self.name}")
        return x

    # -- structure -------------------------------------------------------

    def check_axioms(self) -> list[str]:
        """Exhaustive commutative ring axiom check; returns violated axiom names."""
        els = self.elements
        bad = []
        if any(self.add(a, b) not in self or self.mul(a, b) not in self for a in els for b in els):
            bad.append("closure")
        if any(self.add(a, b) != self.add(b, a) for a in els for b in els):
            bad.append("additive commutativity")
        if any(self.mul(a, b) != self.mul(b, a) for a in els for b in els):
            bad.append("multiplicative commutativity")
        if any(self.add(self.zero, a) != a for a in els):
            bad.append("additive identity")
        if any(self.mul(self.one, a) != a for a in els):
            bad.append("multiplicative identity")
        if any(not any(self.add(a, b) == self.zero for b in els) for a in els):
            bad.append("additive inverses")
        for a, b, c in itertools.product(els, repeat=3):
            if self.add(self.add(a, b), c) != self.add(a, self.add(b, c)):
                bad.append("additive associativity")
                break
        for a, b, c in itertools.product(els, repeat=3):
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)):
                bad.append("multiplicative associativity")
                break
        for a, b, c in itertools.product(els, repeat=3):
            if self.mul(a, self.add(b, c)) != self.add(self.mul(a, b), self.mul(a, c)):
                bad.append("distributivity")
                break
        return bad

    def is_zero_ring(self) -> bool:
        return self.zero == self.one

    def subring(self, elements: Iterable[int], name: str | None = None) -> "FiniteRing":
        sub = FiniteRing(self._add, self._mul, self.zero, self.one, elements, self.names, self._reduce,
                         name or f"sub({self.name})")
        if self.zero not in sub or self.one not in sub:
            raise RingError("subring must contain 0 and 1")
        return sub

    def quotient(self, ideal: Iterable[int], name: str | None = None) -> "FiniteRing":
        """``R / I``; each coset is represented by its least label."""
        ideal = frozenset(ideal)
        if not self.is_ideal(ideal):
            raise RingError("not an ideal")
        red = list(self._reduce) if self._reduce is not None else list(range(len(self._add)))
        rep = {}
        for a in self.elements:
            coset = {self.add(a, i) for i in ideal}
            rep[a] = min(coset)
        for x in range(len(red)):
            if red[x] in rep:
                red[x] = rep[red[x]]
        return FiniteRing(self._add, self._mul, self.zero, self.one, set(rep.values()), self.names, red,
                          name or f"{self.name}/I")

    def representative_map(self, quotient: "FiniteRing") -> dict:
        return {a: quotient._red(a) for a in self.elements}

    def is_ideal(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        if self.zero not in s or not s <= self._elset:
            return False
        return (all(self.sub(a, b) in s for a in s for b in s)
                and all(self.mul(r, a) in s for r in self.elements for a in s))

    def ideal_generated(self, gens: Iterable[int]) -> frozenset:
        """Smallest ideal containing ``gens``: additive closure of all ``r * g``."""
        seeds = {self.mul(r, g) for g in gens for r in self.elements}
        out = {self.zero}
        frontier = list(seeds - out)
        out |= seeds
        while frontier:
            a = frontier.pop()
            for b in list(out):
                c = self.add(a, b)
                if c not in out:
                    out.add(c)
                    frontier.append(c)
        return frozenset(out)

    @cached_property
    def ideals(self) -> tuple[frozenset, ...]:
        """All ideals, sorted by (size, members)."""
        principal = {self.ideal_generated([a]) for a in self.elements}
        found = set(principal)
        frontier = list(principal)
        while frontier:
            i = frontier.pop()
            for p in principal:
                s = self.ideal_generated(i | p)
                if s not in found:
                    found.add(s)
                    frontier.append(s)
        return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))

    def is_nilpotent(self, a: int) -> bool:
        return self.nilpotency_index(a) is not None

    def nilpotency_index(self, a: int) -> int | None:
        """Least ``n >= 1`` with ``a^n = 0``, or ``None``."""
        x = a
        for n in range(1, len(self) + 2):
            if x == self.zero:
                return n
            x = self.mul(x, a)
        return None

    @cached_property
    def nilradical(self) -> frozenset:
        return frozenset(a for a in self.elements if self.is_nilpotent(a))

    def radical(self, ideal: Iterable[int]) -> frozenset:
        ideal = frozenset(ideal)
        out = set()
        for a in self.elements:
            x = a
            for _ in range(len(self) + 1):
                if x in ideal:
                    out.add(a)
                    break
                x = self.mul(x, a)
        return frozenset(out)

    def is_automorphism(self, perm: dict) -> bool:
        els = self.elements
        if sorted(perm[a] for a in els) != list(els):
            return False
        return (perm[self.one] == self.one
                and all(perm[self.add(a, b)] == self.add(perm[a], perm[b]) for a in els for b in els)
                and all(perm[self.mul(a, b)] == self.mul(perm[a], perm[b]) for a in els for b in els))

    def table_dict(self) -> dict:
        """Re-indexed tables over positions ``0..n-1`` (for serialization)."""
        pos = {a: i for i, a in enumerate(self.elements)}
        return {
            "add": [[pos[self.add(a, b)] for b in self.elements] for a in self.elements],
            "mul": [[pos[self.mul(a, b)] for b in self.elements] for a in self.elements],
            "zero": pos[self.zero],
            "one": pos[self.one],
            "names": [self.element_name(a) for a in self.elements],
        }


# -- builtin rings -------------------------------------------------------


def zmod(n: int) -> FiniteRing:
    if n < 1:
        raise RingError("modulus must be positive")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return FiniteRing(add, mul, 0, 1 % n, name=f"Z/{n}")


def gf4() -> FiniteRing:
    """``F_2[w]/(w^2 + w + 1)``; label ``a + 2b`` stands for ``a + b w``."""
    def mul(x, y):
        a, b = x & 1, x >> 1
        c, d = y & 1, y >> 1
        # (a + b w)(c + d w) = ac + (ad + bc) w + bd w^2,  w^2 = w + 1
        lo = (a * c + b * d) % 2
        hi = (a * d + b * c + b * d) % 2
        return lo + 2 * hi

    add = [[x ^ y for y in range(4)] for x in range(4)]
    mult = [[mul(x, y) for y in range(4)] for x in range(4)]
    return FiniteRing(add, mult, 0, 1, names=["0", "1", "w", "w+1"], name="F4")


def product(*rings: FiniteRing) -> FiniteRing:
    """Direct product; label is the mixed-radix index of the component tuple."""
    tuples = list(itertools.product(*[r.elements for r in rings]))
    index = {t: i for i, t in enumerate(tuples)}
    add = [[index[tuple(r.add(x, y) for r, x, y in zip(rings, s, t))] for t in tuples] for s in tuples]
    mul = [[index[tuple(r.mul(x, y) for r, x, y in zip(rings, s, t))] for t in tuples] for s in tuples]
    names = ["(" + ",".join(r.element_name(x) for r, x in zip(rings, t)) + ")" for t in tuples]
    zero = index[tuple(r.zero for r in rings)]
    one = index[tuple(r.one for r in rings)]
    return FiniteRing(add, mul, zero, one, names=names, name="x".join(r.name for r in rings))


def builtin_ring(name: str) -> FiniteRing:
    """``Z/n``, ``F2``, ``F4``, products ``AxB`` and powers ``A^k``."""
    name = name.strip()
    if "x" in name:
        parts = name.split("x")
        return product(*[builtin_ring(p) for p in parts])
    if "^" in name:
        base, k = name.split("^")
        return product(*[builtin_ring(base)] * int(k))
    if name.startswith("Z/"):
        return zmod(int(name[2:]))
    if name == "F2":
        r = zmod(2)
        r.name = "F2"
        return r
    if name == "F4":
        return gf4()
    raise RingError(f"unknown builtin ring {name!r}")
