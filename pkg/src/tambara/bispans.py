"""Bispans ``X <- A -> B -> Y`` and their composition by rewriting.

A bispan is stored as its three legs.  Composition concatenates the generator
words ``T o N o R`` of both operands and rewrites adjacent pairs until the
word is back in ``T o N o R`` normal form:

* same kind: ``T_f T_g = T_(fg)``, ``N_f N_g = N_(fg)``, ``R_g R_f = R_(fg)``
* ``R_f T_g = T_(f') R_(g')`` and ``R_f N_g = N_(f') R_(g')`` over the pullback
* ``N_f T_g = T_(Pi_f g) N_(f') R_(eps)`` from the exponential diagram
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .gsets import (
    GMap,
    GSet,
    GSetError,
    exponential_diagram,
    identity,
    pullback,
)


class BispanError(ValueError):
    pass


KINDS = ("T", "N", "R")
_RANK = {"T": 0, "N": 1, "R": 2}


@dataclass(frozen=True)
class Generator:
    kind: str
    map: GMap

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BispanError(f"unknown generator kind {self.kind!r}")

    @property
    def source(self) -> GSet:
        """Domain in the polynomial category (``R_f`` runs backwards along ``f``)."""
        return self.map.target if self.kind == "R" else self.map.source

    @property
    def target(self) -> GSet:
        return self.map.source if self.kind == "R" else self.map.target

    def is_identity(self) -> bool:
        m = self.map
        return m.source == m.target and m.table == tuple(range(m.source.size))


@dataclass(frozen=True)
class Bispan:
    """``X <-left- A -middle-> B -right-> Y``, a morphism ``X -> Y``."""
    left: GMap
    middle: GMap
    right: GMap

    def __post_init__(self):
        if self.left.source != self.middle.source or self.middle.target != self.right.source:
            raise BispanError("legs are not composable as X <- A -> B -> Y")

    @property
    def source(self) -> GSet:
        return self.left.target

    @property
    def target(self) -> GSet:
        return self.right.target

    @property
    def apex(self) -> tuple[GSet, GSet]:
        return self.left.source, self.middle.target

    def generators(self) -> list[Generator]:
        """Word ``[T_right, N_middle, R_left]`` (leftmost acts last)."""
        return [Generator("T", self.right), Generator("N", self.middle), Generator("R", self.left)]

    @cached_property
    def fibers(self) -> tuple:
        """Points of ``A`` over each point of ``B``."""
        out = [[] for _ in range(self.middle.target.size)]
        for a, b in enumerate(self.middle.table):
            out[b].append(a)
        return tuple(tuple(f) for f in out)

    def point_signature(self, b: int) -> tuple:
        """Data attached to ``b`` in ``B``: right image, stabilizer, and the fiber over it."""
        A = self.left.source
        B = self.middle.target
        above = sorted((self.left.table[a], A.stabilizers[a].sort_key) for a in self.fibers[b])
        return (self.right.table[b], B.stabilizers[b].sort_key, tuple(above))

    def orbit_signatures(self) -> list[tuple[tuple, int]]:
        """``(signature, base)`` per ``B``-orbit, the base minimizing the signature."""
        B = self.middle.target
        out = []
        for orb in B.orbits:
            out.append(min((self.point_signature(b), b) for b in orb))
        return out

    def canonical_key(self) -> tuple:
        """Complete isomorphism invariant (for fixed source and target)."""
        A, B = self.left.source, self.middle.target
        return (A.size, B.size, tuple(sorted(sig for sig, _ in self.orbit_signatures())))

    def __repr__(self) -> str:
        A, B = self.left.source, self.middle.target
        return (f"Bispan({self.source.size} <- {A.size} -> {B.size} -> {self.target.size}: "
                f"{list(self.left.table)}, {list(self.middle.table)}, {list(self.right.table)})")


def from_generator(kind: str, f: GMap) -> Bispan:
    """``T_f``, ``N_f`` or ``R_f`` as a bispan."""
    if kind == "T":
        ix = identity(f.source)
        return Bispan(ix, ix, f)
    if kind == "N":
        return Bispan(identity(f.source), f, identity(f.target))
    if kind == "R":
        ix = identity(f.source)
        return Bispan(f, ix, ix)
    raise BispanError(f"unknown generator kind {kind!r}")


def identity_bispan(x: GSet) -> Bispan:
    return from_generator("T", identity(x))


def tnr_factorization(b: Bispan) -> tuple[GMap, GMap, GMap]:
    """``(R-leg, N-leg, T-leg)`` with ``b = T_t o N_n o R_r``."""
    return b.left, b.middle, b.right


# -- rewriting -------------------------------------------------------------


def _rewrite_pair(left: Generator, right: Generator) -> list[Generator] | None:
    """Rewrite ``left o right`` or return ``None`` if the pair is already ordered."""
    a, b = left.kind, right.kind
    if a == b:
        if a == "R":
            return [Generator("R", left.map.then(right.map))]
        return [Generator(a, right.map.then(left.map))]
    if a == "R" and b in ("T", "N"):
        # left.map: X -> Y, right.map: X' -> Y, pullback P = X x_Y X'
        _, p_x, p_xprime = pullback(left.map, right.map)
        return [Generator(b, p_x), Generator("R", p_xprime)]
    if a == "N" and b == "T":
        # left.map = f: Y -> Z, right.map = g: X -> Y
        d = exponential_diagram(left.map, right.map)
        return [Generator("T", d.pi), Generator("N", d.f_prime), Generator("R", d.counit)]
    return None


def normalize(word: list[Generator]) -> list[Generator]:
    """Rewrite a generator word to ``T* N* R*`` with same-kind runs fused.

    Identity generators are dropped along the way; the result is empty when the
    word composes to an identity in normal form.
    """
    word = [g for g in word if not g.is_identity()]
    while True:
        for i in range(len(word) - 1):
            l, r = word[i], word[i + 1]
            if l.kind == r.kind or _RANK[l.kind] > _RANK[r.kind]:
                new = _rewrite_pair(l, r)
                word = word[:i] + [g for g in new if not g.is_identity()] + word[i + 2:]
                break
        else:
            return word


def bispan_of_word(word: list[Generator], source: GSet) -> Bispan:
    """Assemble a normalized word (``T? N? R?``) into a bispan out of ``source``."""
    found = {g.kind: g.map for g in word}
    if len(found) != len(word):
        raise BispanError("word is not normalized")
    r = found.get("R", identity(source))
    n = found.get("N", identity(r.source))
    t = found.get("T", identity(n.target))
    return Bispan(r, n, t)


def compose(b2: Bispan, b1: Bispan) -> Bispan:
    """``b2 o b1`` in ``T o N o R`` normal form."""
    if b1.target != b2.source:
        raise BispanError("bispans are not composable")
    word = normalize(b2.generators() + b1.generators())
    return bispan_of_word(word, b1.source)


def compose_word(word: list[Generator]) -> Bispan:
    if not word:
        raise BispanError("empty word")
    return bispan_of_word(normalize(list(word)), word[-1].source)


# -- isomorphism -----------------------------------------------------------


def _extend(src: GSet, base: int, image: int, dst: GSet, table: list) -> None:
    for g in src.group.elements:
        table[src.act[g][base]] = dst.act[g][image]


def find_isomorphism(b: Bispan, c: Bispan) -> tuple[GMap, GMap] | None:
    """An iso pair ``(alpha: A -> A', beta: B -> B')`` making the legs commute.

    ``B``-orbits are paired by signature (base points chosen canonically);
    the fibers over paired bases are then matched ``Stab(b)``-orbit by orbit.
    """
    if b.source != c.source or b.target != c.target:
        return None
    if b.canonical_key() != c.canonical_key():
        return None
    A, B = b.left.source, b.middle.target
    A2, B2 = c.left.source, c.middle.target
    beta = [None] * B.size
    alpha = [None] * A.size
    pending = {}
    for sig, base in c.orbit_signatures():
        pending.setdefault(sig, []).append(base)
    for sig, base in b.orbit_signatures():
        base2 = pending[sig].pop()
        _extend(B, base, base2, B2, beta)
        k = B.stabilizers[base]
        fiber = list(b.fibers[base])
        fiber2 = list(c.fibers[base2])
        free = {}
        for sub in A2.restricted_orbits(fiber2, k):
            for a2 in sub:
                key = (c.left.table[a2], A2.stabilizers[a2])
                free.setdefault(key, []).append(tuple(sub))
        used: set = set()
        for sub in A.restricted_orbits(fiber, k):
            a = sub[0]
            key = (b.left.table[a], A.stabilizers[a])
            choice = next((o for o in free.get(key, ()) if o not in used), None)
            if choice is None:
                return None
            used.add(choice)
            target = next(a2 for a2 in choice if (c.left.table[a2], A2.stabilizers[a2]) == key)
            _extend(A, a, target, A2, alpha)
    if None in alpha or None in beta:
        return None
    al, be = GMap(A, A2, tuple(alpha)), GMap(B, B2, tuple(beta))
    commutes = (all(c.left.table[al.table[a]] == b.left.table[a] for a in A.points)
                and all(c.middle.table[al.table[a]] == be.table[b.middle.table[a]] for a in A.points)
                and all(c.right.table[be.table[x]] == b.right.table[x] for x in B.points))
    if not (commutes and al.is_bijective() and be.is_bijective()):
        return None
    return al, be


def is_isomorphic(b: Bispan, c: Bispan) -> bool:
    return find_isomorphism(b, c) is not None


# -- serialization -----------------------------------------------------------


def gset_to_json(x: GSet) -> list:
    return [list(row) for row in x.act]


def gset_from_json(group, act) -> GSet:
    if not act:
        raise GSetError("G-set table needs one row per group element")
    return GSet(group, act)


def bispan_to_json(b: Bispan) -> dict:
    return {
        "sets": {
            "X": gset_to_json(b.source),
            "A": gset_to_json(b.left.source),
            "B": gset_to_json(b.middle.target),
            "Y": gset_to_json(b.target),
        },
        "left": list(b.left.table),
        "middle": list(b.middle.table),
        "right": list(b.right.table),
    }


def bispan_from_json(group, data: dict) -> Bispan:
    sets = {k: gset_from_json(group, v) for k, v in data["sets"].items()}
    left = GMap(sets["A"], sets["X"], tuple(data["left"])).check()
    middle = GMap(sets["A"], sets["B"], tuple(data["middle"])).check()
    right = GMap(sets["B"], sets["Y"], tuple(data["right"])).check()
    return Bispan(left, middle, right)
