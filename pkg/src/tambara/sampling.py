"""Seeded random G-sets, equivariant maps and bispans for property tests."""

from __future__ import annotations

import random

from .bispans import Bispan
from .groups import FiniteGroup, Subgroup
from .gsets import GMap, GSet, disjoint_union


def _extend(X: GSet, base: int, Y: GSet, image: int, table: list) -> None:
    for g in X.group.elements:
        table[X.act[g][base]] = Y.act[g][image]


def relabel(X: GSet, rng: random.Random) -> tuple[GSet, GMap]:
    """An isomorphic copy with shuffled points, and the iso ``X -> copy``."""
    perm = list(X.points)
    rng.shuffle(perm)
    act = [[0] * X.size for _ in X.group.elements]
    for g in X.group.elements:
        for x in X.points:
            act[g][perm[x]] = perm[X.act[g][x]]
    Y = GSet(X.group, act)
    return Y, GMap(X, Y, tuple(perm))


def _subgroups_of(G: FiniteGroup, h: Subgroup) -> list[Subgroup]:
    return [k for k in G.subgroups if k <= h]


def _supergroups_of(G: FiniteGroup, h: Subgroup) -> list[Subgroup]:
    return [k for k in G.subgroups if h <= k]


def random_gset(G: FiniteGroup, rng: random.Random, max_points: int = 5, min_points: int = 1) -> GSet:
    """A disjoint union of random orbits with between ``min_points`` and ``max_points`` points."""
    while True:
        parts = []
        size = 0
        for _ in range(rng.randint(1, 3)):
            options = [h for h in G.subgroups if size + G.order // h.order <= max_points]
            if not options:
                break
            h = rng.choice(options)
            parts.append(GSet.orbit(G, h))
            size += G.order // h.order
        if parts and size >= min_points:
            X, _ = disjoint_union(*parts)
            return relabel(X, rng)[0]


def random_over(X: GSet, rng: random.Random, max_points: int = 5) -> tuple[GSet, GMap]:
    """A random G-set ``A`` with a map ``A -> X``; ``A`` may be empty."""
    G = X.group
    parts, images = [], []
    size = 0
    for _ in range(rng.randint(0, 3)):
        x = rng.choice(list(X.points)) if X.size else None
        if x is None:
            break
        options = [k for k in _subgroups_of(G, X.stabilizers[x]) if size + G.order // k.order <= max_points]
        if not options:
            break
        k = rng.choice(options)
        parts.append(GSet.orbit(G, k))
        images.append(x)
        size += G.order // k.order
    if not parts:
        return GSet.empty(G), GMap(GSet.empty(G), X, ())
    A, incl = disjoint_union(*parts)
    table = [None] * A.size
    for inc, x in zip(incl, images):
        _extend(A, inc.table[0], X, x, table)
    A2, iso = relabel(A, rng)
    inv = iso.inverse()
    return A2, GMap(A2, X, tuple(table[inv.table[a]] for a in A2.points)).check()


def random_map_from(X: GSet, rng: random.Random, max_points: int = 5, extra: bool = True) -> tuple[GSet, GMap]:
    """A random G-set ``Y`` with a map ``X -> Y`` (orbits merged or pushed to larger stabilizers)."""
    G = X.group
    parts: list[GSet] = []
    # images are (part index, point in part)
    assigned = []
    size = 0
    for orb in X.orbits:
        x = orb[0]
        h = X.stabilizers[x]
        reuse = [(i, p) for i, part in enumerate(parts) for p in part.points if h <= part.stabilizers[p]]
        fresh = [l for l in _supergroups_of(G, h) if size + G.order // l.order <= max_points]
        if reuse and (not fresh or rng.random() < 0.4):
            assigned.append(rng.choice(reuse))
            continue
        if not fresh:
            fresh = [G.whole]
        l = rng.choice(fresh)
        parts.append(GSet.orbit(G, l))
        size += G.order // l.order
        # the base point eL is fixed by L >= H
        assigned.append((len(parts) - 1, 0))
    if extra and rng.random() < 0.3:
        options = [l for l in G.subgroups if size + G.order // l.order <= max_points]
        if options:
            l = rng.choice(options)
            parts.append(GSet.orbit(G, l))
            size += G.order // l.order
    if not parts:
        return GSet.empty(G), GMap(X, GSet.empty(G), ())
    Y, incl = disjoint_union(*parts)
    table = [None] * X.size
    for orb, (i, p) in zip(X.orbits, assigned):
        _extend(X, orb[0], Y, incl[i].table[p], table)
    Y2, iso = relabel(Y, rng)
    return Y2, GMap(X, Y2, tuple(iso.table[y] for y in table)).check()


def random_bispan(X: GSet, rng: random.Random, max_points: int = 5) -> Bispan:
    A, left = random_over(X, rng, max_points)
    B, middle = random_map_from(A, rng, max_points)
    _, right = random_map_from(B, rng, max_points)
    return Bispan(left, middle, right)


def random_composable_pair(G: FiniteGroup, rng: random.Random, max_points: int = 5) -> tuple[Bispan, Bispan]:
    """``(b1, b2)`` with ``b2 o b1`` defined."""
    X = random_gset(G, rng, max_points)
    b1 = random_bispan(X, rng, max_points)
    b2 = random_bispan(b1.target, rng, max_points)
    return b1, b2


def random_composable_triple(G: FiniteGroup, rng: random.Random, max_points: int = 5):
    b1, b2 = random_composable_pair(G, rng, max_points)
    b3 = random_bispan(b2.target, rng, max_points)
    return b1, b2, b3
