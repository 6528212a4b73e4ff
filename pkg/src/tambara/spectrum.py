"""Prime spectra of finite Tambara functors, their topology, and kilpotence."""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .burnside import BurnsideLevel
from .functors import Element, FixedPointFunctor, FunctorError, TambaraFunctor
from .groups import FiniteGroup, Subgroup
from .ideals import (
    TambaraIdeal,
    enumerate_ideals,
    generalized_products,
    ideal_intersection,
    is_prime,
    nilradical_levelwise,
)
from .lattice import kernel_basis


class SpectrumError(ValueError):
    pass


# -- the space ----------------------------------------------------------------


@dataclass
class SpectrumSpace:
    """Finite set of primes with the topology whose closed sets are ``V(I)``.

    ``points`` may be any list of ideals (duplicates allowed for fault
    injection); ``closed_sets`` is filled from the ideals of the functor.
    """

    functor: TambaraFunctor
    points: list
    closed_sets: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.points)

    def leq(self, i: int, j: int) -> bool:
        """``p_i`` specializes to ``p_j`` (``p_i <= p_j``, so ``p_j`` is in the closure of ``p_i``)."""
        return self.points[i] <= self.points[j]

    def closure(self, i: int) -> frozenset:
        return frozenset(j for j in range(self.n) if self.leq(i, j))

    def specialization_edges(self) -> list[tuple[int, int]]:
        """Covering relations ``i < j`` of the inclusion order."""
        edges = []
        for i in range(self.n):
            for j in range(self.n):
                if i == j or not self.points[i] < self.points[j]:
                    continue
                if not any(self.points[i] < self.points[k] < self.points[j] for k in range(self.n)):
                    edges.append((i, j))
        return edges

    def v_closed(self, ideal) -> frozenset:
        return frozenset(i for i, p in enumerate(self.points) if ideal <= p)

    def d_open(self, f: Element) -> frozenset:
        return frozenset(i for i, p in enumerate(self.points) if f not in p)


def enumerate_primes(T: TambaraFunctor, jobs: int = 1) -> list[TambaraIdeal]:
    """Every prime ideal, in the canonical ideal order."""
    ideals = enumerate_ideals(T)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            flags = list(pool.map(lambda I: is_prime(T, I)[0], ideals))
    else:
        flags = [is_prime(T, I)[0] for I in ideals]
    return [I for I, ok in zip(ideals, flags) if ok]


def spectrum(T: TambaraFunctor, jobs: int = 1) -> SpectrumSpace:
    primes = enumerate_primes(T, jobs)
    space = SpectrumSpace(T, primes)
    space.closed_sets = sorted({space.v_closed(I) for I in enumerate_ideals(T)}, key=lambda s: (len(s), sorted(s)))
    return space


def nil_via_primes(T: TambaraFunctor) -> TambaraIdeal:
    return ideal_intersection(enumerate_primes(T), T)


def primes_containing(T: TambaraFunctor, ideal) -> list[TambaraIdeal]:
    return [P for P in enumerate_primes(T) if ideal <= P]


def radical_via_primes(T: TambaraFunctor, ideal) -> TambaraIdeal:
    return ideal_intersection(primes_containing(T, ideal), T)


def v_closed(T: TambaraFunctor, ideal) -> frozenset:
    return spectrum(T).v_closed(ideal)


def d_open(T: TambaraFunctor, f: Element) -> frozenset:
    return spectrum(T).d_open(f)


def d_intersection_decomposition(T: TambaraFunctor, e: Element, f: Element) -> list[Element]:
    """Generalized products ``z`` of ``e`` and ``f``; ``D(e) & D(f)`` is the union of the ``D(z)``."""
    return generalized_products(T, e, f)


def check_d_intersection(space: SpectrumSpace, e: Element, f: Element) -> bool:
    zs = d_intersection_decomposition(space.functor, e, f)
    lhs = space.d_open(e) & space.d_open(f)
    rhs = frozenset().union(*(space.d_open(z) for z in zs)) if zs else frozenset()
    return lhs == rhs


# -- spectrality ---------------------------------------------------------------


@dataclass
class SpectralReport:
    points: int
    t0: bool
    topology: bool
    sober: bool
    basis: bool
    quasi_compact: bool
    intersections: bool
    violations: list

    @property
    def spectral(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        return {"points": self.points, "t0": self.t0, "topology": self.topology, "sober": self.sober,
                "basis": self.basis, "quasi_compact_basic_opens": self.quasi_compact,
                "quasi_compact_intersections": self.intersections, "spectral": self.spectral,
                "finite_t0_shortcut": self.t0, "violations": list(self.violations)}


def _closed_family(space: SpectrumSpace) -> list[frozenset]:
    if space.closed_sets:
        return list(space.closed_sets)
    return sorted({space.v_closed(I) for I in enumerate_ideals(space.functor)}, key=lambda s: (len(s), sorted(s)))


def _basic_opens(space: SpectrumSpace) -> dict:
    T = space.functor
    return {el: space.d_open(el) for el in T.all_elements()}


def check_spectral(space: SpectrumSpace) -> SpectralReport:
    """Direct checks of T0, soberness and the quasi-compact open basis on a finite space."""
    bad = []
    n = space.n
    everything = frozenset(range(n))
    closed = set(_closed_family(space))

    # closed sets form a topology
    topology = everything in closed and frozenset() in closed
    for a, b in itertools.combinations(closed, 2):
        if a | b not in closed or a & b not in closed:
            topology = False
            bad.append("closed sets not stable under union/intersection")
            break
    if not (everything in closed and frozenset() in closed):
        bad.append("empty set or whole space not closed")

    def closure_of(points: frozenset) -> frozenset:
        return frozenset(everything.intersection(*[c for c in closed if points <= c]))

    # T0: distinct points have distinct closures
    closures = [closure_of(frozenset([i])) for i in range(n)]
    t0 = len(set(closures)) == n
    if not t0:
        bad.append("not T0: two points share a closure")

    # soberness: every irreducible closed set has exactly one generic point
    sober = True
    for z in closed:
        if not z:
            continue
        proper = [c for c in closed if c < z]
        reducible = any(a | b == z for a in proper for b in proper)
        if reducible:
            continue
        generic = [i for i in z if closures[i] == z]
        if len(generic) != 1:
            sober = False
            bad.append(f"irreducible closed set {sorted(z)} has {len(generic)} generic points")

    # basic opens: each open is a union of D(f)'s
    opens = {everything - c for c in closed}
    basic = _basic_opens(space)
    basic_sets = set(basic.values())
    basis = all(b in opens for b in basic_sets)
    if not basis:
        bad.append("some D(f) is not open")
    for u in opens:
        inside = [b for b in basic_sets if b <= u]
        if frozenset().union(*inside) != u:
            basis = False
            bad.append(f"open {sorted(u)} is not a union of basic opens")

    # quasi-compactness of each D(f): every basic cover has a finite (here: irredundant) subcover
    quasi_compact = True
    for el, d in basic.items():
        cover = [b for b in basic_sets if b <= d]
        if frozenset().union(*cover) != d:
            quasi_compact = False
            bad.append(f"D({el}) not covered by the basic opens inside it")
            continue
        chosen: list = []
        got: frozenset = frozenset()
        for b in sorted(cover, key=lambda s: (-len(s), sorted(s))):
            if not b <= got:
                chosen.append(b)
                got |= b
        if got != d:
            quasi_compact = False
            bad.append(f"D({el}) has no finite subcover")

    # quasi-compact opens (finite unions of D(f)) closed under binary intersection
    intersections = True
    unions = {frozenset()}
    for b in basic_sets:
        unions |= {u | b for u in unions}
    for a, b in itertools.combinations(unions, 2):
        if a & b not in unions:
            intersections = False
            bad.append("quasi-compact opens not stable under intersection")
            break

    return SpectralReport(n, t0, topology, sober, basis, quasi_compact, intersections, bad)


# -- kilpotence ------------------------------------------------------------------


def weyl_product(T: TambaraFunctor, x: Element):
    """``prod_g conj_g res^H_e(x)`` in the bottom level."""
    G = T.group
    e = G.trivial
    r = T.res(x.subgroup, e, x.value)
    lvl = T.level(e)
    return lvl.prod(T.conj(g, e, r) for g in G.elements)


def is_kilpotent(T: TambaraFunctor, x: Element) -> bool:
    return T.level(T.group.trivial).is_nilpotent(weyl_product(T, x))


def kil_burnside_level(G: FiniteGroup, h: Subgroup) -> list[tuple[int, ...]]:
    """Z-basis of ``ker res^H_e`` in ``A(H)``, the kernel of the cardinality functional."""
    lvl = BurnsideLevel(G, h)
    functional = [h.order // k.order for k in lvl.basis]
    if lvl.rank == 1:
        return []
    return kernel_basis(functional)


def kilradical_trivial_action(T: TambaraFunctor) -> TambaraIdeal:
    """Levelwise preimage of the bottom nilradical under restriction."""
    if not T.weyl_action_trivial():
        raise SpectrumError("kilradical_trivial_action needs a trivial Weyl action on the bottom level")
    e = T.group.trivial
    nil = T.level(e).nilradical
    return TambaraIdeal(T, {h: {x for x in T.elements(h) if T.res(h, e, x) in nil} for h in T.subgroups})


def kilpotent_set(T: TambaraFunctor) -> dict:
    """``kil(T)`` as plain per-level sets (not necessarily an ideal)."""
    return {h: frozenset(x for x in T.elements(h) if is_kilpotent(T, Element(h, x))) for h in T.subgroups}


def localization_size(R, S) -> int:
    """Number of elements of ``R[S^-1]`` for a finite ring, by counting classes of fractions."""
    S = sorted(set(S))
    els = list(R.elements)
    pairs = [(r, s) for r in els for s in S]
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i, (r, s) in enumerate(pairs):
        for j in range(i + 1, len(pairs)):
            r2, s2 = pairs[j]
            diff = R.sub(R.mul(r, s2), R.mul(r2, s))
            if any(R.mul(u, diff) == R.zero for u in S):
                a, b = find(i), find(j)
                if a != b:
                    parent[a] = b
    return len({find(i) for i in range(len(pairs))})


def localization_oracle_fp(T: FixedPointFunctor, x: Element) -> bool:
    """Whether inverting ``x`` kills ``T``, decided by localizing ``R`` at all ``g . res(x)``."""
    if not isinstance(T, FixedPointFunctor):
        raise FunctorError("localization oracle needs a fixed-point functor")
    R = T.ring
    seeds = {T.act(g, x.value) for g in T.group.elements}
    S = {R.one}
    frontier = list(S)
    while frontier:
        a = frontier.pop()
        for s in seeds:
            b = R.mul(a, s)
            if b not in S:
                S.add(b)
                frontier.append(b)
    return localization_size(R, S) == 1
